#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace permpoly {

class FieldCtx;

/* An element of GF(2^n) in the polynomial basis. The low n bits of
   `bits` are the coefficients of the basis polynomial. Elements carry a
   pointer to their field; operations across distinct fields throw. */
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(uint32_t bits, const FieldCtx& ctx);

    uint32_t bits() const { return bits_; }
    const FieldCtx& ctx() const;
    bool is_zero() const { return bits_ == 0; }
    bool is_one() const { return bits_ == 1; }

    FieldElement operator+(const FieldElement& other) const;
    FieldElement operator*(const FieldElement& other) const;
    bool operator==(const FieldElement& other) const;
    bool operator!=(const FieldElement& other) const { return !(*this == other); }

    std::string to_hex() const;  // "0x.." form used in reports

private:
    uint32_t bits_ = 0;
    const FieldCtx* ctx_ = nullptr;

    friend class FieldCtx;
};

/* One instance of GF(2^{2m}): modulus, generator, and (for small n)
   discrete log/antilog tables. Construction is deterministic: the
   modulus is the smallest integer encoding of an irreducible degree-n
   polynomial over GF(2), found by enumeration with a trial-division
   irreducibility test, and the generator is the smallest-encoding
   element of multiplicative order q-1. Immutable once built, safe to
   share across threads. */
class FieldCtx {
public:
    explicit FieldCtx(int m);

    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

    int m() const { return m_; }
    int n() const { return n_; }
    uint32_t q() const { return q_; }
    uint32_t modulus() const { return modulus_; }
    FieldElement generator() const { return FieldElement(generator_, *this); }

    FieldElement element(uint32_t bits) const;
    FieldElement zero() const { return FieldElement(0, *this); }
    FieldElement one() const { return FieldElement(1, *this); }

    bool same_field(const FieldCtx& other) const {
        return this == &other || (n_ == other.n_ && modulus_ == other.modulus_);
    }

    // Arithmetic on raw bit patterns. The FieldElement operators and the
    // free functions below are thin wrappers over these.
    uint32_t add_bits(uint32_t a, uint32_t b) const { return a ^ b; }
    uint32_t mul_bits(uint32_t a, uint32_t b) const;
    uint32_t pow_bits(uint32_t a, long long e) const;
    uint32_t inv_bits(uint32_t a) const;
    int trace_bits(uint32_t a) const;

    bool has_tables() const { return !log_.empty(); }

    // carryless multiply + reduce, independent of the log tables
    uint32_t mul_bits_carryless(uint32_t a, uint32_t b) const;

private:
    int m_ = 0;
    int n_ = 0;
    uint32_t q_ = 0;
    uint32_t modulus_ = 0;
    uint32_t generator_ = 0;

    // log_[x] for x != 0 gives e with generator^e = x; exp_[e] inverts.
    std::vector<uint32_t> log_;
    std::vector<uint32_t> exp_;

    void build_tables();
};

FieldElement pow(const FieldElement& a, long long e);
FieldElement inv(const FieldElement& a);
int trace(const FieldElement& a);

/* Ascending-by-bits range over all q elements of a field. */
class ElementRange {
public:
    explicit ElementRange(const FieldCtx& ctx) : ctx_(&ctx) {}

    class iterator {
    public:
        iterator(uint64_t v, const FieldCtx* ctx) : v_(v), ctx_(ctx) {}
        FieldElement operator*() const { return ctx_->element(static_cast<uint32_t>(v_)); }
        iterator& operator++() { ++v_; return *this; }
        bool operator!=(const iterator& o) const { return v_ != o.v_; }
    private:
        uint64_t v_;
        const FieldCtx* ctx_;
    };

    iterator begin() const { return iterator(0, ctx_); }
    iterator end() const { return iterator(ctx_->q(), ctx_); }

private:
    const FieldCtx* ctx_;
};

inline ElementRange elements(const FieldCtx& ctx) { return ElementRange(ctx); }

}  // namespace permpoly
