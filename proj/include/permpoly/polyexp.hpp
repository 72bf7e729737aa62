#pragma once

#include <string>
#include <utility>
#include <vector>

#include "permpoly/gf2n.hpp"

namespace permpoly {

/* Reduce an exponent to the window [0, q-1] without changing the induced
   map on F_q. 0 stays 0; for d != 0 the residue mod q-1 is taken in
   [1, q-1] (a residue of 0 becomes q-1), so x^d and x^{norm_exp(d)} agree
   everywhere including x = 0. For d < 0 the identity holds on F_q^*. */
uint32_t norm_exp(long long d, uint32_t q);

struct Term {
    uint32_t exp;
    FieldElement coeff;
};

/* Canonical sparse polynomial over one field: strictly increasing
   exponents in [0, q-1], no zero coefficients. Construction normalizes
   exponents and combines duplicates by field addition, so coefficient-1
   duplicates cancel in pairs. Immutable. */
class SparsePoly {
public:
    static SparsePoly zero(const FieldCtx& ctx);
    static SparsePoly from_exponents(const std::vector<long long>& exps, const FieldCtx& ctx);
    static SparsePoly from_terms(const std::vector<std::pair<long long, FieldElement>>& terms,
                                 const FieldCtx& ctx);

    const FieldCtx& ctx() const { return *ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;      // zero or a single exponent-0 term
    bool all_coeffs_one() const;

    FieldElement evaluate(const FieldElement& x) const;

    // max Hamming weight over exponents with nonzero coefficient;
    // 0 for the zero or constant polynomial
    int algebraic_degree() const;

    std::vector<uint32_t> exponents() const;

    // golden-file form: "e:coeff_hex" joined by "+", exponents ascending
    std::string to_string() const;

    bool operator==(const SparsePoly& other) const;
    bool operator!=(const SparsePoly& other) const { return !(*this == other); }

private:
    explicit SparsePoly(const FieldCtx& ctx) : ctx_(&ctx) {}

    const FieldCtx* ctx_;
    std::vector<Term> terms_;
};

}  // namespace permpoly
