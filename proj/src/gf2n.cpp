#include "permpoly/gf2n.hpp"

#include <cstdio>

namespace permpoly {

namespace {

constexpr int kMaxM = 12;       // q <= 2^24
constexpr int kTableMaxN = 20;  // log/exp tables up to 8 MiB

int poly_degree(uint64_t p) {
    int d = -1;
    while (p) { ++d; p >>= 1; }
    return d;
}

uint64_t poly_mod(uint64_t a, uint64_t mod) {
    int dm = poly_degree(mod);
    int da = poly_degree(a);
    while (da >= dm) {
        a ^= mod << (da - dm);
        da = poly_degree(a);
    }
    return a;
}

// trial division by every polynomial of degree 1..deg(p)/2
bool poly_irreducible(uint64_t p) {
    int n = poly_degree(p);
    for (int dg = 1; dg <= n / 2; ++dg) {
        for (uint64_t d = uint64_t(1) << dg; d < (uint64_t(2) << dg); ++d) {
            if (poly_mod(p, d) == 0) return false;
        }
    }
    return true;
}

uint32_t smallest_irreducible(int n) {
    for (uint64_t cand = (uint64_t(1) << n) + 1; cand < (uint64_t(2) << n); cand += 2) {
        if (poly_irreducible(cand)) return static_cast<uint32_t>(cand);
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

std::vector<uint64_t> prime_factors(uint64_t x) {
    std::vector<uint64_t> ps;
    for (uint64_t d = 2; d * d <= x; ++d) {
        if (x % d == 0) {
            ps.push_back(d);
            while (x % d == 0) x /= d;
        }
    }
    if (x > 1) ps.push_back(x);
    return ps;
}

}  // namespace

FieldElement::FieldElement(uint32_t bits, const FieldCtx& ctx) : bits_(bits), ctx_(&ctx) {
    if (bits >= ctx.q()) throw std::domain_error("element bits out of field range");
}

const FieldCtx& FieldElement::ctx() const {
    if (!ctx_) throw std::domain_error("element has no field context");
    return *ctx_;
}

FieldElement FieldElement::operator+(const FieldElement& other) const {
    if (!ctx().same_field(other.ctx())) throw std::domain_error("field context mismatch");
    return FieldElement(bits_ ^ other.bits_, *ctx_);
}

FieldElement FieldElement::operator*(const FieldElement& other) const {
    if (!ctx().same_field(other.ctx())) throw std::domain_error("field context mismatch");
    return FieldElement(ctx_->mul_bits(bits_, other.bits_), *ctx_);
}

bool FieldElement::operator==(const FieldElement& other) const {
    if (!ctx().same_field(other.ctx())) throw std::domain_error("field context mismatch");
    return bits_ == other.bits_;
}

std::string FieldElement::to_hex() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%x", bits_);
    return buf;
}

FieldCtx::FieldCtx(int m) : m_(m) {
    if (m < 1 || m > kMaxM) throw std::domain_error("m out of supported range [1, 12]");
    n_ = 2 * m;
    q_ = uint32_t(1) << n_;
    modulus_ = smallest_irreducible(n_);

    // smallest-encoding element of order exactly q-1
    const auto factors = prime_factors(q_ - 1);
    for (uint32_t g = 2; g < q_; ++g) {
        bool full_order = true;
        for (uint64_t p : factors) {
            uint32_t t = 1, base = g;
            uint64_t e = (q_ - 1) / p;
            while (e) {
                if (e & 1) t = mul_bits_carryless(t, base);
                base = mul_bits_carryless(base, base);
                e >>= 1;
            }
            if (t == 1) { full_order = false; break; }
        }
        if (full_order) { generator_ = g; break; }
    }
    if (generator_ == 0) throw std::logic_error("no primitive element found");  // unreachable

    if (n_ <= kTableMaxN) build_tables();
}

void FieldCtx::build_tables() {
    log_.assign(q_, 0);
    exp_.assign(q_ - 1, 0);
    uint32_t x = 1;
    for (uint32_t e = 0; e < q_ - 1; ++e) {
        exp_[e] = x;
        log_[x] = e;
        x = mul_bits_carryless(x, generator_);
    }
}

FieldElement FieldCtx::element(uint32_t bits) const { return FieldElement(bits, *this); }

uint32_t FieldCtx::mul_bits_carryless(uint32_t a, uint32_t b) const {
    uint64_t r = 0;
    uint64_t aa = a;
    while (b) {
        if (b & 1) r ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    return static_cast<uint32_t>(poly_mod(r, modulus_));
}

uint32_t FieldCtx::mul_bits(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) {
        uint64_t e = uint64_t(log_[a]) + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }
    return mul_bits_carryless(a, b);
}

uint32_t FieldCtx::pow_bits(uint32_t a, long long e) const {
    if (a == 0) {
        if (e > 0) return 0;
        if (e == 0) return 1;
        throw std::domain_error("negative power of zero");
    }
    const uint32_t ord = q_ - 1;
    long long r = e % ord;
    if (r < 0) r += ord;
    if (!log_.empty()) {
        return exp_[(uint64_t(log_[a]) * uint64_t(r)) % ord];
    }
    uint32_t result = 1, base = a;
    uint64_t ee = static_cast<uint64_t>(r);
    while (ee) {
        if (ee & 1) result = mul_bits_carryless(result, base);
        base = mul_bits_carryless(base, base);
        ee >>= 1;
    }
    return result;
}

uint32_t FieldCtx::inv_bits(uint32_t a) const {
    if (a == 0) throw std::domain_error("zero has no inverse");
    if (!log_.empty()) {
        uint32_t e = log_[a];
        return e == 0 ? 1 : exp_[q_ - 1 - e];
    }
    return pow_bits(a, static_cast<long long>(q_) - 2);
}

int FieldCtx::trace_bits(uint32_t a) const {
    uint32_t acc = 0, x = a;
    for (int j = 0; j < n_; ++j) {
        acc ^= x;
        x = mul_bits(x, x);
    }
    // the sum of Frobenius iterates lands in GF(2)
    return static_cast<int>(acc & 1);
}

FieldElement pow(const FieldElement& a, long long e) {
    return FieldElement(a.ctx().pow_bits(a.bits(), e), a.ctx());
}

FieldElement inv(const FieldElement& a) {
    return FieldElement(a.ctx().inv_bits(a.bits()), a.ctx());
}

int trace(const FieldElement& a) { return a.ctx().trace_bits(a.bits()); }

}  // namespace permpoly
