#include "permpoly/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace permpoly {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
    Clock::time_point start = Clock::now();
    std::chrono::duration<double, std::milli> elapsed() const {
        return std::chrono::duration<double, std::milli>(Clock::now() - start);
    }
};

// q-bit membership mask of the subfield GF(2^m) (the fixed field of
// Frobenius^m), used for the g + g^{2^m} = 0 test
std::vector<uint64_t> subfield_mask(const FieldCtx& ctx) {
    const uint32_t q = ctx.q();
    const long long half = 1LL << ctx.m();
    std::vector<uint64_t> mask((q + 63) / 64, 0);
    for (uint32_t x = 0; x < q; ++x) {
        if (ctx.pow_bits(x, half) == x) mask[x >> 6] |= uint64_t(1) << (x & 63);
    }
    return mask;
}

bool mask_test(const std::vector<uint64_t>& mask, uint32_t x) {
    return (mask[x >> 6] >> (x & 63)) & 1;
}

}  // namespace

VerifyReport brute_force_is_pp(const SparsePoly& p) {
    Timer timer;
    const FieldCtx& ctx = p.ctx();
    const uint32_t q = ctx.q();
    VerifyReport rep;
    rep.method = Method::BruteForce;

    std::vector<uint64_t> seen((q + 63) / 64, 0);
    for (uint32_t x = 0; x < q; ++x) {
        uint32_t y = p.evaluate(ctx.element(x)).bits();
        rep.checked_points = x + 1;
        if (mask_test(seen, y)) {
            // rescan for the earlier preimage
            for (uint32_t x0 = 0; x0 < x; ++x0) {
                if (p.evaluate(ctx.element(x0)).bits() == y) {
                    rep.witness = CollisionWitness{ctx.element(x0), ctx.element(x)};
                    break;
                }
            }
            rep.elapsed = timer.elapsed();
            return rep;
        }
        seen[y >> 6] |= uint64_t(1) << (y & 63);
    }
    rep.is_permutation = true;
    rep.elapsed = timer.elapsed();
    return rep;
}

VerifyReport zieve_check(long long r, const std::vector<long long>& h_exps, uint32_t d,
                         const FieldCtx& ctx) {
    if (d == 0 || (ctx.q() - 1) % d != 0)
        throw std::domain_error("zieve_check: d must divide q-1");
    if (r <= 0) throw std::domain_error("zieve_check: r must be positive");

    Timer timer;
    VerifyReport rep;
    rep.method = Method::Zieve;
    const uint32_t step = (ctx.q() - 1) / d;

    if (std::gcd(r, static_cast<long long>(step)) != 1) {
        rep.witness = std::string("gcd(r, (q-1)/d) != 1");
        rep.elapsed = timer.elapsed();
        return rep;
    }

    // enumerate mu_d as powers of generator^{(q-1)/d}
    const uint32_t u0 = ctx.pow_bits(ctx.generator().bits(), step);
    std::map<uint32_t, uint32_t> first_preimage;
    uint32_t x = 1;
    for (uint32_t t = 0; t < d; ++t) {
        uint32_t hv = 0;
        for (long long e : h_exps) hv ^= ctx.pow_bits(x, e);
        rep.checked_points = t + 1;
        if (hv == 0) {
            rep.witness = DenomZeroWitness{ctx.element(x)};
            rep.elapsed = timer.elapsed();
            return rep;
        }
        uint32_t v = ctx.mul_bits(ctx.pow_bits(x, r), ctx.pow_bits(hv, step));
        auto [it, inserted] = first_preimage.emplace(v, x);
        if (!inserted) {
            rep.witness = CollisionWitness{ctx.element(it->second), ctx.element(x)};
            rep.elapsed = timer.elapsed();
            return rep;
        }
        x = ctx.mul_bits(x, u0);
    }
    rep.is_permutation = true;
    rep.elapsed = timer.elapsed();
    return rep;
}

std::optional<ZieveDecomposition> decompose_zieve(const SparsePoly& p, uint32_t d) {
    const uint32_t q = p.ctx().q();
    if (d == 0 || (q - 1) % d != 0)
        throw std::domain_error("decompose_zieve: d must divide q-1");
    if (p.is_zero() || !p.all_coeffs_one()) return std::nullopt;

    const uint32_t step = (q - 1) / d;
    const auto exps = p.exponents();  // ascending
    const uint32_t r = exps.front();
    if (r == 0) return std::nullopt;  // constant term; no x^r factor with r > 0

    ZieveDecomposition dec;
    dec.r = r;
    for (uint32_t e : exps) {
        if ((e - r) % step != 0) return std::nullopt;
        dec.h_exps.push_back((e - r) / step);
    }
    return dec;
}

std::string ExpSumPreconditions::violation() const {
    if (!gcd_d1_ok) return "gcd(d1, q-1) != 1";
    if (!common_residue_ok) return "exponents do not share a residue mod 2^m-1";
    if (!d1_term_survives) return "the d1 term cancels";
    return "";
}

ExpSumPreconditions expsum_preconditions(const std::vector<long long>& d_exps,
                                         const FieldCtx& ctx) {
    ExpSumPreconditions pre;
    if (d_exps.empty()) return pre;
    const long long qm1 = static_cast<long long>(ctx.q()) - 1;
    const long long half = (1LL << ctx.m()) - 1;
    const long long d1 = d_exps.front();

    pre.gcd_d1_ok = std::gcd(d1, qm1) == 1;
    pre.common_residue_ok = std::all_of(d_exps.begin(), d_exps.end(), [&](long long d) {
        long long diff = (d - d1) % half;
        return diff == 0;
    });

    const uint32_t d1n = norm_exp(d1, ctx.q());
    size_t mult = 0;
    for (long long d : d_exps)
        if (norm_exp(d, ctx.q()) == d1n) ++mult;
    pre.d1_term_survives = mult % 2 == 1;
    return pre;
}

VerifyReport expsum_check(const std::vector<long long>& d_exps, const FieldCtx& ctx) {
    auto pre = expsum_preconditions(d_exps, ctx);
    if (!pre.ok()) throw expsum_precondition_violated("expsum_check: " + pre.violation());

    Timer timer;
    VerifyReport rep;
    rep.method = Method::ExpSum;

    const uint32_t q = ctx.q();
    const long long d1 = d_exps.front();
    const size_t t = d_exps.size();
    const SubgroupU U(ctx);
    const auto mask = subfield_mask(ctx);

    // lambda^{d_i} for every member of U, laid out per lambda
    std::vector<uint32_t> lam_pows(U.order() * t);
    for (uint32_t li = 0; li < U.order(); ++li) {
        uint32_t lam = U.members()[li].bits();
        for (size_t j = 0; j < t; ++j) lam_pows[li * t + j] = ctx.pow_bits(lam, d_exps[j]);
    }

    std::vector<uint32_t> omegas(t, 0);
    for (uint32_t delta = 1; delta < q; ++delta) {
        for (size_t j = 1; j < t; ++j) omegas[j] = ctx.pow_bits(delta, d1 - d_exps[j]);
        long long N = 0;
        for (uint32_t li = 0; li < U.order(); ++li) {
            const uint32_t* lp = &lam_pows[li * t];
            uint32_t g = lp[0];
            for (size_t j = 1; j < t; ++j) g ^= ctx.mul_bits(omegas[j], lp[j]);
            if (mask_test(mask, g)) ++N;
        }
        rep.checked_points = delta;
        if (N != 1) {
            ExpSumWitness w;
            w.delta = ctx.element(delta);
            for (size_t j = 1; j < t; ++j) w.omegas.push_back(ctx.element(omegas[j]));
            w.n_count = N;
            rep.witness = w;
            rep.elapsed = timer.elapsed();
            return rep;
        }
    }
    rep.is_permutation = true;
    rep.elapsed = timer.elapsed();
    return rep;
}

long long lemma_n_count(const std::vector<long long>& d_exps,
                        const std::vector<FieldElement>& omegas, const FieldCtx& ctx) {
    if (omegas.size() != d_exps.size())
        throw std::domain_error("lemma_n_count: omega list must align with exponents");
    const SubgroupU U(ctx);
    const long long half = 1LL << ctx.m();
    long long N = 0;
    for (const FieldElement& lam : U.members()) {
        uint32_t g = 0;
        for (size_t j = 0; j < d_exps.size(); ++j)
            g ^= ctx.mul_bits(omegas[j].bits(), ctx.pow_bits(lam.bits(), d_exps[j]));
        if ((ctx.pow_bits(g, half) ^ g) == 0) ++N;
    }
    return N;
}

long long direct_expsum(const std::vector<long long>& d_exps,
                        const std::vector<FieldElement>& omegas, const FieldCtx& ctx) {
    if (omegas.size() != d_exps.size())
        throw std::domain_error("direct_expsum: omega list must align with exponents");
    for (long long d : d_exps)
        if (d < 0) throw std::domain_error("direct_expsum: exponents must be nonnegative");
    long long sum = 0;
    for (uint32_t x = 0; x < ctx.q(); ++x) {
        uint32_t arg = 0;
        for (size_t j = 0; j < d_exps.size(); ++j)
            arg ^= ctx.mul_bits(omegas[j].bits(), ctx.pow_bits(x, d_exps[j]));
        sum += ctx.trace_bits(arg) ? -1 : 1;
    }
    return sum;
}

}  // namespace permpoly
