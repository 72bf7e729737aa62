#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "permpoly/polyexp.hpp"
#include "permpoly/subgroup.hpp"

namespace permpoly {

enum class Method { BruteForce, Zieve, ExpSum };

struct CollisionWitness {
    FieldElement x1, x2;  // distinct inputs with equal images
};

struct DenomZeroWitness {
    FieldElement x;
};

struct ExpSumWitness {
    FieldElement delta;                 // failing delta in F_q^*
    std::vector<FieldElement> omegas;   // omega_i = delta^{d1 - d_i}, i >= 2
    long long n_count = 0;              // N at this delta (must be 1 for a PP)
};

using Witness = std::variant<std::monostate, CollisionWitness, DenomZeroWitness,
                             ExpSumWitness, std::string>;

struct VerifyReport {
    Method method = Method::BruteForce;
    bool is_permutation = false;
    Witness witness;
    std::chrono::duration<double, std::milli> elapsed{0};
    uint64_t checked_points = 0;
};

/* Evaluates p at every point of F_q against a q-bit occupancy map;
   the first collision (in ascending evaluation order) is the witness. */
VerifyReport brute_force_is_pp(const SparsePoly& p);

/* Full permutation test for f(x) = x^r h(x^{(q-1)/d}): true iff
   gcd(r, (q-1)/d) = 1 and x -> x^r h(x)^{(q-1)/d} is a bijection of
   mu_d. Requires d | q-1 and r > 0. h has coefficient-1 terms; repeated
   exponents cancel in pairs. */
VerifyReport zieve_check(long long r, const std::vector<long long>& h_exps, uint32_t d,
                         const FieldCtx& ctx);

struct ZieveDecomposition {
    long long r = 0;
    std::vector<long long> h_exps;
};

/* Inverts the factoring f(x) = x^r h(x^{(q-1)/d}) for a canonical
   coefficient-1 polynomial: succeeds when all exponents are congruent
   to a common r mod (q-1)/d, with r the minimal exponent (r > 0). */
std::optional<ZieveDecomposition> decompose_zieve(const SparsePoly& p, uint32_t d);

struct ExpSumPreconditions {
    bool gcd_d1_ok = false;          // gcd(d1, q-1) = 1, d1 = first listed exponent
    bool common_residue_ok = false;  // all d_i = d1 mod 2^m-1
    bool d1_term_survives = false;   // x^{d1} has odd multiplicity after normalization
    bool ok() const { return gcd_d1_ok && common_residue_ok && d1_term_survives; }
    std::string violation() const;
};

ExpSumPreconditions expsum_preconditions(const std::vector<long long>& d_exps,
                                         const FieldCtx& ctx);

class expsum_precondition_violated : public std::domain_error {
public:
    explicit expsum_precondition_violated(const std::string& what)
        : std::domain_error(what) {}
};

/* Exponential-sum criterion for f = sum x^{d_i}: for every delta in
   F_q^* count N = #{lambda in U : g(lambda) + g(lambda)^{2^m} = 0} with
   g(lambda) = lambda^{d1} + sum_{i>=2} delta^{d1-d_i} lambda^{d_i};
   f permutes F_q iff N = 1 for every delta. The first failing delta is
   the witness. Throws expsum_precondition_violated when the
   preconditions above do not hold. */
VerifyReport expsum_check(const std::vector<long long>& d_exps, const FieldCtx& ctx);

/* N for an arbitrary omega tuple (omegas aligned with d_exps, omegas[0]
   multiplying the d1 term). Used to cross-check the exponential-sum
   identity. */
long long lemma_n_count(const std::vector<long long>& d_exps,
                        const std::vector<FieldElement>& omegas, const FieldCtx& ctx);

/* Literal sum over all x in F_q of (-1)^{Tr(sum omega_i x^{d_i})};
   omegas aligned with d_exps. Exponents must be nonnegative (x = 0 is
   included in the sum). Test oracle for (N - 1) * 2^m. */
long long direct_expsum(const std::vector<long long>& d_exps,
                        const std::vector<FieldElement>& omegas, const FieldCtx& ctx);

}  // namespace permpoly
