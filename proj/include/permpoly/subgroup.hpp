#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permpoly/gf2n.hpp"

namespace permpoly {

/* The cyclic subgroup U of order Q = 2^m + 1 inside GF(2^{2m})^*,
   materialized as successive powers of u0 = generator^{(q-1)/Q}. */
class SubgroupU {
public:
    explicit SubgroupU(const FieldCtx& ctx);

    const FieldCtx& ctx() const { return *ctx_; }
    uint32_t order() const { return order_; }
    const std::vector<FieldElement>& members() const { return members_; }

    bool contains(const FieldElement& x) const;  // pow(x, Q) == 1

private:
    const FieldCtx* ctx_;
    uint32_t order_;
    std::vector<FieldElement> members_;
};

/* A ratio of coefficient-1 exponent sums, interpreted on U only.
   Exponent lists are canonicalized mod Q with odd-multiplicity
   cancellation at construction (valid on U since x^Q = 1 there). */
struct FracPoly {
    uint32_t subgroup_order = 0;  // Q
    std::vector<uint32_t> num;    // ascending, parity-reduced residues mod Q
    std::vector<uint32_t> den;

    static FracPoly make(const std::vector<long long>& num_exps,
                         const std::vector<long long>& den_exps, uint32_t Q);

    // "[e,e,..]/[e,e,..]", lists ascending
    std::string to_string() const;

    bool operator==(const FracPoly&) const = default;
};

class denominator_zero : public std::domain_error {
public:
    denominator_zero(const FieldElement& x, const std::string& what)
        : std::domain_error(what), witness(x) {}
    FieldElement witness;
};

/* (sum_{e in num} x^e) * inv(sum_{e in den} x^e); throws denominator_zero
   carrying the failing x. Caller is expected to pass x in U. */
FieldElement eval_frac(const FracPoly& f, const FieldElement& x);

struct UPermReport {
    bool permutes = false;
    std::optional<FieldElement> denom_zero_at;
    std::optional<std::pair<FieldElement, FieldElement>> collision;
};

/* Evaluates f on all Q members; permutes iff the denominator never
   vanishes and the image has Q distinct values. */
UPermReport frac_permutes_U(const FracPoly& f, const SubgroupU& U);

/* Tests x -> eval_frac(f, x^inner_exp) for bijectivity on U. */
bool composed_permutes_U(const FracPoly& f, long long inner_exp, const SubgroupU& U);

}  // namespace permpoly
