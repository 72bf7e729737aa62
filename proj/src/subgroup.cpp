#include "permpoly/subgroup.hpp"

#include <algorithm>
#include <map>

namespace permpoly {

SubgroupU::SubgroupU(const FieldCtx& ctx) : ctx_(&ctx) {
    order_ = (uint32_t(1) << ctx.m()) + 1;
    const uint32_t step = (ctx.q() - 1) / order_;
    uint32_t u0 = ctx.pow_bits(ctx.generator().bits(), step);
    members_.reserve(order_);
    uint32_t x = 1;
    for (uint32_t t = 0; t < order_; ++t) {
        members_.push_back(ctx.element(x));
        x = ctx.mul_bits(x, u0);
    }
}

bool SubgroupU::contains(const FieldElement& x) const {
    if (!x.ctx().same_field(*ctx_)) throw std::domain_error("field context mismatch");
    return ctx_->pow_bits(x.bits(), order_) == 1;
}

FracPoly FracPoly::make(const std::vector<long long>& num_exps,
                        const std::vector<long long>& den_exps, uint32_t Q) {
    auto reduce = [Q](const std::vector<long long>& exps) {
        std::map<uint32_t, int> mult;
        for (long long e : exps) {
            long long r = e % static_cast<long long>(Q);
            if (r < 0) r += Q;
            mult[static_cast<uint32_t>(r)] ^= 1;
        }
        std::vector<uint32_t> out;
        for (const auto& [e, odd] : mult)
            if (odd) out.push_back(e);
        return out;
    };
    FracPoly f;
    f.subgroup_order = Q;
    f.num = reduce(num_exps);
    f.den = reduce(den_exps);
    return f;
}

std::string FracPoly::to_string() const {
    auto list = [](const std::vector<uint32_t>& es) {
        std::string s = "[";
        for (size_t i = 0; i < es.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(es[i]);
        }
        return s + "]";
    };
    return list(num) + "/" + list(den);
}

namespace {

// numerator/denominator values at x, no exception path
std::pair<uint32_t, uint32_t> frac_parts(const FracPoly& f, const FieldCtx& ctx, uint32_t xbits) {
    uint32_t nv = 0, dv = 0;
    for (uint32_t e : f.num) nv ^= ctx.pow_bits(xbits, e);
    for (uint32_t e : f.den) dv ^= ctx.pow_bits(xbits, e);
    return {nv, dv};
}

}  // namespace

FieldElement eval_frac(const FracPoly& f, const FieldElement& x) {
    const FieldCtx& ctx = x.ctx();
    auto [nv, dv] = frac_parts(f, ctx, x.bits());
    if (dv == 0) throw denominator_zero(x, "fraction denominator vanishes at " + x.to_hex());
    return ctx.element(ctx.mul_bits(nv, ctx.inv_bits(dv)));
}

UPermReport frac_permutes_U(const FracPoly& f, const SubgroupU& U) {
    const FieldCtx& ctx = U.ctx();
    UPermReport rep;
    std::map<uint32_t, FieldElement> first_preimage;
    for (const FieldElement& x : U.members()) {
        auto [nv, dv] = frac_parts(f, ctx, x.bits());
        if (dv == 0) {
            rep.denom_zero_at = x;
            return rep;
        }
        uint32_t v = ctx.mul_bits(nv, ctx.inv_bits(dv));
        auto [it, inserted] = first_preimage.emplace(v, x);
        if (!inserted) {
            rep.collision = std::make_pair(it->second, x);
            return rep;
        }
    }
    rep.permutes = true;
    return rep;
}

bool composed_permutes_U(const FracPoly& f, long long inner_exp, const SubgroupU& U) {
    const FieldCtx& ctx = U.ctx();
    std::vector<uint32_t> values;
    values.reserve(U.order());
    for (const FieldElement& x : U.members()) {
        uint32_t inner = ctx.pow_bits(x.bits(), inner_exp);
        auto [nv, dv] = frac_parts(f, ctx, inner);
        if (dv == 0) return false;
        values.push_back(ctx.mul_bits(nv, ctx.inv_bits(dv)));
    }
    std::sort(values.begin(), values.end());
    return std::adjacent_find(values.begin(), values.end()) == values.end();
}

}  // namespace permpoly
