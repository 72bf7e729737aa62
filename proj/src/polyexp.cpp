#include "permpoly/polyexp.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <map>

namespace permpoly {

uint32_t norm_exp(long long d, uint32_t q) {
    if (d == 0) return 0;
    const long long ord = static_cast<long long>(q) - 1;
    long long r = d % ord;
    if (r < 0) r += ord;
    return r == 0 ? q - 1 : static_cast<uint32_t>(r);
}

SparsePoly SparsePoly::zero(const FieldCtx& ctx) { return SparsePoly(ctx); }

SparsePoly SparsePoly::from_exponents(const std::vector<long long>& exps, const FieldCtx& ctx) {
    std::vector<std::pair<long long, FieldElement>> terms;
    terms.reserve(exps.size());
    for (long long e : exps) terms.emplace_back(e, ctx.one());
    return from_terms(terms, ctx);
}

SparsePoly SparsePoly::from_terms(const std::vector<std::pair<long long, FieldElement>>& terms,
                                  const FieldCtx& ctx) {
    std::map<uint32_t, uint32_t> acc;  // exponent -> coefficient bits
    for (const auto& [e, c] : terms) {
        if (!c.ctx().same_field(ctx)) throw std::domain_error("field context mismatch");
        if (c.is_zero()) continue;
        acc[norm_exp(e, ctx.q())] ^= c.bits();
    }
    SparsePoly p(ctx);
    for (const auto& [e, bits] : acc) {
        if (bits != 0) p.terms_.push_back(Term{e, ctx.element(bits)});
    }
    return p;
}

bool SparsePoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == 0);
}

bool SparsePoly::all_coeffs_one() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.coeff.is_one(); });
}

FieldElement SparsePoly::evaluate(const FieldElement& x) const {
    if (!x.ctx().same_field(*ctx_)) throw std::domain_error("field context mismatch");
    uint32_t acc = 0;
    for (const Term& t : terms_) {
        uint32_t p = ctx_->pow_bits(x.bits(), t.exp);
        acc ^= t.coeff.is_one() ? p : ctx_->mul_bits(t.coeff.bits(), p);
    }
    return ctx_->element(acc);
}

int SparsePoly::algebraic_degree() const {
    int d = 0;
    for (const Term& t : terms_) d = std::max(d, std::popcount(t.exp));
    return d;
}

std::vector<uint32_t> SparsePoly::exponents() const {
    std::vector<uint32_t> es;
    es.reserve(terms_.size());
    for (const Term& t : terms_) es.push_back(t.exp);
    return es;
}

std::string SparsePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (i) s += '+';
        char buf[32];
        std::snprintf(buf, sizeof buf, "%u:%x", terms_[i].exp, terms_[i].coeff.bits());
        s += buf;
    }
    return s;
}

bool SparsePoly::operator==(const SparsePoly& other) const {
    if (!ctx_->same_field(*other.ctx_)) return false;
    if (terms_.size() != other.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].exp != other.terms_[i].exp ||
            terms_[i].coeff.bits() != other.terms_[i].coeff.bits())
            return false;
    }
    return true;
}

}  // namespace permpoly
