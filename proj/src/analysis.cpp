#include "permpoly/analysis.hpp"

#include <algorithm>
#include <bit>

namespace permpoly {

bool DegreeTable::all_match() const {
    return std::all_of(rows.begin(), rows.end(),
                       [](const DegreeRow& r) { return !r.applicable || r.matches; });
}

DegreeTable degree_claims(int m, const FieldCtx& ctx) {
    if (m % 2 != 0) throw std::domain_error("degree_claims requires even m");
    if (ctx.m() != m) throw std::domain_error("field context does not match m");

    DegreeTable table;
    table.m = m;

    auto add = [&](std::string id, KnownId known, DegreeClaim claim) {
        DegreeRow row;
        row.id = std::move(id);
        row.known = known;
        row.claim = claim;
        row.applicable = !known_side_condition_violation(known, m).has_value();
        if (row.applicable) {
            row.degree = build_known(known, ctx).algebraic_degree();
            row.matches = claim.kind == DegreeClaim::Exact ? row.degree == claim.value
                                                           : row.degree <= claim.value;
        }
        table.rows.push_back(std::move(row));
    };

    const DegreeClaim three{DegreeClaim::Exact, 3};
    const DegreeClaim mp1{DegreeClaim::Exact, m + 1};
    const DegreeClaim at_most_2{DegreeClaim::AtMost, 2};
    const DegreeClaim at_most_mp1{DegreeClaim::AtMost, m + 1};

    add("f1", {1}, three);
    add("f2", {2}, mp1);
    add("f3", {3}, at_most_2);
    add("f4", {4}, mp1);
    add("f5", {5}, mp1);
    add("f6", {6, 1}, at_most_mp1);
    add("f7", {7, 1}, at_most_mp1);
    add("f8.1", {8, 1, 0}, at_most_mp1);
    add("f8.2", {8, 1, 1}, at_most_mp1);
    add("f8.3", {8, 1, 2}, at_most_mp1);
    add("f9", {9}, mp1);
    add("f10", {10}, mp1);
    add("f11", {11}, three);
    add("f12", {12}, three);
    add("f13", {13}, three);
    add("f14", {14}, DegreeClaim{DegreeClaim::Exact, m == 2 ? 3 : m + 2});
    add("f15", {15}, three);
    add("f16", {16}, three);
    add("f17", {17}, at_most_2);
    add("f18", {18}, at_most_2);
    return table;
}

EaVerdict ea_inequiv_by_degree(const SparsePoly& p1, const SparsePoly& p2) {
    if (p1.is_constant() || p2.is_constant())
        throw std::domain_error("ea_inequiv_by_degree: constant input");
    return p1.algebraic_degree() != p2.algebraic_degree() ? EaVerdict::Inequivalent
                                                          : EaVerdict::Unknown;
}

SeparationVerdict separation_report(Family family, int m, const FieldCtx& ctx) {
    if (m % 2 != 0) throw std::domain_error("separation_report requires even m");

    int base = 0;
    switch (family) {
        case Family::T1: base = 1; break;
        case Family::T2: base = 3; break;
        case Family::T3: base = 5; break;
        case Family::T4: base = 7; break;
        case Family::T5: base = 9; break;
        case Family::T6: base = 11; break;
        default: throw std::domain_error("separation_report: full-field families only");
    }

    SeparationVerdict v;
    v.family = family;
    v.witness_index = m == 2 ? base + 1 : base;
    v.claimed_degree = m == 2 ? 1 : 2 * m - 1;
    v.witness_degree = build_witness(v.witness_index, ctx).algebraic_degree();
    v.degree_matches_claim = v.witness_degree == v.claimed_degree;

    const DegreeTable table = degree_claims(m, ctx);
    v.separated = true;
    for (const DegreeRow& row : table.rows) {
        if (!row.applicable) continue;
        v.known_degrees.emplace_back(row.id, row.degree);
        if (row.degree == v.witness_degree) v.separated = false;
    }
    return v;
}

bool weight_lemma_check(int m) {
    if (m < 1 || m > 24) throw std::domain_error("weight_lemma_check: m out of range [1, 24]");
    const uint64_t tm = uint64_t(1) << m;
    for (uint64_t s = 1; s <= tm; ++s) {
        if (std::popcount(s * (tm - 1)) != m) return false;
    }
    return true;
}

}  // namespace permpoly
