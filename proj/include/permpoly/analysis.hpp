#pragma once

#include <string>
#include <utility>
#include <vector>

#include "permpoly/families.hpp"

namespace permpoly {

struct DegreeClaim {
    enum Kind { Exact, AtMost } kind = Exact;
    int value = 0;
    std::string to_string() const {
        return (kind == Exact ? "=" : "<=") + std::to_string(value);
    }
};

struct DegreeRow {
    std::string id;       // "f1".."f18"; f8 variants as "f8.1".."f8.3"
    KnownId known;
    bool applicable = false;
    int degree = -1;      // computed; -1 when not applicable
    DegreeClaim claim;
    bool matches = false; // computed degree consistent with the claim
};

struct DegreeTable {
    int m = 0;
    std::vector<DegreeRow> rows;
    bool all_match() const;
};

/* Builds every applicable catalog family at this m (f6/f7 at k = 1, all
   three f8 variants), computes its algebraic degree, and compares with
   the claimed value or bound. */
DegreeTable degree_claims(int m, const FieldCtx& ctx);

enum class EaVerdict { Inequivalent, Unknown };

/* Degree is invariant under extended-affine equivalence for nonconstant
   maps, so distinct degrees certify inequivalence; equal degrees decide
   nothing. Constant inputs are rejected. */
EaVerdict ea_inequiv_by_degree(const SparsePoly& p1, const SparsePoly& p2);

struct SeparationVerdict {
    Family family = Family::T1;
    int witness_index = 0;   // g#
    int witness_degree = -1;
    int claimed_degree = -1; // 2m-1, or 1 for the m=2 witnesses
    bool degree_matches_claim = false;
    std::vector<std::pair<std::string, int>> known_degrees;  // applicable rows only
    bool separated = false;  // witness degree differs from every applicable known degree
};

SeparationVerdict separation_report(Family family, int m, const FieldCtx& ctx);

/* wt2(s (2^m - 1)) = m for all 1 <= s <= 2^m. */
bool weight_lemma_check(int m);

}  // namespace permpoly
