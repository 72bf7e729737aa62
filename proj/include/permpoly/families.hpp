#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permpoly/polyexp.hpp"
#include "permpoly/subgroup.hpp"

namespace permpoly {

/* The six full-field constructions (thm1..thm6), the four fractional
   families over U (frac1/frac14/frac27/frac31), and the two base
   fractions they reduce to (lem4/lem5). */
enum class Family { T1, T2, T3, T4, T5, T6, F1, F14, F27, F31, L4, L5 };

const char* family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

bool family_is_fractional(Family f);
bool family_uses_s(Family f);
bool family_uses_ui(Family f);  // u and i
bool family_requires_even_m(Family f);

struct FamilyParams {
    Family family = Family::T1;
    int m = 2;
    int k = 1;
    long long s = 0;
    long long u = 0;
    long long i = 1;
};

int v2(long long x);                              // largest e with 2^e | x; x >= 1
long long mod_inverse(long long a, long long n);  // throws if gcd(a, n) != 1

struct Condition {
    std::string name;
    bool holds;
    std::string detail;
};

struct ConditionReport {
    std::vector<Condition> conditions;
    bool all_hold() const;
};

/* Every hypothesis of the family's theorem/lemma, each evaluated
   independently. Building is unconditional; failing points are legal
   negative controls. */
ConditionReport check_conditions(const FamilyParams& p);

/* Raw exponent list of the construction, in theorem order with d1
   first. Only meaningful for thm1..thm6. */
std::vector<long long> exponent_list(const FamilyParams& p);

SparsePoly build_pp(const FamilyParams& p, const FieldCtx& ctx);
FracPoly build_frac(const FamilyParams& p);

/* Catalog of known permutation-polynomial families f1..f18. f6/f7 take
   a parameter k; f8 has three (s,t) variants selected by `variant`. */
struct KnownId {
    int index = 1;   // 1..18
    int k = 1;       // f6/f7 only
    int variant = 0; // f8 only: 0, 1, 2
};

/* Empty when m satisfies the family's stated side condition, otherwise a
   description of the violated condition. */
std::optional<std::string> known_side_condition_violation(const KnownId& id, int m);
SparsePoly build_known(const KnownId& id, const FieldCtx& ctx);

/* The twelve catalog witnesses g1..g12: parameter points of thm1..thm6.
   Even-indexed witnesses are m=2-specific and reject other m. */
FamilyParams witness_params(int g_index, int m);
SparsePoly build_witness(int g_index, const FieldCtx& ctx);

}  // namespace permpoly
