#include "permpoly/families.hpp"

#include <numeric>

namespace permpoly {

namespace {

struct FamilyInfo {
    Family family;
    const char* name;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::T1, "thm1"},   {Family::T2, "thm2"},   {Family::T3, "thm3"},
    {Family::T4, "thm4"},   {Family::T5, "thm5"},   {Family::T6, "thm6"},
    {Family::F1, "frac1"},  {Family::F14, "frac14"}, {Family::F27, "frac27"},
    {Family::F31, "frac31"}, {Family::L4, "lem4"},   {Family::L5, "lem5"},
};

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

std::string gcd_detail(long long a, long long b) {
    return "gcd(" + std::to_string(a) + ", " + std::to_string(b) + ") = " +
           std::to_string(gcd_ll(a, b));
}

void validate(const FamilyParams& p) {
    if (p.m < 1 || p.m > 12) throw std::domain_error("m out of supported range [1, 12]");
    if (p.k < 1 || p.k > 24) throw std::domain_error("k out of supported range [1, 24]");
    if (family_uses_ui(p.family) && p.i < 1)
        throw std::domain_error("i must be a positive integer");
}

}  // namespace

const char* family_name(Family f) {
    for (const auto& fi : kFamilies)
        if (fi.family == f) return fi.name;
    throw std::logic_error("unknown family");
}

std::optional<Family> family_from_name(std::string_view name) {
    for (const auto& fi : kFamilies)
        if (name == fi.name) return fi.family;
    return std::nullopt;
}

bool family_is_fractional(Family f) {
    switch (f) {
        case Family::F1: case Family::F14: case Family::F27:
        case Family::F31: case Family::L4: case Family::L5: return true;
        default: return false;
    }
}

bool family_uses_s(Family f) {
    switch (f) {
        case Family::T1: case Family::T2: case Family::T3:
        case Family::T4: case Family::F1: case Family::F14: return true;
        default: return false;
    }
}

bool family_uses_ui(Family f) {
    switch (f) {
        case Family::T2: case Family::T4: case Family::T6: return true;
        default: return false;
    }
}

bool family_requires_even_m(Family f) {
    return f != Family::L4 && f != Family::L5;
}

int v2(long long x) {
    if (x < 1) throw std::domain_error("v2 requires a positive integer");
    int e = 0;
    while ((x & 1) == 0) { x >>= 1; ++e; }
    return e;
}

long long mod_inverse(long long a, long long n) {
    if (n < 1) throw std::domain_error("mod_inverse requires positive modulus");
    long long a0 = ((a % n) + n) % n;
    // extended Euclid on (a0, n)
    long long old_r = a0, r = n;
    long long old_s = 1, s = 0;
    while (r != 0) {
        long long qt = old_r / r;
        long long tmp = old_r - qt * r; old_r = r; r = tmp;
        tmp = old_s - qt * s; old_s = s; s = tmp;
    }
    if (old_r != 1) throw std::domain_error("mod_inverse: not invertible");
    return ((old_s % n) + n) % n;
}

bool ConditionReport::all_hold() const {
    for (const auto& c : conditions)
        if (!c.holds) return false;
    return true;
}

ConditionReport check_conditions(const FamilyParams& p) {
    validate(p);
    const long long m = p.m, k = p.k, s = p.s, u = p.u, i = p.i;
    const long long K = 1LL << k;
    const long long Q = (1LL << m) + 1;
    const long long tm = 1LL << m;          // 2^m
    const long long qm1 = (1LL << (2 * m)) - 1;

    ConditionReport rep;
    auto add = [&rep](std::string name, bool holds, std::string detail) {
        rep.conditions.push_back({std::move(name), holds, std::move(detail)});
    };
    auto add_even_m = [&] {
        add("m even", m % 2 == 0, "m = " + std::to_string(m));
    };
    auto add_v2 = [&] {
        add("v2(k) <= v2(m)", v2(k) <= v2(m),
            "v2(" + std::to_string(k) + ") = " + std::to_string(v2(k)) + ", v2(" +
                std::to_string(m) + ") = " + std::to_string(v2(m)));
    };

    switch (p.family) {
        case Family::T1:
            add_even_m();
            add_v2();
            add("gcd(2^k+2s+1, 2^m-1) = 1", gcd_ll(K + 2 * s + 1, tm - 1) == 1,
                gcd_detail(K + 2 * s + 1, tm - 1));
            break;
        case Family::T2: {
            add_even_m();
            add_v2();
            add("gcd(i, Q) = 1", gcd_ll(i, Q) == 1, gcd_detail(i, Q));
            add("gcd(K+2s+1, Q) = 1", gcd_ll(K + 2 * s + 1, Q) == 1,
                gcd_detail(K + 2 * s + 1, Q));
            long long d1 = (K + 2 * s + 1) * i + u * Q;
            add("gcd(d1, 2^2m-1) = 1", gcd_ll(d1, qm1) == 1, gcd_detail(d1, qm1));
            break;
        }
        case Family::T3:
            add_even_m();
            add("gcd(2^k+1, 2^m+1) = 1", gcd_ll(K + 1, Q) == 1, gcd_detail(K + 1, Q));
            add("gcd(2^k+2s+1, 2^m-1) = 1", gcd_ll(K + 2 * s + 1, tm - 1) == 1,
                gcd_detail(K + 2 * s + 1, tm - 1));
            break;
        case Family::T4: {
            add_even_m();
            add("gcd(i, Q) = 1", gcd_ll(i, Q) == 1, gcd_detail(i, Q));
            add("gcd(K+1, Q) = 1", gcd_ll(K + 1, Q) == 1, gcd_detail(K + 1, Q));
            add("gcd(K+2s+1, Q) = 1", gcd_ll(K + 2 * s + 1, Q) == 1,
                gcd_detail(K + 2 * s + 1, Q));
            long long d1 = (K + 2 * s + 1) * i + u * Q;
            add("gcd(d1, 2^2m-1) = 1", gcd_ll(d1, qm1) == 1, gcd_detail(d1, qm1));
            break;
        }
        case Family::T5:
            add_even_m();
            add("k odd", k % 2 == 1, "k = " + std::to_string(k));
            add("gcd(2^k-1, 2^m-1) = 1", gcd_ll(K - 1, tm - 1) == 1, gcd_detail(K - 1, tm - 1));
            add("gcd(2^k+1, 2^m+1) = 1", gcd_ll(K + 1, Q) == 1, gcd_detail(K + 1, Q));
            break;
        case Family::T6: {
            add_even_m();
            add_v2();
            add("gcd(i, Q) = 1", gcd_ll(i, Q) == 1, gcd_detail(i, Q));
            long long d1 = (K - 1) * i + u * Q;
            add("gcd(d1, 2^2m-1) = 1", gcd_ll(d1, qm1) == 1, gcd_detail(d1, qm1));
            bool case_ok = (k % 2 == 0) || gcd_ll(K + 1, Q) == 1;
            add("k even, or k odd and gcd(K+1, Q) = 1", case_ok,
                "k = " + std::to_string(k) + ", " + gcd_detail(K + 1, Q));
            break;
        }
        case Family::F1:
            add_even_m();
            add_v2();
            break;
        case Family::F14:
            add_even_m();
            add("gcd(2^k+1, 2^m+1) = 1", gcd_ll(K + 1, Q) == 1, gcd_detail(K + 1, Q));
            break;
        case Family::F27:
            add_even_m();
            add("k even", k % 2 == 0, "k = " + std::to_string(k));
            add_v2();
            break;
        case Family::F31:
            add_even_m();
            add("k odd", k % 2 == 1, "k = " + std::to_string(k));
            add("gcd(2^k+1, 2^m+1) = 1", gcd_ll(K + 1, Q) == 1, gcd_detail(K + 1, Q));
            break;
        case Family::L4:
            add("gcd(2^k-1, 2^m+1) = 1", gcd_ll(K - 1, Q) == 1, gcd_detail(K - 1, Q));
            break;
        case Family::L5:
            add("gcd(2^k+1, 2^m+1) = 1", gcd_ll(K + 1, Q) == 1, gcd_detail(K + 1, Q));
            break;
    }
    return rep;
}

std::vector<long long> exponent_list(const FamilyParams& p) {
    validate(p);
    const long long K = 1LL << p.k;
    const long long Q = (1LL << p.m) + 1;

    FamilyParams eff = p;
    switch (p.family) {
        case Family::T1: eff.family = Family::T2; eff.u = 0; eff.i = 1; break;
        case Family::T3: eff.family = Family::T4; eff.u = 0; eff.i = 1; break;
        case Family::T5: eff.family = Family::T6; eff.u = 0; eff.i = 1; break;
        default: break;
    }
    const long long s = eff.s, u = eff.u, i = eff.i;

    std::vector<long long> out;
    switch (eff.family) {
        case Family::T2: {
            const long long base = (K + 2 * s + 1) * i + u * Q;
            for (long long c : {0LL, 1LL, s, s + 1, 2 * s, 2 * s + 1, K + 1, K + s + 1, K + 2 * s + 1})
                out.push_back(base + (Q - 2) * c * i);
            break;
        }
        case Family::T4: {
            const long long base = (K + 2 * s + 1) * i + u * Q;
            for (long long c : {0LL, 1LL, s, s + 1, 2 * s, 2 * s + 1, K, K + s, K + 2 * s})
                out.push_back(base + (Q - 2) * c * i);
            break;
        }
        case Family::T6: {
            const long long base = (K - 1) * i + u * Q;
            for (long long j = 1; j <= K; ++j) {
                if (j % 3 == 0 || j % 3 == 1) out.push_back(base + (Q - 2) * (j - 1) * i);
            }
            break;
        }
        default:
            throw std::domain_error("exponent_list: fractional family has no full-field form");
    }
    return out;
}

SparsePoly build_pp(const FamilyParams& p, const FieldCtx& ctx) {
    if (ctx.m() != p.m) throw std::domain_error("field context does not match params");
    return SparsePoly::from_exponents(exponent_list(p), ctx);
}

FracPoly build_frac(const FamilyParams& p) {
    validate(p);
    const long long K = 1LL << p.k;
    const long long s = p.s;
    const uint32_t Q = (uint32_t(1) << p.m) + 1;

    std::vector<long long> num, den;
    switch (p.family) {
        case Family::F1:
            num = {K + 2 * s + 1, K + 2 * s, K + s + 1, K + s, K + 1, K, 2 * s, s, 0};
            den = {K + 2 * s + 1, K + s + 1, K + 1, 2 * s + 1, 2 * s, s + 1, s, 1, 0};
            break;
        case Family::F14:
            num = {K + 2 * s + 1, K + 2 * s, K + s + 1, K + s, K + 1, K, 2 * s + 1, s + 1, 1};
            den = {K + 2 * s, K + s, K, 2 * s + 1, 2 * s, s + 1, s, 1, 0};
            break;
        case Family::F27:
            for (long long i = 1; i <= K; ++i)
                if (i % 3 == 0 || i % 3 == 1) num.push_back(K - i);
            for (long long j = 1; j <= K; ++j)
                if (j % 3 == 1 || j % 3 == 2) den.push_back(K - j);
            break;
        case Family::F31:
            for (long long i = 1; i <= K; ++i)
                if (i % 3 == 0 || i % 3 == 1) num.push_back(K - i);
            for (long long j = 1; j <= K; ++j)
                if (j % 3 == 0 || j % 3 == 2) den.push_back(K - j);
            break;
        case Family::L4:
            num = {K + 1, K, 0};
            den = {K + 1, 1, 0};
            break;
        case Family::L5:
            num = {K + 1, K, 1};
            den = {K, 1, 0};
            break;
        default:
            throw std::domain_error("build_frac: not a fractional family");
    }
    return FracPoly::make(num, den, Q);
}

std::optional<std::string> known_side_condition_violation(const KnownId& id, int m) {
    if (m < 1 || m > 12) return "m out of supported range [1, 12]";
    auto need = [m](bool ok, const char* what) -> std::optional<std::string> {
        if (ok) return std::nullopt;
        return std::string(what) + " (m = " + std::to_string(m) + ")";
    };
    const long long Q = (1LL << m) + 1;
    switch (id.index) {
        case 1: case 2: case 3:
            return need(std::gcd(static_cast<long long>(m), 3LL) == 1, "requires gcd(m, 3) = 1");
        case 4:
            return need(m % 3 != 0, "requires m not divisible by 3");
        case 5: case 9:
            return std::nullopt;
        case 6: {
            if (id.k < 1 || id.k >= m) return "requires 1 <= k < m";
            return need(std::gcd((1LL << id.k) - 1, Q) == 1, "requires gcd(2^k-1, 2^m+1) = 1");
        }
        case 7: {
            if (id.k < 1) return "requires k >= 1";
            return need(std::gcd((1LL << id.k) + 1, Q) == 1, "requires gcd(2^k+1, 2^m+1) = 1");
        }
        case 8:
            if (id.variant < 0 || id.variant > 2) return "variant must be 0, 1, or 2";
            return need(m % 2 == 0, "requires m even");
        case 10:
            return need(m % 2 == 0 && m >= 4, "requires m even and m >= 4");
        case 11: case 12:
            return need(m % 4 != 0, "requires m not divisible by 4");
        case 13:
            return need(std::gcd(static_cast<long long>(m), 3LL) == 1, "requires gcd(m, 3) = 1");
        case 14: case 15: case 16: case 17: case 18:
            return need(m % 4 == 2, "requires m = 2 mod 4");
        default:
            return "unknown catalog index";
    }
}

SparsePoly build_known(const KnownId& id, const FieldCtx& ctx) {
    const int m = ctx.m();
    if (auto why = known_side_condition_violation(id, m))
        throw std::domain_error("f" + std::to_string(id.index) + ": " + *why);

    const long long tm = 1LL << m;
    const long long Q = tm + 1;
    auto trinom = [&](long long s, long long t) {
        return SparsePoly::from_exponents({1, s * (tm - 1) + 1, t * (tm - 1) + 1}, ctx);
    };

    switch (id.index) {
        case 1: return SparsePoly::from_exponents({4, tm + 3, 3 * tm + 1}, ctx);
        case 2: return SparsePoly::from_exponents({2, 2 * tm, 3 * tm - 1}, ctx);
        case 3: return SparsePoly::from_exponents({5, tm + 4, 4 * tm + 1}, ctx);
        case 4: return SparsePoly::from_exponents({1, tm, (1LL << (2 * m - 1)) - (1LL << (m - 1)) + 1}, ctx);
        case 5: {
            // coefficients 1, a, a^{2^{m-1}} with a of order Q
            FieldElement a = pow(ctx.generator(), (ctx.q() - 1) / Q);
            FieldElement a_pow = pow(a, 1LL << (m - 1));
            return SparsePoly::from_terms(
                {{1, ctx.one()}, {2 * tm - 1, a}, {(tm - 1) * tm + 1, a_pow}}, ctx);
        }
        case 6: {
            long long inv = mod_inverse((1LL << id.k) - 1, Q);
            long long s = ((1LL << id.k) % Q) * inv % Q;
            long long t = (Q - inv) % Q;
            return trinom(s, t);
        }
        case 7: {
            long long inv = mod_inverse((1LL << id.k) + 1, Q);
            long long s = inv;
            long long t = ((1LL << id.k) % Q) * inv % Q;
            return trinom(s, t);
        }
        case 8: {
            long long inv3 = mod_inverse(3, Q);
            long long s, t;
            if (id.variant == 0) { s = (Q - inv3) % Q; t = 4 * inv3 % Q; }
            else if (id.variant == 1) { s = 3 % Q; t = Q - 1; }
            else { s = (Q - 2 * inv3 % Q) % Q; t = 5 * inv3 % Q; }
            return trinom(s, t);
        }
        case 9: return trinom(tm, 2);
        case 10: return trinom(1LL << (m - 1), (1LL << (2 * m - 1)) % Q);
        case 11: return SparsePoly::from_exponents({5, tm + 4, 3 * tm + 2, 4 * tm + 1, 5 * tm}, ctx);
        case 12: return SparsePoly::from_exponents({5, tm + 4, 2 * tm + 3, 4 * tm + 1, 5 * tm}, ctx);
        case 13: return SparsePoly::from_exponents({7, 2 * tm + 5, 3 * tm + 4, 5 * tm + 2, 6 * tm + 1}, ctx);
        case 14: return SparsePoly::from_exponents({5, tm + 4, 3 * tm + 2, 4 * tm + 1, 6 * tm - 1}, ctx);
        case 15: return SparsePoly::from_exponents({5, 3 * tm + 2, 4 * tm + 1}, ctx);
        case 16: return SparsePoly::from_exponents({tm + 4, 2 * tm + 3, 5 * tm}, ctx);
        case 17: return SparsePoly::from_exponents({5, tm + 4, 5 * tm}, ctx);
        case 18: return SparsePoly::from_exponents({5, 4 * tm + 1, 5 * tm}, ctx);
        default: throw std::domain_error("unknown catalog index");
    }
}

FamilyParams witness_params(int g_index, int m) {
    if (g_index < 1 || g_index > 12) throw std::domain_error("witness index must be in 1..12");
    if (m < 2 || m % 2 != 0) throw std::domain_error("witnesses require even m >= 2");
    const bool m2_only = g_index % 2 == 0;
    if (m2_only && m != 2)
        throw std::domain_error("g" + std::to_string(g_index) + " is defined at m = 2 only");

    const long long s_high = (1LL << (2 * m - 1)) - 3;
    FamilyParams p;
    p.m = m;
    switch (g_index) {
        case 1:  p.family = Family::T1; p.k = 1; p.s = s_high; break;
        case 2:  p.family = Family::T1; p.k = 1; p.s = 1; break;
        case 3:  p.family = Family::T2; p.k = 1; p.s = -2; p.u = 0; p.i = 1; break;
        // i = 2, not the printed i = 1: at i = 1 the exponent system collapses
        // to x^12, which is not a bijection of GF(16) and fails the family's
        // own gcd(d1, 2^2m-1) hypothesis; i = 2 satisfies every hypothesis and
        // yields x^4.
        case 4:  p.family = Family::T2; p.k = 1; p.s = -1; p.u = 4; p.i = 2; break;
        case 5:  p.family = Family::T3; p.k = 1; p.s = s_high; break;
        case 6:  p.family = Family::T3; p.k = 3; p.s = 1; break;
        case 7:  p.family = Family::T4; p.k = 1; p.s = -2; p.u = 0; p.i = 1; break;
        case 8:  p.family = Family::T4; p.k = 3; p.s = -1; p.u = 2; p.i = 1; break;
        case 9:  p.family = Family::T5; p.k = 2 * m - 1; break;
        case 10: p.family = Family::T5; p.k = 1; break;
        case 11: p.family = Family::T6; p.k = 2; p.u = -2; p.i = 1; break;
        case 12: p.family = Family::T6; p.k = 1; p.u = 0; p.i = 1; break;
    }
    return p;
}

SparsePoly build_witness(int g_index, const FieldCtx& ctx) {
    return build_pp(witness_params(g_index, ctx.m()), ctx);
}

}  // namespace permpoly
