#include "permpoly/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <memory>
#include <numeric>
#include <thread>

namespace permpoly {

namespace {

json witness_to_json(const Witness& w) {
    if (std::holds_alternative<std::monostate>(w)) return nullptr;
    if (const auto* c = std::get_if<CollisionWitness>(&w))
        return json{{"type", "collision"}, {"x1", c->x1.to_hex()}, {"x2", c->x2.to_hex()}};
    if (const auto* z = std::get_if<DenomZeroWitness>(&w))
        return json{{"type", "denominator_zero"}, {"x", z->x.to_hex()}};
    if (const auto* e = std::get_if<ExpSumWitness>(&w)) {
        json omegas = json::array();
        for (const auto& om : e->omegas) omegas.push_back(om.to_hex());
        return json{{"type", "expsum"},
                    {"delta", e->delta.to_hex()},
                    {"n", e->n_count},
                    {"omegas", omegas}};
    }
    return json{{"type", "note"}, {"text", std::get<std::string>(w)}};
}

json conditions_to_json(const ConditionReport& rep) {
    json arr = json::array();
    for (const auto& c : rep.conditions)
        arr.push_back(json{{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}});
    return arr;
}

struct ParsedFamily {
    enum Kind { Thm, Frac, Known, Witness } kind;
    Family family = Family::T1;  // Thm/Frac
    int known_index = 0;         // Known
    int known_variant = 0;       // f8
    int witness_index = 0;       // Witness
};

std::optional<ParsedFamily> parse_family(std::string_view name) {
    if (auto fam = family_from_name(name)) {
        ParsedFamily p;
        p.kind = family_is_fractional(*fam) ? ParsedFamily::Frac : ParsedFamily::Thm;
        p.family = *fam;
        return p;
    }
    auto parse_int = [](std::string_view sv, int& out) {
        if (sv.empty()) return false;
        int v = 0;
        for (char c : sv) {
            if (c < '0' || c > '9') return false;
            v = v * 10 + (c - '0');
        }
        out = v;
        return true;
    };
    if (name.size() >= 2 && name[0] == 'f') {
        ParsedFamily p;
        p.kind = ParsedFamily::Known;
        std::string_view rest = name.substr(1);
        bool had_dot = false;
        auto dot = rest.find('.');
        if (dot != std::string_view::npos) {
            had_dot = true;
            int variant = 0;
            if (!parse_int(rest.substr(dot + 1), variant) || variant < 1 || variant > 3)
                return std::nullopt;
            p.known_variant = variant - 1;
            rest = rest.substr(0, dot);
        }
        if (!parse_int(rest, p.known_index) || p.known_index < 1 || p.known_index > 18)
            return std::nullopt;
        if (had_dot && p.known_index != 8) return std::nullopt;
        return p;
    }
    if (name.size() >= 2 && name[0] == 'g') {
        ParsedFamily p;
        p.kind = ParsedFamily::Witness;
        if (!parse_int(name.substr(1), p.witness_index) || p.witness_index < 1 ||
            p.witness_index > 12)
            return std::nullopt;
        return p;
    }
    return std::nullopt;
}

struct MethodResults {
    std::optional<bool> brute, zieve, expsum;
    Witness first_witness;

    json to_json() const {
        auto cell = [](const std::optional<bool>& v) -> json {
            if (!v) return "n/a";
            return *v;
        };
        return json{{"brute", cell(brute)}, {"zieve", cell(zieve)}, {"expsum", cell(expsum)}};
    }
    std::vector<bool> verdicts() const {
        std::vector<bool> v;
        if (brute) v.push_back(*brute);
        if (zieve) v.push_back(*zieve);
        if (expsum) v.push_back(*expsum);
        return v;
    }
};

void keep_first_witness(MethodResults& r, const VerifyReport& rep) {
    if (!rep.is_permutation && std::holds_alternative<std::monostate>(r.first_witness))
        r.first_witness = rep.witness;
}

/* Runs the selected verifiers against a full-field polynomial. The raw
   exponent list (d1 first) drives the exponential-sum check; the
   canonical polynomial drives brute force and the factoring check. */
MethodResults run_methods(const SparsePoly& poly, const std::vector<long long>& raw_exps,
                          MethodSel sel, const FieldCtx& ctx, double* elapsed_ms) {
    MethodResults r;
    const uint32_t Q = (uint32_t(1) << ctx.m()) + 1;
    double total = 0;

    if (sel == MethodSel::All || sel == MethodSel::Brute) {
        VerifyReport rep = brute_force_is_pp(poly);
        r.brute = rep.is_permutation;
        keep_first_witness(r, rep);
        total += rep.elapsed.count();
    }
    if (sel == MethodSel::All || sel == MethodSel::Zieve) {
        if (auto dec = decompose_zieve(poly, Q)) {
            VerifyReport rep = zieve_check(dec->r, dec->h_exps, Q, ctx);
            r.zieve = rep.is_permutation;
            keep_first_witness(r, rep);
            total += rep.elapsed.count();
        }
    }
    if ((sel == MethodSel::All || sel == MethodSel::ExpSum) && !raw_exps.empty() &&
        poly.all_coeffs_one()) {
        if (expsum_preconditions(raw_exps, ctx).ok()) {
            VerifyReport rep = expsum_check(raw_exps, ctx);
            r.expsum = rep.is_permutation;
            keep_first_witness(r, rep);
            total += rep.elapsed.count();
        }
    }
    if (elapsed_ms) *elapsed_ms = total;
    return r;
}

json base_record(const PointSpec& spec) {
    json rec;
    rec["family"] = spec.family;
    rec["m"] = spec.m;
    rec["k"] = spec.k ? json(*spec.k) : json(nullptr);
    rec["s"] = spec.s ? json(*spec.s) : json(nullptr);
    rec["u"] = spec.u ? json(*spec.u) : json(nullptr);
    rec["i"] = spec.i ? json(*spec.i) : json(nullptr);
    return rec;
}

PointOutcome finish_record(json rec, const ConditionReport& conds,
                           const MethodResults& methods, long long collapsed,
                           std::optional<int> degree, double elapsed_ms, bool timings) {
    PointOutcome out;
    out.conditions_hold = conds.all_hold();
    rec["conditions"] = conditions_to_json(conds);
    rec["collapsed_terms"] = collapsed;
    rec["methods"] = methods.to_json();
    rec["degree"] = degree ? json(*degree) : json(nullptr);
    rec["elapsed_ms"] = timings ? json(elapsed_ms) : json(0);
    rec["witness"] = witness_to_json(methods.first_witness);

    const auto verdicts = methods.verdicts();
    bool agree = std::all_of(verdicts.begin(), verdicts.end(),
                             [&](bool v) { return v == verdicts.front(); });
    out.any_method_ran = !verdicts.empty();
    out.verified = out.any_method_ran && agree && verdicts.front();
    out.consistent = (verdicts.empty() || agree) &&
                     !(out.conditions_hold && out.any_method_ran && !out.verified);
    rec["consistent"] = out.consistent;
    out.record = std::move(rec);
    return out;
}

}  // namespace

std::optional<MethodSel> method_from_name(std::string_view name) {
    if (name == "brute") return MethodSel::Brute;
    if (name == "zieve") return MethodSel::Zieve;
    if (name == "expsum") return MethodSel::ExpSum;
    if (name == "all") return MethodSel::All;
    return std::nullopt;
}

PointOutcome run_point(const PointSpec& spec, const FieldCtx& ctx, MethodSel sel,
                       bool timings) {
    auto parsed = parse_family(spec.family);
    if (!parsed) throw std::domain_error("unknown family: " + spec.family);
    if (ctx.m() != spec.m) throw std::domain_error("field context does not match point");

    json rec = base_record(spec);

    switch (parsed->kind) {
        case ParsedFamily::Thm: {
            FamilyParams p;
            p.family = parsed->family;
            p.m = spec.m;
            p.k = spec.k.value_or(1);
            p.s = spec.s.value_or(0);
            p.u = spec.u.value_or(0);
            p.i = spec.i.value_or(1);
            rec["k"] = p.k;
            rec["s"] = family_uses_s(p.family) ? json(p.s) : json(nullptr);
            rec["u"] = family_uses_ui(p.family) ? json(p.u) : json(nullptr);
            rec["i"] = family_uses_ui(p.family) ? json(p.i) : json(nullptr);
            ConditionReport conds = check_conditions(p);
            const auto raw = exponent_list(p);
            SparsePoly poly = build_pp(p, ctx);
            double ms = 0;
            MethodResults methods = run_methods(poly, raw, sel, ctx, &ms);
            return finish_record(std::move(rec), conds, methods,
                                 static_cast<long long>(raw.size()) -
                                     static_cast<long long>(poly.terms().size()),
                                 poly.algebraic_degree(), ms, timings);
        }
        case ParsedFamily::Frac: {
            FamilyParams p;
            p.family = parsed->family;
            p.m = spec.m;
            p.k = spec.k.value_or(1);
            p.s = spec.s.value_or(0);
            rec["k"] = p.k;
            rec["s"] = family_uses_s(p.family) ? json(p.s) : json(nullptr);
            rec["u"] = nullptr;
            rec["i"] = nullptr;
            ConditionReport conds = check_conditions(p);
            FracPoly f = build_frac(p);
            long long raw_terms = 0;
            switch (parsed->family) {
                case Family::F1: case Family::F14: raw_terms = 18; break;
                case Family::L4: case Family::L5: raw_terms = 6; break;
                default: {  // F27/F31: class sizes of i and j below 2^k
                    long long K = 1LL << p.k;
                    for (long long t = 1; t <= K; ++t) raw_terms += (t % 3 != 2) ? 1 : 0;
                    for (long long t = 1; t <= K; ++t)
                        raw_terms += ((parsed->family == Family::F27 ? t % 3 != 0 : t % 3 != 1)) ? 1 : 0;
                }
            }
            auto t0 = std::chrono::steady_clock::now();
            SubgroupU U(ctx);
            UPermReport rep = frac_permutes_U(f, U);
            double ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0).count();
            MethodResults methods;
            methods.brute = rep.permutes;
            if (rep.denom_zero_at) methods.first_witness = DenomZeroWitness{*rep.denom_zero_at};
            else if (rep.collision)
                methods.first_witness = CollisionWitness{rep.collision->first, rep.collision->second};
            long long collapsed = raw_terms - static_cast<long long>(f.num.size() + f.den.size());
            return finish_record(std::move(rec), conds, methods, collapsed, std::nullopt, ms,
                                 timings);
        }
        case ParsedFamily::Known: {
            KnownId id{parsed->known_index, spec.k.value_or(1), parsed->known_variant};
            const bool uses_k = id.index == 6 || id.index == 7;
            rec["k"] = uses_k ? json(id.k) : json(nullptr);
            rec["s"] = nullptr;
            rec["u"] = nullptr;
            rec["i"] = nullptr;
            ConditionReport conds;
            auto violation = known_side_condition_violation(id, spec.m);
            conds.conditions.push_back(
                {"side condition", !violation.has_value(), violation.value_or("holds")});
            if (violation) {
                MethodResults none;
                PointOutcome out = finish_record(std::move(rec), conds, none, 0, std::nullopt,
                                                 0, timings);
                out.skipped = true;
                return out;
            }
            SparsePoly poly = build_known(id, ctx);
            std::vector<long long> raw;
            for (uint32_t e : poly.exponents()) raw.push_back(e);
            double ms = 0;
            MethodResults methods = run_methods(poly, raw, sel, ctx, &ms);
            return finish_record(std::move(rec), conds, methods, 0, poly.algebraic_degree(),
                                 ms, timings);
        }
        case ParsedFamily::Witness: {
            FamilyParams p = witness_params(parsed->witness_index, spec.m);
            ConditionReport conds = check_conditions(p);
            const auto raw = exponent_list(p);
            SparsePoly poly = build_pp(p, ctx);
            double ms = 0;
            MethodResults methods = run_methods(poly, raw, sel, ctx, &ms);
            json r2 = std::move(rec);
            r2["k"] = p.k;
            r2["s"] = family_uses_s(p.family) ? json(p.s) : json(nullptr);
            r2["u"] = family_uses_ui(p.family) ? json(p.u) : json(nullptr);
            r2["i"] = family_uses_ui(p.family) ? json(p.i) : json(nullptr);
            return finish_record(std::move(r2), conds, methods,
                                 static_cast<long long>(raw.size()) -
                                     static_cast<long long>(poly.terms().size()),
                                 poly.algebraic_degree(), ms, timings);
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<long long> units_mod(long long Q, int sample) {
    std::vector<long long> all;
    for (long long i = 1; i < Q; ++i)
        if (std::gcd(i, Q) == 1) all.push_back(i);
    if (sample <= 0 || static_cast<size_t>(sample) >= all.size()) return all;
    std::vector<long long> out;
    out.reserve(sample);
    for (int j = 0; j < sample; ++j)
        out.push_back(all[static_cast<size_t>(j) * all.size() / sample]);
    return out;
}

std::vector<PointSpec> expand_grid(const ScanSpec& spec) {
    auto parsed = parse_family(spec.family);
    if (!parsed) throw std::domain_error("unknown family: " + spec.family);

    bool use_k = true, use_s = false, use_ui = false;
    switch (parsed->kind) {
        case ParsedFamily::Thm:
        case ParsedFamily::Frac:
            use_s = family_uses_s(parsed->family);
            use_ui = family_uses_ui(parsed->family);
            break;
        case ParsedFamily::Known:
            use_k = parsed->known_index == 6 || parsed->known_index == 7;
            break;
        case ParsedFamily::Witness:
            use_k = false;
            break;
    }

    std::vector<PointSpec> grid;
    for (int m : spec.ms) {
        const long long Q = (1LL << m) + 1;
        std::vector<long long> is;
        if (use_ui) {
            is = spec.ispec.kind == ISpec::Units ? units_mod(Q, spec.ispec.sample)
                                                 : spec.ispec.list;
        }
        auto loop_ui = [&](PointSpec base) {
            if (!use_ui) {
                grid.push_back(base);
                return;
            }
            for (long long u : spec.us)
                for (long long i : is) {
                    PointSpec ps = base;
                    ps.u = u;
                    ps.i = i;
                    grid.push_back(ps);
                }
        };
        auto loop_s = [&](PointSpec base) {
            if (!use_s) {
                loop_ui(base);
                return;
            }
            for (long long s : spec.ss) {
                PointSpec ps = base;
                ps.s = s;
                loop_ui(ps);
            }
        };
        PointSpec base;
        base.family = spec.family;
        base.m = m;
        if (!use_k) {
            loop_s(base);
            continue;
        }
        for (int k : spec.ks) {
            PointSpec ps = base;
            ps.k = k;
            loop_s(ps);
        }
    }
    return grid;
}

int resolve_threads(int requested) {
    if (const char* env = std::getenv("PERMPOLY_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

ScanResult run_scan(const ScanSpec& spec) {
    const auto grid = expand_grid(spec);
    ScanResult result;
    result.points = grid.size();
    result.lines.resize(grid.size());
    if (grid.empty()) return result;

    std::map<int, std::unique_ptr<FieldCtx>> ctxs;
    for (const auto& ps : grid)
        if (!ctxs.count(ps.m)) ctxs.emplace(ps.m, std::make_unique<FieldCtx>(ps.m));

    std::atomic<size_t> next{0};
    std::atomic<uint64_t> passed{0}, failed{0}, skipped{0};
    std::atomic<bool> inconsistent{false};

    auto worker = [&] {
        size_t idx;
        while ((idx = next.fetch_add(1)) < grid.size()) {
            const PointSpec& ps = grid[idx];
            PointOutcome out;
            try {
                out = run_point(ps, *ctxs.at(ps.m), spec.method, spec.timings);
            } catch (const std::domain_error& e) {
                // unbuildable point (wrong m for the family, parameter out of
                // range): record it as skipped rather than aborting the sweep
                json rec = base_record(ps);
                ConditionReport conds;
                conds.conditions.push_back({"buildable", false, e.what()});
                out = finish_record(std::move(rec), conds, MethodResults{}, 0, std::nullopt,
                                    0, spec.timings);
                out.skipped = true;
            }
            result.lines[idx] = out.record.dump();
            if (!out.consistent) inconsistent = true;
            if (out.skipped || !out.conditions_hold || !out.any_method_ran) ++skipped;
            else if (out.verified) ++passed;
            else ++failed;
        }
    };

    const int nthreads = resolve_threads(spec.threads);
    if (nthreads <= 1 || grid.size() == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    result.passed = passed;
    result.failed = failed;
    result.skipped = skipped;
    result.any_inconsistent = inconsistent;
    return result;
}

std::string ScanResult::jsonl() const {
    std::string out;
    for (const auto& line : lines) {
        out += line;
        out += '\n';
    }
    return out;
}

std::string ScanResult::summary() const {
    return "points=" + std::to_string(points) + " pass=" + std::to_string(passed) +
           " fail=" + std::to_string(failed) + " skip=" + std::to_string(skipped) +
           (any_inconsistent ? " INCONSISTENT" : "");
}

std::string csv_header() {
    return "family,m,k,s,u,i,conditions,collapsed_terms,brute,zieve,expsum,degree,"
           "elapsed_ms,witness,consistent";
}

std::string record_to_csv_row(const json& rec) {
    auto cell = [](const json& v) -> std::string {
        if (v.is_null()) return "";
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    };
    std::string conds;
    for (const auto& c : rec.at("conditions")) {
        if (!conds.empty()) conds += ';';
        conds += c.at("name").get<std::string>();
        conds += c.at("holds").get<bool>() ? "=1" : "=0";
    }
    std::string witness;
    if (!rec.at("witness").is_null()) witness = rec.at("witness").dump();
    // quote the fields that may contain commas
    auto quoted = [](std::string s) {
        std::string out = "\"";
        for (char ch : s) {
            if (ch == '"') out += "\"\"";
            else out += ch;
        }
        return out + "\"";
    };
    const auto& meth = rec.at("methods");
    return cell(rec.at("family")) + "," + cell(rec.at("m")) + "," + cell(rec.at("k")) + "," +
           cell(rec.at("s")) + "," + cell(rec.at("u")) + "," + cell(rec.at("i")) + "," +
           quoted(conds) + "," + cell(rec.at("collapsed_terms")) + "," +
           cell(meth.at("brute")) + "," + cell(meth.at("zieve")) + "," +
           cell(meth.at("expsum")) + "," + cell(rec.at("degree")) + "," +
           cell(rec.at("elapsed_ms")) + "," + (witness.empty() ? "" : quoted(witness)) + "," +
           cell(rec.at("consistent"));
}

json witness_json(int m) {
    if (m % 2 != 0 || m < 2) throw std::domain_error("witness report requires even m >= 2");
    FieldCtx ctx(m);

    json out;
    out["m"] = m;

    const DegreeTable table = degree_claims(m, ctx);
    json rows = json::array();
    for (const DegreeRow& r : table.rows) {
        rows.push_back(json{{"id", r.id},
                            {"applicable", r.applicable},
                            {"degree", r.applicable ? json(r.degree) : json(nullptr)},
                            {"claim", r.claim.to_string()},
                            {"matches", r.applicable ? json(r.matches) : json(nullptr)}});
    }
    out["degree_table"] = rows;

    bool all_separated = true, all_claims = table.all_match();
    json verdicts = json::array();
    for (Family fam : {Family::T1, Family::T2, Family::T3, Family::T4, Family::T5, Family::T6}) {
        SeparationVerdict v = separation_report(fam, m, ctx);
        json kd = json::array();
        for (const auto& [id, deg] : v.known_degrees) kd.push_back(json::array({id, deg}));
        verdicts.push_back(json{{"family", family_name(fam)},
                                {"witness", "g" + std::to_string(v.witness_index)},
                                {"witness_degree", v.witness_degree},
                                {"claimed_degree", v.claimed_degree},
                                {"degree_matches_claim", v.degree_matches_claim},
                                {"known_degrees", kd},
                                {"separated", v.separated}});
        all_separated = all_separated && v.separated;
        all_claims = all_claims && v.degree_matches_claim;
    }
    out["separations"] = verdicts;
    out["all_separated"] = all_separated;
    out["all_claims_match"] = all_claims;
    return out;
}

bool witness_all_good(const json& w) {
    return w.at("all_separated").get<bool>() && w.at("all_claims_match").get<bool>();
}

}  // namespace permpoly
