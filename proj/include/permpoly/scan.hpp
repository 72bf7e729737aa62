#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "permpoly/analysis.hpp"
#include "permpoly/verify.hpp"

namespace permpoly {

using json = nlohmann::ordered_json;

enum class MethodSel { Brute, Zieve, ExpSum, All };
std::optional<MethodSel> method_from_name(std::string_view name);

/* A fully-resolved grid point. `family` accepts "thm1".."thm6",
   "frac1"/"frac14"/"frac27"/"frac31", "lem4"/"lem5", "f1".."f18"
   (f8 variants as "f8.1".."f8.3"), and "g1".."g12". */
struct PointSpec {
    std::string family;
    int m = 2;
    std::optional<int> k;
    std::optional<long long> s;
    std::optional<long long> u;
    std::optional<long long> i;
};

struct PointOutcome {
    json record;
    bool consistent = true;        // run methods agree, and conditions=>permutation holds
    bool conditions_hold = false;
    bool verified = false;         // at least one method ran and all that ran returned true
    bool any_method_ran = false;
    bool skipped = false;          // point could not be built (wrong m for the family)
};

/* Builds the point, evaluates its hypotheses, runs the selected
   verification methods, and assembles the machine-readable record. */
PointOutcome run_point(const PointSpec& spec, const FieldCtx& ctx, MethodSel method,
                       bool timings);

struct ISpec {
    enum Kind { List, Units } kind = List;
    std::vector<long long> list{1};  // List
    int sample = 0;                  // Units: 0 = all, else strided sample size
};

struct ScanSpec {
    std::string family;
    std::vector<int> ms;
    std::vector<int> ks{1};
    std::vector<long long> ss{0};
    std::vector<long long> us{0};
    ISpec ispec;
    MethodSel method = MethodSel::All;
    int threads = 0;  // 0 = PERMPOLY_THREADS or hardware default
    bool timings = false;
};

struct ScanResult {
    std::vector<std::string> lines;  // one record per grid point, canonical order
    uint64_t points = 0;
    uint64_t passed = 0;   // conditions hold, all run methods true
    uint64_t failed = 0;   // conditions hold, some run method false
    uint64_t skipped = 0;  // conditions failing or unbuildable points
    bool any_inconsistent = false;
    std::string jsonl() const;
    std::string summary() const;
};

std::vector<PointSpec> expand_grid(const ScanSpec& spec);
ScanResult run_scan(const ScanSpec& spec);

std::string csv_header();
std::string record_to_csv_row(const json& rec);

/* Separation verdicts for all six families plus the degree table. */
json witness_json(int m);
bool witness_all_good(const json& w);

/* Ascending units mod Q; when 0 < sample < count, an evenly strided
   subsequence of that size. */
std::vector<long long> units_mod(long long Q, int sample);

/* PERMPOLY_THREADS env var overrides; 0 falls back to hardware. */
int resolve_threads(int requested);

}  // namespace permpoly
