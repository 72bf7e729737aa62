#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "permpoly/scan.hpp"

namespace {

using permpoly::json;

// "a", "a:b" (inclusive), or "a,b,c"
std::vector<long long> parse_range(const std::string& text) {
    std::vector<long long> out;
    auto parse_one = [](const std::string& tok) {
        size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad integer: " + tok);
        return v;
    };
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        long long lo = parse_one(text.substr(0, colon));
        long long hi = parse_one(text.substr(colon + 1));
        for (long long v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
    size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        std::string tok = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                        : comma - start);
        if (!tok.empty()) out.push_back(parse_one(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

permpoly::ISpec parse_ispec(const std::string& text) {
    permpoly::ISpec spec;
    if (text == "units") {
        spec.kind = permpoly::ISpec::Units;
        return spec;
    }
    if (text.rfind("units:", 0) == 0) {
        spec.kind = permpoly::ISpec::Units;
        spec.sample = std::stoi(text.substr(6));
        if (spec.sample < 1) throw std::invalid_argument("units sample must be positive");
        return spec;
    }
    spec.kind = permpoly::ISpec::List;
    spec.list = parse_range(text);
    return spec;
}

bool family_needs_even_m(const std::string& family) {
    if (auto fam = permpoly::family_from_name(family))
        return permpoly::family_requires_even_m(*fam);
    return family.size() >= 2 && family[0] == 'g';  // witnesses need even m
}

int cmd_verify(const std::string& family, int m, int k, long long s, long long u, long long i,
               const std::string& method_name, bool timings) {
    auto method = permpoly::method_from_name(method_name);
    if (!method) {
        std::cerr << "unknown method: " << method_name << "\n";
        return 1;
    }
    if (family_needs_even_m(family) && m % 2 != 0) {
        std::cerr << "family " << family << " requires even m\n";
        return 1;
    }
    permpoly::PointSpec spec;
    spec.family = family;
    spec.m = m;
    spec.k = k;
    spec.s = s;
    spec.u = u;
    spec.i = i;
    try {
        permpoly::FieldCtx ctx(m);
        permpoly::PointOutcome out = permpoly::run_point(spec, ctx, *method, timings);
        std::cout << out.record.dump() << "\n";
        if (out.skipped) {
            std::cerr << "side condition violated\n";
            return 1;
        }
        return out.consistent ? 0 : 2;
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}

int cmd_scan(permpoly::ScanSpec spec, const std::string& out_path, const std::string& format) {
    for (int m : spec.ms) {
        if (m < 1 || m > 12) {
            std::cerr << "m out of supported range [1, 12]\n";
            return 1;
        }
        if (family_needs_even_m(spec.family) && m % 2 != 0) {
            std::cerr << "family " << spec.family << " requires even m\n";
            return 1;
        }
    }
    try {
        const auto grid = permpoly::expand_grid(spec);
        std::cerr << "grid size: " << grid.size() << "\n";
        permpoly::ScanResult result = permpoly::run_scan(spec);

        std::string payload;
        if (format == "csv") {
            payload = permpoly::csv_header() + "\n";
            for (const auto& line : result.lines)
                payload += permpoly::record_to_csv_row(json::parse(line)) + "\n";
        } else {
            payload = result.jsonl();
        }

        if (out_path.empty() || out_path == "-") {
            std::cout << payload;
            std::cerr << result.summary() << "\n";
        } else {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) {
                std::cerr << "cannot open output file: " << out_path << "\n";
                return 1;
            }
            f << payload;
            std::cout << result.summary() << "\n";
        }
        return result.any_inconsistent ? 2 : 0;
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}

int cmd_witness(int m) {
    if (m % 2 != 0 || m < 2 || m > 12) {
        std::cerr << "witness report requires even m in [2, 12]\n";
        return 1;
    }
    json w = permpoly::witness_json(m);
    std::cout << w.dump(2) << "\n";
    return permpoly::witness_all_good(w) ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"permutation-polynomial construction and verification over GF(2^{2m})"};
    app.require_subcommand(1);

    // verify
    std::string family, method = "all";
    int m = 2, k = 1;
    long long s = 0, u = 0, i = 1;
    bool timings = false;
    auto* verify = app.add_subcommand("verify", "build and verify one parameter point");
    verify->add_option("--family", family, "family id (thm1..thm6, frac1/frac14/frac27/frac31, "
                                           "lem4/lem5, f1..f18, g1..g12)")->required();
    verify->add_option("--m", m, "field parameter m (q = 2^{2m})")->required();
    verify->add_option("--k", k, "parameter k");
    verify->add_option("--s", s, "parameter s");
    verify->add_option("--u", u, "parameter u");
    verify->add_option("--i", i, "parameter i");
    verify->add_option("--method", method, "brute | zieve | expsum | all");
    verify->add_flag("--timings", timings, "include wall-clock timings in the record");

    // scan
    permpoly::ScanSpec scan_spec;
    std::string m_range, k_range = "1", s_range = "0", u_range = "0", i_range = "1";
    std::string out_path, format = "jsonl", scan_method = "all";
    auto* scan = app.add_subcommand("scan", "sweep a parameter grid, one record per point");
    scan->add_option("--family", scan_spec.family, "family id")->required();
    scan->add_option("--m", m_range, "m values: a | a:b | a,b,c")->required();
    scan->add_option("--k", k_range, "k values");
    scan->add_option("--s", s_range, "s values");
    scan->add_option("--u", u_range, "u values");
    scan->add_option("--i", i_range, "i values, or units | units:N (sampled)");
    scan->add_option("--method", scan_method, "brute | zieve | expsum | all");
    scan->add_option("--out", out_path, "output path (default stdout)");
    scan->add_option("--format", format, "jsonl | csv")->check(CLI::IsMember({"jsonl", "csv"}));
    scan->add_option("--threads", scan_spec.threads, "worker threads (PERMPOLY_THREADS overrides)");
    scan->add_flag("--timings", scan_spec.timings,
                   "include wall-clock timings (disables byte-stable output)");

    // witness
    int witness_m = 2;
    auto* witness = app.add_subcommand("witness", "degree table and separation verdicts");
    witness->add_option("--m", witness_m, "even field parameter m")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (verify->parsed()) return cmd_verify(family, m, k, s, u, i, method, timings);
        if (scan->parsed()) {
            auto ms = parse_range(m_range);
            scan_spec.ms.assign(ms.begin(), ms.end());
            auto ks = parse_range(k_range);
            scan_spec.ks.assign(ks.begin(), ks.end());
            scan_spec.ss = parse_range(s_range);
            scan_spec.us = parse_range(u_range);
            scan_spec.ispec = parse_ispec(i_range);
            auto sel = permpoly::method_from_name(scan_method);
            if (!sel) {
                std::cerr << "unknown method: " << scan_method << "\n";
                return 1;
            }
            scan_spec.method = *sel;
            return cmd_scan(std::move(scan_spec), out_path, format);
        }
        if (witness->parsed()) return cmd_witness(witness_m);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 1;
}
