// lcprop — exact log-concavity toolkit, command-line front end.
//
// Exit codes: 0 = property holds, 1 = property fails, 2 = usage/parse error.
// All values print as exact rationals; --decimal adds marked approximations.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "lcprop/combinat.hpp"
#include "lcprop/geom.hpp"
#include "lcprop/json_io.hpp"
#include "lcprop/kernel.hpp"
#include "lcprop/polyroots.hpp"
#include "lcprop/reproduce.hpp"
#include "lcprop/seq.hpp"

namespace {

using lcprop::ExactSeq;
using lcprop::Rat;
using nlohmann::json;

struct OutputOptions {
    bool as_json = false;
    int decimal = 0;  // 0 = exact only
};

std::string show_seq(const ExactSeq& s, const OutputOptions& opt) {
    std::string out = s.str();
    if (opt.decimal > 0) {
        out += "  (";
        for (long i = 0; i < s.size(); ++i) {
            if (i) out += ", ";
            out += lcprop::rat_decimal(s.at(i), opt.decimal);
        }
        out += ")";
    }
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

ExactSeq seq_from_options(const std::string& inline_text, const std::string& file) {
    if (!inline_text.empty() && !file.empty())
        throw std::invalid_argument("give either an inline sequence or a file, not both");
    if (!inline_text.empty()) return ExactSeq::parse(inline_text);
    if (!file.empty()) return lcprop::seq_from_json(load_json_file(file));
    throw std::invalid_argument("no sequence given");
}

lcprop::Kernel kernel_from_options(const std::string& spec, const std::string& file,
                                   const std::string& pw_text) {
    if (!file.empty()) return lcprop::kernel_from_json(load_json_file(file));
    if (spec.empty()) throw std::invalid_argument("no kernel given");
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "stirling2") return lcprop::Kernel::stirling2();
    if (head == "eulerian") {
        if (rest.empty()) throw std::invalid_argument("eulerian kernel needs :n, e.g. eulerian:6");
        return lcprop::Kernel::eulerian(std::stol(rest));
    }
    if (head == "geom") {
        // geom:p,alpha,horizon
        std::vector<std::string> parts;
        std::string tok;
        std::istringstream in(rest);
        while (std::getline(in, tok, ',')) parts.push_back(tok);
        if (parts.size() != 3)
            throw std::invalid_argument("geometric kernel needs geom:p,alpha,horizon");
        return lcprop::Kernel::geometric_joint(lcprop::parse_rat(parts[0]),
                                               lcprop::parse_rat(parts[1]), std::stol(parts[2]));
    }
    if (head == "independent") {
        const std::string source = !rest.empty() ? rest : pw_text;
        if (source.empty())
            throw std::invalid_argument("independent kernel needs --pW or independent:<seq>");
        return lcprop::Kernel::independent(ExactSeq::parse(source));
    }
    throw std::invalid_argument("unknown kernel '" + spec + "'");
}

std::uint64_t effective_seed(std::uint64_t from_flag) {
    if (const char* env = std::getenv("LCPROP_SEED")) return std::strtoull(env, nullptr, 10);
    return from_flag;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lcprop — exact log-concavity toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    OutputOptions out;
    app.add_flag("--json", out.as_json, "emit JSON instead of text");
    app.add_option("--decimal", out.decimal, "show k-digit decimal approximations (marked ~)");

    std::string seq_text, seq_file, a_text, b_text, pv_text;
    std::string kernel_spec, kernel_file, pw_text;
    std::string family_name = "stirling2", q_text, px_text, p_text, p1_text, p2_text, poly_text;
    long n = 5, i_max = 10, horizon = 12, bound = 1024;
    bool adjusted = false;
    std::uint64_t seed = 20250811;
    std::string repro_id = "all";

    auto* cmd_check = app.add_subcommand("check", "log-concavity report for a sequence");
    cmd_check->add_option("--seq", seq_text, "inline sequence, e.g. \"5/8,1/4,1/8\"");
    cmd_check->add_option("--file", seq_file, "JSON file with a sequence");

    auto* cmd_convolve = app.add_subcommand("convolve", "exact convolution of two sequences");
    cmd_convolve->add_option("--a", a_text)->required();
    cmd_convolve->add_option("--b", b_text)->required();

    auto* cmd_dep = app.add_subcommand("dependent-sum", "dependent sum of a base sequence and a kernel");
    cmd_dep->add_option("--pv", pv_text)->required();
    cmd_dep->add_option("--kernel", kernel_spec, "stirling2 | eulerian:n | geom:p,a,h | independent");
    cmd_dep->add_option("--kernel-file", kernel_file, "kernel JSON file");
    cmd_dep->add_option("--pW", pw_text, "weight row for the independent kernel");

    auto* cmd_cond = app.add_subcommand("condition1", "diagonal partial-sum certificate scan");
    cmd_cond->add_option("--kernel", kernel_spec, "stirling2 | eulerian:n | geom:p,a,h | independent");
    cmd_cond->add_option("--kernel-file", kernel_file, "kernel JSON file");
    cmd_cond->add_option("--pW", pw_text, "weight row for the independent kernel");
    cmd_cond->add_option("--imax", i_max, "largest index to scan");
    cmd_cond->add_flag("--adjusted", adjusted, "use the discriminant-adjusted arrays");

    auto* cmd_tri = app.add_subcommand("triangle", "combinatorial triangle row");
    cmd_tri->add_option("--family", family_name,
                        "binomial | stirling1 | stirling2 | q_stirling2 | eulerian | inversions");
    cmd_tri->add_option("--n", n)->required();
    cmd_tri->add_option("--q", q_text, "deformation parameter for q_stirling2");

    auto* cmd_geom = app.add_subcommand("geom", "analysis of X + Geom(p)");
    auto* geom_analyze = cmd_geom->add_subcommand("analyze", "decide log-concavity of X + Geom(p)");
    geom_analyze->add_option("--px", px_text)->required();
    geom_analyze->add_option("--p", p_text)->required();
    auto* geom_threshold = cmd_geom->add_subcommand("threshold", "bisect the least workable p");
    geom_threshold->add_option("--px", px_text)->required();
    geom_threshold->add_option("--bound", bound, "interval width bound 1/bound");
    auto* geom_order = cmd_geom->add_subcommand("order", "monotonicity of LC in p (p1 <= p2)");
    geom_order->add_option("--px", px_text)->required();
    geom_order->add_option("--p1", p1_text)->required();
    geom_order->add_option("--p2", p2_text)->required();
    auto* geom_mix = cmd_geom->add_subcommand("mix", "mixture identity between q_{p1} and q_{p2}");
    geom_mix->add_option("--px", px_text)->required();
    geom_mix->add_option("--p1", p1_text)->required();
    geom_mix->add_option("--p2", p2_text)->required();
    geom_mix->add_option("--horizon", horizon);
    cmd_geom->require_subcommand(1);

    auto* cmd_roots = app.add_subcommand("roots", "real-rootedness report for a generating polynomial");
    cmd_roots->add_option("--seq", seq_text, "sequence whose generating polynomial to test");
    cmd_roots->add_option("--poly", poly_text, "ascending coefficients, e.g. \"1,2,1\"");

    auto* cmd_repro = app.add_subcommand("reproduce", "run the scripted verifications");
    cmd_repro->add_option("id", repro_id, "criterion id or 'all'");
    cmd_repro->add_option("--seed", seed, "seed for the randomized suites (env LCPROP_SEED wins)");
    bool list_ids = false;
    cmd_repro->add_flag("--list", list_ids, "list criterion ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*cmd_check) {
            const ExactSeq s = seq_from_options(seq_text, seq_file);
            const lcprop::LcReport report = lcprop::is_log_concave(s);
            if (out.as_json) {
                std::cout << lcprop::lc_report_to_json(report).dump(2) << "\n";
            } else {
                std::cout << "sequence: " << show_seq(s, out) << "\n";
                std::cout << (report.is_lc ? "log-concave: yes" : "log-concave: no") << "\n";
                for (const auto& [i, d] : report.deficits)
                    std::cout << "  deficit i=" << i << ": " << lcprop::rat_str(d) << "\n";
                if (report.first_violation)
                    std::cout << "first violation at i=" << *report.first_violation << "\n";
            }
            return report.is_lc ? 0 : 1;
        }

        if (*cmd_convolve) {
            const ExactSeq result =
                lcprop::convolve(ExactSeq::parse(a_text), ExactSeq::parse(b_text));
            if (out.as_json)
                std::cout << lcprop::seq_to_json(result).dump(2) << "\n";
            else
                std::cout << show_seq(result, out) << "\n";
            return 0;
        }

        if (*cmd_dep) {
            const ExactSeq result = lcprop::dependent_sum(
                ExactSeq::parse(pv_text), kernel_from_options(kernel_spec, kernel_file, pw_text));
            if (out.as_json)
                std::cout << lcprop::seq_to_json(result).dump(2) << "\n";
            else
                std::cout << show_seq(result, out) << "\n";
            return 0;
        }

        if (*cmd_cond) {
            const lcprop::Kernel k = kernel_from_options(kernel_spec, kernel_file, pw_text);
            const lcprop::Condition1Report report =
                adjusted ? lcprop::check_condition1_adjusted(k, i_max)
                         : lcprop::check_condition1(k, i_max);
            if (out.as_json) {
                std::cout << lcprop::condition1_report_to_json(report).dump(2) << "\n";
            } else {
                std::cout << (report.adjusted ? "adjusted " : "") << "condition through i_max="
                          << report.i_max << ": " << (report.holds() ? "holds" : "fails") << "\n";
                if (report.first_failure) {
                    const auto& f = *report.first_failure;
                    Rat value;
                    for (const auto& v : report.verdicts)
                        if (v.i == f.i && v.m == f.m && v.t == f.t)
                            value = (f.part == 'a') ? v.sum_a : v.sum_b;
                    std::cout << "first failure: part=" << f.part << " i=" << f.i << " m=" << f.m
                              << " t=" << f.t << " sum=" << lcprop::rat_str(value) << "\n";
                }
            }
            return report.holds() ? 0 : 1;
        }

        if (*cmd_tri) {
            const auto family = lcprop::family_from_name(family_name);
            if (!family) throw std::invalid_argument("unknown family '" + family_name + "'");
            lcprop::TriangleRow row;
            switch (*family) {
                case lcprop::TriangleFamily::binomial: row = lcprop::binomial_row(n); break;
                case lcprop::TriangleFamily::stirling1: row = lcprop::stirling1_row(n); break;
                case lcprop::TriangleFamily::stirling2: row = lcprop::stirling2_row(n); break;
                case lcprop::TriangleFamily::q_stirling2:
                    if (q_text.empty()) throw std::invalid_argument("q_stirling2 needs --q");
                    row = lcprop::q_stirling2_row(n, lcprop::parse_rat(q_text));
                    break;
                case lcprop::TriangleFamily::eulerian: row = lcprop::eulerian_row(n); break;
                case lcprop::TriangleFamily::inversions: row = lcprop::inversion_numbers(n); break;
            }
            if (out.as_json)
                std::cout << lcprop::triangle_row_to_json(row).dump(2) << "\n";
            else
                std::cout << lcprop::family_name(row.family) << " n=" << row.n << ": "
                          << show_seq(row.row, out) << "\n";
            return 0;
        }

        if (*geom_analyze) {
            const auto analysis = lcprop::geom_sum_analyze(ExactSeq::parse(px_text),
                                                           lcprop::GeomParam(lcprop::parse_rat(p_text)));
            if (out.as_json) {
                std::cout << lcprop::geom_analysis_to_json(analysis).dump(2) << "\n";
            } else {
                std::cout << "q values: " << show_seq(analysis.q_values, out) << "\n";
                for (const auto& [i, v] : analysis.criterion_values)
                    std::cout << "  criterion i=" << i << ": " << lcprop::rat_str(v) << "\n";
                std::cout << (analysis.is_lc ? "X + Geom(p) log-concave: yes"
                                             : "X + Geom(p) log-concave: no")
                          << " (decisive)\n";
            }
            return analysis.is_lc ? 0 : 1;
        }

        if (*geom_threshold) {
            try {
                const auto interval =
                    lcprop::min_lc_geom_param(ExactSeq::parse(px_text), bound);
                if (out.as_json) {
                    std::cout << lcprop::threshold_to_json(interval).dump(2) << "\n";
                } else {
                    std::cout << "threshold interval: [" << lcprop::rat_str(interval.lo) << ", "
                              << lcprop::rat_str(interval.hi) << "]"
                              << (interval.lc_at_hi ? "" : " (no workable p found below 1)")
                              << ", probes=" << interval.probes << "\n";
                }
                return interval.lc_at_hi ? 0 : 1;
            } catch (const lcprop::no_threshold_error& e) {
                std::cout << "no threshold: " << e.what() << "\n";
                return 1;
            }
        }

        if (*geom_order) {
            const auto report =
                lcprop::verify_order(ExactSeq::parse(px_text),
                                     lcprop::GeomParam(lcprop::parse_rat(p1_text)),
                                     lcprop::GeomParam(lcprop::parse_rat(p2_text)));
            if (out.as_json)
                std::cout << lcprop::order_report_to_json(report).dump(2) << "\n";
            else
                std::cout << "lc at p1: " << (report.lc_at_p1 ? "yes" : "no")
                          << ", lc at p2: " << (report.lc_at_p2 ? "yes" : "no")
                          << ", implication: " << (report.implication_holds ? "holds" : "fails")
                          << ", identity: " << (report.identity_exact ? "exact" : "broken") << "\n";
            return (report.implication_holds && report.identity_exact) ? 0 : 1;
        }

        if (*geom_mix) {
            const bool ok = lcprop::verify_mixing(ExactSeq::parse(px_text),
                                                  lcprop::GeomParam(lcprop::parse_rat(p1_text)),
                                                  lcprop::GeomParam(lcprop::parse_rat(p2_text)),
                                                  horizon);
            const auto mix = lcprop::mix_coefficients(lcprop::GeomParam(lcprop::parse_rat(p1_text)),
                                                      lcprop::GeomParam(lcprop::parse_rat(p2_text)),
                                                      horizon);
            if (out.as_json) {
                json j{{"identity_exact", ok}, {"b", json::array()}};
                for (const Rat& b : mix.b) j["b"].push_back(lcprop::rat_str(b));
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "mixing identity: " << (ok ? "exact" : "broken") << "\nb: [";
                for (std::size_t r = 0; r < mix.b.size(); ++r)
                    std::cout << (r ? ", " : "") << lcprop::rat_str(mix.b[r]);
                std::cout << "]\n";
            }
            return ok ? 0 : 1;
        }

        if (*cmd_roots) {
            lcprop::ExactPoly poly;
            lcprop::RealRootsLcCheck check;
            if (!poly_text.empty()) {
                const ExactSeq parsed = ExactSeq::parse(poly_text);
                poly = lcprop::ExactPoly(parsed.values());
                check = lcprop::realroots_implies_lc_check(parsed);
            } else if (!seq_text.empty()) {
                const ExactSeq s = ExactSeq::parse(seq_text);
                poly = lcprop::poly_from_seq(s);
                check = lcprop::realroots_implies_lc_check(s);
            } else {
                throw std::invalid_argument("roots needs --seq or --poly");
            }
            const auto [k, reduced] = lcprop::factor_out_x(poly);
            const long distinct_negative =
                reduced.degree() > 0
                    ? lcprop::sturm_real_root_count(reduced, std::nullopt, Rat(0))
                    : 0;
            if (out.as_json) {
                json j{{"poly", lcprop::poly_to_json(poly)},
                       {"x_power_factored", k},
                       {"distinct_negative_roots", distinct_negative},
                       {"all_roots_real_negative", check.roots_real_negative},
                       {"sequence_lc", check.lc.is_lc},
                       {"implication_holds", check.implication_holds}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "polynomial: " << poly.str() << "\n";
                if (k > 0) std::cout << "factored out x^" << k << "\n";
                std::cout << "distinct negative real roots: " << distinct_negative << "\n";
                std::cout << "all roots real and negative: "
                          << (check.roots_real_negative ? "yes" : "no") << "\n";
                std::cout << "coefficients log-concave: " << (check.lc.is_lc ? "yes" : "no") << "\n";
            }
            return check.roots_real_negative ? 0 : 1;
        }

        if (*cmd_repro) {
            if (list_ids) {
                for (const auto& id : lcprop::criterion_ids()) std::cout << id << "\n";
                return 0;
            }
            const std::uint64_t effective = effective_seed(seed);
            std::vector<lcprop::CriterionResult> results;
            if (repro_id == "all") {
                results = lcprop::run_all_criteria(effective);
            } else {
                results.push_back(lcprop::run_criterion(repro_id, effective));
            }
            bool all_passed = true;
            json jout = json::array();
            for (const auto& r : results) {
                all_passed = all_passed && r.passed;
                if (out.as_json)
                    jout.push_back({{"id", r.id},
                                    {"name", r.name},
                                    {"passed", r.passed},
                                    {"detail", r.detail}});
                else
                    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " — " << r.name
                              << ": " << r.detail << "\n";
            }
            if (out.as_json) std::cout << jout.dump(2) << "\n";
            return all_passed ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
