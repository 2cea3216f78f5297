#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "ffmzv/dataio.hpp"
#include "ffmzv/verify.hpp"

using namespace ffmzv;
using nlohmann::json;

namespace {

const CurveSpec& resolve_curve(const std::string& arg) {
    if (arg.find('{') != std::string::npos || arg.find(".json") != std::string::npos ||
        arg.find('/') != std::string::npos)
        return load_curve_spec(arg);
    return curve_spec(arg);
}

std::vector<int> parse_tuple(const std::string& arg) {
    std::vector<int> t;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        int v = std::stoi(item);
        if (v < 1) throw CLI::ValidationError("tuple entries must be positive");
        t.push_back(v);
    }
    if (t.empty()) throw CLI::ValidationError("empty tuple");
    return t;
}

std::pair<int, int> parse_range(const std::string& arg, int lo_default, int hi_default) {
    if (arg.empty()) return {lo_default, hi_default};
    auto dots = arg.find("..");
    if (dots == std::string::npos) throw CLI::ValidationError("range must look like a..b");
    return {std::stoi(arg.substr(0, dots)), std::stoi(arg.substr(dots + 2))};
}

json series_json(const Laurent& s) {
    json j;
    j["floor"] = s.floor_;
    j["lead"] = s.c.empty() ? s.floor_ : s.lead;
    json coeffs = json::array();  // low-to-high degree
    if (!s.c.empty())
        for (int e = s.lead - int(s.c.size()) + 1; e <= s.lead; ++e) coeffs.push_back(int(s.coeff(e)));
    j["coeffs"] = coeffs;
    j["display"] = s.str(10);
    return j;
}

void emit(const json& j, const std::string& output) {
    std::string text = j.dump(2) + "\n";
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) throw std::runtime_error("cannot write " + output);
        out << text;
    }
}

void emit_text(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) throw std::runtime_error("cannot write " + output);
        out << text;
    }
}

int verdict_exit(const std::vector<Report>& reports) {
    bool any_fail = false, any_inconclusive = false, all_pass = true;
    for (const auto& r : reports) {
        if (r.verdict == Report::FAIL) any_fail = true;
        if (r.verdict == Report::INCONCLUSIVE) any_inconclusive = true;
        if (r.verdict != Report::PASS) all_pass = false;
    }
    if (any_fail) return 1;
    if (all_pass) return 0;
    return any_inconclusive ? 3 : 0;
}

std::string report_text(const Report& r) {
    std::string s = "[" + std::string(r.verdict == Report::PASS          ? "PASS"
                                      : r.verdict == Report::INCONCLUSIVE ? "INCONCLUSIVE"
                                                                          : "FAIL") +
                    "] " + r.target + " (" + std::to_string(r.ms) + " ms)\n";
    for (const auto& c : r.checks) s += "  " + c + "\n";
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact multizeta computations over the class-number-one rings"};
    app.require_subcommand(1);

    std::string curve = "case-i", tuple_arg = "1,2", output, format = "json", d_range;
    int precision = 128, guard = 10, d_max = 24, jobs = 1;
    int n = 1, k = 0;

    auto add_common = [&](CLI::App* cmd, bool with_tuple) {
        cmd->add_option("--curve", curve, "curve id or a JSON spec file");
        if (with_tuple) cmd->add_option("--tuple", tuple_arg, "comma-separated exponents");
        cmd->add_option("--precision", precision, "1/x-adic working precision");
        cmd->add_option("--guard", guard, "reconstruction degree guard");
        cmd->add_option("--d-max", d_max, "degree cap for the zeta stopping rule");
        cmd->add_option("--jobs", jobs, "parallelism degree");
        cmd->add_option("--output,-o", output, "write the report here instead of stdout");
        cmd->add_option("--format", format, "json, csv or text");
    };

    auto* which_zeta = app.add_subcommand("zeta", "expand a multizeta value at infinity");
    add_common(which_zeta, true);
    auto* which_zlike = app.add_subcommand("zetalike", "test a tuple for a rational ratio");
    add_common(which_zlike, true);
    auto* which_scan = app.add_subcommand("scan", "scan primitive tuples for zetalike values");
    int max_weight = 12, max_depth = 2;
    add_common(which_scan, false);
    which_scan->add_option("--max-weight", max_weight, "largest tuple weight");
    which_scan->add_option("--max-depth", max_depth, "largest tuple depth");
    auto* which_verify = app.add_subcommand("verify", "run named verification targets");
    std::vector<std::string> targets;
    which_verify->add_option("targets", targets, "thm-3.3 thm-3.5 thm-5.1 thm-A thm-B thm-C conj-3.1 conj-3.2 rank-weight3 relative solve all")
        ->required();
    add_common(which_verify, false);
    which_verify->add_option("--d-range", d_range, "specialization range a..b");
    which_verify->add_option("--n", n, "family index n");
    which_verify->add_option("--k", k, "family depth extension k");
    auto* which_solve = app.add_subcommand("solve", "replay the difference-equation systems");
    which_solve->add_option("--output,-o", output);
    which_solve->add_option("--format", format);
    auto* which_rel = app.add_subcommand("relative", "Dedekind-type relative zeta checks");
    std::string base = "x";
    add_common(which_rel, false);
    which_rel->add_option("--base", base, "x or y");
    auto* which_rank = app.add_subcommand("rank", "linear-independence experiments");
    std::string set = "8";
    add_common(which_rank, false);
    which_rank->add_option("--set", set, "8, 10 or control");
    which_rank->add_option("--d-range", d_range);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (which_zeta->parsed()) {
            const CurveSpec& s = resolve_curve(curve);
            PowerSumEngine eng(s, jobs);
            eng.d_max = d_max;
            try {
                ZetaValue z = eng.zeta(parse_tuple(tuple_arg), precision);
                json j;
                j["curve"] = s.id;
                j["tuple"] = tuple_arg;
                j["precision"] = z.precision;
                j["terms_used"] = z.terms_used;
                j["even"] = series_json(z.value.even);
                if (!z.value.odd.is_zero_to_precision()) j["odd"] = series_json(z.value.odd);
                emit(j, output);
                return 0;
            } catch (const PrecisionNotReached& p) {
                json j;
                j["curve"] = s.id;
                j["tuple"] = tuple_arg;
                j["error"] = "precision not reached";
                j["terms_used"] = p.partial.terms_used;
                j["partial_even"] = series_json(p.partial.value.even);
                emit(j, output);
                return 3;
            }
        }
        if (which_zlike->parsed()) {
            const CurveSpec& s = resolve_curve(curve);
            PowerSumEngine eng(s, jobs);
            eng.d_max = d_max;
            Report rep;
            rep.target = "zetalike";
            rep.params["curve"] = s.id;
            rep.params["tuple"] = tuple_arg;
            rep.params["precision"] = precision;
            try {
                ZetalikeResult z = eng.zetalike(parse_tuple(tuple_arg), precision, guard);
                rep.check("rational ratio detected", z.detected);
                if (z.detected) rep.witness_pair("ratio", z.even, z.odd);
            } catch (const PrecisionNotReached&) {
                rep.inconclusive("zeta did not stabilize below the degree cap");
            }
            if (format == "text") emit_text(report_text(rep), output);
            else emit(report_to_json(rep), output);
            return verdict_exit({rep});
        }
        if (which_scan->parsed()) {
            const CurveSpec& s = resolve_curve(curve);
            Report rep = scan_zetalike(s, max_weight, max_depth, precision, jobs);
            if (format == "csv") emit_text(scan_csv(rep), output);
            else if (format == "text") emit_text(report_text(rep), output);
            else emit(report_to_json(rep), output);
            return verdict_exit({rep});
        }
        if (which_verify->parsed()) {
            auto [dlo, dhi] = parse_range(d_range, 2, 8);
            VerifyOptions opt;
            opt.precision = precision;
            opt.guard = guard;
            opt.d_lo = dlo;
            opt.d_hi = dhi;
            opt.jobs = jobs;
            std::vector<Report> reports;
            std::vector<std::string> expanded;
            for (const auto& tgt : targets) {
                if (tgt == "all") {
                    for (const auto& id : verify_target_ids()) expanded.push_back(id);
                    expanded.push_back("conj-3.1");
                    expanded.push_back("conj-3.2");
                    expanded.push_back("rank-weight3");
                    expanded.push_back("relative");
                    expanded.push_back("solve");
                } else {
                    expanded.push_back(tgt);
                }
            }
            for (const auto& tgt : expanded) {
                if (tgt == "conj-3.1")
                    reports.push_back(verify_family31(resolve_curve(curve), n, k, precision));
                else if (tgt == "conj-3.2")
                    reports.push_back(verify_conjecture32(curve, n, precision));
                else if (tgt == "rank-weight3")
                    reports.push_back(rank_experiment(resolve_curve(curve), "8", dlo, dhi));
                else if (tgt == "relative")
                    reports.push_back(relative_report(resolve_curve(curve), "x", precision));
                else if (tgt == "solve")
                    reports.push_back(solver_replay_report());
                else
                    reports.push_back(verify_theorem(tgt, opt));
            }
            if (format == "text") {
                std::string s;
                for (const auto& r : reports) s += report_text(r);
                emit_text(s, output);
            } else {
                json arr = json::array();
                for (const auto& r : reports) arr.push_back(report_to_json(r));
                emit(arr.size() == 1 ? arr[0] : arr, output);
            }
            return verdict_exit(reports);
        }
        if (which_solve->parsed()) {
            Report rep = solver_replay_report();
            if (format == "text") emit_text(report_text(rep), output);
            else emit(report_to_json(rep), output);
            return verdict_exit({rep});
        }
        if (which_rel->parsed()) {
            Report rep = relative_report(resolve_curve(curve), base, precision);
            if (format == "text") emit_text(report_text(rep), output);
            else emit(report_to_json(rep), output);
            return verdict_exit({rep});
        }
        if (which_rank->parsed()) {
            auto [dlo, dhi] = parse_range(d_range, 3, 10);
            Report rep = rank_experiment(resolve_curve(curve), set, dlo, dhi);
            if (format == "text") emit_text(report_text(rep), output);
            else emit(report_to_json(rep), output);
            return verdict_exit({rep});
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
