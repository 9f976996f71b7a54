#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ranklists/analysis.hpp"
#include "ranklists/core.hpp"
#include "ranklists/experiments.hpp"
#include "ranklists/measures.hpp"

namespace {

using nlohmann::json;

// 12 significant digits, locale-independent.
double sig12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::strtod(buf, nullptr);
}

std::string format12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ranklists::ValidationError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ranklists::RankedList load_list(const std::string& path) {
    const std::string text = read_file(path);
    return ranklists::parse_ranked_list(text, ranklists::detect_list_format(text));
}

json optional_number(const std::optional<double>& v) {
    return v ? json(sig12(*v)) : json(nullptr);
}

std::string csv_cell(const json& v) {
    if (v.is_null()) return "";
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_float()) return format12(v.get<double>());
    return v.dump();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ranklists::ValidationError("cannot write file: " + out_path);
    out << text;
}

int run_compare(const std::string& path_a, const std::string& path_b,
                const std::string& weights_path, bool signed_scale_flag, bool explain,
                const std::string& format, const std::string& out_path) {
    ranklists::RankedList list_a = load_list(path_a);
    ranklists::RankedList list_b = load_list(path_b);
    ranklists::WeightTable weights;
    if (!weights_path.empty()) {
        weights = ranklists::WeightTable::from_json_text(read_file(weights_path));
    }

    auto [a_full, b_full] = ranklists::complete_pair(list_a, list_b);
    ranklists::AlignedPair pair = ranklists::align(a_full, b_full);
    ranklists::MeasureReport report = ranklists::measure(pair, weights);

    json out;
    out["n"] = report.n;
    out["footrule_raw"] = sig12(report.footrule_raw);
    out["footrule_denom"] = sig12(report.footrule_denom);
    out["footrule_norm"] = optional_number(report.footrule_norm);
    out["footrule_norm_overflow"] = report.footrule_norm_overflow;
    out["kendall_raw"] = sig12(report.kendall_raw);
    out["kendall_denom"] = sig12(report.kendall_denom);
    out["kendall_norm"] = optional_number(report.kendall_norm);
    out["ratio"] = optional_number(report.ratio);
    out["dg_holds"] = report.dg_holds;

    if (signed_scale_flag) {
        if (report.footrule_norm && !report.footrule_norm_overflow) {
            out["footrule_signed"] = sig12(ranklists::signed_scale(*report.footrule_norm));
        } else {
            if (report.footrule_norm_overflow) {
                std::cerr << "warning: footrule_norm exceeds 1; signed value undefined\n";
            }
            out["footrule_signed"] = nullptr;
        }
        out["kendall_signed"] =
            report.kendall_norm ? json(sig12(ranklists::signed_scale(*report.kendall_norm)))
                                : json(nullptr);
    }

    if (explain) {
        ranklists::DgReport dg = ranklists::dg_report(pair, weights);
        out["dg"] = {{"kendall_raw", sig12(dg.kendall_raw)},
                     {"footrule_raw", sig12(dg.footrule_raw)},
                     {"twice_kendall", sig12(dg.twice_kendall)},
                     {"holds_lower", dg.holds_lower},
                     {"holds_upper", dg.holds_upper},
                     {"ratio", optional_number(dg.ratio)}};
        ranklists::InversionDecomposition inv = ranklists::inversion_types(pair);
        out["inversions"] = {{"total", inv.total_inversions},
                             {"type1", inv.type1},
                             {"type2", inv.type2},
                             {"both", inv.both}};
    }

    if (format == "csv") {
        // flat fields only; --explain detail stays JSON
        std::ostringstream csv;
        std::vector<std::string> keys = {"n",           "footrule_raw", "footrule_denom",
                                         "footrule_norm", "footrule_norm_overflow",
                                         "kendall_raw", "kendall_denom", "kendall_norm",
                                         "ratio",       "dg_holds"};
        if (signed_scale_flag) {
            keys.push_back("footrule_signed");
            keys.push_back("kendall_signed");
        }
        for (std::size_t i = 0; i < keys.size(); ++i) csv << (i ? "," : "") << keys[i];
        csv << '\n';
        for (std::size_t i = 0; i < keys.size(); ++i) csv << (i ? "," : "") << csv_cell(out[keys[i]]);
        csv << '\n';
        write_output(csv.str(), out_path);
    } else {
        write_output(out.dump(2) + "\n", out_path);
    }
    return 0;
}

int run_dist(const std::string& kind, int n, const std::string& out_path, int jobs) {
    if (n < 2 || n > ranklists::kMaxEnumN) {
        throw ranklists::ValidationError("--n must be in [2,12]");
    }
    if (jobs < 1) throw ranklists::ValidationError("--jobs must be >= 1");

    ranklists::FrequencyTable table;
    bool identity_excluded = false;
    if (kind == "ratio") {
        table = ranklists::ratio_table(n, jobs);
        identity_excluded = true;
    } else if (kind == "footrule") {
        table = ranklists::normalized_table(n, ranklists::NormMeasure::Footrule, jobs);
    } else {
        table = ranklists::normalized_table(n, ranklists::NormMeasure::Kendall, jobs);
    }

    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw ranklists::ValidationError("cannot write file: " + out_path);
        ranklists::write_csv(table, out);
    }

    ranklists::DistStats stats = ranklists::compute_stats(table);
    json doc = {{"kind", kind},
                {"n", n},
                {"total", table.total},
                {"identity_excluded", identity_excluded},
                {"stats",
                 {{"mean", sig12(stats.mean)},
                  {"median", sig12(stats.median)},
                  {"mode", sig12(stats.mode)},
                  {"std_dev", sig12(stats.std_dev)},
                  {"skewness", sig12(stats.skewness)}}}};
    std::cout << doc.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted ranked-list similarity: footrule, Kendall tau, and enumeration stats"};
    app.require_subcommand(1);

    std::string path_a, path_b, weights_path, format = "json", out_path;
    bool signed_flag = false, explain = false;
    CLI::App* cmd_compare = app.add_subcommand("compare", "Compare two ranked list files");
    cmd_compare->add_option("list_a", path_a, "First (reference) list file")->required();
    cmd_compare->add_option("list_b", path_b, "Second list file")->required();
    cmd_compare->add_option("--weights", weights_path, "Weight file (JSON object)");
    cmd_compare->add_flag("--signed", signed_flag, "Also report values on the [-1,1] scale");
    cmd_compare->add_flag("--explain", explain, "Include inequality and inversion diagnostics");
    cmd_compare->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd_compare->add_option("--out", out_path, "Output path (default stdout)");

    std::string dist_kind;
    int dist_n = 0, dist_jobs = 1;
    std::string dist_out;
    CLI::App* cmd_dist = app.add_subcommand("dist", "Exhaustive distribution over permutations");
    cmd_dist->add_option("kind", dist_kind, "ratio | footrule | kendall")
        ->required()
        ->check(CLI::IsMember({"ratio", "footrule", "kendall"}));
    cmd_dist->add_option("--n", dist_n, "Permutation size (2..12)")->required();
    cmd_dist->add_option("--out", dist_out, "Frequency CSV output path");
    cmd_dist->add_option("--jobs", dist_jobs, "Worker threads");

    try {
        app.parse(argc, argv);
        if (cmd_compare->parsed()) {
            return run_compare(path_a, path_b, weights_path, signed_flag, explain, format, out_path);
        }
        return run_dist(dist_kind, dist_n, dist_out, dist_jobs);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ranklists::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
