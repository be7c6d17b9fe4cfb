#include <array>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qf/expr.hpp"
#include "qf/harness.hpp"
#include "qf/json_io.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

unsigned long long env_enum_cap(unsigned long long fallback) {
    const char* value = std::getenv("QF_ENUM_CAP");
    if (value == nullptr || *value == '\0') return fallback;
    try {
        std::size_t used = 0;
        unsigned long long cap = std::stoull(value, &used);
        if (used != std::string(value).size()) throw std::invalid_argument("trailing characters");
        return cap;
    } catch (const std::exception&) {
        throw std::invalid_argument("QF_ENUM_CAP must be an unsigned integer");
    }
}

std::map<std::string, std::vector<long long>> parse_overrides(
    const std::vector<std::string>& raw) {
    std::map<std::string, std::vector<long long>> overrides;
    for (const std::string& item : raw) {
        std::size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("--param expects key=value[,value...], got '" + item + "'");
        std::string key = item.substr(0, eq);
        if (overrides.count(key))
            throw std::invalid_argument("duplicate --param key '" + key + "'");
        std::vector<long long> values;
        std::string rest = item.substr(eq + 1);
        std::size_t start = 0;
        while (start <= rest.size()) {
            std::size_t comma = rest.find(',', start);
            std::string piece =
                rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            try {
                std::size_t used = 0;
                values.push_back(std::stoll(piece, &used));
                if (used != piece.size()) throw std::invalid_argument("trailing characters");
            } catch (const std::exception&) {
                throw std::invalid_argument("--param " + key + ": '" + piece +
                                            "' is not an integer");
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        overrides.emplace(std::move(key), std::move(values));
    }
    return overrides;
}

std::string params_text(const qf::Params& params) {
    std::string out;
    for (const auto& [key, value] : params) {
        if (!out.empty()) out += " ";
        out += key + "=" + std::to_string(value);
    }
    return out;
}

nlohmann::json report_to_json(const qf::IdentityReport& report) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [key, value] : report.params) params[key] = std::to_string(value);
    return {{"identity", report.identity_id},
            {"params", std::move(params)},
            {"mode", std::string(qf::mode_name(report.mode))},
            {"passed", report.passed},
            {"lhs", qf::normal_form_to_json(report.lhs_nf)},
            {"rhs", qf::normal_form_to_json(report.rhs_nf)}};
}

nlohmann::json reports_to_json(const std::vector<qf::IdentityReport>& reports, bool all_passed) {
    nlohmann::json list = nlohmann::json::array();
    for (const qf::IdentityReport& report : reports) list.push_back(report_to_json(report));
    return {{"all_passed", all_passed}, {"reports", std::move(list)}};
}

struct EvalArgs {
    std::vector<std::string> expr_parts;
    std::string mode = "generic";
    std::string format = "text";
    bool normalize = false;
};

int run_eval(const EvalArgs& args) {
    std::string text;
    for (const std::string& part : args.expr_parts) {
        if (!text.empty()) text += " ";
        text += part;
    }
    qf::DiagonalForm form = qf::evaluate(qf::parse_expr(text));
    if (args.normalize) {
        qf::NormalForm nf = qf::normalize(form, qf::mode_from_name(args.mode));
        if (args.format == "json")
            std::cout << qf::normal_form_to_json(nf).dump(2) << "\n";
        else
            std::cout << nf.str() << "\n";
    } else {
        if (args.format == "json")
            std::cout << qf::form_to_json(form).dump(2) << "\n";
        else
            std::cout << form.str() << "\n";
    }
    return kExitPass;
}

struct CellArgs {
    std::string id;
    std::vector<std::string> raw_params;
    std::string mode;  // empty: per-cell default
    std::string format = "text";
    bool broken_p1 = false;
    unsigned long long naive_cap = 0;  // resolved in main
};

std::vector<qf::IdentityReport> run_cells(const CellArgs& args, bool& all_passed) {
    qf::VerifyOptions options;
    if (!args.mode.empty()) options.mode_override = qf::mode_from_name(args.mode);
    options.broken_p1_exponent = args.broken_p1;
    options.naive_cap = args.naive_cap;

    qf::SuiteConfig defaults;
    std::vector<qf::IdentityReport> reports;
    all_passed = true;
    for (const qf::Params& cell :
         qf::identity_cells(args.id, defaults, parse_overrides(args.raw_params))) {
        reports.push_back(qf::verify(args.id, cell, options));
        if (!reports.back().passed) all_passed = false;
    }
    return reports;
}

int run_verify(const CellArgs& args) {
    bool all_passed = true;
    std::vector<qf::IdentityReport> reports = run_cells(args, all_passed);
    if (args.format == "json") {
        std::cout << reports_to_json(reports, all_passed).dump(2) << "\n";
    } else {
        std::size_t passed = 0;
        for (const qf::IdentityReport& report : reports) {
            std::cout << report.identity_id << " " << params_text(report.params)
                      << " mode=" << qf::mode_name(report.mode)
                      << (report.passed ? " PASS" : " FAIL") << "\n";
            if (!report.passed) {
                std::cout << "  lhs: " << report.lhs_nf.str() << "\n";
                std::cout << "  rhs: " << report.rhs_nf.str() << "\n";
            }
            passed += report.passed ? 1 : 0;
        }
        std::cout << passed << "/" << reports.size() << " passed\n";
    }
    return all_passed ? kExitPass : kExitMismatch;
}

int run_table(const CellArgs& args) {
    bool all_passed = true;
    std::vector<qf::IdentityReport> reports = run_cells(args, all_passed);
    if (args.format == "json") {
        std::cout << reports_to_json(reports, all_passed).dump(2) << "\n";
        return all_passed ? kExitPass : kExitMismatch;
    }
    std::vector<std::array<std::string, 5>> rows;
    rows.push_back({"cell", "mode", "engine", "closed", "status"});
    for (const qf::IdentityReport& report : reports)
        rows.push_back({params_text(report.params), std::string(qf::mode_name(report.mode)),
                        report.lhs_nf.str_explicit(), report.rhs_nf.str_explicit(),
                        report.passed ? "ok" : "MISMATCH"});
    std::array<std::size_t, 5> width{};
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    std::cout << args.id << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::cout << (i ? " | " : "") << row[i];
            if (i + 1 < row.size()) std::cout << std::string(width[i] - row[i].size(), ' ');
        }
        std::cout << "\n";
    }
    return all_passed ? kExitPass : kExitMismatch;
}

int run_suite_cmd(const qf::SuiteConfig& config, const std::string& format) {
    qf::SuiteResult result = qf::run_suite(config);
    if (format == "json") {
        std::cout << reports_to_json(result.reports, result.all_passed).dump(2) << "\n";
        return result.all_passed ? kExitPass : kExitMismatch;
    }
    std::map<std::string, std::pair<std::size_t, std::size_t>> by_id;
    for (const qf::IdentityReport& report : result.reports) {
        auto& [passed, total] = by_id[report.identity_id];
        passed += report.passed ? 1 : 0;
        total += 1;
    }
    std::size_t passed_total = 0;
    for (const auto& [id, counts] : by_id) {
        std::cout << id << ": " << counts.first << "/" << counts.second << " passed\n";
        passed_total += counts.first;
    }
    for (const qf::IdentityReport& report : result.reports) {
        if (report.passed) continue;
        std::cout << "FAIL " << report.identity_id << " " << params_text(report.params)
                  << " mode=" << qf::mode_name(report.mode) << "\n";
        std::cout << "  lhs: " << report.lhs_nf.str() << "\n";
        std::cout << "  rhs: " << report.rhs_nf.str() << "\n";
    }
    std::cout << "suite: " << passed_total << "/" << result.reports.size() << " passed\n";
    return result.all_passed ? kExitPass : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic calculus for diagonal quadratic forms"};
    app.require_subcommand(1);

    EvalArgs eval_args;
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a form expression");
    eval_cmd->add_option("expr", eval_args.expr_parts, "form expression")
        ->required()
        ->expected(-1);
    eval_cmd->add_option("--mode", eval_args.mode,
                         "field mode: generic|minus_one_square (short: r|c)");
    eval_cmd->add_option("--format", eval_args.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    eval_cmd->add_flag("--normalize", eval_args.normalize, "print the Witt normal form");

    auto add_cell_options = [](CLI::App* cmd, CellArgs& args) {
        cmd->add_option("--id", args.id, "identity id (see `qf suite --help`)")->required();
        cmd->add_option("--param", args.raw_params,
                        "pin a parameter: key=value[,value...] (repeatable)");
        cmd->add_option("--mode", args.mode, "override the field mode: generic|minus_one_square");
        cmd->add_option("--format", args.format, "text|json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_flag("--broken-p1-exponent", args.broken_p1,
                      "use the inconsistent ceil(n/2) sign for odd-degree trace forms");
        cmd->add_option("--naive-cap", args.naive_cap,
                        "enumeration budget for brute-force cross-checks");
    };

    CellArgs verify_args;
    CLI::App* verify_cmd = app.add_subcommand("verify", "check one identity over its cells");
    add_cell_options(verify_cmd, verify_args);

    CellArgs table_args;
    CLI::App* table_cmd =
        app.add_subcommand("table", "print engine vs closed-form normal forms per cell");
    add_cell_options(table_cmd, table_args);

    qf::SuiteConfig config;
    std::string suite_format = "text";
    std::vector<std::string> suite_ids;
    CLI::App* suite_cmd = app.add_subcommand("suite", "run the full verification sweep");
    app.set_config("--config", "",
                   "TOML file; suite flag names go in a [suite] section without the leading --");
    suite_cmd->configurable();
    suite_cmd->fallthrough();
    suite_cmd->add_option("--identities", suite_ids, "comma-separated identity ids")
        ->delimiter(',');
    suite_cmd->add_option("--sym-hyp-h-max", config.sym_hyp_h_max, "largest h for N1/N2");
    suite_cmd->add_option("--sym-hyp-k-max", config.sym_hyp_k_max, "largest k for N1/N2");
    suite_cmd->add_option("--ext-hyp-h-max", config.ext_hyp_h_max, "largest h for S4/S5");
    suite_cmd->add_option("--odd-degrees", config.odd_degrees, "odd degrees for P1/P10")
        ->delimiter(',');
    suite_cmd->add_option("--even-degrees", config.even_degrees, "even degrees for P1/P11/P12")
        ->delimiter(',');
    suite_cmd
        ->add_option("--ext-trace-degrees", config.ext_trace_degrees, "degrees for LT")
        ->delimiter(',');
    suite_cmd->add_option("--sym-trace-odd-k-max", config.sym_trace_odd_k_max,
                          "largest k for P10");
    suite_cmd->add_option("--sym-trace-even-k-max", config.sym_trace_even_k_max,
                          "largest k for P11/P12");
    suite_cmd->add_option("--ext-trace-k-max", config.ext_trace_k_max, "largest k for LT");
    suite_cmd->add_option("--unit-power-m-max", config.unit_power_m_max, "largest m for L1");
    suite_cmd->add_option("--unit-power-k-max", config.unit_power_k_max, "largest k for L1");
    suite_cmd->add_option("--comb-p-max", config.comb_p_max, "largest p for L2");
    suite_cmd->add_option("--comb-r-max", config.comb_r_max, "largest r for L2/L3/R1/GV");
    suite_cmd->add_option("--gv-pq-max", config.gv_pq_max, "largest p and q for GV");
    suite_cmd->add_option("--random-samples", config.random_samples,
                          "number of random forms for S3EQ");
    suite_cmd->add_option("--seed", config.seed, "first random seed for S3EQ");
    suite_cmd->add_option("--random-k-max", config.random_k_max, "largest k for S3EQ");
    suite_cmd->add_option("--random-max-dim", config.random_max_dim,
                          "dimension bound for random forms");
    suite_cmd->add_option("--random-max-classes", config.random_max_classes,
                          "distinct-class bound for random forms");
    suite_cmd->add_option("--random-max-atoms", config.random_max_atoms,
                          "atom-alphabet bound for random forms");
    suite_cmd->add_option("--naive-cap", config.naive_cap,
                          "enumeration budget for brute-force cross-checks");
    suite_cmd->add_flag("--skip-negative", "omit the expected-mismatch cell");
    suite_cmd->add_flag("--broken-p1-exponent", config.broken_p1_exponent,
                        "use the inconsistent ceil(n/2) sign for odd-degree trace forms");
    suite_cmd->add_option("--format", suite_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);

        if (*eval_cmd) return run_eval(eval_args);
        if (*verify_cmd) {
            verify_args.naive_cap = verify_cmd->count("--naive-cap")
                                        ? verify_args.naive_cap
                                        : env_enum_cap(qf::kDefaultEnumerationCap);
            return run_verify(verify_args);
        }
        if (*table_cmd) {
            table_args.naive_cap = table_cmd->count("--naive-cap")
                                       ? table_args.naive_cap
                                       : env_enum_cap(qf::kDefaultEnumerationCap);
            return run_table(table_args);
        }
        if (!suite_cmd->count("--naive-cap")) config.naive_cap = env_enum_cap(config.naive_cap);
        if (suite_cmd->count("--identities")) config.identities = suite_ids;
        if (suite_cmd->count("--skip-negative")) config.include_negative = false;
        return run_suite_cmd(config, suite_format);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
