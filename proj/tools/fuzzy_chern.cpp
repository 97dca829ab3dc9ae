// fuzzy-chern: Chern numbers of line bundles over the fuzzy sphere and the round sphere.
//
// Exit codes: 0 success, 1 invariant or integrity failure, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <regex>

#include <CLI11.hpp>

#include "fuzzy/fuzzy.hpp"
#include "fuzzy/report_io.hpp"
#include "fuzzy/sweep.hpp"
#include "fuzzy/verify.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::map<std::string, fuzzy::OutputFormat> format_names{
    {"table", fuzzy::OutputFormat::table},
    {"csv", fuzzy::OutputFormat::csv},
    {"json", fuzzy::OutputFormat::json},
};

std::vector<fuzzy::Sign> parse_signs(const std::string& name)
{
    if (name == "plus") return {fuzzy::Sign::plus};
    if (name == "minus") return {fuzzy::Sign::minus};
    return {fuzzy::Sign::plus, fuzzy::Sign::minus};
}

std::pair<int, int> parse_grid(const std::string& spec)
{
    static const std::regex pattern(R"((\d+)x(\d+))");
    std::smatch m;
    if (!std::regex_match(spec, m, pattern)) throw UsageError("--grid expects <n_polar>x<n_azimuthal>, e.g. 64x128");
    const int polar = std::stoi(m[1]), azimuthal = std::stoi(m[2]);
    if (polar < 2 || azimuthal < 4) throw UsageError("--grid needs n_polar >= 2 and n_azimuthal >= 4");
    return {polar, azimuthal};
}

void emit(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << text;
}

struct Config {
    int n = 2;
    int n_from = 2;
    int n_to = 16;
    std::string sign = "both";
    int k = 1;
    bool transpose = false;
    std::string grid = "64x128";
    std::string format = "table";
    std::string out;
    int max_n = 32;
    double perturb_kappa = 0.0;
};

void add_output_options(CLI::App* cmd, Config& cfg)
{
    cmd->add_option("--format", cfg.format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", cfg.out, "write to this file instead of standard output");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Chern characters and topological charges over the fuzzy sphere"};
    app.require_subcommand(1);
    Config cfg;

    auto* fuzzy_cmd = app.add_subcommand("fuzzy", "charge of the fuzzy line bundles for one N");
    fuzzy_cmd->add_option("--N", cfg.n, "matrix size N = 2j + 1 (N >= 2)")->required();
    fuzzy_cmd->add_option("--sign", cfg.sign, "plus, minus or both")
        ->check(CLI::IsMember({"plus", "minus", "both"}))
        ->capture_default_str();
    add_output_options(fuzzy_cmd, cfg);

    auto* sweep_cmd = app.add_subcommand("sweep", "charges for a range of N");
    sweep_cmd->add_option("--from", cfg.n_from, "first N (>= 2)")->capture_default_str();
    sweep_cmd->add_option("--to", cfg.n_to, "last N")->capture_default_str();
    sweep_cmd->add_option("--sign", cfg.sign, "plus, minus or both")
        ->check(CLI::IsMember({"plus", "minus", "both"}))
        ->capture_default_str();
    add_output_options(sweep_cmd, cfg);

    auto* comm_cmd = app.add_subcommand("commutative", "quadrature charge of Bott projector powers on S^2");
    comm_cmd->add_option("--k", cfg.k, "tensor power, 1..12")->capture_default_str();
    comm_cmd->add_flag("--transpose", cfg.transpose, "use the transposed projector");
    comm_cmd->add_option("--grid", cfg.grid, "quadrature grid <n_polar>x<n_azimuthal>")->capture_default_str();
    add_output_options(comm_cmd, cfg);

    auto* verify_cmd = app.add_subcommand("verify", "run every invariant suite");
    verify_cmd->add_option("--max-N", cfg.max_n, "largest N in the sweeps")->capture_default_str();
    verify_cmd->add_option("--perturb-kappa", cfg.perturb_kappa, "negative control: relative kappa error")
        ->group("");
    verify_cmd->add_option("--out", cfg.out, "write the summary to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        const auto format = format_names.at(cfg.format);

        if (*fuzzy_cmd) {
            if (cfg.n < 2) throw UsageError("--N must be at least 2");
            std::vector<fuzzy::ChernReport<double>> reports;
            for (auto s : parse_signs(cfg.sign)) reports.push_back(fuzzy::fuzzy_chern_report<double>(cfg.n, s));
            emit(fuzzy::render_reports(reports, format), cfg.out);
        } else if (*sweep_cmd) {
            if (cfg.n_from < 2) throw UsageError("--from must be at least 2");
            if (cfg.n_to < cfg.n_from) throw UsageError("empty N range");
            emit(fuzzy::render_reports(fuzzy::sweep(cfg.n_from, cfg.n_to, parse_signs(cfg.sign)), format), cfg.out);
        } else if (*comm_cmd) {
            if (cfg.k < 1 || cfg.k > fuzzy::max_tensor_power) throw UsageError("--k must lie in 1..12");
            const auto [polar, azimuthal] = parse_grid(cfg.grid);
            const auto grid = fuzzy::build_quadrature<double>(polar, azimuthal);
            const fuzzy::CommutativeRun run{cfg.k, cfg.transpose, polar, azimuthal,
                                            fuzzy::chern_number_commutative(cfg.k, cfg.transpose, grid),
                                            fuzzy::volume_check(grid)};
            emit(fuzzy::render_commutative(run, format), cfg.out);
        } else if (*verify_cmd) {
            if (cfg.max_n < 2) throw UsageError("--max-N must be at least 2");
            const auto results = fuzzy::run_verify({cfg.max_n, cfg.perturb_kappa});
            std::string text;
            int passed = 0;
            for (const auto& r : results) {
                passed += r.passed;
                text += (r.passed ? "PASS  " : "FAIL  ") + r.name + "  " + r.detail + "\n";
            }
            text += std::to_string(passed) + "/" + std::to_string(results.size()) + " suites passed\n";
            emit(text, cfg.out);
            return fuzzy::all_passed(results) ? exit_ok : exit_failure;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_ok;
}
