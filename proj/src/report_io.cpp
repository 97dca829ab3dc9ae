#include "fuzzy/report_io.hpp"

#include <cmath>

#include <fmt/format.h>
#include <json.hpp>

namespace fuzzy {

namespace {

std::string sign_symbol(Sign s) { return s == Sign::plus ? "+" : "-"; }

// Numbers are emitted as raw JSON tokens so that the 15-digit rendering is shared with CSV.
nlohmann::ordered_json number(double value)
{
    if (!std::isfinite(value)) return nullptr;
    return nlohmann::ordered_json::parse(format_number(value));
}

std::string render_csv(const std::vector<ChernReport<double>>& reports)
{
    std::string out = std::string(csv_header) + "\n";
    for (const auto& r : reports)
        out += fmt::format("{},{},{},{},{},{},{}\n", r.N, to_string(r.sign), format_number(r.ch0),
                           format_number(r.c1_computed), format_number(r.gamma_formula),
                           format_number(r.abs_error), format_number(r.proportionality_residual));
    return out;
}

std::string render_json(const std::vector<ChernReport<double>>& reports)
{
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json row;
        row["N"] = r.N;
        row["sign"] = std::string(to_string(r.sign));
        row["ch0"] = number(r.ch0);
        row["c1_computed"] = number(r.c1_computed);
        row["gamma_formula"] = number(r.gamma_formula);
        row["abs_error"] = number(r.abs_error);
        row["residual"] = number(r.proportionality_residual);
        row["projector_residual"] = number(r.projector_residual);
        rows.push_back(std::move(row));
    }
    nlohmann::ordered_json doc;
    doc["reports"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::string render_table(const std::vector<ChernReport<double>>& reports)
{
    std::string out = fmt::format("{:>4} {:>4} {:>18} {:>20} {:>20} {:>10} {:>10} {:>10}\n", "N", "sign", "ch0",
                                  "c1_computed", "gamma_formula", "abs_error", "residual", "proj_res");
    for (const auto& r : reports)
        out += fmt::format("{:>4} {:>4} {:>18.15g} {:>20.15g} {:>20.15g} {:>10.3e} {:>10.3e} {:>10.3e}\n", r.N,
                           sign_symbol(r.sign), r.ch0, r.c1_computed, r.gamma_formula, r.abs_error,
                           r.proportionality_residual, r.projector_residual);
    return out;
}

}  // namespace

std::string format_number(double value)
{
    std::string s = fmt::format("{:.15g}", value);
    if (s == "-0") s = "0";
    return s;
}

std::string render_reports(const std::vector<ChernReport<double>>& reports, OutputFormat format)
{
    switch (format) {
    case OutputFormat::csv: return render_csv(reports);
    case OutputFormat::json: return render_json(reports);
    case OutputFormat::table: break;
    }
    return render_table(reports);
}

std::string render_commutative(const CommutativeRun& run, OutputFormat format)
{
    switch (format) {
    case OutputFormat::csv:
        return fmt::format("k,transpose,n_polar,n_azimuthal,c1,imaginary_residue,volume\n{},{},{},{},{},{},{}\n",
                           run.k, run.transpose ? "true" : "false", run.n_polar, run.n_azimuthal,
                           format_number(run.charge.c1), format_number(run.charge.imaginary_residue),
                           format_number(run.volume));
    case OutputFormat::json: {
        nlohmann::ordered_json doc;
        doc["k"] = run.k;
        doc["transpose"] = run.transpose;
        doc["grid"] = {{"n_polar", run.n_polar}, {"n_azimuthal", run.n_azimuthal}};
        doc["c1"] = number(run.charge.c1);
        doc["imaginary_residue"] = number(run.charge.imaginary_residue);
        doc["volume"] = number(run.volume);
        return doc.dump(2) + "\n";
    }
    case OutputFormat::table: break;
    }
    return fmt::format("c1 = {:.9f}\n  k = {}, transpose = {}, grid = {}x{}\n  imaginary residue = {:.3e}\n"
                       "  volume integral = {:.15g}\n",
                       run.charge.c1, run.k, run.transpose ? "yes" : "no", run.n_polar, run.n_azimuthal,
                       run.charge.imaginary_residue, run.volume);
}

}  // namespace fuzzy
