#pragma once

#include <string>
#include <vector>

#include "fuzzy/chern.hpp"
#include "fuzzy/sphere_oracle.hpp"

namespace fuzzy {

enum class OutputFormat { table, csv, json };

inline constexpr const char* csv_header = "N,sign,ch0,c1_computed,gamma_formula,abs_error,residual";

/// 15 significant digits, locale independent.
std::string format_number(double value);

std::string render_reports(const std::vector<ChernReport<double>>& reports, OutputFormat format);

struct CommutativeRun {
    int k;
    bool transpose;
    int n_polar;
    int n_azimuthal;
    CommutativeCharge<double> charge;
    double volume;
};

std::string render_commutative(const CommutativeRun& run, OutputFormat format);

}  // namespace fuzzy
