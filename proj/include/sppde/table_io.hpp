#pragma once

#include "sppde/analysis.hpp"
#include "sppde/scheme.hpp"

#include <string>

namespace sppde {

/// "1.12e-01": scientific notation, 3 significant digits (table display form).
std::string format_error(double v);

/// "1.4645": fixed, 4 decimals (order display form).
std::string format_order(double v);

/// "2^-8" for exact powers of two, plain %g otherwise.
std::string epsilon_label(double eps);

/// Study table in the benchmark layout: a header row `epsilon,<N...>`, then
/// per epsilon one row of errors and one `order` row (last order cell empty).
/// Failed cells print `failed`. Returns the CSV text; write_* variants write
/// a file and throw Error with the path on I/O failure.
std::string study_csv(const ConvergenceReport& rep,
                      const std::vector<std::string>& eps_labels);
void write_study_csv(const ConvergenceReport& rep,
                     const std::vector<std::string>& eps_labels,
                     const std::string& path);

/// JSON twin of the CSV: per cell the full-precision error/order plus the
/// exact display strings used in the CSV.
std::string study_json(const ConvergenceReport& rep,
                       const std::vector<std::string>& eps_labels, int example_id);
void write_study_json(const ConvergenceReport& rep,
                      const std::vector<std::string>& eps_labels, int example_id,
                      const std::string& path);

/// Long-format grid file: header `x,t,y`, one row per node per time level,
/// outer loop over time levels, 17 significant digits. Deterministic:
/// re-emitting the same grid is byte-identical.
std::string grid_csv(const SolutionGrid& grid);
void write_grid_csv(const SolutionGrid& grid, const std::string& path);

} // namespace sppde
