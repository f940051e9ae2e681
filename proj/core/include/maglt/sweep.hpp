#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maglt/params.hpp"
#include "maglt/verifier.hpp"

namespace maglt::verifier {

enum class Target { main2d, mainequiv, main3d, osc1d };

Target target_from_string(const std::string& name);  ///< throws std::domain_error
std::string to_string(Target t);

/// Cartesian parameter grid. Row order is the nested-loop order
/// B, omega1, omega2, [omega3,] mu, gamma with gamma innermost.
/// Dimensions a target does not use must be left at their defaults.
struct SweepGrid {
  std::vector<double> B{1.0};
  std::vector<double> omega1{1.0};
  std::vector<double> omega2{1.0};
  std::vector<double> omega3{};  // required non-empty for main3d only
  std::vector<double> mu{0.0};
  std::vector<double> gamma{1.0};
  std::optional<double> rho;  ///< constant override; default is per-target
};

/// One grid row. Invalid parameter combinations are reported per row via
/// `error` (report left default) rather than aborting the sweep.
struct SweepRow {
  std::int64_t index = 0;
  OscillatorParams params;
  BoundReport report;
  std::string error;
};

struct SweepSummary {
  std::int64_t rows = 0;
  std::int64_t violations = 0;
  std::int64_t errors = 0;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
};

/// Evaluates every grid row. Rows may be computed concurrently (threads = 0
/// picks the hardware concurrency) but the returned list is always in grid
/// order, so results are independent of the parallelism level.
std::vector<SweepRow> run_sweep(const SweepGrid& grid, Target target,
                                unsigned threads = 0,
                                double tolerance = kDefaultTolerance);

SweepSummary summarize(const std::vector<SweepRow>& rows);

} // namespace maglt::verifier
