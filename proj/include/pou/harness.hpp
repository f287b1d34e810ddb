#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pou/construction.hpp"
#include "pou/rule.hpp"

namespace pou {

struct ExperimentRow {
  int n = 0;            // requested budget
  std::string eps;      // "p/q"
  std::string rule;     // variant name
  long long initial_bad = 0;
  long long final_bad = 0;
  double pou = 0;
  long long moves = 0;
  long long ms = 0;
};

std::string experiment_csv_header();
std::string experiment_csv_row(const ExperimentRow& row);

struct FitResult {
  double exponent = 0;
  double r2 = 0;
};

// Least squares on (log x, log y). Needs >= 2 points, positive coordinates,
// and nonconstant x; throws DegenerateFit otherwise.
FitResult fit_power_law(const std::vector<std::pair<double, double>>& points);

// Builds the layered instance for (n, eps), runs phase1 + phase2 under the
// rule variant, and reports the row (wall time included).
ExperimentRow run_experiment(int n, const Rational& eps, Variant variant);

struct SweepResult {
  std::vector<ExperimentRow> rows;           // in (n-major, eps-minor) order
  std::vector<std::string> notes;            // per-pair failures, if any
  std::vector<std::pair<std::string, FitResult>> fits;
};

// Runs every (n, eps) pair concurrently (each pair owns its instance), then
// fits pou against n at fixed eps and against eps at fixed n wherever at
// least two points exist. Pairs that fail (e.g. infeasible) become notes.
SweepResult sweep(const std::vector<int>& ns, const std::vector<Rational>& epss, Variant variant);

}  // namespace pou
