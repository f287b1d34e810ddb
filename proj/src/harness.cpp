#include "pou/harness.hpp"

#include <chrono>
#include <cmath>
#include <future>
#include <iomanip>
#include <sstream>

#include "pou/dynamics.hpp"
#include "pou/errors.hpp"

namespace pou {

namespace {
std::string format_double(double v) {
  std::ostringstream out;
  out << std::setprecision(15) << v;
  return out.str();
}
}  // namespace

std::string experiment_csv_header() { return "n,eps,rule,initial_bad,final_bad,pou,moves,ms"; }

std::string experiment_csv_row(const ExperimentRow& row) {
  std::ostringstream out;
  out << row.n << ',' << row.eps << ',' << row.rule << ',' << row.initial_bad << ','
      << row.final_bad << ',' << format_double(row.pou) << ',' << row.moves << ',' << row.ms;
  return out.str();
}

FitResult fit_power_law(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) throw DegenerateFit("need at least two points");
  const double n = static_cast<double>(points.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : points) {
    if (!(x > 0) || !(y > 0)) throw DegenerateFit("coordinates must be positive");
    const double lx = std::log(x), ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double var_x = sxx - sx * sx / n;
  if (var_x <= 1e-12) throw DegenerateFit("x values must differ");
  const double slope = (sxy - sx * sy / n) / var_x;
  const double intercept = (sy - slope * sx) / n;

  double ss_res = 0, ss_tot = 0;
  const double mean_y = sy / n;
  for (const auto& [x, y] : points) {
    const double ly = std::log(y);
    const double fit = slope * std::log(x) + intercept;
    ss_res += (ly - fit) * (ly - fit);
    ss_tot += (ly - mean_y) * (ly - mean_y);
  }
  FitResult result;
  result.exponent = slope;
  result.r2 = ss_tot == 0 ? (ss_res <= 1e-12 ? 1.0 : 0.0) : 1.0 - ss_res / ss_tot;
  return result;
}

ExperimentRow run_experiment(int n, const Rational& eps, Variant variant) {
  const auto start = std::chrono::steady_clock::now();
  auto [game, plan] = build_full(n, eps);
  const UncertaintyRule rule = make_rule(eps, variant);
  std::vector<int> schedule = plan.phase1;
  schedule.insert(schedule.end(), plan.phase2.begin(), plan.phase2.end());
  const Trace trace = run_schedule(game, rule, schedule);
  const auto stop = std::chrono::steady_clock::now();

  ExperimentRow row;
  row.n = n;
  row.eps = eps.str();
  row.rule = variant_name(variant);
  row.initial_bad = trace.initial_bad;
  row.final_bad = trace.final_bad;
  row.pou = price_of_uncertainty(trace);
  row.moves = static_cast<long long>(trace.moves.size());
  row.ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  return row;
}

SweepResult sweep(const std::vector<int>& ns, const std::vector<Rational>& epss, Variant variant) {
  struct Slot {
    bool ok = false;
    ExperimentRow row;
    std::string note;
  };
  std::vector<std::future<Slot>> futures;
  futures.reserve(ns.size() * epss.size());
  for (int n : ns)
    for (const Rational& eps : epss)
      futures.push_back(std::async(std::launch::async, [n, eps, variant] {
        Slot slot;
        try {
          slot.row = run_experiment(n, eps, variant);
          slot.ok = true;
        } catch (const Error& ex) {
          slot.note = "n=" + std::to_string(n) + " eps=" + eps.str() + ": " + ex.what();
        }
        return slot;
      }));

  SweepResult result;
  std::vector<Slot> slots;
  slots.reserve(futures.size());
  for (auto& f : futures) slots.push_back(f.get());
  for (const Slot& slot : slots) {
    if (slot.ok)
      result.rows.push_back(slot.row);
    else
      result.notes.push_back(slot.note);
  }

  auto add_fit = [&result](const std::string& label,
                           const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 2) return;
    try {
      result.fits.emplace_back(label, fit_power_law(points));
    } catch (const DegenerateFit& ex) {
      result.notes.push_back(label + ": " + ex.what());
    }
  };

  for (const Rational& eps : epss) {
    std::vector<std::pair<double, double>> points;
    for (const ExperimentRow& row : result.rows)
      if (row.eps == eps.str()) points.emplace_back(static_cast<double>(row.n), row.pou);
    add_fit("pou vs n at eps=" + eps.str(), points);
  }
  for (int n : ns) {
    std::vector<std::pair<double, double>> points;
    for (const Rational& eps : epss)
      for (const ExperimentRow& row : result.rows)
        if (row.n == n && row.eps == eps.str())
          points.emplace_back(eps.to_double(), row.pou);
    add_fit("pou vs eps at n=" + std::to_string(n), points);
  }
  return result;
}

}  // namespace pou
