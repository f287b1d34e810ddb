#include "pou/move_game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "pou/errors.hpp"

namespace pou {

namespace {
using i128 = __int128;

std::map<long long, long long> count_nonzeros(const EkSequence& e) {
  std::map<long long, long long> counts;
  for (long long v : e.nonzeros) ++counts[v];
  return counts;
}

// Take one occurrence of value v: explicit nonzeros and explicit zeros first,
// then the infinite zero tail (only zeros live there).
void consume(std::map<long long, long long>& counts, long long& zeros, long long v) {
  if (v == 0) {
    if (zeros > 0) --zeros;
    return;
  }
  auto it = counts.find(v);
  if (it == counts.end()) throw ZNotPresent(v);
  if (--it->second == 0) counts.erase(it);
}

EkSequence pack(const std::map<long long, long long>& counts, long long zeros) {
  EkSequence out;
  out.zero_count = zeros;
  for (auto it = counts.rbegin(); it != counts.rend(); ++it)
    out.nonzeros.insert(out.nonzeros.end(), it->second, it->first);
  return out;
}
}  // namespace

EkSequence EkSequence::from_values(std::vector<long long> values) {
  EkSequence e;
  for (long long v : values) {
    if (v < 0) throw ParseError("sequence values must be nonnegative, got " + std::to_string(v));
    if (v == 0)
      ++e.zero_count;
    else
      e.nonzeros.push_back(v);
  }
  std::sort(e.nonzeros.rbegin(), e.nonzeros.rend());
  return e;
}

long long EkSequence::sum() const {
  long long s = 0;
  for (long long v : nonzeros) s += v;
  return s;
}

long long EkSequence::sum_sq() const {
  long long s = 0;
  for (long long v : nonzeros) s += v * v;
  return s;
}

EkSequence apply_move(const EkSequence& e, long long z, const std::vector<long long>& targets,
                      const Rational& eps) {
  if (!eps.is_positive()) throw ParseError("eps must be positive, got " + eps.str());
  if (z < 0) throw ParseError("z must be nonnegative, got " + std::to_string(z));
  const long long expected = z + floor_mul(eps, z);
  if (static_cast<long long>(targets.size()) != expected)
    throw WrongTargetCount("z = " + std::to_string(z) + " takes floor((1+eps)z) = " +
                           std::to_string(expected) + " targets, got " +
                           std::to_string(targets.size()));
  auto counts = count_nonzeros(e);
  long long zeros = e.zero_count;
  consume(counts, zeros, z);
  for (long long t : targets) {
    if (t < 0) throw ParseError("targets must be nonnegative, got " + std::to_string(t));
    consume(counts, zeros, t);
    ++counts[t + 1];
  }
  return pack(counts, zeros);
}

ReversedResult apply_reversed_move(const EkSequence& e, const std::vector<long long>& elements,
                                   const Rational& eps) {
  if (!eps.is_positive()) throw ParseError("eps must be positive, got " + eps.str());
  auto counts = count_nonzeros(e);
  long long zeros = e.zero_count;
  for (long long t : elements) {
    if (t <= 0) throw NonpositiveElement("got " + std::to_string(t));
    consume(counts, zeros, t);
    if (t == 1)
      ++zeros;
    else
      ++counts[t - 1];
  }
  ReversedResult out;
  out.alpha = static_cast<long long>(elements.size());
  out.z = ceil_div(out.alpha, Rational{1, 1} + eps);
  if (out.z == 0)
    ++zeros;
  else
    ++counts[out.z];
  out.e = pack(counts, zeros);
  return out;
}

StrongState apply_strong_reversed_move(const StrongState& s, double alpha, double eps) {
  StrongState out;
  out.sumE = s.sumE - eps * alpha;
  out.sumE2 = s.sumE2 - 2.0 * s.sumE + (1.0 - eps) * (1.0 - eps) * alpha * alpha;
  return out;
}

double sum_alpha_bound(long long m, double eps, double sumE0, double sumE0sq) {
  if (m < 1) throw ParseError("budget bound needs m >= 1, got " + std::to_string(m));
  if (eps <= 0) throw ParseError("budget bound needs eps > 0");
  if (eps == 1.0) return std::numeric_limits<double>::infinity();
  const double term = eps * (2.0 * static_cast<double>(m) - 1.0);
  const double lead = (1.0 - eps) * (1.0 - eps) / static_cast<double>(m);
  const double disc = term * term + 4.0 * lead * (sumE0sq + 2.0 * static_cast<double>(m) * sumE0);
  return (term + std::sqrt(disc)) / lead;
}

MonovariantReport check_monovariants(const std::vector<ReversedStep>& steps, const Rational& eps) {
  if (!eps.is_positive()) throw ParseError("eps must be positive, got " + eps.str());
  MonovariantReport report;
  report.steps = static_cast<long long>(steps.size());
  const long long p = eps.num, q = eps.den;
  double worst_sum = std::numeric_limits<double>::infinity();
  double worst_sq = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < steps.size(); ++i) {
    const ReversedStep& s = steps[i];
    // sumE_out - sumE_in >= -eps*alpha, scaled by q
    const i128 sum_slack = i128(q) * (s.sumE_out - s.sumE_in) + i128(p) * s.alpha;
    if (sum_slack < 0)
      report.violations.push_back("step " + std::to_string(i) + ": element sum fell by more than eps*alpha");
    // sumE2_out - sumE2_in >= -2*sumE_in + (1-eps)^2 alpha^2, scaled by q^2
    const i128 sq_slack = i128(q) * q * (i128(s.sumE2_out) - s.sumE2_in + 2 * i128(s.sumE_in)) -
                          i128(q - p) * (q - p) * (i128(s.alpha) * s.alpha);
    if (sq_slack < 0)
      report.violations.push_back("step " + std::to_string(i) + ": sum of squares fell too fast");
    worst_sum = std::min(worst_sum, static_cast<double>(sum_slack) / static_cast<double>(q));
    worst_sq = std::min(worst_sq,
                        static_cast<double>(sq_slack) / (static_cast<double>(q) * static_cast<double>(q)));
  }
  report.worst_slack_sum = steps.empty() ? 0.0 : worst_sum;
  report.worst_slack_sq = steps.empty() ? 0.0 : worst_sq;
  return report;
}

ShadowTrace extract_Ek_trace(const ConsensusGame& initial_game, const Trace& trace,
                             const UncertaintyRule& rule, bool capture_snapshots) {
  ShadowTrace shadow;
  shadow.s0 = trace.s0;
  shadow.initial_bad = trace.initial_bad;
  shadow.final_bad = trace.final_bad;

  const int n = initial_game.n();
  std::vector<char> in_s(n, 0);
  for (int v : trace.s0) in_s[v] = 1;

  // cnt[u]: edges from u into the responder set; for members it feeds the
  // internal-edge count T, for outsiders it is their sequence entry E(u).
  std::vector<long long> cnt(n, 0);
  long long t = 0;
  for (int v = 0; v < n; ++v)
    for (int u : initial_game.neighbors(v)) {
      if (in_s[u]) ++cnt[v];
      if (in_s[u] && in_s[v] && u < v) ++t;
    }

  std::vector<long long> outside_values;
  for (int v = 0; v < n; ++v)
    if (!in_s[v]) outside_values.push_back(cnt[v]);
  shadow.e0 = EkSequence::from_values(outside_values);
  shadow.sumE0 = shadow.e0.sum();
  shadow.sumE0_sq = shadow.e0.sum_sq();
  shadow.t0 = t;

  long long sum_real = shadow.sumE0, sum2_real = shadow.sumE0_sq;
  long long sum_abs = sum_real, sum2_abs = sum2_real;
  const Rational kappa = rule.kappa();

  auto snapshot = [&]() {
    std::vector<long long> values;
    for (int v = 0; v < n; ++v)
      if (!in_s[v]) values.push_back(cnt[v]);
    return EkSequence::from_values(values);
  };

  for (const MoveRecord& mv : trace.moves) {
    if (mv.delta > 0) shadow.has_increase = true;
    const int v = mv.vertex;
    if (in_s[v]) continue;  // repeat switches do not move the abstraction

    const long long z = cnt[v];
    const long long alpha = floor_mul(kappa, z);
    const long long deg = initial_game.degree(v);
    const long long index = shadow.m() + 1;
    if (deg > z + alpha)
      throw IllegalTransition(index, "vertex " + std::to_string(v) + " has degree " +
                                         std::to_string(deg) + " but only z + floor(kappa*z) = " +
                                         std::to_string(z + alpha) + " increment slots");

    in_s[v] = 1;
    t += z;
    sum_real -= z;
    sum2_real -= z * z;
    sum_abs -= z;
    sum2_abs -= z * z;
    long long real_increments = 0;
    for (int u : initial_game.neighbors(v)) {
      if (in_s[u]) {
        ++cnt[u];
        continue;
      }
      sum_real += 1;
      sum2_real += 2 * cnt[u] + 1;
      sum_abs += 1;
      sum2_abs += 2 * cnt[u] + 1;
      ++cnt[u];
      ++real_increments;
    }
    // The adversary is entitled to alpha increments; pad the shortfall with
    // phantom entries that enter at 1 and never move again.
    const long long phantoms = alpha - real_increments;
    sum_abs += phantoms;
    sum2_abs += phantoms;

    ShadowStep step;
    step.k = index;
    step.vertex = v;
    step.z = z;
    step.real_increments = real_increments;
    step.alpha = alpha;
    step.phantoms = phantoms;
    step.t_after = t;
    step.sumE_real_after = sum_real;
    step.sumE2_real_after = sum2_real;
    step.sumE_abs_after = sum_abs;
    step.sumE2_abs_after = sum2_abs;
    shadow.steps.push_back(step);
    if (capture_snapshots) shadow.snapshots.push_back(snapshot());
  }
  return shadow;
}

std::vector<ReversedStep> reversed_steps_of(const ShadowTrace& shadow) {
  std::vector<ReversedStep> out;
  out.reserve(shadow.steps.size());
  long long prev_sum = shadow.sumE0, prev_sum2 = shadow.sumE0_sq;
  for (const ShadowStep& s : shadow.steps) {
    ReversedStep r;
    r.sumE_in = s.sumE_abs_after;
    r.sumE2_in = s.sumE2_abs_after;
    r.sumE_out = prev_sum;
    r.sumE2_out = prev_sum2;
    r.alpha = s.alpha;
    out.push_back(r);
    prev_sum = s.sumE_abs_after;
    prev_sum2 = s.sumE2_abs_after;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

ChainReport verify_upper_bound_chain(const ConsensusGame& initial_game, const Trace& trace,
                                     const UncertaintyRule& rule) {
  const ShadowTrace shadow = extract_Ek_trace(initial_game, trace, rule);
  const Rational eps_hat = rule.eps_hat();

  ChainReport report;
  report.m = shadow.m();
  report.t0 = shadow.t0;
  report.tm = shadow.steps.empty() ? shadow.t0 : shadow.steps.back().t_after;
  report.sumE0 = shadow.sumE0;
  report.sumE0_sq = shadow.sumE0_sq;
  report.sumEm = shadow.steps.empty() ? shadow.sumE0 : shadow.steps.back().sumE_real_after;
  report.sumEm_abs = shadow.steps.empty() ? shadow.sumE0 : shadow.steps.back().sumE_abs_after;
  report.s0_size = static_cast<long long>(shadow.s0.size());
  report.initial_bad = shadow.initial_bad;
  report.final_bad = shadow.final_bad;
  report.has_increase = shadow.has_increase;
  report.eps_hat = eps_hat.to_double();

  double sum_alpha = 0;
  for (const ShadowStep& s : shadow.steps) sum_alpha += static_cast<double>(s.alpha);
  report.sum_alpha = sum_alpha;

  if (report.m >= 1) {
    report.bound = sum_alpha_bound(report.m, report.eps_hat, static_cast<double>(report.sumE0),
                                   static_cast<double>(report.sumE0_sq));
    report.slack = report.bound - report.sum_alpha;
    if (!(report.sum_alpha <= report.bound * (1.0 + 1e-9) + 1e-9))
      report.violations.push_back("response budget exceeded: sum(alpha) = " +
                                  std::to_string(report.sum_alpha) + " > bound = " +
                                  std::to_string(report.bound));
  }

  // Per-response growth, exact: eps_hat*(Tm - T0) - m <= sumE_abs_m - sumE0.
  const long long ph = eps_hat.num, qh = eps_hat.den;
  if (i128(ph) * (report.tm - report.t0) - i128(report.m) * qh >
      i128(qh) * (report.sumEm_abs - report.sumE0))
    report.violations.push_back("per-response growth bound failed");

  // An increasing move needs a responder with b >= 1/eps_hat, all of whose
  // bad edges lie inside the set, so the set itself cannot be smaller.
  if (report.has_increase && i128(report.s0_size) * ph < qh)
    report.violations.push_back("initial set smaller than 1/eps_hat despite an increasing move");

  // Every bad edge ends incident to the responder set.
  if (report.final_bad > report.tm + report.sumEm)
    report.violations.push_back("final bad edges " + std::to_string(report.final_bad) +
                                " exceed T_m + sum(E_m) = " +
                                std::to_string(report.tm + report.sumEm));
  return report;
}

}  // namespace pou
