#pragma once

#include <vector>

#include "pou/dynamics.hpp"
#include "pou/game.hpp"
#include "pou/rule.hpp"

namespace pou {

// Descending multiset of nonnegative integers with a conceptually infinite
// tail of zeros. zero_count tracks explicitly known zeros (e.g. vertices
// outside the responder set with no edge into it); operations treat zeros
// beyond that count as available anyway, since the tail never runs out.
// Multiset equality therefore compares nonzeros only.
struct EkSequence {
  std::vector<long long> nonzeros;  // sorted descending
  long long zero_count = 0;

  static EkSequence from_values(std::vector<long long> values);

  long long sum() const;
  long long sum_sq() const;
  bool same_nonzeros(const EkSequence& o) const { return nonzeros == o.nonzeros; }
};

// Forward move: delete one occurrence of z, then add 1 to each of the
// floor((1+eps)z) targets (given by value; zeros may be implicit). The sum
// grows by exactly floor(eps*z).
EkSequence apply_move(const EkSequence& e, long long z, const std::vector<long long>& targets,
                      const Rational& eps);

struct ReversedResult {
  EkSequence e;
  long long alpha = 0;
  long long z = 0;  // ceil(alpha / (1+eps)), reinserted
};

// Reversed move: decrement each of the alpha listed positive elements and
// insert z = ceil(alpha/(1+eps)). Exact inverse of apply_move when given the
// incremented elements.
ReversedResult apply_reversed_move(const EkSequence& e, const std::vector<long long>& elements,
                                   const Rational& eps);

// (sumE, sumE^2) shadow of a reversed move with real-valued alpha:
//   sumE'  = sumE  - eps*alpha
//   sumE2' = sumE2 - 2*sumE + (1-eps)^2 * alpha^2
struct StrongState {
  double sumE = 0;
  double sumE2 = 0;
};

StrongState apply_strong_reversed_move(const StrongState& s, double alpha, double eps);

// Larger root of the quadratic bounding the total response budget:
//   [eps(2m-1) + sqrt(eps^2 (2m-1)^2 + 4 (1-eps)^2 m^-1 (sumE0sq + 2m sumE0))]
//   / ((1-eps)^2 m^-1)
// Defined for any eps > 0 except eps = 1, where the bound degenerates to
// +infinity. m >= 1.
double sum_alpha_bound(long long m, double eps, double sumE0, double sumE0sq);

// One reversed step for the monovariant checks, by its exact integer sums.
// "in" is the later state E_k, "out" the earlier E_{k-1}.
struct ReversedStep {
  long long sumE_in = 0;
  long long sumE2_in = 0;
  long long sumE_out = 0;
  long long sumE2_out = 0;
  long long alpha = 0;
};

struct MonovariantReport {
  long long steps = 0;
  std::vector<std::string> violations;
  double worst_slack_sum = 0;  // min over steps of (lhs - rhs), sum inequality
  double worst_slack_sq = 0;   // same for the sum-of-squares inequality
};

// Asserts, exactly, for every step:
//   sumE_out  - sumE_in  >= -eps * alpha
//   sumE2_out - sumE2_in >= -2*sumE_in + (1-eps)^2 alpha^2
MonovariantReport check_monovariants(const std::vector<ReversedStep>& steps, const Rational& eps);

// One first response of the extracted abstraction. z is the edge count from
// the responder into the current responder set; alpha = floor(kappa * z) is
// the largest legal number of incremented elements. The "abs" track pads the
// real increments (deg - z of them) with phantom 1-entries up to alpha, which
// is the adversary's ceiling; per-step checks run against that track, while
// the final bad-edge bound uses the real one.
struct ShadowStep {
  long long k = 0;
  int vertex = -1;
  long long z = 0;
  long long real_increments = 0;
  long long alpha = 0;
  long long phantoms = 0;
  long long t_after = 0;  // edges with both endpoints in the responder set
  long long sumE_real_after = 0;
  long long sumE2_real_after = 0;
  long long sumE_abs_after = 0;
  long long sumE2_abs_after = 0;
};

struct ShadowTrace {
  std::vector<int> s0;
  long long t0 = 0;  // edges inside s0 (every initially bad edge is one of them)
  EkSequence e0;
  long long sumE0 = 0;
  long long sumE0_sq = 0;
  std::vector<ShadowStep> steps;
  long long initial_bad = 0;
  long long final_bad = 0;
  bool has_increase = false;
  // Filled only when capture_snapshots: E_k after each step (real track).
  std::vector<EkSequence> snapshots;

  long long m() const { return static_cast<long long>(steps.size()); }
};

// Replays the trace on the initial game and extracts the E_k abstraction at
// each first response of a vertex outside s0. Verifies each transition is a
// legal move: deg(v) <= z + floor(kappa*z); throws IllegalTransition(k)
// otherwise.
ShadowTrace extract_Ek_trace(const ConsensusGame& initial_game, const Trace& trace,
                             const UncertaintyRule& rule, bool capture_snapshots = false);

struct ChainReport {
  long long m = 0;
  double sum_alpha = 0;
  double bound = 0;
  double slack = 0;
  long long t0 = 0;
  long long tm = 0;
  long long sumE0 = 0;
  long long sumE0_sq = 0;
  long long sumEm = 0;      // real track
  long long sumEm_abs = 0;  // padded track
  long long s0_size = 0;
  long long initial_bad = 0;
  long long final_bad = 0;
  bool has_increase = false;
  double eps_hat = 0;
  std::vector<std::string> violations;
};

// The numeric chain behind the upper bound, checked on one extracted trace:
//   1. sum(alpha_j) <= sum_alpha_bound(m, eps_hat, sumE0, sumE0_sq)
//   2. eps_hat*(T_m - T_0) - m <= sumE_abs_m - sumE0          (exact)
//   3. |s0| >= 1/eps_hat whenever an increasing move exists    (exact)
//   4. final bad edges <= T_m + sumE_real_m
// eps_hat = kappa - 1. Violations are reported, not thrown.
ChainReport verify_upper_bound_chain(const ConsensusGame& initial_game, const Trace& trace,
                                     const UncertaintyRule& rule);

// Abstract reversed steps of an extracted trace (padded track), newest first
// reversed back to E_0; input for check_monovariants.
std::vector<ReversedStep> reversed_steps_of(const ShadowTrace& shadow);

}  // namespace pou
