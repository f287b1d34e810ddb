#include "pou/dynamics.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <unordered_map>

#include "pou/errors.hpp"

namespace pou {

namespace {
using i128 = __int128;
}

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::OneSided: return "one-sided";
    case Variant::HalfDegree: return "half-degree";
    case Variant::TwoSided:
    default: return "two-sided";
  }
}

Variant variant_from_name(const std::string& name) {
  if (name == "one-sided") return Variant::OneSided;
  if (name == "two-sided") return Variant::TwoSided;
  if (name == "half-degree") return Variant::HalfDegree;
  throw ParseError("unknown rule variant '" + name + "'");
}

static bool switch_ok(const Rational& kappa, long long b, long long g) {
  // g <= kappa * b, exactly
  return i128(g) * kappa.den <= i128(kappa.num) * b;
}

bool can_switch(const ConsensusGame& game, const UncertaintyRule& rule, int v) {
  const long long b = game.bad_degree(v);
  const long long g = game.good_degree(v);
  return switch_ok(rule.kappa(), b, g);
}

bool is_uncertain_best_response(const ConsensusGame& game, const UncertaintyRule& rule, int v) {
  const long long b = game.bad_degree(v);
  const long long g = game.good_degree(v);
  return g > b && switch_ok(rule.kappa(), b, g);
}

namespace {

// Shared executor for scheduled and greedy runs: validates each switch,
// keeps the s0 / first-switch-order bookkeeping, and in strict mode checks
// that a responder about to make its first switch has no bad edge leading
// outside the responder set (every bad edge stays pinned to the set).
struct Executor {
  ConsensusGame& game;
  const UncertaintyRule& rule;
  const Rational kappa;
  const bool strict;
  Trace trace;
  std::vector<char> in_set;  // s0 plus everyone who has switched

  Executor(ConsensusGame& g, const UncertaintyRule& r, bool strict_)
      : game(g), rule(r), kappa(r.kappa()), strict(strict_) {
    trace.initial_bad = game.bad_edges();
    in_set.assign(game.n(), 0);
    for (int v = 0; v < game.n(); ++v) {
      if (game.bad_degree(v) > 0) {
        in_set[v] = 1;
        trace.s0.push_back(v);
      }
    }
  }

  void apply(int v, long long step) {
    if (v < 0 || v >= game.n()) throw ParseError("schedule names vertex " + std::to_string(v));
    const long long b = game.bad_degree(v);
    const long long g = game.good_degree(v);
    if (!switch_ok(kappa, b, g)) throw InvalidMove(step, v, b, g);

    const bool first_outside = !in_set[v];
    if (first_outside && strict) {
      // Before v's first switch every bad edge must already touch the set;
      // in particular none of v's own bad edges may lead outside it.
      for (int u : game.neighbors(v)) {
        if (!in_set[u] && game.color(u) != game.color(v))
          throw Error(ErrorClass::Violation,
                      "bad edge (" + std::to_string(v) + "," + std::to_string(u) +
                          ") has both endpoints outside the responder set at step " +
                          std::to_string(step));
      }
    }
    trace.moves.push_back(game.flip(v, step));
    if (first_outside) {
      in_set[v] = 1;
      trace.v_order.push_back(v);
      trace.first_response_step.push_back(step);
    }
  }

  Trace finish() {
    trace.final_bad = game.bad_edges();
    std::vector<char> switched(game.n(), 0);
    for (const auto& m : trace.moves) switched[m.vertex] = 1;
    std::vector<char> s0_mask(game.n(), 0);
    for (int v : trace.s0) s0_mask[v] = 1;
    for (int v = 0; v < game.n(); ++v)
      if (!s0_mask[v] && !switched[v]) trace.l.push_back(v);
    return std::move(trace);
  }
};

}  // namespace

Trace run_schedule(ConsensusGame& game, const UncertaintyRule& rule,
                   const std::vector<int>& schedule, bool strict) {
  Executor ex(game, rule, strict);
  long long step = 0;
  for (int v : schedule) ex.apply(v, step++);
  return ex.finish();
}

Trace greedy_adversary(ConsensusGame& game, const UncertaintyRule& rule, long long step_limit) {
  Executor ex(game, rule, /*strict=*/false);
  const Rational kappa = rule.kappa();
  for (long long step = 0; step < step_limit; ++step) {
    int best = -1;
    long long best_delta = 0;  // only strict increases count
    for (int v = 0; v < game.n(); ++v) {
      const long long b = game.bad_degree(v);
      const long long g = game.good_degree(v);
      if (g - b > best_delta && switch_ok(kappa, b, g)) {
        best = v;
        best_delta = g - b;
      }
    }
    if (best < 0) break;
    ex.apply(best, step);
  }
  return ex.finish();
}

OracleResult bfs_oracle_max_bad_edges(const ConsensusGame& game, const UncertaintyRule& rule,
                                      long long state_limit) {
  const int n = game.n();
  if (n > 24) throw Error(ErrorClass::Usage, "oracle needs n <= 24, got " + std::to_string(n));

  std::vector<std::uint32_t> nbr(n, 0), nbr_gt(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int u : game.neighbors(v)) {
      nbr[v] |= 1u << u;
      if (u > v) nbr_gt[v] |= 1u << u;
    }
  }
  const Rational kappa = rule.kappa();

  auto bad_edges_of = [&](std::uint32_t red) {
    long long bad = 0;
    for (int v = 0; v < n; ++v) {
      const std::uint32_t other = (red >> v) & 1u ? ~red : red;
      bad += std::popcount(nbr_gt[v] & other);
    }
    return bad;
  };
  auto valid_switch = [&](std::uint32_t red, int v) {
    const std::uint32_t other = (red >> v) & 1u ? ~red : red;
    const long long b = std::popcount(nbr[v] & other);
    const long long g = game.degree(v) - b;
    return switch_ok(kappa, b, g);
  };

  std::uint32_t start = 0;
  for (int v = 0; v < n; ++v)
    if (game.color(v) == Color::Red) start |= 1u << v;

  // parent state and the vertex flipped to get here; start maps to itself
  std::unordered_map<std::uint32_t, std::pair<std::uint32_t, int>> parent;
  parent.reserve(1u << std::min(n, 20));
  std::deque<std::uint32_t> queue;
  parent.emplace(start, std::make_pair(start, -1));
  queue.push_back(start);

  OracleResult result;
  result.max_bad = bad_edges_of(start);
  std::uint32_t best_state = start;

  while (!queue.empty()) {
    const std::uint32_t s = queue.front();
    queue.pop_front();
    for (int v = 0; v < n; ++v) {
      if (!valid_switch(s, v)) continue;
      const std::uint32_t t = s ^ (1u << v);
      if (parent.count(t)) continue;
      if (static_cast<long long>(parent.size()) >= state_limit) throw StateLimitExceeded(state_limit);
      parent.emplace(t, std::make_pair(s, v));
      queue.push_back(t);
      const long long bad = bad_edges_of(t);
      if (bad > result.max_bad) {
        result.max_bad = bad;
        best_state = t;
      }
    }
  }

  for (std::uint32_t s = best_state; s != start;) {
    const auto& [p, v] = parent.at(s);
    result.witness.push_back(v);
    s = p;
  }
  std::reverse(result.witness.begin(), result.witness.end());
  result.states = static_cast<long long>(parent.size());
  return result;
}

double price_of_uncertainty(const Trace& trace) {
  if (trace.initial_bad == 0) throw ZeroInitialCost();
  return static_cast<double>(trace.final_bad) / static_cast<double>(trace.initial_bad);
}

bool first_increase_threshold_check(const Trace& trace, const UncertaintyRule& rule) {
  const MoveRecord* first = nullptr;
  for (const auto& m : trace.moves) {
    if (m.delta > 0) {
      first = &m;
      break;
    }
  }
  if (!first) throw NoIncrease();
  // g <= kappa*b forces b >= (g-b)/(kappa-1); b is itself at most the
  // bad-edge count at that step, which no earlier move has increased.
  const Rational eps_hat = rule.eps_hat();
  const long long threshold = ceil_div(first->g - first->b, eps_hat);
  return first->b >= threshold && trace.initial_bad >= first->b;
}

}  // namespace pou
