#pragma once

#include <vector>

#include "pou/game.hpp"
#include "pou/rule.hpp"

namespace pou {

// A switch is permitted when the perturbed comparison can still favor it:
// g <= kappa * b, ties included (the layered instances sit exactly on this
// boundary). Evaluated exactly.
bool can_switch(const ConsensusGame& game, const UncertaintyRule& rule, int v);

// A permitted switch that strictly increases the bad-edge count (g > b).
bool is_uncertain_best_response(const ConsensusGame& game, const UncertaintyRule& rule, int v);

struct Trace {
  long long initial_bad = 0;
  long long final_bad = 0;
  std::vector<MoveRecord> moves;
  // Partition of the vertex set:
  //   s0       vertices incident to a bad edge in the initial coloring (sorted)
  //   v_order  vertices outside s0, in order of their first color switch
  //   l        vertices outside s0 that never switch (sorted)
  std::vector<int> s0;
  std::vector<int> v_order;
  std::vector<long long> first_response_step;  // parallel to v_order
  std::vector<int> l;
};

// Applies the schedule, validating every switch against the rule; throws
// InvalidMove on the first violation. With strict=true it additionally
// asserts, at each first switch of a vertex outside s0 (and cheaply, per
// move), that no bad edge has both endpoints outside the responder set --
// the invariant the sequence abstraction depends on.
Trace run_schedule(ConsensusGame& game, const UncertaintyRule& rule,
                   const std::vector<int>& schedule, bool strict = false);

// Repeatedly plays the permitted switch with the largest strict increase
// (ties: lowest vertex id); stops when no permitted switch increases the
// bad-edge count or after step_limit moves.
Trace greedy_adversary(ConsensusGame& game, const UncertaintyRule& rule, long long step_limit);

struct OracleResult {
  long long max_bad = 0;
  std::vector<int> witness;  // shortest switch sequence reaching the maximum
  long long states = 0;      // number of distinct colorings explored
};

// Exhaustive BFS over every coloring reachable through permitted switches.
// Bitmask state space, so n <= 24. Deterministic: FIFO expansion, vertices
// tried in ascending order, first state attaining the maximum wins.
OracleResult bfs_oracle_max_bad_edges(const ConsensusGame& game, const UncertaintyRule& rule,
                                      long long state_limit);

// final / initial bad edges; throws ZeroInitialCost when initial == 0.
double price_of_uncertainty(const Trace& trace);

// At the first cost-increasing move the rule forces b >= (g-b)/(kappa-1).
// Returns whether that bound holds and the initial bad-edge count covers b.
// Throws NoIncrease when the trace never increases the cost.
bool first_increase_threshold_check(const Trace& trace, const UncertaintyRule& rule);

}  // namespace pou
