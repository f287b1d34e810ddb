#pragma once

#include <utility>
#include <vector>

#include "pou/dynamics.hpp"
#include "pou/game.hpp"
#include "pou/rule.hpp"

namespace pou {

enum class LayerRole { Initializer, ParallelWhite, Secondary, Boost };
enum class Wiring { Complete, Regular, None };

std::string layer_role_name(LayerRole r);
std::string wiring_name(Wiring w);

struct LayerSpec {
  int index = 0;
  int size = 0;
  LayerRole role = LayerRole::Initializer;
  Wiring wiring = Wiring::Complete;  // wiring to the next layer in the chain
  int first_id = 0;                  // ids are assigned layer by layer
};

struct ConstructionPlan {
  int k = 0;                 // ceil(1/eps); all sizes run on eps' = 1/k
  Rational eps_effective;    // 1/k
  std::vector<LayerSpec> layers;  // chain layers in order, parallel layer last
  std::vector<int> frozen;        // sorted ids: everything before the flip layer, plus the parallel layer
  Rational c;                     // boost sizing constant from choose_c
  std::vector<int> phase1;        // turn each successive layer red once
  std::vector<int> phase2;        // oscillation waves from the flip layer
  std::vector<long long> boost_sizes;
  long long predicted_initial_bad = 0;  // k
  long long boost_product_sum = 0;      // sum of adjacent boost-layer size products
  long long anchor_bad = 0;             // k*k: the flip layer always faces k frozen
                                        // neighbors of each color, so k*k of those
                                        // edges are bad in any settled state
  long long predicted_phase1_bad = 0;   // last product + anchor
  long long predicted_final_bad = 0;    // product sum + anchor
  int n_total = 0;                      // vertices actually used
  int n_budget = 0;                     // requested n
};

// Shared size ladder: starts at k, then (even, odd) pairs where the odd sizes
// cycle k+1..2k then wrap to k, and the even sizes start at 1 and double at
// each wrap, clamped to the target; stops at the first (target, target) pair.
// target = k gives the initializer (ends in K_{k,k}); target = 2k gives the
// secondary ladder (ends in K_{2k,2k}).
std::vector<int> ladder_sizes(int k, int target);

// Boost layer sizes: from 2k+1, multiply by 1 + 1/(2k) rounding half away
// from zero; once the next rounded size would reach the target the ladder
// ends exactly on the target. Requires target >= 2k+2.
std::vector<long long> boost_ladder(int k, long long target);

struct LayerSet {
  std::vector<int> sizes;
  std::vector<std::pair<int, int>> edges;  // local ids, assigned layer by layer
};

LayerSet build_initializer(int k);
LayerSet build_secondary(int k);
// Boost chain for budget n and constant c; BudgetExceeded when the fixed part
// plus the boost ladder does not fit in n.
LayerSet build_boosting(int k, int n, const Rational& c);

// Largest c on the grid {1/2, 1/4, ..., 2^-20} whose boost ladder both fits
// within n and reaches a last layer of at least 2k+2. InstanceTooSmall when
// no grid value works.
Rational choose_c(int k, int n);

// Full layered instance: initializer, parallel white layer, secondary,
// boosting chain, plus the two schedules. Initial coloring: first layer red,
// everything else white.
std::pair<ConsensusGame, ConstructionPlan> build_full(int n, const Rational& eps);

// Doubling gadget: a hub V (white) joined to m white spokes (each anchored to
// a white vertex W) and m+1 red spokes (each anchored to a red vertex R).
// The schedule alternates one unswitched spoke, then V, starting and ending
// with a red spoke: 4m+2 switches, every spoke switch a tie, every V switch
// a strict increase. Valid under the given rule iff m >= 1/(kappa-1).
std::pair<ConsensusGame, std::vector<int>> build_double_gadget(int m, const UncertaintyRule& rule);

long long predicted_final_bad_edges(const ConstructionPlan& plan);

}  // namespace pou
