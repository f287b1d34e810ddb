#include "pou/construction.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pou/errors.hpp"

namespace pou {

std::string layer_role_name(LayerRole r) {
  switch (r) {
    case LayerRole::Initializer: return "initializer";
    case LayerRole::ParallelWhite: return "parallel-white";
    case LayerRole::Secondary: return "secondary";
    case LayerRole::Boost:
    default: return "boost";
  }
}

std::string wiring_name(Wiring w) {
  switch (w) {
    case Wiring::Complete: return "complete";
    case Wiring::Regular: return "regular";
    case Wiring::None:
    default: return "none";
  }
}

std::vector<int> ladder_sizes(int k, int target) {
  if (k < 2) throw InstanceTooSmall("size ladder needs k >= 2, got k = " + std::to_string(k));
  if (target < k || target > 2 * k)
    throw InstanceTooSmall("size ladder target must lie in [k, 2k], got " + std::to_string(target));
  std::vector<int> sizes{k};
  int even = 1, odd = k + 1;
  for (;;) {
    sizes.push_back(even);
    sizes.push_back(odd);
    if (even == target && odd == target) break;
    if (odd == 2 * k) {
      even = std::min(2 * even, target);
      odd = k;
    } else {
      ++odd;
    }
  }
  return sizes;
}

std::vector<long long> boost_ladder(int k, long long target) {
  if (k < 2) throw InstanceTooSmall("boost ladder needs k >= 2, got k = " + std::to_string(k));
  if (target < 2LL * k + 2)
    throw BudgetExceeded("boost ladder needs a target of at least " + std::to_string(2 * k + 2) +
                         ", got " + std::to_string(target));
  std::vector<long long> sizes{2LL * k + 1};
  for (;;) {
    const long long num = sizes.back() * (2LL * k + 1);
    const long long den = 2LL * k;
    long long next = (2 * num + den) / (2 * den);  // nearest integer, halves round up
    if (next <= sizes.back()) next = sizes.back() + 1;
    if (next >= target) {
      sizes.push_back(target);
      break;
    }
    sizes.push_back(next);
  }
  return sizes;
}

namespace {

void wire_layers(std::vector<std::pair<int, int>>& edges, int from_base, int from_size,
                 int to_base, int to_size, Wiring wiring, int k) {
  if (wiring == Wiring::Regular) {
    // Each vertex of the next layer picks k consecutive sources mod 2k, so
    // every switch out of the 2k-layer sees the same k-edge boundary.
    for (int j = 0; j < to_size; ++j)
      for (int t = 0; t < k; ++t)
        edges.emplace_back(from_base + (j * k + t) % from_size, to_base + j);
  } else if (wiring == Wiring::Complete) {
    for (int i = 0; i < from_size; ++i)
      for (int j = 0; j < to_size; ++j) edges.emplace_back(from_base + i, to_base + j);
  }
}

// Even-position layers that reach the full width 2k connect k-regularly, so
// the following layer keeps a bounded backward degree; everything else is
// complete. The last pre-boost layer is the exception: it feeds the first
// boost layer completely.
Wiring wiring_to_next(int k, int index, int size, bool next_is_boost) {
  return (index % 2 == 0 && size == 2 * k && !next_is_boost) ? Wiring::Regular : Wiring::Complete;
}

LayerSet chain_set(int k, std::vector<int> sizes) {
  LayerSet set;
  set.sizes = std::move(sizes);
  std::vector<int> bases(set.sizes.size(), 0);
  for (size_t i = 1; i < set.sizes.size(); ++i) bases[i] = bases[i - 1] + set.sizes[i - 1];
  for (size_t i = 0; i + 1 < set.sizes.size(); ++i)
    wire_layers(set.edges, bases[i], set.sizes[i], bases[i + 1], set.sizes[i + 1],
                wiring_to_next(k, static_cast<int>(i), set.sizes[i], false), k);
  return set;
}

long long fixed_part_total(int k) {
  // Initializer plus secondary ladder (whose first layer is the initializer's
  // last, -k) plus the parallel white layer (+k): the corrections cancel.
  const auto init = ladder_sizes(k, k);
  const auto secondary = ladder_sizes(k, 2 * k);
  return std::accumulate(init.begin(), init.end(), 0LL) +
         std::accumulate(secondary.begin(), secondary.end(), 0LL);
}

}  // namespace

LayerSet build_initializer(int k) { return chain_set(k, ladder_sizes(k, k)); }

LayerSet build_secondary(int k) { return chain_set(k, ladder_sizes(k, 2 * k)); }

LayerSet build_boosting(int k, int n, const Rational& c) {
  if (!c.is_positive()) throw ParseError("boost constant must be positive, got " + c.str());
  const long long target = floor_mul(c, n) / k;
  const auto sizes = boost_ladder(k, target);
  const long long total = std::accumulate(sizes.begin(), sizes.end(), 0LL);
  const long long fixed = fixed_part_total(k);
  if (fixed + total > n)
    throw BudgetExceeded("fixed part " + std::to_string(fixed) + " plus boost chain " +
                         std::to_string(total) + " exceeds n = " + std::to_string(n));
  std::vector<int> narrow;
  narrow.reserve(sizes.size());
  for (long long s : sizes) narrow.push_back(static_cast<int>(s));
  return chain_set(k, std::move(narrow));  // all sizes exceed 2k, so wiring is complete
}

Rational choose_c(int k, int n) {
  for (int i = 1; i <= 20; ++i) {
    const Rational c{1, 1LL << i};
    try {
      build_boosting(k, n, c);
      return c;
    } catch (const BudgetExceeded&) {
      // halve and retry
    }
  }
  throw InstanceTooSmall("no boost constant down to 2^-20 fits n = " + std::to_string(n) +
                         " with k = " + std::to_string(k));
}

std::pair<ConsensusGame, ConstructionPlan> build_full(int n, const Rational& eps) {
  if (!eps.is_positive()) throw ParseError("eps must be positive, got " + eps.str());
  const long long k_wide = ceil_div_int(eps.den, eps.num);
  if (k_wide < 2)
    throw InstanceTooSmall("the layered family needs eps < 1, got eps = " + eps.str());
  const int k = static_cast<int>(k_wide);
  const Rational c = choose_c(k, n);

  const std::vector<int> init = ladder_sizes(k, k);
  const std::vector<int> secondary = ladder_sizes(k, 2 * k);
  const std::vector<long long> boost = boost_ladder(k, floor_mul(c, n) / k);

  std::vector<int> chain(init);
  chain.insert(chain.end(), secondary.begin() + 1, secondary.end());
  const int t_index = static_cast<int>(init.size()) - 1;  // the flip layer, size k
  const int boost_first = static_cast<int>(chain.size());
  for (long long s : boost) chain.push_back(static_cast<int>(s));
  const int chain_len = static_cast<int>(chain.size());

  std::vector<int> first_id(chain_len, 0);
  int next_id = 0;
  for (int i = 0; i < chain_len; ++i) {
    first_id[i] = next_id;
    next_id += chain[i];
  }
  const int parallel_first = next_id;
  next_id += k;
  const int n_total = next_id;

  std::vector<std::pair<int, int>> edges;
  std::vector<Wiring> wirings(chain_len, Wiring::None);
  for (int i = 0; i + 1 < chain_len; ++i) {
    wirings[i] = wiring_to_next(k, i, chain[i], i + 1 >= boost_first);
    wire_layers(edges, first_id[i], chain[i], first_id[i + 1], chain[i + 1], wirings[i], k);
  }
  wire_layers(edges, parallel_first, k, first_id[t_index], chain[t_index], Wiring::Complete, k);

  std::vector<Color> colors(n_total, Color::White);
  for (int v = 0; v < chain[0]; ++v) colors[v] = Color::Red;

  ConstructionPlan plan;
  plan.k = k;
  plan.eps_effective = Rational{1, k};
  plan.c = c;
  plan.n_total = n_total;
  plan.n_budget = n;
  plan.boost_sizes = boost;
  plan.layers.reserve(chain_len + 1);
  for (int i = 0; i < chain_len; ++i) {
    LayerSpec spec;
    spec.index = i;
    spec.size = chain[i];
    spec.role = i <= t_index      ? LayerRole::Initializer
                : i < boost_first ? LayerRole::Secondary
                                  : LayerRole::Boost;
    spec.wiring = wirings[i];
    spec.first_id = first_id[i];
    plan.layers.push_back(spec);
  }
  plan.layers.push_back(LayerSpec{chain_len, k, LayerRole::ParallelWhite, Wiring::None, parallel_first});

  plan.frozen.reserve(first_id[t_index] + k);
  for (int v = 0; v < first_id[t_index]; ++v) plan.frozen.push_back(v);
  for (int v = parallel_first; v < n_total; ++v) plan.frozen.push_back(v);

  // One sweep turning every interior layer red, in chain order; the final
  // boost layer and the parallel layer stay white.
  for (int i = 1; i <= chain_len - 2; ++i)
    for (int v = first_id[i]; v < first_id[i] + chain[i]; ++v) plan.phase1.push_back(v);

  // Oscillation: each wave re-flips from the flip layer up to a boost prefix
  // one layer shorter than the previous wave, so consecutive boost layers
  // settle with alternating colors.
  const int r = static_cast<int>(boost.size());
  for (int wave = 1; wave <= r - 2; ++wave)
    for (int i = t_index; i <= boost_first + r - 2 - wave; ++i)
      for (int v = first_id[i]; v < first_id[i] + chain[i]; ++v) plan.phase2.push_back(v);

  plan.predicted_initial_bad = static_cast<long long>(chain[0]) * chain[1];
  plan.anchor_bad = static_cast<long long>(k) * k;
  long long products = 0;
  for (int i = boost_first; i + 1 < chain_len; ++i)
    products += static_cast<long long>(chain[i]) * chain[i + 1];
  plan.boost_product_sum = products;
  plan.predicted_phase1_bad =
      static_cast<long long>(chain[chain_len - 2]) * chain[chain_len - 1] + plan.anchor_bad;
  plan.predicted_final_bad = products + plan.anchor_bad;

  return {ConsensusGame::from_edges(n_total, edges, colors), std::move(plan)};
}

std::pair<ConsensusGame, std::vector<int>> build_double_gadget(int m, const UncertaintyRule& rule) {
  if (m < 1) throw MTooSmall("gadget needs m >= 1, got m = " + std::to_string(m));
  const long long needed = ceil_div(1, rule.eps_hat());
  if (m < needed)
    throw MTooSmall("hub switches need m >= ceil(1/(kappa-1)) = " + std::to_string(needed) +
                    ", got m = " + std::to_string(m));
  const int hub = 0, white_anchor = 1, red_anchor = 2;
  const int n = 2 * m + 4;
  auto x_id = [](int i) { return 3 + i; };       // m white spokes
  auto y_id = [m](int j) { return 3 + m + j; };  // m+1 red spokes

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) {
    edges.emplace_back(hub, x_id(i));
    edges.emplace_back(white_anchor, x_id(i));
  }
  for (int j = 0; j <= m; ++j) {
    edges.emplace_back(hub, y_id(j));
    edges.emplace_back(red_anchor, y_id(j));
  }

  std::vector<Color> colors(n, Color::White);
  colors[red_anchor] = Color::Red;
  for (int j = 0; j <= m; ++j) colors[y_id(j)] = Color::Red;

  // Alternate one fresh spoke with the hub; each spoke switch is a tie and
  // each hub switch sees (b, g) = (m, m+1), a strict increase.
  std::vector<int> schedule;
  schedule.reserve(4 * m + 2);
  for (int i = 0; i < m; ++i) {
    schedule.push_back(y_id(i));
    schedule.push_back(hub);
    schedule.push_back(x_id(i));
    schedule.push_back(hub);
  }
  schedule.push_back(y_id(m));
  schedule.push_back(hub);

  return {ConsensusGame::from_edges(n, edges, colors), std::move(schedule)};
}

long long predicted_final_bad_edges(const ConstructionPlan& plan) {
  return plan.boost_product_sum + plan.anchor_bad;
}

}  // namespace pou
