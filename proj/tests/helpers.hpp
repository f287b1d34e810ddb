#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "pou/game.hpp"

namespace test_helpers {

// Erdos-Renyi G(n, p) with iid uniform colors.
inline pou::ConsensusGame random_game(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution edge(p);
    std::bernoulli_distribution red(0.5);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (edge(rng)) edges.emplace_back(u, v);
        }
    }
    std::vector<pou::Color> colors(n);
    for (int v = 0; v < n; ++v) {
        colors[v] = red(rng) ? pou::Color::Red : pou::Color::White;
    }
    return pou::ConsensusGame::from_edges(n, edges, colors);
}

// Independent oracle for the closed-form budget: largest root of
//   lead * A^2 - 2 * term * A - 4 * (S0sq + 2 m S0) = 0
// found by doubling plus bisection instead of the quadratic formula.
inline double bound_by_bisection(int m, double eps, double s0, double s0sq) {
    const double lead = (1.0 - eps) * (1.0 - eps) / m;
    const double term = eps * (2.0 * m - 1.0);
    const double rhs = 4.0 * (s0sq + 2.0 * m * s0);
    auto q = [&](double a) { return lead * a * a - 2.0 * term * a - rhs; };
    double hi = 1.0;
    while (q(hi) < 0.0) hi *= 2.0;
    double lo = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = (lo + hi) / 2.0;
        if (q(mid) < 0.0) lo = mid; else hi = mid;
    }
    return (lo + hi) / 2.0;
}

// Every bad edge has at least one endpoint in `in_set`.
inline bool covered(const pou::ConsensusGame& game, const std::vector<char>& in_set) {
    for (const auto& [u, v] : game.edges()) {
        if (game.color(u) != game.color(v) && !in_set[u] && !in_set[v]) return false;
    }
    return true;
}

}  // namespace test_helpers
