#include "pou/game.hpp"

#include <algorithm>

#include "pou/errors.hpp"

namespace pou {

Color color_from_char(char c) {
  if (c == 'W') return Color::White;
  if (c == 'R') return Color::Red;
  throw ParseError(std::string("unknown color '") + c + "'");
}

ConsensusGame ConsensusGame::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                        const std::vector<Color>& colors) {
  if (n < 0) throw ParseError("negative vertex count");
  if (static_cast<int>(colors.size()) != n)
    throw ParseError("colors length " + std::to_string(colors.size()) + " != n " + std::to_string(n));

  std::vector<std::pair<int, int>> canon;
  canon.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw ParseError("edge endpoint out of range: (" + std::to_string(a) + "," + std::to_string(b) + ")");
    if (a == b) throw ParseError("self-loop at vertex " + std::to_string(a));
    canon.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(canon.begin(), canon.end());
  if (std::adjacent_find(canon.begin(), canon.end()) != canon.end())
    throw ParseError("duplicate edge");

  ConsensusGame g;
  g.n_ = n;
  g.colors_ = colors;
  g.off_.assign(n + 1, 0);
  for (const auto& [a, b] : canon) {
    ++g.off_[a + 1];
    ++g.off_[b + 1];
  }
  for (int v = 0; v < n; ++v) g.off_[v + 1] += g.off_[v];
  g.adj_.resize(canon.size() * 2);
  std::vector<long long> cursor(g.off_.begin(), g.off_.end() - 1);
  for (const auto& [a, b] : canon) {
    g.adj_[cursor[a]++] = b;
    g.adj_[cursor[b]++] = a;
  }

  g.bad_deg_.assign(n, 0);
  for (const auto& [a, b] : canon) {
    if (colors[a] != colors[b]) {
      ++g.bad_deg_[a];
      ++g.bad_deg_[b];
      ++g.bad_edges_;
    }
  }
  return g;
}

MoveRecord ConsensusGame::flip(int v, long long step) {
  if (v < 0 || v >= n_) throw ParseError("flip: vertex out of range: " + std::to_string(v));
  MoveRecord rec;
  rec.step = step;
  rec.vertex = v;
  rec.from = colors_[v];
  rec.to = opposite(colors_[v]);
  rec.b = bad_deg_[v];
  rec.g = degree(v) - rec.b;
  rec.delta = rec.g - rec.b;

  const Color old = colors_[v];
  for (int u : neighbors(v)) {
    // a neighbor matching the old color becomes a bad neighbor, and vice versa
    bad_deg_[u] += (colors_[u] == old) ? 1 : -1;
  }
  colors_[v] = rec.to;
  bad_deg_[v] = static_cast<int>(rec.g);
  bad_edges_ += rec.delta;
  rec.bad_after = bad_edges_;
  return rec;
}

std::pair<long long, std::vector<int>> ConsensusGame::recount() const {
  std::vector<int> deg(n_, 0);
  long long bad = 0;
  for (int v = 0; v < n_; ++v) {
    for (int u : neighbors(v)) {
      if (colors_[u] != colors_[v]) {
        ++deg[v];
        if (u > v) ++bad;
      }
    }
  }
  return {bad, deg};
}

std::vector<std::pair<int, int>> ConsensusGame::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(adj_.size() / 2);
  for (int v = 0; v < n_; ++v)
    for (int u : neighbors(v))
      if (u > v) out.emplace_back(v, u);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pou
