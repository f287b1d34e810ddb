#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pou {

enum class Color : std::uint8_t { White = 0, Red = 1 };

inline Color opposite(Color c) { return c == Color::White ? Color::Red : Color::White; }
inline char color_char(Color c) { return c == Color::White ? 'W' : 'R'; }
Color color_from_char(char c);

struct MoveRecord {
  long long step = 0;
  int vertex = -1;
  Color from = Color::White;
  Color to = Color::Red;
  long long b = 0;      // bad degree at switch time
  long long g = 0;      // good degree at switch time
  long long delta = 0;  // g - b
  long long bad_after = 0;
};

// Two-coloring game state on a simple undirected graph. Adjacency is CSR
// (offsets + one flat neighbor array); a flip costs O(deg) and keeps the
// per-vertex bad degrees and the global bad-edge count current.
class ConsensusGame {
 public:
  ConsensusGame() = default;
  static ConsensusGame from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                  const std::vector<Color>& colors);

  int n() const { return n_; }
  long long edge_count() const { return static_cast<long long>(adj_.size()) / 2; }
  int degree(int v) const { return static_cast<int>(off_[v + 1] - off_[v]); }
  std::span<const int> neighbors(int v) const {
    return {adj_.data() + off_[v], adj_.data() + off_[v + 1]};
  }
  Color color(int v) const { return colors_[v]; }
  long long player_cost(int v) const { return bad_deg_[v]; }
  long long bad_degree(int v) const { return bad_deg_[v]; }
  long long good_degree(int v) const { return degree(v) - bad_deg_[v]; }
  long long bad_edges() const { return bad_edges_; }
  const std::vector<Color>& colors() const { return colors_; }

  MoveRecord flip(int v, long long step = 0);

  // O(n + |E|) recomputation from adjacency and colors; the test oracle for
  // the incremental counters.
  std::pair<long long, std::vector<int>> recount() const;

  // Edges as (u < v) pairs in lexicographic order (canonical form for IO).
  std::vector<std::pair<int, int>> edges() const;

 private:
  int n_ = 0;
  std::vector<long long> off_;
  std::vector<int> adj_;
  std::vector<Color> colors_;
  std::vector<int> bad_deg_;
  long long bad_edges_ = 0;
};

}  // namespace pou
