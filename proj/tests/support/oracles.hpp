// Independent reference implementations used only to check the library.
// Everything here is built from first principles (recursive construction,
// coordinate flood fill, exhaustive enumeration) and deliberately avoids
// the code paths under test.

#ifndef SFCPLAN_TESTS_ORACLES_HPP
#define SFCPLAN_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracles {

struct Cell {
  std::uint32_t x = 0;
  std::uint32_t y = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Full canonical Hilbert visit sequence for iteration k, built by the
/// quadrant recursion: lower-left quadrant transposed, upper quadrants
/// translated, lower-right quadrant anti-transposed. Starts at (0,0) and
/// ends at (2^k - 1, 0).
inline std::vector<Cell> hilbert_sequence(int k) {
  std::vector<Cell> seq{{0, 0}, {0, 1}, {1, 1}, {1, 0}};
  for (int level = 2; level <= k; ++level) {
    const std::uint32_t h = 1u << (level - 1);
    std::vector<Cell> next;
    next.reserve(seq.size() * 4);
    for (const Cell c : seq) {  // lower-left: transpose
      next.push_back({c.y, c.x});
    }
    for (const Cell c : seq) {  // upper-left
      next.push_back({c.x, c.y + h});
    }
    for (const Cell c : seq) {  // upper-right
      next.push_back({c.x + h, c.y + h});
    }
    for (const Cell c : seq) {  // lower-right: anti-transpose
      next.push_back({h - 1 - c.y + h, h - 1 - c.x});
    }
    seq = std::move(next);
  }
  return seq;
}

inline bool cells_adjacent(Cell a, Cell b, bool diagonals) {
  const auto dx = a.x > b.x ? a.x - b.x : b.x - a.x;
  const auto dy = a.y > b.y ? a.y - b.y : b.y - a.y;
  if (diagonals) {
    return (dx <= 1 && dy <= 1) && !(dx == 0 && dy == 0);
  }
  return dx + dy == 1;
}

/// Reachable waypoint indices from `start`, avoiding `blocked`, computed by
/// stack-based flood fill over the coordinate grid.
inline std::set<std::uint64_t> flood_fill_reachable(
    const std::vector<Cell>& seq, std::uint64_t start,
    const std::set<std::uint64_t>& blocked, bool diagonals) {
  const auto n = static_cast<std::uint32_t>([&] {
    std::uint32_t side = 1;
    while (static_cast<std::uint64_t>(side) * side < seq.size()) {
      side *= 2;
    }
    return side;
  }());
  std::vector<std::uint64_t> index_of(seq.size());
  std::vector<char> is_blocked(seq.size(), 0);
  for (std::uint64_t d = 0; d < seq.size(); ++d) {
    index_of[seq[d].y * static_cast<std::uint64_t>(n) + seq[d].x] = d;
  }
  for (const std::uint64_t d : blocked) {
    is_blocked[seq[d].y * static_cast<std::uint64_t>(n) + seq[d].x] = 1;
  }
  std::vector<char> seen(seq.size(), 0);
  std::vector<Cell> stack{seq[start]};
  seen[seq[start].y * static_cast<std::uint64_t>(n) + seq[start].x] = 1;
  std::set<std::uint64_t> reached;
  while (!stack.empty()) {
    const Cell c = stack.back();
    stack.pop_back();
    reached.insert(index_of[c.y * static_cast<std::uint64_t>(n) + c.x]);
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        if ((dx == 0 && dy == 0) || (!diagonals && dx != 0 && dy != 0)) {
          continue;
        }
        const std::int64_t nx = static_cast<std::int64_t>(c.x) + dx;
        const std::int64_t ny = static_cast<std::int64_t>(c.y) + dy;
        if (nx < 0 || ny < 0 || nx >= n || ny >= n) {
          continue;
        }
        const std::uint64_t flat =
            static_cast<std::uint64_t>(ny) * n + static_cast<std::uint64_t>(nx);
        if (!seen[flat] && !is_blocked[flat]) {
          seen[flat] = 1;
          stack.push_back({static_cast<std::uint32_t>(nx),
                           static_cast<std::uint32_t>(ny)});
        }
      }
    }
  }
  return reached;
}

/// A(V,G) - O by direct definition over the coordinate grid.
inline std::set<std::uint64_t> frontier_by_scan(
    const std::vector<Cell>& seq, const std::set<std::uint64_t>& visited,
    const std::set<std::uint64_t>& obstacles, bool diagonals) {
  std::set<std::uint64_t> result;
  for (std::uint64_t d = 0; d < seq.size(); ++d) {
    if (visited.contains(d) || obstacles.contains(d)) {
      continue;
    }
    for (const std::uint64_t v : visited) {
      if (cells_adjacent(seq[d], seq[v], diagonals)) {
        result.insert(d);
        break;
      }
    }
  }
  return result;
}

/// Undirected adjacency pair count by full pair scan.
inline std::uint64_t edge_count_by_scan(const std::vector<Cell>& seq,
                                        bool diagonals) {
  std::uint64_t edges = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (cells_adjacent(seq[i], seq[j], diagonals)) {
        ++edges;
      }
    }
  }
  return edges;
}

/// Hop count of the shortest path from `from` to `to` where every interior
/// vertex must lie in `allowed_interior`; -1 when unreachable. Plain
/// outward BFS over cells.
inline std::int64_t bfs_distance(const std::vector<Cell>& seq,
                                 std::uint64_t from, std::uint64_t to,
                                 const std::set<std::uint64_t>& allowed_interior,
                                 bool diagonals) {
  std::vector<std::int64_t> dist(seq.size(), -1);
  dist[from] = 0;
  std::vector<std::uint64_t> frontier_level{from};
  while (!frontier_level.empty()) {
    std::vector<std::uint64_t> next_level;
    for (const std::uint64_t v : frontier_level) {
      if (v == to) {
        return dist[v];
      }
      for (std::uint64_t w = 0; w < seq.size(); ++w) {
        if (dist[w] != -1 || !cells_adjacent(seq[v], seq[w], diagonals)) {
          continue;
        }
        if (w != to && !allowed_interior.contains(w)) {
          continue;
        }
        dist[w] = dist[v] + 1;
        next_level.push_back(w);
      }
    }
    frontier_level = std::move(next_level);
  }
  return dist[to];
}

/// Every shortest path enumerated by depth-limited DFS; returns the
/// lexicographically smallest sequence. Exponential, only for tiny cases.
inline std::vector<std::uint64_t> lexmin_shortest_path(
    const std::vector<Cell>& seq, std::uint64_t from, std::uint64_t to,
    const std::set<std::uint64_t>& allowed_interior, bool diagonals) {
  const std::int64_t d = bfs_distance(seq, from, to, allowed_interior,
                                      diagonals);
  std::vector<std::uint64_t> best;
  if (d < 0) {
    return best;
  }
  std::vector<std::uint64_t> path{from};
  const auto dfs = [&](auto&& self, std::uint64_t cur) -> void {
    if (cur == to) {
      if (best.empty() || path < best) {
        best = path;
      }
      return;
    }
    if (static_cast<std::int64_t>(path.size()) > d) {
      return;
    }
    for (std::uint64_t w = 0; w < seq.size(); ++w) {
      if (!cells_adjacent(seq[cur], seq[w], diagonals)) {
        continue;
      }
      if (w != to && !allowed_interior.contains(w)) {
        continue;
      }
      if (std::find(path.begin(), path.end(), w) != path.end()) {
        continue;
      }
      path.push_back(w);
      self(self, w);
      path.pop_back();
    }
  };
  dfs(dfs, from);
  return best;
}

}  // namespace oracles

#endif  // SFCPLAN_TESTS_ORACLES_HPP
