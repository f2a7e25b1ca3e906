#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace deza {

// Raised when an input graph exceeds a search bound (automorphism search,
// connectivity sweep). Distinct from invalid_argument so callers can map it
// to its own exit code.
struct BoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Immutable simple graph on vertices 0..n-1 with packed bit-row adjacency.
/// An optional label table travels with the graph; operations that permute or
/// complement vertices keep labels aligned.
class Graph {
 public:
  Graph() = default;

  Graph(int n, const std::vector<std::pair<int, int>>& edges,
        std::vector<std::string> labels = {})
      : n_(n), words_((n + 63) / 64), bits_(static_cast<size_t>(n) * words_, 0),
        labels_(std::move(labels)) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
      throw std::invalid_argument("Graph: label count does not match vertex count");
    for (auto [u, v] : edges) {
      check_vertex(u);
      check_vertex(v);
      if (u == v) throw std::invalid_argument("Graph: self loop");
      set_bit(u, v);
      set_bit(v, u);
    }
  }

  /// Builds from prepacked rows (n * words words). Validates symmetry and an
  /// empty diagonal, so a bad row permutation cannot slip through.
  static Graph from_rows(int n, std::vector<uint64_t> rows,
                         std::vector<std::string> labels = {}) {
    Graph g;
    g.n_ = n;
    g.words_ = (n + 63) / 64;
    if (rows.size() != static_cast<size_t>(n) * g.words_)
      throw std::invalid_argument("from_rows: row buffer has wrong size");
    g.bits_ = std::move(rows);
    g.labels_ = std::move(labels);
    if (!g.labels_.empty() && static_cast<int>(g.labels_.size()) != n)
      throw std::invalid_argument("from_rows: label count does not match vertex count");
    for (int v = 0; v < n; ++v) {
      if (g.get_bit(v, v)) throw std::invalid_argument("from_rows: nonzero diagonal");
      for (int u = v + 1; u < n; ++u)
        if (g.get_bit(u, v) != g.get_bit(v, u))
          throw std::invalid_argument("from_rows: asymmetric adjacency");
    }
    // Clear any padding bits beyond column n-1.
    if (g.words_ > 0) {
      int spare = g.words_ * 64 - n;
      if (spare > 0) {
        uint64_t mask = ~uint64_t(0) >> spare;
        for (int v = 0; v < n; ++v) g.bits_[static_cast<size_t>(v) * g.words_ + g.words_ - 1] &= mask;
      }
    }
    return g;
  }

  int size() const { return n_; }
  int words() const { return words_; }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return get_bit(u, v);
  }

  int degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(row_word(v, w));
    return d;
  }

  long long edge_count() const {
    long long total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
  }

  std::vector<int> neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
      if (get_bit(v, u)) out.push_back(u);
    return out;
  }

  /// |N(u) ∩ N(v)| for distinct vertices.
  int common_neighbors(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("common_neighbors: vertices must be distinct");
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(row_word(u, w) & row_word(v, w));
    return c;
  }

  uint64_t row_word(int v, int w) const { return bits_[static_cast<size_t>(v) * words_ + w]; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const {
    check_vertex(v);
    if (labels_.empty()) throw std::logic_error("label: graph has no labels");
    return labels_[v];
  }
  /// Index of the vertex with the given label, or -1.
  int vertex_by_label(const std::string& s) const {
    for (int v = 0; v < static_cast<int>(labels_.size()); ++v)
      if (labels_[v] == s) return v;
    return -1;
  }

  bool is_regular() const {
    if (n_ == 0) return true;
    int k = degree(0);
    for (int v = 1; v < n_; ++v)
      if (degree(v) != k) return false;
    return true;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
  }
  void set_bit(int u, int v) { bits_[static_cast<size_t>(u) * words_ + v / 64] |= uint64_t(1) << (v % 64); }
  bool get_bit(int u, int v) const {
    return (bits_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
  }

  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> bits_;
  std::vector<std::string> labels_;
};

inline Graph complement(const Graph& g) {
  int n = g.size();
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(n, edges, g.labels());
}

/// BFS distances from src; -1 for unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, int src) {
  std::vector<int> dist(g.size(), -1);
  if (src < 0 || src >= g.size()) throw std::out_of_range("bfs_distances: vertex out of range");
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u = 0; u < g.size(); ++u)
      if (g.adjacent(v, u) && dist[u] < 0) {
        dist[u] = dist[v] + 1;
        q.push(u);
      }
  }
  return dist;
}

inline std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.size(), 0);
  for (int s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    seen[s] = 1;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int u = 0; u < g.size(); ++u)
        if (g.adjacent(v, u) && !seen[u]) {
          seen[u] = 1;
          q.push(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool is_connected(const Graph& g) {
  if (g.size() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

/// Diameter; nullopt means disconnected (infinite).
inline std::optional<int> diameter(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.size(); ++v) {
    auto dist = bfs_distances(g, v);
    for (int d : dist) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

/// Vertices at distance exactly 2 from x.
inline std::vector<int> second_neighborhood(const Graph& g, int x) {
  auto dist = bfs_distances(g, x);
  std::vector<int> out;
  for (int v = 0; v < g.size(); ++v)
    if (dist[v] == 2) out.push_back(v);
  return out;
}

/// Subgraph induced on `verts` (kept in the given order); labels carried over.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
  int m = static_cast<int>(verts.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.adjacent(verts[i], verts[j])) edges.emplace_back(i, j);
  std::vector<std::string> labels;
  if (g.has_labels())
    for (int v : verts) labels.push_back(g.label(v));
  return Graph(m, edges, std::move(labels));
}

inline bool is_clique(const Graph& g, const std::vector<int>& verts) {
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (!g.adjacent(verts[i], verts[j])) return false;
  return true;
}

}  // namespace deza
