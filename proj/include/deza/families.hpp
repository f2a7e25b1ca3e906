#pragma once

#include <array>
#include <string>

#include "deza/core.hpp"

namespace deza {

/// Triangular graph T(n): 2-subsets of {1..n} in lexicographic order,
/// adjacent when the subsets share an element. SRG(n(n-1)/2, 2(n-2), n-2, 4)
/// for n >= 4. Labels "{a,b}".
inline Graph triangular(int n) {
  if (n < 2) throw std::invalid_argument("triangular: need n >= 2");
  std::vector<std::array<int, 2>> sets;
  std::vector<std::string> labels;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      sets.push_back({a, b});
      labels.push_back("{" + std::to_string(a) + "," + std::to_string(b) + "}");
    }
  std::vector<std::pair<int, int>> edges;
  for (size_t u = 0; u < sets.size(); ++u)
    for (size_t v = u + 1; v < sets.size(); ++v) {
      int inter = (sets[u][0] == sets[v][0]) + (sets[u][0] == sets[v][1]) +
                  (sets[u][1] == sets[v][0]) + (sets[u][1] == sets[v][1]);
      if (inter == 1) edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
  return Graph(static_cast<int>(sets.size()), edges, std::move(labels));
}

/// Index of 2-subset {a,b} (1-based, a<b) in the triangular(n) vertex order.
inline int triangular_index(int n, int a, int b) {
  if (a > b) std::swap(a, b);
  if (a < 1 || b > n || a == b) throw std::invalid_argument("triangular_index: bad pair");
  return (a - 1) * n - (a - 1) * a / 2 + (b - a - 1);
}

/// Lattice graph L(n) = K_n x K_n: ordered pairs (a,b), row-major, adjacent
/// when they agree in exactly one coordinate. SRG(n^2, 2(n-1), n-2, 2).
/// Labels "(a,b)".
inline Graph lattice(int n) {
  if (n < 2) throw std::invalid_argument("lattice: need n >= 2");
  std::vector<std::string> labels;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      labels.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
  std::vector<std::pair<int, int>> edges;
  auto idx = [n](int a, int b) { return (a - 1) * n + (b - 1); };
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) edges.emplace_back(idx(a, b), idx(a, c));
      for (int c = a + 1; c <= n; ++c) edges.emplace_back(idx(a, b), idx(c, b));
    }
  return Graph(n * n, edges, std::move(labels));
}

inline int lattice_index(int n, int row, int col) {
  if (row < 1 || row > n || col < 1 || col > n)
    throw std::invalid_argument("lattice_index: coordinate out of range");
  return (row - 1) * n + (col - 1);
}

/// Complete multipartite graph K_{n x 2}: n parts of size 2, adjacency between
/// distinct parts. SRG(2n, 2n-2, 2n-4, 2n-2); the complement is n disjoint
/// edges.
inline Graph complete_multipartite_nx2(int n) {
  if (n < 2) throw std::invalid_argument("complete_multipartite_nx2: need n >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 2 * n; ++u)
    for (int v = u + 1; v < 2 * n; ++v)
      if (u / 2 != v / 2) edges.emplace_back(u, v);
  return Graph(2 * n, edges);
}

/// Petersen graph as the complement of T(5); SRG(10,3,0,1).
inline Graph petersen() { return complement(triangular(5)); }

/// SRG(16,10,6,6), built as the complement of the (16,5,0,2) model on {0,1}^4
/// with adjacency at Hamming distance 1 or 4. Labels are the 4-bit words.
inline Graph clebsch_seidel() {
  std::vector<std::string> labels;
  for (int v = 0; v < 16; ++v) {
    std::string s(4, '0');
    for (int b = 0; b < 4; ++b)
      if (v & (1 << (3 - b))) s[b] = '1';
    labels.push_back(s);
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 16; ++u)
    for (int v = u + 1; v < 16; ++v) {
      int d = std::popcount(static_cast<unsigned>(u ^ v));
      if (d == 1 || d == 4) edges.emplace_back(u, v);
    }
  return complement(Graph(16, edges, std::move(labels)));
}

/// Shrikhande graph: Cayley graph on Z4 x Z4 with connection set
/// {±(1,0), ±(0,1), ±(1,1)}. SRG(16,6,2,2). Labels "(a,b)".
inline Graph shrikhande() {
  std::vector<std::string> labels;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      labels.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
  std::vector<std::pair<int, int>> edges;
  auto idx = [](int a, int b) { return ((a % 4 + 4) % 4) * 4 + ((b % 4 + 4) % 4); };
  const int conn[3][2] = {{1, 0}, {0, 1}, {1, 1}};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (auto& c : conn) {
        int u = idx(a, b), v = idx(a + c[0], b + c[1]);
        if (u < v) edges.emplace_back(u, v);
        else edges.emplace_back(v, u);
      }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(16, edges, std::move(labels));
}

/// SRG(27,10,1,5): the 27-lines model with a1..a6, b1..b6, c_{ij} (i<j);
/// ai ~ bj iff i != j; c_{ij} ~ a_k, b_k iff k in {i,j}; c_{ij} ~ c_{kl} iff
/// {i,j} and {k,l} are disjoint. Its complement is SRG(27,16,10,8).
inline Graph schlafli_complement() {
  std::vector<std::string> labels;
  for (int i = 1; i <= 6; ++i) labels.push_back("a" + std::to_string(i));
  for (int i = 1; i <= 6; ++i) labels.push_back("b" + std::to_string(i));
  std::vector<std::array<int, 2>> cpairs;
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) {
      cpairs.push_back({i, j});
      labels.push_back("c" + std::to_string(i) + std::to_string(j));
    }
  auto a_idx = [](int i) { return i - 1; };
  auto b_idx = [](int i) { return 5 + i; };
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j)
      if (i != j && a_idx(i) < b_idx(j)) edges.emplace_back(a_idx(i), b_idx(j));
  for (size_t c = 0; c < cpairs.size(); ++c) {
    int ci = 12 + static_cast<int>(c);
    for (int k : {cpairs[c][0], cpairs[c][1]}) {
      edges.emplace_back(a_idx(k), ci);
      edges.emplace_back(b_idx(k), ci);
    }
    for (size_t d = c + 1; d < cpairs.size(); ++d) {
      bool meet = cpairs[c][0] == cpairs[d][0] || cpairs[c][0] == cpairs[d][1] ||
                  cpairs[c][1] == cpairs[d][0] || cpairs[c][1] == cpairs[d][1];
      if (!meet) edges.emplace_back(ci, 12 + static_cast<int>(d));
    }
  }
  return Graph(27, edges, std::move(labels));
}

/// Seidel switching: toggles every edge between s and its complement.
inline Graph seidel_switching(const Graph& g, const std::vector<int>& s) {
  std::vector<char> in_s(g.size(), 0);
  for (int v : s) {
    if (v < 0 || v >= g.size()) throw std::out_of_range("seidel_switching: vertex out of range");
    in_s[v] = 1;
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v) {
      bool adj = g.adjacent(u, v);
      if (in_s[u] != in_s[v]) adj = !adj;
      if (adj) edges.emplace_back(u, v);
    }
  return Graph(g.size(), edges, g.labels());
}

/// The three Chang graphs, SRG(28,12,6,4), obtained by switching T(8) with
/// respect to: (1) a perfect matching of K8, (2) the edges of C3 u C5,
/// (3) the edges of C8. Pairwise non-isomorphic and none isomorphic to T(8).
inline Graph chang(int variant) {
  Graph t8 = triangular(8);
  std::vector<std::array<int, 2>> pairs;
  switch (variant) {
    case 1:
      pairs = {{1, 2}, {3, 4}, {5, 6}, {7, 8}};
      break;
    case 2:
      pairs = {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {4, 8}};
      break;
    case 3:
      pairs = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {1, 8}};
      break;
    default:
      throw std::invalid_argument("chang: variant must be 1, 2 or 3");
  }
  std::vector<int> s;
  for (auto& p : pairs) s.push_back(triangular_index(8, p[0], p[1]));
  return seidel_switching(t8, s);
}

}  // namespace deza
