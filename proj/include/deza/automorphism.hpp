#pragma once

#include <algorithm>
#include <bit>
#include <map>
#include <optional>

#include "deza/core.hpp"

namespace deza {

using Perm = std::vector<int>;

inline bool is_valid_permutation(const Perm& p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : p) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

inline Perm identity_perm(int n) {
  Perm p(n);
  for (int v = 0; v < n; ++v) p[v] = v;
  return p;
}

inline Perm compose(const Perm& f, const Perm& g) {  // (f∘g)(x) = f(g(x))
  Perm h(g.size());
  for (size_t x = 0; x < g.size(); ++x) h[x] = f[g[x]];
  return h;
}

inline Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (size_t x = 0; x < p.size(); ++x) q[p[x]] = static_cast<int>(x);
  return q;
}

inline bool is_involution(const Perm& p) {
  for (size_t x = 0; x < p.size(); ++x)
    if (p[p[x]] != static_cast<int>(x)) return false;
  return true;
}

/// Nontrivial cycles of p, each rotated to start at its smallest element,
/// sorted by that element.
inline std::vector<std::vector<int>> cycles(const Perm& p) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(p.size(), 0);
  for (int s = 0; s < static_cast<int>(p.size()); ++s) {
    if (seen[s] || p[s] == s) continue;
    std::vector<int> cyc;
    for (int v = s; !seen[v]; v = p[v]) {
      seen[v] = 1;
      cyc.push_back(v);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

inline bool is_automorphism(const Graph& g, const Perm& p) {
  int n = g.size();
  if (!is_valid_permutation(p, n)) return false;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) != g.adjacent(p[u], p[v])) return false;
  return true;
}

namespace detail {

// Iterated neighbor-color refinement (1-WL). Returns stable colors; when two
// graphs are refined together, incompatible class sizes surface as nullopt.
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> joint_refine(
    const Graph& a, const Graph& b) {
  int n = a.size();
  std::vector<int> ca(n, 0), cb(n, 0);
  int classes = 1;
  for (int round = 0; round <= n; ++round) {
    using Sig = std::pair<int, std::vector<int>>;
    std::map<Sig, int> ids;
    auto signature = [](const Graph& g, const std::vector<int>& col, int v) {
      std::vector<int> nb;
      for (int u = 0; u < g.size(); ++u)
        if (g.adjacent(v, u)) nb.push_back(col[u]);
      std::sort(nb.begin(), nb.end());
      return Sig{col[v], std::move(nb)};
    };
    std::vector<int> na(n), nb(n);
    std::vector<int> count_a, count_b;
    for (int v = 0; v < n; ++v) {
      auto [it, fresh] = ids.emplace(signature(a, ca, v), static_cast<int>(ids.size()));
      na[v] = it->second;
      if (fresh) count_a.push_back(0), count_b.push_back(0);
      ++count_a[na[v]];
    }
    for (int v = 0; v < n; ++v) {
      auto it = ids.find(signature(b, cb, v));
      if (it == ids.end()) return std::nullopt;
      nb[v] = it->second;
      ++count_b[nb[v]];
    }
    if (count_a != count_b) return std::nullopt;
    int new_classes = static_cast<int>(ids.size());
    ca = std::move(na);
    cb = std::move(nb);
    if (new_classes == classes) break;
    classes = new_classes;
  }
  return std::make_pair(ca, cb);
}

// Backtracking vertex-mapping search over single-word adjacency masks
// (n <= 64). Enumerates embeddings of `a` onto `b` respecting colors and
// adjacency; calls sink on every complete map. Used both for automorphism
// enumeration (a == b) and isomorphism testing (stop_after_first).
struct MappingSearch {
  int n;
  std::vector<uint64_t> rows_a, rows_b;
  std::vector<int> color_a, color_b;
  std::vector<int> order;           // pattern vertices, connected-greedy
  std::vector<uint64_t> color_mask; // target vertices per color
  uint64_t full;

  MappingSearch(const Graph& a, const Graph& b, std::vector<int> ca, std::vector<int> cb)
      : n(a.size()), color_a(std::move(ca)), color_b(std::move(cb)) {
    rows_a.assign(n, 0);
    rows_b.assign(n, 0);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (a.adjacent(u, v)) rows_a[u] |= uint64_t(1) << v;
        if (b.adjacent(u, v)) rows_b[u] |= uint64_t(1) << v;
      }
    full = n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
    int classes = 0;
    for (int v = 0; v < n; ++v) classes = std::max(classes, color_a[v] + 1);
    color_mask.assign(classes, 0);
    for (int v = 0; v < n; ++v) color_mask[color_b[v]] |= uint64_t(1) << v;
    // Order: repeatedly take the unplaced vertex with the most placed
    // neighbors (ties to the smaller index) so partial maps constrain early.
    std::vector<char> placed(n, 0);
    uint64_t placed_mask = 0;
    for (int step = 0; step < n; ++step) {
      int best = -1, best_cnt = -1;
      for (int v = 0; v < n; ++v) {
        if (placed[v]) continue;
        int cnt = std::popcount(rows_a[v] & placed_mask);
        if (cnt > best_cnt) {
          best = v;
          best_cnt = cnt;
        }
      }
      placed[best] = 1;
      placed_mask |= uint64_t(1) << best;
      order.push_back(best);
    }
  }

  template <typename Sink>
  bool run(Sink&& sink) {
    std::vector<int> image(n, -1);
    return descend(0, 0, image, sink);
  }

 private:
  template <typename Sink>
  bool descend(int depth, uint64_t used, std::vector<int>& image, Sink&& sink) {
    if (depth == n) return sink(image);
    int v = order[depth];
    uint64_t cand = color_mask[color_a[v]] & ~used;
    for (int j = 0; j < depth && cand; ++j) {
      int w = order[j];
      uint64_t img_row = rows_b[image[w]];
      cand &= (rows_a[v] >> w) & 1 ? img_row : ~img_row;
    }
    while (cand) {
      int u = std::countr_zero(cand);
      cand &= cand - 1;
      image[v] = u;
      if (descend(depth + 1, used | (uint64_t(1) << u), image, sink)) return true;
      image[v] = -1;
    }
    return false;
  }
};

}  // namespace detail

/// Full automorphism group as a lexicographically sorted list of permutations.
/// Backtracking over a stable vertex coloring with bitset candidate filtering.
inline std::vector<Perm> automorphisms(const Graph& g, int max_n = 32) {
  int n = g.size();
  if (n > max_n) throw BoundError("automorphisms: graph exceeds the configured bound");
  if (n > 64) throw BoundError("automorphisms: graphs above 64 vertices are unsupported");
  if (n == 0) return {Perm{}};
  auto colors = detail::joint_refine(g, g);
  detail::MappingSearch search(g, g, colors->first, colors->second);
  std::vector<Perm> found;
  search.run([&](const std::vector<int>& image) {
    found.push_back(image);
    return false;
  });
  std::sort(found.begin(), found.end());
  return found;
}

/// Reference enumerator: filters all n! vertex permutations. Exponential; the
/// oracle the backtracker is validated against.
inline std::vector<Perm> automorphisms_by_filter(const Graph& g) {
  int n = g.size();
  Perm p = identity_perm(n);
  std::vector<Perm> found;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n; ++v)
        if (g.adjacent(u, v) != g.adjacent(p[u], p[v])) {
          ok = false;
          break;
        }
    if (ok) found.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return found;  // next_permutation yields lexicographic order already
}

/// Finds one isomorphism a -> b, or nullopt.
inline std::optional<Perm> find_isomorphism(const Graph& a, const Graph& b, int max_n = 64) {
  if (a.size() != b.size()) return std::nullopt;
  int n = a.size();
  if (n > max_n || n > 64) throw BoundError("find_isomorphism: graph exceeds the configured bound");
  if (n == 0) return Perm{};
  auto colors = detail::joint_refine(a, b);
  if (!colors) return std::nullopt;
  detail::MappingSearch search(a, b, colors->first, colors->second);
  std::optional<Perm> result;
  search.run([&](const std::vector<int>& image) {
    result = image;
    return true;
  });
  return result;
}

inline bool is_isomorphic(const Graph& a, const Graph& b, int max_n = 64) {
  return find_isomorphism(a, b, max_n).has_value();
}

}  // namespace deza
