#pragma once

#include <climits>

#include "deza/core.hpp"
#include "deza/parallel.hpp"

namespace deza {

/// Internally disjoint x-y paths: consecutive pairs are edges, interior
/// vertices appear in exactly one path and avoid both endpoints.
struct PathSet {
  int x = -1, y = -1;
  std::vector<std::vector<int>> paths;
  int count() const { return static_cast<int>(paths.size()); }
};

struct ConnectivityCertificate {
  int kappa = 0;
  std::string kind;                 // "cut", "complete", "disconnected"
  std::pair<int, int> separated_pair{-1, -1};
  std::vector<int> cut;             // empty unless kind == "cut"
  std::vector<std::vector<int>> paths;  // Menger witness for the pair
};

namespace detail {

// Dinic on the vertex-split network. Vertex v becomes in(v)=2v -> out(v)=2v+1
// with capacity 1 (0 at the terminals, so no path passes through them); each
// undirected edge contributes arcs of capacity n in both directions, which
// forces every minimum cut onto split arcs, i.e. onto vertices.
struct SplitFlow {
  int n, src, dst;
  struct Arc {
    int to, cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> adj;
  std::vector<int> level, it;

  SplitFlow(const Graph& g, int x, int y) : n(g.size()), src(2 * x + 1), dst(2 * y), adj(2 * n) {
    for (int v = 0; v < n; ++v) add(2 * v, 2 * v + 1, v == x || v == y ? 0 : 1);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (g.adjacent(u, v)) {
          add(2 * u + 1, 2 * v, n);
          add(2 * v + 1, 2 * u, n);
        }
  }

  void add(int u, int v, int cap) {
    adj[u].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({v, cap});
    adj[v].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({u, 0});
  }

  bool bfs() {
    level.assign(2 * n, -1);
    std::vector<int> queue{src};
    level[src] = 0;
    for (size_t h = 0; h < queue.size(); ++h) {
      int v = queue[h];
      for (int id : adj[v])
        if (arcs[id].cap > 0 && level[arcs[id].to] < 0) {
          level[arcs[id].to] = level[v] + 1;
          queue.push_back(arcs[id].to);
        }
    }
    return level[dst] >= 0;
  }

  int dfs(int v, int pushed) {
    if (v == dst) return pushed;
    for (int& i = it[v]; i < static_cast<int>(adj[v].size()); ++i) {
      int id = adj[v][i];
      int to = arcs[id].to;
      if (arcs[id].cap <= 0 || level[to] != level[v] + 1) continue;
      int got = dfs(to, std::min(pushed, arcs[id].cap));
      if (got > 0) {
        arcs[id].cap -= got;
        arcs[id ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  int maxflow() {
    int total = 0;
    while (bfs()) {
      it.assign(2 * n, 0);
      while (int got = dfs(src, INT_MAX)) total += got;
    }
    return total;
  }

  std::vector<char> source_side() const {
    std::vector<char> reach(2 * n, 0);
    std::vector<int> queue{src};
    reach[src] = 1;
    for (size_t h = 0; h < queue.size(); ++h)
      for (int id : adj[queue[h]])
        if (arcs[id].cap > 0 && !reach[arcs[id].to]) {
          reach[arcs[id].to] = 1;
          queue.push_back(arcs[id].to);
        }
    return reach;
  }

  // Flow decomposition into unit paths, cancelling any residual cycles.
  // Forward arcs are the even ids; the reverse arc's cap holds the flow.
  std::vector<std::vector<int>> unit_paths(int flow) {
    std::vector<std::vector<int>> out;
    for (int p = 0; p < flow; ++p) {
      std::vector<int> nodes{src};
      std::vector<int> where(2 * n, -1);
      where[src] = 0;
      while (nodes.back() != dst) {
        int v = nodes.back();
        int chosen = -1;
        for (int id : adj[v])
          if ((id & 1) == 0 && arcs[id ^ 1].cap > 0) {
            chosen = id;
            break;
          }
        if (chosen < 0) throw std::logic_error("unit_paths: flow conservation violated");
        arcs[chosen ^ 1].cap -= 1;  // consume this unit
        int to = arcs[chosen].to;
        if (where[to] >= 0) {
          // walked into a flow cycle: drop it and continue from `to`
          for (size_t k = where[to] + 1; k < nodes.size(); ++k) where[nodes[k]] = -1;
          nodes.resize(where[to] + 1);
        } else {
          where[to] = static_cast<int>(nodes.size());
          nodes.push_back(to);
        }
      }
      // Node sequence alternates out(x), in(v1), out(v1), ..., in(y); the
      // even nodes are the in-sides and spell the vertex path after x.
      std::vector<int> path{src / 2};
      for (int node : nodes)
        if ((node & 1) == 0) path.push_back(node / 2);
      out.push_back(std::move(path));
    }
    return out;
  }
};

struct PairSolution {
  int value = 0;
  std::vector<int> cut;
};

inline void require_flow_pair(const Graph& g, int x, int y) {
  if (x == y) throw std::invalid_argument("flow pair: vertices must be distinct");
  if (g.adjacent(x, y))
    throw std::invalid_argument("flow pair: vertices must be non-adjacent");
}

inline PairSolution solve_pair(const Graph& g, int x, int y) {
  SplitFlow net(g, x, y);
  PairSolution sol;
  sol.value = net.maxflow();
  auto reach = net.source_side();
  for (int v = 0; v < g.size(); ++v)
    if (v != x && v != y && reach[2 * v] && !reach[2 * v + 1]) sol.cut.push_back(v);
  return sol;
}

}  // namespace detail

/// Maximum set of internally disjoint x-y paths for a non-adjacent pair
/// (Menger: the count equals the minimum x-y vertex cut).
inline PathSet max_disjoint_paths(const Graph& g, int x, int y) {
  detail::require_flow_pair(g, x, y);
  detail::SplitFlow net(g, x, y);
  int flow = net.maxflow();
  PathSet ps;
  ps.x = x;
  ps.y = y;
  ps.paths = net.unit_paths(flow);
  return ps;
}

/// Minimum x-y vertex cut for a non-adjacent pair: the vertices whose split
/// arc crosses the source-reachable side of the final residual network.
inline std::vector<int> min_vertex_cut(const Graph& g, int x, int y) {
  detail::require_flow_pair(g, x, y);
  auto sol = detail::solve_pair(g, x, y);
  if (static_cast<int>(sol.cut.size()) != sol.value)
    throw std::logic_error("min_vertex_cut: extracted cut does not match the flow value");
  return sol.cut;
}

/// True when deleting `cut` leaves x and y in different components.
inline bool verify_cut(const Graph& g, const std::vector<int>& cut, int x, int y) {
  std::vector<char> removed(g.size(), 0);
  for (int v : cut) {
    if (v < 0 || v >= g.size()) throw std::out_of_range("verify_cut: vertex out of range");
    removed[v] = 1;
  }
  if (x < 0 || x >= g.size() || y < 0 || y >= g.size())
    throw std::out_of_range("verify_cut: vertex out of range");
  if (removed[x] || removed[y])
    throw std::invalid_argument("verify_cut: endpoints may not be in the cut");
  std::vector<char> seen(g.size(), 0);
  std::vector<int> queue{x};
  seen[x] = 1;
  for (size_t h = 0; h < queue.size(); ++h) {
    int v = queue[h];
    if (v == y) return false;
    for (int u = 0; u < g.size(); ++u)
      if (g.adjacent(v, u) && !seen[u] && !removed[u]) {
        seen[u] = 1;
        queue.push_back(u);
      }
  }
  return !seen[y];
}

/// Global vertex connectivity with a certificate. Classical reduction: fix a
/// minimum-degree vertex v0, evaluate all non-adjacent pairs (v0, y), then
/// (u, w) for u in N(v0) and w non-adjacent to u. Any minimum cut either
/// misses v0 (caught by phase one) or contains it, in which case some
/// neighbor of v0 sits outside the cut on one side and phase two catches it.
/// Pairs are evaluated in parallel; the reduction is ordered, so the
/// lexicographically smallest minimizing pair wins.
inline ConnectivityCertificate vertex_connectivity(const Graph& g, int max_n = 100) {
  int n = g.size();
  if (n > max_n) throw BoundError("vertex_connectivity: graph exceeds the configured bound");
  ConnectivityCertificate cert;
  if (n <= 1) {
    cert.kappa = 0;
    cert.kind = "complete";
    return cert;
  }
  if (!is_connected(g)) {
    auto comps = connected_components(g);
    cert.kappa = 0;
    cert.kind = "disconnected";
    cert.separated_pair = {comps[0][0], comps[1][0]};
    return cert;
  }
  int v0 = 0;
  for (int v = 1; v < n; ++v)
    if (g.degree(v) < g.degree(v0)) v0 = v;
  std::vector<std::pair<int, int>> pairs;
  auto add_pairs_for = [&](int u) {
    for (int w = 0; w < n; ++w)
      if (w != u && !g.adjacent(u, w)) pairs.emplace_back(std::min(u, w), std::max(u, w));
  };
  add_pairs_for(v0);
  for (int u : g.neighbors(v0)) add_pairs_for(u);
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  if (pairs.empty()) {
    cert.kappa = n - 1;
    cert.kind = "complete";
    return cert;
  }
  std::vector<detail::PairSolution> sols(pairs.size());
  parallel_for(static_cast<int>(pairs.size()),
               [&](int idx) { sols[idx] = detail::solve_pair(g, pairs[idx].first, pairs[idx].second); });
  int best = -1;
  for (size_t idx = 0; idx < pairs.size(); ++idx)
    if (best < 0 || sols[idx].value < sols[best].value) best = static_cast<int>(idx);
  cert.kappa = sols[best].value;
  cert.kind = "cut";
  cert.separated_pair = pairs[best];
  cert.cut = sols[best].cut;
  cert.paths = max_disjoint_paths(g, pairs[best].first, pairs[best].second).paths;
  return cert;
}

/// All vertices outside rows 2j-1 and 2j of the n x n lattice (row-major
/// indexing). Deleting these n^2-2n vertices from the Deza lattice graph
/// leaves the two retained rows as disjoint cliques, so the set disconnects
/// it whenever rows 2j-1, 2j are among the first i swapped pairs.
inline std::vector<int> lattice_disconnecting_set(int n, int i, int j) {
  if (n < 2 || i < 1 || 2 * i > n || j < 1 || j > i)
    throw std::out_of_range("lattice_disconnecting_set: need 1 <= j <= i <= n/2");
  std::vector<int> out;
  for (int r = 1; r <= n; ++r) {
    if (r == 2 * j - 1 || r == 2 * j) continue;
    for (int c = 1; c <= n; ++c) out.push_back((r - 1) * n + (c - 1));
  }
  return out;
}

}  // namespace deza
