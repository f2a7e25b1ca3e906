#pragma once

#include <iomanip>
#include <sstream>

#include "deza/automorphism.hpp"
#include "deza/classify.hpp"
#include "deza/connectivity.hpp"
#include "deza/core.hpp"
#include "deza/delta.hpp"
#include "deza/families.hpp"
#include "deza/path_families.hpp"

namespace deza {
namespace suite {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::vector<CriterionResult> criteria;
  bool all_pass = false;
};

namespace detail {

inline Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

inline Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

/// Desk-scale corpus shared by the oracle-equivalence checks and the
/// round-trip tests; sizes range from 4 to 28 vertices.
inline std::vector<std::pair<std::string, Graph>> corpus() {
  std::vector<std::pair<std::string, Graph>> out;
  out.emplace_back("cycle(4)", cycle_graph(4));
  out.emplace_back("cycle(6)", cycle_graph(6));
  out.emplace_back("star(3)", star_graph(3));
  out.emplace_back("complete(5)", complete_graph(5));
  out.emplace_back("knx2(3)", complete_multipartite_nx2(3));
  out.emplace_back("petersen", petersen());
  out.emplace_back("triangular(5)", triangular(5));
  out.emplace_back("triangular-complement(5)", complement(triangular(5)));
  out.emplace_back("lattice(3)", lattice(3));
  out.emplace_back("lattice-complement(3)", complement(lattice(3)));
  out.emplace_back("triangular-deza(5)", triangular_deza(5));
  out.emplace_back("lattice-deza(3,1)", lattice_deza(3, 1));
  out.emplace_back("shrikhande", shrikhande());
  out.emplace_back("clebsch-complement", complement(clebsch_seidel()));
  out.emplace_back("schlafli-complement", schlafli_complement());
  out.emplace_back("chang(1)", chang(1));
  out.emplace_back("chang(2)", chang(2));
  out.emplace_back("chang(3)", chang(3));
  return out;
}

/// Exponential reference for vertex connectivity: smallest s such that some
/// s-subset disconnects the graph, found by enumerating subsets outright.
inline int brute_force_kappa(const Graph& g) {
  int n = g.size();
  if (n <= 1) return 0;
  if (!is_connected(g)) return 0;
  for (int s = 1; s <= n - 2; ++s) {
    std::vector<int> pick(s);
    for (int k = 0; k < s; ++k) pick[k] = k;
    for (;;) {
      std::vector<char> removed(n, 0);
      for (int v : pick) removed[v] = 1;
      int start = 0;
      while (start < n && removed[start]) ++start;
      std::vector<int> queue{start};
      std::vector<char> seen(n, 0);
      seen[start] = 1;
      int visited = 1;
      for (size_t h = 0; h < queue.size(); ++h)
        for (int u = 0; u < n; ++u)
          if (g.adjacent(queue[h], u) && !seen[u] && !removed[u]) {
            seen[u] = 1;
            ++visited;
            queue.push_back(u);
          }
      if (visited < n - s) return s;
      int k = s - 1;
      while (k >= 0 && pick[k] == n - s + k) --k;
      if (k < 0) break;
      ++pick[k];
      for (int j = k + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return n - 1;  // complete
}

struct Sporadics {
  std::vector<std::pair<std::string, Graph>> graphs;
  std::vector<DeltaCensus> censuses;
};

inline Sporadics sporadic_censuses() {
  Sporadics sp;
  sp.graphs.emplace_back("shrikhande-complement", complement(shrikhande()));
  sp.graphs.emplace_back("chang(1)-complement", complement(chang(1)));
  sp.graphs.emplace_back("chang(2)-complement", complement(chang(2)));
  sp.graphs.emplace_back("chang(3)-complement", complement(chang(3)));
  sp.graphs.emplace_back("schlafli-complement", schlafli_complement());
  sp.graphs.emplace_back("clebsch-complement", complement(clebsch_seidel()));
  for (const auto& [name, g] : sp.graphs) sp.censuses.push_back(enumerate_delta_automorphisms(g));
  return sp;
}

inline std::string yesno(bool b) { return b ? "ok" : "FAIL"; }

}  // namespace detail

/// kappa of the swapped triangular graph equals (n^2-5n+6)/2 for n = 5..10.
inline CriterionResult criterion1(int max_n) {
  CriterionResult r{1, "swapped triangular connectivity equals valency", true, ""};
  std::ostringstream d;
  for (int n = 5; n <= std::min(10, max_n); ++n) {
    auto cert = vertex_connectivity(triangular_deza(n));
    int want = (n * n - 5 * n + 6) / 2;
    bool ok = cert.kappa == want && cert.kind == "cut";
    r.pass = r.pass && ok;
    d << "n=" << n << " kappa=" << cert.kappa << "/" << want << " " << detail::yesno(ok) << "; ";
  }
  r.detail = d.str();
  return r;
}

/// kappa of every swapped lattice graph equals (n-1)^2-1 for n = 3..8, all
/// i, and each explicit row-pair complement set of size n^2-2n disconnects.
inline CriterionResult criterion2(int max_n) {
  CriterionResult r{2, "swapped lattice connectivity and explicit cuts", true, ""};
  std::ostringstream d;
  for (int n = 3; n <= std::min(8, max_n); ++n)
    for (int i = 1; 2 * i <= n; ++i) {
      Graph dz = lattice_deza(n, i);
      auto cert = vertex_connectivity(dz);
      int want = (n - 1) * (n - 1) - 1;
      bool ok = cert.kappa == want && cert.kind == "cut";
      for (int j = 1; j <= i && ok; ++j) {
        auto cut = lattice_disconnecting_set(n, i, j);
        int x = dz.vertex_by_label("(" + std::to_string(2 * j - 1) + ",1)");
        int y = dz.vertex_by_label("(" + std::to_string(2 * j) + ",1)");
        ok = static_cast<int>(cut.size()) == n * n - 2 * n && verify_cut(dz, cut, x, y);
      }
      r.pass = r.pass && ok;
      d << "n=" << n << ",i=" << i << " kappa=" << cert.kappa << "/" << want << " "
        << detail::yesno(ok) << "; ";
    }
  r.detail = d.str();
  return r;
}

/// Full sweeps: every non-adjacent pair classified, its family built with at
/// least the case target of paths, and verified against the graph itself;
/// degenerate pairs go through the max-flow fallback and are reported.
inline CriterionResult criterion3(int max_n) {
  CriterionResult r{3, "path-family sweeps certify both theorems", true, ""};
  std::ostringstream d;
  for (int n = 6; n <= std::min(9, max_n); ++n) {
    auto sum = sweep(Theorem::T, n);
    int expect_fallbacks = n == 6 ? 12 : 0;  // opposite-side pairs hit the singleton residual
    bool ok = sum.all_pass && sum.kappa == (n * n - 5 * n + 6) / 2 &&
              static_cast<int>(sum.fallback_pairs.size()) == expect_fallbacks &&
              sum.min_paths >= sum.kappa;
    r.pass = r.pass && ok;
    d << "T n=" << n << " pairs=" << sum.pair_count << " fallbacks=" << sum.fallback_pairs.size()
      << " kappa=" << sum.kappa << " " << detail::yesno(ok) << "; ";
  }
  for (int n = 4; n <= std::min(7, max_n); ++n)
    for (int i = 1; 2 * i <= n; ++i) {
      auto sum = sweep(Theorem::L, n, i);
      bool ok = sum.all_pass && sum.cut_verified && sum.kappa == n * n - 2 * n &&
                sum.fallback_pairs.empty() && sum.min_paths >= sum.kappa;
      r.pass = r.pass && ok;
      d << "L n=" << n << ",i=" << i << " pairs=" << sum.pair_count << " kappa=" << sum.kappa
        << " " << detail::yesno(ok) << "; ";
    }
  r.detail = d.str();
  return r;
}

/// Census class counts on the sporadic strongly regular graphs:
/// shrikhande-complement 0; the three chang complements 0,1,1 in some order;
/// schlafli-complement 1; clebsch-complement 2.
inline CriterionResult criterion4(const detail::Sporadics& sp) {
  CriterionResult r{4, "involution census on the sporadic graphs", true, ""};
  std::ostringstream d;
  std::vector<int> counts;
  for (size_t k = 0; k < sp.graphs.size(); ++k) {
    counts.push_back(static_cast<int>(sp.censuses[k].classes.size()));
    d << sp.graphs[k].first << "=" << counts.back() << "; ";
  }
  std::vector<int> chang = {counts[1], counts[2], counts[3]};
  std::sort(chang.begin(), chang.end());
  r.pass = counts[0] == 0 && chang == std::vector<int>{0, 1, 1} && counts[4] == 1 && counts[5] == 2;
  r.detail = d.str();
  return r;
}

/// Every graph built from a census representative has kappa equal to its
/// valency.
inline CriterionResult criterion5(const detail::Sporadics& sp) {
  CriterionResult r{5, "census-built graphs have connectivity equal to valency", true, ""};
  std::ostringstream d;
  for (size_t k = 0; k < sp.graphs.size(); ++k)
    for (const auto& rep : sp.censuses[k].representatives()) {
      Graph dz = deza_from(sp.graphs[k].second, rep);
      auto cert = vertex_connectivity(dz);
      bool ok = dz.is_regular() && cert.kappa == dz.degree(0);
      r.pass = r.pass && ok;
      d << sp.graphs[k].first << " kappa=" << cert.kappa << "/" << dz.degree(0) << " "
        << detail::yesno(ok) << "; ";
    }
  r.detail = d.str();
  return r;
}

/// The nine-vertex lattice admits the construction directly and is the
/// exception: valency 4 but connectivity only 3.
inline CriterionResult criterion6() {
  CriterionResult r{6, "nine-vertex lattice exception has kappa 3", false, ""};
  Graph g = lattice(3);
  auto census = enumerate_delta_automorphisms(g);
  std::ostringstream d;
  d << "census count=" << census.count() << " classes=" << census.classes.size() << "; ";
  if (census.classes.empty()) {
    r.detail = d.str() + "no involution found";
    return r;
  }
  r.pass = true;
  for (const auto& rep : census.representatives()) {
    Graph dz = deza_from(g, rep);
    auto cert = vertex_connectivity(dz);
    bool ok = dz.is_regular() && dz.degree(0) == 4 && cert.kappa == 3;
    r.pass = r.pass && ok;
    d << "valency=" << dz.degree(0) << " kappa=" << cert.kappa << " " << detail::yesno(ok) << "; ";
  }
  r.detail = d.str();
  return r;
}

/// Second neighborhoods in the swapped triangular graph: the vertex {1,2}
/// sees two disjoint cliques of size n-2, everyone else sees a connected
/// set; the graph is neither edge-regular nor co-edge-regular.
inline CriterionResult criterion7(int max_n) {
  CriterionResult r{7, "second-neighborhood structure of the swapped triangular graph", true, ""};
  std::ostringstream d;
  for (int n = 6; n <= std::min(9, max_n); ++n) {
    Graph dz = triangular_deza(n);
    int v12 = dz.vertex_by_label("{1,2}");
    auto nbhd2 = second_neighborhood(dz, v12);
    auto comps = connected_components(induced_subgraph(dz, nbhd2));
    bool ok = comps.size() == 2;
    if (ok)
      for (const auto& comp : comps) {
        std::vector<int> orig;
        for (int idx : comp) orig.push_back(nbhd2[idx]);
        ok = ok && static_cast<int>(comp.size()) == n - 2 && is_clique(dz, orig);
      }
    for (int v = 0; v < dz.size() && ok; ++v) {
      if (v == v12) continue;
      ok = is_connected(induced_subgraph(dz, second_neighborhood(dz, v)));
    }
    ok = ok && !is_edge_regular(dz) && !is_co_edge_regular(dz);
    r.pass = r.pass && ok;
    d << "n=" << n << " comps({1,2})=" << comps.size() << " " << detail::yesno(ok) << "; ";
  }
  r.detail = d.str();
  return r;
}

/// Parameter identities: the Deza parameters of both families match the
/// closed forms, restricted eigenvalues give r = 1 on every complement of a
/// smallest-eigenvalue -2 graph, and complement parameters round-trip.
inline CriterionResult criterion8(int max_n) {
  CriterionResult r{8, "parameter identities and eigenvalue checks", true, ""};
  std::ostringstream d;
  for (int n = 5; n <= std::min(9, max_n); ++n) {
    auto p = classify_deza(triangular_deza(n));
    DezaParams want{n * (n - 1) / 2, (n * n - 5 * n + 6) / 2, (n * n - 7 * n + 12) / 2,
                    (n * n - 9 * n + 20) / 2, n > 5};
    bool ok = p && *p == want;
    r.pass = r.pass && ok;
    d << "T n=" << n << " " << detail::yesno(ok) << "; ";
  }
  for (int n = 3; n <= std::min(7, max_n); ++n)
    for (int i = 1; 2 * i <= n; ++i) {
      auto p = classify_deza(lattice_deza(n, i));
      DezaParams want{n * n, (n - 1) * (n - 1), (n - 1) * (n - 2), (n - 2) * (n - 2), true};
      bool ok = p && *p == want;
      r.pass = r.pass && ok;
      d << "L n=" << n << ",i=" << i << " " << detail::yesno(ok) << "; ";
    }
  // Complements of the smallest-eigenvalue -2 family: r = 1 throughout.
  std::vector<std::pair<std::string, Graph>> members;
  for (int n = 5; n <= std::min(9, max_n); ++n)
    members.emplace_back("triangular(" + std::to_string(n) + ")", triangular(n));
  for (int n = 3; n <= std::min(7, max_n); ++n)
    members.emplace_back("lattice(" + std::to_string(n) + ")", lattice(n));
  members.emplace_back("petersen", petersen());
  members.emplace_back("clebsch", clebsch_seidel());
  members.emplace_back("shrikhande", shrikhande());
  members.emplace_back("schlafli", complement(schlafli_complement()));
  for (int v = 1; v <= 3; ++v) members.emplace_back("chang(" + std::to_string(v) + ")", chang(v));
  for (const auto& [name, g] : members) {
    auto info = classify_srg(g);
    bool ok = info && info->spectrum && info->spectrum->s == -2;
    auto comp_info = classify_srg(complement(g));
    ok = ok && comp_info && comp_info->spectrum && comp_info->spectrum->r == 1;
    ok = ok && complement_srg_params(info->params) == comp_info->params;
    r.pass = r.pass && ok;
    d << name << " " << detail::yesno(ok) << "; ";
  }
  // The cocktail-party graphs sit behind the 0 < mu < k gate: no SRG
  // classification, but the quadratic still reports s = -2.
  for (int n = 3; n <= 5; ++n) {
    Graph g = complete_multipartite_nx2(n);
    auto eig = restricted_eigenvalues(2 * n - 2, 2 * n - 4, 2 * n - 2);
    bool ok = !classify_srg(g) && eig && eig->second == -2;
    r.pass = r.pass && ok;
    d << "knx2(" << n << ") " << detail::yesno(ok) << "; ";
  }
  r.detail = d.str();
  return r;
}

/// Flow results equal brute-force subset enumeration (<= 12 vertices) and
/// the automorphism backtracker equals the factorial filter (<= 10).
inline CriterionResult criterion9() {
  CriterionResult r{9, "oracle cross-checks for connectivity and automorphisms", true, ""};
  std::ostringstream d;
  for (const auto& [name, g] : detail::corpus()) {
    if (g.size() <= 12) {
      int brute = detail::brute_force_kappa(g);
      int flow = vertex_connectivity(g).kappa;
      bool ok = brute == flow;
      r.pass = r.pass && ok;
      d << name << " kappa " << flow << "=" << brute << " " << detail::yesno(ok) << "; ";
    }
    if (g.size() <= 10) {
      bool ok = automorphisms(g) == automorphisms_by_filter(g);
      r.pass = r.pass && ok;
      d << name << " aut " << detail::yesno(ok) << "; ";
    }
  }
  r.detail = d.str();
  return r;
}

/// Census class counts on the two canonical families: floor(n/2) classes on
/// the lattice complement (n = 3..6), one class on the triangular
/// complement (n = 5..7).
inline CriterionResult criterion10(int max_n) {
  CriterionResult r{10, "census class counts on the canonical families", true, ""};
  std::ostringstream d;
  for (int n = 3; n <= std::min(6, max_n); ++n) {
    // n = 6 exceeds the default 32-vertex bound; this is the documented
    // explicit override.
    auto census = enumerate_delta_automorphisms(complement(lattice(n)), 40);
    bool ok = static_cast<int>(census.classes.size()) == n / 2;
    r.pass = r.pass && ok;
    d << "lattice-complement(" << n << ") classes=" << census.classes.size() << "/" << n / 2
      << " " << detail::yesno(ok) << "; ";
  }
  for (int n = 5; n <= std::min(7, max_n); ++n) {
    auto census = enumerate_delta_automorphisms(complement(triangular(n)));
    bool ok = census.classes.size() == 1;
    r.pass = r.pass && ok;
    d << "triangular-complement(" << n << ") classes=" << census.classes.size() << "/1 "
      << detail::yesno(ok) << "; ";
  }
  r.detail = d.str();
  return r;
}

/// Runs the whole battery. max_n trims the large ends of the ranges for
/// quick runs; the defaults cover the full claims.
inline SuiteResult run_suite(int max_n = 10, std::ostream* progress = nullptr) {
  SuiteResult out;
  auto push = [&](CriterionResult r) {
    if (progress)
      *progress << "criterion " << r.id << " " << (r.pass ? "PASS" : "FAIL") << ": " << r.name
                << "\n";
    out.criteria.push_back(std::move(r));
  };
  push(criterion1(max_n));
  push(criterion2(max_n));
  push(criterion3(max_n));
  auto sp = detail::sporadic_censuses();
  push(criterion4(sp));
  push(criterion5(sp));
  push(criterion6());
  push(criterion7(max_n));
  push(criterion8(max_n));
  push(criterion9());
  push(criterion10(max_n));
  out.all_pass = std::all_of(out.criteria.begin(), out.criteria.end(),
                             [](const CriterionResult& c) { return c.pass; });
  return out;
}

}  // namespace suite
}  // namespace deza
