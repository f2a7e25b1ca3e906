#pragma once

#include <map>

#include "deza/automorphism.hpp"
#include "deza/classify.hpp"
#include "deza/core.hpp"
#include "deza/families.hpp"

namespace deza {

/// True when phi is an involutory automorphism of g, distinct from the
/// identity, whose 2-cycles all join non-adjacent vertices. These are exactly
/// the permutations the row-swap construction below accepts.
inline bool is_delta_automorphism(const Graph& g, const Perm& phi) {
  int n = g.size();
  if (!is_valid_permutation(phi, n)) return false;
  if (!is_involution(phi)) return false;
  if (phi == identity_perm(n)) return false;
  if (!is_automorphism(g, phi)) return false;
  for (int v = 0; v < n; ++v)
    if (phi[v] != v && g.adjacent(v, phi[v])) return false;
  return true;
}

/// Row-swap construction: the result has x ~ y exactly when phi(x) ~ y in g.
/// Permuting rows of the adjacency matrix by an involutory automorphism with
/// non-adjacent 2-cycles keeps the matrix symmetric and hollow; starting from
/// a strongly regular g with 0 < mu < k, k != mu and lambda != mu, the result
/// is a strictly Deza graph candidate with b = max(lambda, mu),
/// a = min(lambda, mu).
inline Graph deza_from(const Graph& g, const Perm& phi) {
  int n = g.size();
  if (!is_valid_permutation(phi, n))
    throw std::invalid_argument("deza_from: phi is not a permutation of the vertex set");
  if (!is_involution(phi)) throw std::invalid_argument("deza_from: phi is not an involution");
  if (phi == identity_perm(n))
    throw std::invalid_argument("deza_from: phi is the identity");
  if (!is_automorphism(g, phi))
    throw std::invalid_argument("deza_from: phi is not an automorphism");
  for (int v = 0; v < n; ++v)
    if (phi[v] != v && g.adjacent(v, phi[v]))
      throw std::invalid_argument("deza_from: a 2-cycle of phi joins adjacent vertices");
  auto srg = classify_srg(g);
  if (!srg)
    throw std::domain_error("deza_from: input is not strongly regular with 0 < mu < k");
  if (srg->params.k == srg->params.mu)
    throw std::domain_error("deza_from: k = mu, the swap would not produce a Deza graph");
  if (srg->params.lambda == srg->params.mu)
    throw std::domain_error("deza_from: lambda = mu, the input stays strongly regular");
  std::vector<uint64_t> rows(static_cast<size_t>(n) * g.words());
  for (int x = 0; x < n; ++x)
    for (int w = 0; w < g.words(); ++w)
      rows[static_cast<size_t>(x) * g.words() + w] = g.row_word(phi[x], w);
  return Graph::from_rows(n, std::move(rows), g.labels());
}

struct DeltaCensus {
  std::vector<Perm> all;                  // sorted lexicographically
  std::vector<std::vector<int>> classes;  // conjugacy under the full group
  int count() const { return static_cast<int>(all.size()); }
  std::vector<Perm> representatives() const {
    std::vector<Perm> reps;
    for (const auto& cls : classes) reps.push_back(all[cls.front()]);
    return reps;
  }
};

/// Every permutation deza_from accepts for g, grouped into conjugacy classes
/// of the full automorphism group. Conjugating by any automorphism preserves
/// the defining properties, so classes partition the census; representatives
/// are the lexicographically first member of each class.
inline DeltaCensus enumerate_delta_automorphisms(const Graph& g, int max_n = 32) {
  auto group = automorphisms(g, max_n);
  DeltaCensus census;
  int n = g.size();
  for (const auto& p : group) {
    if (!is_involution(p) || p == identity_perm(n)) continue;
    bool clean = true;
    for (int v = 0; v < n && clean; ++v)
      if (p[v] != v && g.adjacent(v, p[v])) clean = false;
    if (clean) census.all.push_back(p);
  }
  std::map<Perm, int> index;
  for (size_t i = 0; i < census.all.size(); ++i) index.emplace(census.all[i], static_cast<int>(i));
  std::vector<int> cls(census.all.size(), -1);
  Perm conj(n);
  for (size_t i = 0; i < census.all.size(); ++i) {
    if (cls[i] >= 0) continue;
    int id = static_cast<int>(census.classes.size());
    census.classes.emplace_back();
    const Perm& phi = census.all[i];
    for (const auto& s : group) {
      for (int x = 0; x < n; ++x) conj[s[x]] = s[phi[x]];  // s phi s^-1
      int j = index.at(conj);
      if (cls[j] < 0) {
        cls[j] = id;
        census.classes[id].push_back(j);
      }
    }
    std::sort(census.classes[id].begin(), census.classes[id].end());
  }
  return census;
}

/// Involution of the n x n lattice that swaps row 2j-1 with row 2j for
/// j = 1..i and fixes the rest. Vertices are row-major, (r,c) at
/// (r-1)n + (c-1). Its 2-cycles pair same-column vertices, which are
/// non-adjacent in the lattice complement.
inline Perm i_automorphism(int n, int i) {
  if (n < 2 || i < 1 || 2 * i > n)
    throw std::invalid_argument("i_automorphism: need 1 <= i <= n/2");
  Perm p(static_cast<size_t>(n) * n);
  for (int r = 1; r <= n; ++r) {
    int rr = r;
    if (r <= 2 * i) rr = (r % 2 == 1) ? r + 1 : r - 1;
    for (int c = 1; c <= n; ++c)
      p[static_cast<size_t>(r - 1) * n + (c - 1)] = (rr - 1) * n + (c - 1);
  }
  return p;
}

/// Involution of the 2-subsets of {1..n} induced by swapping the points 1
/// and 2: {1,z} <-> {2,z} for z >= 3, everything else fixed. Its 2-cycles
/// share the point z, hence are non-adjacent in the triangular complement.
inline Perm pair_automorphism_t(int n) {
  if (n < 3) throw std::invalid_argument("pair_automorphism_t: need n >= 3");
  int v = n * (n - 1) / 2;
  Perm p(v);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      int from = triangular_index(n, a, b);
      int aa = a, bb = b;
      if (a == 1 && b >= 3) aa = 2;
      else if (a == 2 && b >= 3) aa = 1;
      p[from] = triangular_index(n, std::min(aa, bb), std::max(aa, bb));
    }
  return p;
}

/// Strictly Deza graph obtained from the triangular complement, n >= 5.
inline Graph triangular_deza(int n) {
  return deza_from(complement(triangular(n)), pair_automorphism_t(n));
}

/// Strictly Deza graph obtained from the lattice complement, 1 <= i <= n/2.
inline Graph lattice_deza(int n, int i) {
  return deza_from(complement(lattice(n)), i_automorphism(n, i));
}

}  // namespace deza
