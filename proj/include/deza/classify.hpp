#pragma once

#include <cmath>
#include <optional>

#include "deza/core.hpp"

namespace deza {

struct SrgParams {
  int v, k, lambda, mu;
  bool operator==(const SrgParams&) const = default;
};

/// Integral eigenvalue data of a strongly regular graph: k > r > 0 > s with
/// multiplicities 1, mult_r, mult_s.
struct Spectrum {
  int k, r, s;
  int mult_r, mult_s;
  bool operator==(const Spectrum&) const = default;
};

struct SrgInfo {
  SrgParams params;
  // Present only when the restricted eigenvalues are integers (conference
  // graphs such as C5 have irrational r, s and get nullopt here).
  std::optional<Spectrum> spectrum;
};

struct DezaParams {
  int v, k, b, a;  // b >= a
  bool strict;     // diameter 2 and not strongly regular
  bool operator==(const DezaParams&) const = default;
};

namespace detail {

inline long long isqrt_ll(long long x) {
  if (x < 0) return -1;
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace detail

/// Solves x^2 + (mu - lambda)x + (mu - k) = 0 over the integers. Returns the
/// root pair (r, s) with r >= s, or nullopt when the roots are not integral.
inline std::optional<std::pair<int, int>> restricted_eigenvalues(int k, int lambda, int mu) {
  long long b = mu - lambda;
  long long c = mu - k;
  long long disc = b * b - 4 * c;
  long long root = detail::isqrt_ll(disc);
  if (root < 0 || root * root != disc) return std::nullopt;
  if ((-b + root) % 2 != 0) return std::nullopt;
  long long r = (-b + root) / 2;
  long long s = (-b - root) / 2;
  return std::make_pair(static_cast<int>(r), static_cast<int>(s));
}

/// Full spectrum of an SRG with integral restricted eigenvalues; multiplicities
/// come out of exact integer arithmetic (no linear algebra).
inline std::optional<Spectrum> srg_spectrum(const SrgParams& p) {
  auto rs = restricted_eigenvalues(p.k, p.lambda, p.mu);
  if (!rs) return std::nullopt;
  auto [r, s] = *rs;
  long long diff = r - s;  // > 0
  long long num = 2LL * p.k + static_cast<long long>(p.v - 1) * (p.lambda - p.mu);
  if (num % diff != 0) return std::nullopt;
  long long q = num / diff;
  if ((p.v - 1 - q) % 2 != 0) return std::nullopt;
  long long mult_r = (p.v - 1 - q) / 2;
  long long mult_s = (p.v - 1 + q) / 2;
  if (mult_r < 0 || mult_s < 0) return std::nullopt;
  return Spectrum{p.k, r, s, static_cast<int>(mult_r), static_cast<int>(mult_s)};
}

/// Recognizes a strongly regular graph with 0 < mu < k. Absent when g is not
/// connected, not regular, complete, or the pair counts are not uniform.
inline std::optional<SrgInfo> classify_srg(const Graph& g) {
  int n = g.size();
  if (n < 2 || !g.is_regular() || !is_connected(g)) return std::nullopt;
  int k = g.degree(0);
  int lambda = -1, mu = -1;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int c = g.common_neighbors(u, v);
      if (g.adjacent(u, v)) {
        if (lambda < 0) lambda = c;
        else if (lambda != c) return std::nullopt;
      } else {
        if (mu < 0) mu = c;
        else if (mu != c) return std::nullopt;
      }
    }
  if (lambda < 0 || mu < 0) return std::nullopt;  // complete or empty
  if (mu <= 0 || mu >= k) return std::nullopt;
  // Counting the edges between N(x) and the rest forces this identity; if it
  // fails the classification above is buggy.
  if (static_cast<long long>(k) * (k - lambda - 1) !=
      static_cast<long long>(n - k - 1) * mu)
    throw std::logic_error("classify_srg: feasibility identity violated");
  SrgParams p{n, k, lambda, mu};
  return SrgInfo{p, srg_spectrum(p)};
}

/// Parameters of the complement of an SRG(v,k,lambda,mu).
inline SrgParams complement_srg_params(const SrgParams& p) {
  SrgParams c{p.v, p.v - p.k - 1, p.v - 2 * p.k + p.mu - 2, p.v - 2 * p.k + p.lambda};
  if (c.k <= 0 || c.lambda < 0 || c.mu <= 0 || c.mu >= c.k)
    throw std::domain_error("complement_srg_params: complement is not an SRG with 0 < mu < k");
  return c;
}

/// Recognizes a Deza graph: regular, and every distinct vertex pair has one of
/// at most two common-neighbor counts. strict = diameter 2 and not SRG.
inline std::optional<DezaParams> classify_deza(const Graph& g) {
  int n = g.size();
  if (n < 2 || !g.is_regular()) return std::nullopt;
  int k = g.degree(0);
  int c1 = -1, c2 = -1;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int c = g.common_neighbors(u, v);
      if (c1 < 0 || c == c1) c1 = c;
      else if (c2 < 0 || c == c2) c2 = c;
      else return std::nullopt;
    }
  if (c1 < 0) return std::nullopt;
  if (c2 < 0) c2 = c1;
  int b = std::max(c1, c2), a = std::min(c1, c2);
  bool strict = diameter(g) == std::optional<int>(2) && !classify_srg(g).has_value();
  return DezaParams{n, k, b, a, strict};
}

/// Every edge lies in the same number of triangles (g must be regular).
inline bool is_edge_regular(const Graph& g) {
  if (!g.is_regular()) return false;
  int want = -1;
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (g.adjacent(u, v)) {
        int c = g.common_neighbors(u, v);
        if (want < 0) want = c;
        else if (c != want) return false;
      }
  return true;
}

/// Every non-adjacent pair has the same number of common neighbors.
inline bool is_co_edge_regular(const Graph& g) {
  if (!g.is_regular()) return false;
  int want = -1;
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (!g.adjacent(u, v)) {
        int c = g.common_neighbors(u, v);
        if (want < 0) want = c;
        else if (c != want) return false;
      }
  return true;
}

}  // namespace deza
