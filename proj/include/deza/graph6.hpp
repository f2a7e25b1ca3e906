#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "deza/core.hpp"

namespace deza {

struct Graph6Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Canonical graph6 string: size bytes, then the upper triangle column-major
/// ((0,1), (0,2), (1,2), (0,3), ...) in 6-bit groups, MSB first, each +63.
inline std::string to_graph6(const Graph& g) {
  long long n = g.size();
  if (n > 68719476735LL) throw Graph6Error("to_graph6: too many vertices");
  std::string out;
  auto push_sextets = [&out](long long value, int count) {
    for (int i = count - 1; i >= 0; --i)
      out.push_back(static_cast<char>(((value >> (6 * i)) & 63) + 63));
  };
  if (n <= 62) out.push_back(static_cast<char>(n + 63));
  else if (n <= 258047) {
    out.push_back('~');
    push_sextets(n, 3);
  } else {
    out.append("~~");
    push_sextets(n, 6);
  }
  int value = 0, filled = 0;
  for (int j = 1; j < g.size(); ++j)
    for (int i = 0; i < j; ++i) {
      value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(value + 63));
        value = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((value << (6 - filled)) + 63));
  return out;
}

inline Graph from_graph6(std::string_view s) {
  // Tolerate the conventional header and surrounding whitespace.
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
  if (s.empty()) throw Graph6Error("from_graph6: empty input");
  for (char c : s)
    if (c < 63 || c > 126) throw Graph6Error("from_graph6: byte out of range");
  size_t pos = 0;
  long long n = 0;
  auto take = [&](int count) {
    long long v = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= s.size()) throw Graph6Error("from_graph6: truncated size field");
      v = (v << 6) | (s[pos++] - 63);
    }
    return v;
  };
  if (s[0] != '~') n = take(1);
  else if (s.size() > 1 && s[1] != '~') {
    ++pos;
    n = take(3);
  } else {
    pos += 2;
    n = take(6);
  }
  if (n > 1000000) throw Graph6Error("from_graph6: vertex count too large");
  long long bits = n * (n - 1) / 2;
  size_t expect = pos + static_cast<size_t>((bits + 5) / 6);
  if (s.size() != expect) throw Graph6Error("from_graph6: body length mismatch");
  std::vector<std::pair<int, int>> edges;
  long long idx = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++idx) {
      int byte = s[pos + idx / 6] - 63;
      if ((byte >> (5 - idx % 6)) & 1) edges.emplace_back(i, j);
    }
  // Padding bits must be zero.
  for (long long t = bits; t < static_cast<long long>(expect - pos) * 6; ++t) {
    int byte = s[pos + t / 6] - 63;
    if ((byte >> (5 - t % 6)) & 1) throw Graph6Error("from_graph6: nonzero padding");
  }
  return Graph(static_cast<int>(n), edges);
}

/// Vertex labels as a JSON array, the companion artifact to a .g6 line.
inline std::string labels_to_json(const Graph& g) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& s : g.labels()) j.push_back(s);
  return j.dump();
}

inline std::vector<std::string> labels_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Graph6Error(std::string("labels_from_json: ") + e.what());
  }
  if (!j.is_array()) throw Graph6Error("labels_from_json: expected an array");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw Graph6Error("labels_from_json: expected strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace deza
