#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "deza/graph6.hpp"
#include "deza/suite.hpp"

namespace deza {
namespace cli {

using nlohmann::json;

// Exit codes, one per failure class:
//   0 all requested checks passed
//   1 a requested check failed
//   2 usage error (unknown flag, missing subcommand, bad combination)
//   3 unreadable or malformed input
//   4 infeasible parameters (domain errors from the library)
//   5 size bound exceeded
//   6 internal error
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw IoError("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open for writing: " + path);
  f << text;
}

/// First non-blank line of the input is the graph6 code.
inline Graph load_graph(const std::string& path) {
  std::istringstream in(read_text(path));
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) return from_graph6(line);
  }
  throw Graph6Error("no graph6 line in input: " + path);
}

inline Graph with_labels(const Graph& g, const std::vector<std::string>& labels) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(g.size(), edges, labels);
}

struct FamilySpec {
  std::string name;
  int n = 0, i = 0, variant = 0;
  bool complement_flag = false;
};

inline void require_n(const FamilySpec& f) {
  if (f.n <= 0) throw CLI::ValidationError("--n is required for family " + f.name);
}

inline Graph resolve_family(const FamilySpec& f) {
  Graph g;
  if (f.name == "triangular") {
    require_n(f);
    g = triangular(f.n);
  } else if (f.name == "lattice") {
    require_n(f);
    g = lattice(f.n);
  } else if (f.name == "knx2") {
    require_n(f);
    g = complete_multipartite_nx2(f.n);
  } else if (f.name == "petersen") {
    g = petersen();
  } else if (f.name == "clebsch") {
    g = clebsch_seidel();
  } else if (f.name == "shrikhande") {
    g = shrikhande();
  } else if (f.name == "schlafli-complement") {
    g = schlafli_complement();
  } else if (f.name == "chang") {
    if (f.variant <= 0) throw CLI::ValidationError("--variant 1..3 is required for family chang");
    g = chang(f.variant);
  } else {
    throw CLI::ValidationError("unknown family: " + f.name);
  }
  return f.complement_flag ? complement(g) : g;
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline void emit(const json& j, const std::string& path, std::ostream& out) {
  if (path.empty())
    out << dump(j);
  else
    write_text(path, dump(j));
}

inline json perm_cycles_json(const Perm& p) {
  json arr = json::array();
  for (const auto& cyc : cycles(p)) arr.push_back(cyc);
  return arr;
}

inline json sweep_json(const SweepSummary& s) {
  json j;
  j["theorem"] = s.thm == Theorem::T ? "T" : "L";
  j["n"] = s.n;
  if (s.thm == Theorem::L)
    j["i"] = s.i;
  else
    j["i"] = nullptr;
  j["pairs"] = s.pair_count;
  j["min_paths"] = s.min_paths;
  j["kappa"] = s.kappa;
  j["kappa_note"] = s.kappa_note;
  j["cut_verified"] = s.cut_verified;
  j["all_pass"] = s.all_pass;
  json tallies = json::array();
  for (const auto& t : s.tallies)
    tallies.push_back(json{{"case", t.tag},
                           {"mirrored", t.mirrored},
                           {"pairs", t.pairs},
                           {"template_ok", t.template_ok},
                           {"fallbacks", t.fallbacks},
                           {"failures", t.failures}});
  j["tallies"] = tallies;
  json fb = json::array();
  for (const auto& [x, y] : s.fallback_pairs) fb.push_back(json::array({x, y}));
  j["fallback_pairs"] = fb;
  json fl = json::array();
  for (const auto& [x, y] : s.failed_pairs) fl.push_back(json::array({x, y}));
  j["failed_pairs"] = fl;
  json recs = json::array();
  for (const auto& r : s.records) {
    json choices = json::array();
    for (const auto& [name, value] : r.choices)
      choices.push_back(json{{"name", name}, {"value", value}});
    recs.push_back(json{{"x", r.x},
                        {"y", r.y},
                        {"case", r.tag},
                        {"mirrored", r.mirrored},
                        {"paths", r.count},
                        {"fallback", r.fallback},
                        {"choices", choices}});
  }
  j["records"] = recs;
  return j;
}

}  // namespace detail

/// Runs the command line given as plain arguments (no program name) and
/// writes results to the supplied streams. Returns the process exit code.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deza graph constructions, censuses, and connectivity certificates"};
  app.require_subcommand(1);

  detail::FamilySpec fam;
  std::string input, output, labels_path, cert_path, json_path, theorem, auto_spec = "0";
  int vertex = -1, max_aut = 32, max_kappa_n = 100, n = 0, i = 0, max_n = 10;

  auto add_family_opts = [&fam](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--family", fam.name, "family name");
    if (required) opt->required();
    cmd->add_option("--n", fam.n, "family size parameter");
    cmd->add_option("--i", fam.i, "number of swapped row pairs");
    cmd->add_option("--variant", fam.variant, "chang variant 1..3");
    cmd->add_flag("--complement", fam.complement_flag, "take the complement");
  };

  auto* c_construct = app.add_subcommand("construct", "emit a named graph as graph6");
  add_family_opts(c_construct, true);
  c_construct->add_option("--output", output, "write graph6 here instead of stdout");
  c_construct->add_option("--labels", labels_path, "write the vertex labels as JSON");

  auto* c_classify = app.add_subcommand("classify", "report parameters of a graph6 input");
  c_classify->add_option("--input", input, "graph6 file, - for stdin")->required();
  c_classify->add_option("--output", output, "write the JSON report here");

  auto* c_census = app.add_subcommand("census", "count the valid involutions of a graph");
  add_family_opts(c_census, false);
  c_census->add_option("--input", input, "graph6 file, - for stdin");
  c_census->add_option("--max-aut", max_aut, "vertex bound for the search (default 32)");
  c_census->add_option("--output", output, "write the JSON report here");

  auto* c_deza = app.add_subcommand("deza", "build a Deza graph by swapping along an involution");
  add_family_opts(c_deza, false);
  c_deza->add_option("--input", input, "graph6 file, - for stdin");
  c_deza->add_option("--auto", auto_spec, "census class index to use (default 0)");
  c_deza->add_option("--max-aut", max_aut, "vertex bound for the census (default 32)");
  c_deza->add_option("--output", output, "write graph6 here instead of stdout");
  c_deza->add_option("--labels", labels_path, "write the vertex labels as JSON");

  auto* c_kappa = app.add_subcommand("kappa", "vertex connectivity with certificate");
  c_kappa->add_option("--input", input, "graph6 file, - for stdin")->required();
  c_kappa->add_option("--certificate", cert_path, "also write the certificate JSON here");
  c_kappa->add_option("--max-n", max_kappa_n, "vertex bound for the solver (default 100)");

  auto* c_verify = app.add_subcommand("verify-proof", "sweep all non-adjacent pairs of a family");
  c_verify->add_option("--theorem", theorem, "T or L")
      ->required()
      ->check(CLI::IsMember({"T", "L"}));
  c_verify->add_option("--n", n, "family size parameter")->required();
  c_verify->add_option("--i", i, "swapped row pairs (L only; default: all)");
  c_verify->add_option("--json", json_path, "write the full report here");

  auto* c_nbhd = app.add_subcommand("second-nbhd", "component structure of second neighborhoods");
  c_nbhd->add_option("--input", input, "graph6 file, - for stdin")->required();
  c_nbhd->add_option("--vertex", vertex, "restrict to this vertex index");
  c_nbhd->add_option("--labels", labels_path, "attach vertex labels from this JSON file");
  c_nbhd->add_option("--output", output, "write the JSON report here");

  auto* c_suite = app.add_subcommand("paper-suite", "run the full acceptance battery");
  c_suite->add_option("--json", json_path, "write the consolidated report here");
  c_suite->add_option("--max-n", max_n,
                      "trim the large ends of the parameter ranges (default 10 = full)");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(c_construct)) {
      Graph g = detail::resolve_family(fam);
      std::string line = to_graph6(g) + "\n";
      if (output.empty())
        out << line;
      else
        detail::write_text(output, line);
      if (!labels_path.empty()) detail::write_text(labels_path, labels_to_json(g) + "\n");
      return 0;
    }

    if (app.got_subcommand(c_classify)) {
      Graph g = detail::load_graph(input);
      json j;
      j["schema_version"] = 1;
      j["vertices"] = g.size();
      j["edges"] = g.edge_count();
      j["connected"] = is_connected(g);
      auto diam = diameter(g);
      j["diameter"] = diam ? json(*diam) : json(nullptr);
      j["regular"] = g.is_regular();
      j["valency"] = g.is_regular() && g.size() > 0 ? json(g.degree(0)) : json(nullptr);
      if (auto srg = classify_srg(g)) {
        json s;
        s["v"] = srg->params.v;
        s["k"] = srg->params.k;
        s["lambda"] = srg->params.lambda;
        s["mu"] = srg->params.mu;
        if (srg->spectrum)
          s["spectrum"] = json{{"r", srg->spectrum->r},
                               {"s", srg->spectrum->s},
                               {"mult_r", srg->spectrum->mult_r},
                               {"mult_s", srg->spectrum->mult_s}};
        else
          s["spectrum"] = nullptr;
        j["srg"] = s;
      } else {
        j["srg"] = nullptr;
      }
      if (auto dz = classify_deza(g)) {
        j["deza"] = json{
            {"v", dz->v}, {"k", dz->k}, {"b", dz->b}, {"a", dz->a}, {"strict", dz->strict}};
      } else {
        j["deza"] = nullptr;
      }
      j["edge_regular"] = is_edge_regular(g);
      j["co_edge_regular"] = is_co_edge_regular(g);
      detail::emit(j, output, out);
      return 0;
    }

    if (app.got_subcommand(c_census)) {
      if (input.empty() && fam.name.empty())
        throw CLI::ValidationError("census needs --input or --family");
      Graph g = input.empty() ? detail::resolve_family(fam) : detail::load_graph(input);
      DeltaCensus census = enumerate_delta_automorphisms(g, max_aut);
      json j;
      j["schema_version"] = 1;
      j["vertices"] = g.size();
      j["count"] = census.count();
      json sizes = json::array();
      for (const auto& cls : census.classes) sizes.push_back(cls.size());
      j["classes"] = sizes;
      json reps = json::array();
      for (const auto& rep : census.representatives()) reps.push_back(detail::perm_cycles_json(rep));
      j["representatives"] = reps;
      detail::emit(j, output, out);
      return 0;
    }

    if (app.got_subcommand(c_deza)) {
      Graph result;
      if (fam.name == "T") {
        detail::require_n(fam);
        result = triangular_deza(fam.n);
      } else if (fam.name == "L") {
        detail::require_n(fam);
        result = lattice_deza(fam.n, fam.i > 0 ? fam.i : 1);
      } else {
        if (input.empty() && fam.name.empty())
          throw CLI::ValidationError("deza needs --input, or --family (T, L, or a census family)");
        Graph g = input.empty() ? detail::resolve_family(fam) : detail::load_graph(input);
        DeltaCensus census = enumerate_delta_automorphisms(g, max_aut);
        size_t cls = 0;
        try {
          cls = static_cast<size_t>(std::stoul(auto_spec));
        } catch (const std::exception&) {
          throw CLI::ValidationError("--auto expects a class index");
        }
        if (cls >= census.classes.size())
          throw std::invalid_argument("census found only " +
                                      std::to_string(census.classes.size()) +
                                      " class(es) of valid involutions");
        result = deza_from(g, census.representatives()[cls]);
      }
      std::string line = to_graph6(result) + "\n";
      if (output.empty())
        out << line;
      else
        detail::write_text(output, line);
      if (!labels_path.empty()) detail::write_text(labels_path, labels_to_json(result) + "\n");
      return 0;
    }

    if (app.got_subcommand(c_kappa)) {
      Graph g = detail::load_graph(input);
      ConnectivityCertificate cert = vertex_connectivity(g, max_kappa_n);
      json j;
      j["schema_version"] = 1;
      j["kappa"] = cert.kappa;
      j["kind"] = cert.kind;
      j["pair"] = cert.separated_pair.first >= 0
                      ? json::array({cert.separated_pair.first, cert.separated_pair.second})
                      : json(nullptr);
      j["cut"] = cert.cut;
      j["paths"] = cert.paths;
      out << detail::dump(j);
      if (!cert_path.empty()) detail::write_text(cert_path, detail::dump(j));
      return 0;
    }

    if (app.got_subcommand(c_verify)) {
      std::vector<SweepSummary> runs;
      if (theorem == "T") {
        runs.push_back(sweep(Theorem::T, n));
      } else if (i > 0) {
        runs.push_back(sweep(Theorem::L, n, i));
      } else {
        for (int ii = 1; 2 * ii <= n; ++ii) runs.push_back(sweep(Theorem::L, n, ii));
      }
      bool ok = true;
      json arr = json::array();
      for (const auto& s : runs) {
        ok = ok && s.all_pass && s.kappa >= 0;
        out << (s.thm == Theorem::T ? "T" : "L") << " n=" << s.n;
        if (s.thm == Theorem::L) out << " i=" << s.i;
        out << ": pairs=" << s.pair_count << " min_paths=" << s.min_paths
            << " kappa=" << s.kappa << " fallbacks=" << s.fallback_pairs.size()
            << " failures=" << s.failed_pairs.size() << " "
            << (s.all_pass && s.kappa >= 0 ? "PASS" : "FAIL") << "\n";
        arr.push_back(detail::sweep_json(s));
      }
      if (!json_path.empty()) {
        json j;
        j["schema_version"] = 1;
        j["runs"] = arr;
        detail::write_text(json_path, detail::dump(j));
      }
      return ok ? 0 : 1;
    }

    if (app.got_subcommand(c_nbhd)) {
      Graph g = detail::load_graph(input);
      if (!labels_path.empty())
        g = detail::with_labels(g, labels_from_json(detail::read_text(labels_path)));
      std::vector<int> verts;
      if (vertex >= 0) {
        if (vertex >= g.size()) throw std::out_of_range("vertex index out of range");
        verts.push_back(vertex);
      } else {
        for (int v = 0; v < g.size(); ++v) verts.push_back(v);
      }
      json results = json::array();
      for (int v : verts) {
        auto nbhd2 = second_neighborhood(g, v);
        auto comps = connected_components(induced_subgraph(g, nbhd2));
        json sizes = json::array(), cliques = json::array();
        for (const auto& comp : comps) {
          sizes.push_back(comp.size());
          std::vector<int> orig;
          for (int idx : comp) orig.push_back(nbhd2[idx]);
          cliques.push_back(is_clique(g, orig));
        }
        json r;
        r["vertex"] = v;
        if (!g.labels().empty()) r["label"] = g.label(v);
        r["size"] = nbhd2.size();
        r["component_sizes"] = sizes;
        r["components_are_cliques"] = cliques;
        r["connected"] = comps.size() <= 1;
        results.push_back(r);
      }
      json j;
      j["schema_version"] = 1;
      j["results"] = results;
      detail::emit(j, output, out);
      return 0;
    }

    if (app.got_subcommand(c_suite)) {
      suite::SuiteResult res = suite::run_suite(max_n, &out);
      for (const auto& c : res.criteria)
        if (!c.pass) out << "criterion " << c.id << " detail: " << c.detail << "\n";
      json j;
      j["schema_version"] = 1;
      j["max_n"] = max_n;
      j["all_pass"] = res.all_pass;
      json arr = json::array();
      for (const auto& c : res.criteria)
        arr.push_back(json{{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      j["criteria"] = arr;
      if (!json_path.empty()) detail::write_text(json_path, detail::dump(j));
      return res.all_pass ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const BoundError& e) {
    err << "bound exceeded: " << e.what() << "\n";
    return 5;
  } catch (const Graph6Error& e) {
    err << "input error: " << e.what() << "\n";
    return 3;
  } catch (const IoError& e) {
    err << "input error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "infeasible: " << e.what() << "\n";
    return 4;
  } catch (const std::domain_error& e) {
    err << "infeasible: " << e.what() << "\n";
    return 4;
  } catch (const std::out_of_range& e) {
    err << "infeasible: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 6;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace cli
}  // namespace deza
