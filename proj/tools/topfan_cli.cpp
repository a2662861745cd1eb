#include "CLI11.hpp"
#include "topfan/charts.hpp"
#include "topfan/errors.hpp"
#include "topfan/fixtures.hpp"
#include "topfan/invariants.hpp"
#include "topfan/io.hpp"
#include "topfan/realizability.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace topfan;
using nlohmann::json;

namespace {

struct UsageError : Error {
  using Error::Error;
};

struct Loaded {
  std::string text;
  json doc;
};

std::map<std::string, std::string> g_digests;

Loaded load(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    ss << in.rdbuf();
  }
  Loaded l{ss.str(), {}};
  try {
    l.doc = json::parse(l.text);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  g_digests[path] = io::fnv1a_hex(l.text);
  return l;
}

TopologicalFan load_fan(const std::string& path) { return io::fan_from_json(load(path).doc); }

std::vector<Vertex> parse_vertices(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("bad vertex list: " + text);
    }
  }
  if (out.empty()) throw UsageError("empty vertex list");
  return out;
}

QVec parse_direction(const std::string& text) {
  QVec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw UsageError("cannot write " + out_path);
  out << j.dump(2) << "\n";
}

std::string ray_label(const Simplex& s) {
  std::string out;
  for (auto v : s) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out;
}

json transition_json(const TransitionMatrix& t) {
  json rows = json::array();
  for (const auto& r : t.entries) rows.push_back(io::rvec_to_json(r));
  return {{"source", t.source}, {"target", t.target}, {"entries", rows}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"topfan: topological fans, invariants and labeling searches"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 1;
  bool deterministic = false;
  app.add_option("--seed", seed, "random seed");
  app.add_flag("--deterministic", deterministic, "single-threaded search, no timings");

  std::string fan_path, other_path, out_path;

  auto* validate_cmd = app.add_subcommand("validate", "check completeness and non-singularity");
  validate_cmd->add_option("fan", fan_path)->required();

  auto* inv = app.add_subcommand("invariants", "cohomology, Pontrjagin class, weights, Todd genus");
  inv->add_option("fan", fan_path)->required();
  bool want_betti = false, want_pont = false, want_weights = false, want_todd = false;
  std::string dir;
  inv->add_flag("--betti", want_betti);
  inv->add_flag("--pontrjagin", want_pont);
  inv->add_flag("--weights", want_weights);
  inv->add_flag("--todd", want_todd);
  inv->add_option("--dir", dir, "direction x,y,... for the Todd genus");

  auto* charts = app.add_subcommand("charts", "kernel presentation, transitions, cocycle, face poset");
  charts->add_option("fan", fan_path)->required();
  std::string kernel_facet;
  bool want_trans = false, want_cocycle = false, want_poset = false;
  charts->add_option("--kernel", kernel_facet, "facet I as 1,2,...");
  charts->add_flag("--transitions", want_trans);
  charts->add_flag("--cocycle", want_cocycle);
  charts->add_flag("--faceposet", want_poset);

  auto* equiv = app.add_subcommand("equiv", "decide fan equivalence");
  equiv->add_option("a", fan_path)->required();
  equiv->add_option("b", other_path)->required();
  std::string mode_name = "strict";
  equiv->add_option("--mode", mode_name)->check(CLI::IsMember({"strict", "d", "h"}));

  auto* surgery = app.add_subcommand("surgery", "stellar subdivision, suspension, product");
  surgery->add_option("fan", fan_path)->required();
  std::string stellar, product_path;
  bool want_suspend = false;
  auto* st_opt = surgery->add_option("--stellar", stellar, "facet I as 1,2,...");
  auto* su_opt = surgery->add_flag("--suspend", want_suspend);
  auto* pr_opt = surgery->add_option("--product", product_path, "second fan");
  st_opt->excludes(su_opt, pr_opt);
  su_opt->excludes(pr_opt);
  surgery->add_option("-o,--output", out_path);

  auto* realize = app.add_subcommand("realize", "search integer labelings of a complex");
  realize->add_option("complex", fan_path)->required();
  std::string labeling_mode = "unimodular", normalize;
  int bound = 1;
  long long node_limit = -1;
  realize->add_option("--mode", labeling_mode)->check(CLI::IsMember({"unimodular", "toric-sign", "mod2"}));
  realize->add_option("--bound", bound)->check(CLI::PositiveNumber);
  realize->add_option("--normalize", normalize, "facet pinned to the standard basis, as 1,2,...");
  realize->add_option("--node-limit", node_limit);

  auto* fixtures_cmd = app.add_subcommand("fixtures", "write bundled fixtures");
  std::string fixture_name;
  fixtures_cmd->add_option("name", fixture_name, "barnette | barnette-fan | cp2cp2 | cyclic:n:m | octahedron | icosahedron")
      ->required();
  fixtures_cmd->add_option("-o,--output", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  std::string command;
  for (int i = 0; i < argc; ++i) command += (i ? " " : "") + std::string(argv[i]);

  auto t0 = std::chrono::steady_clock::now();
  json result;
  int code = 0;
  bool raw = false;  // surgery/fixtures write the artifact itself
  try {
    if (*validate_cmd) {
      auto rep = validate(load_fan(fan_path), seed);
      result = io::validation_to_json(rep);
      code = rep.complete_nonsingular() ? 0 : 1;
    } else if (*inv) {
      auto fan = load_fan(fan_path);
      bool all = !want_betti && !want_pont && !want_weights && !want_todd;
      if (all || want_betti) {
        result["betti"] = betti_numbers(fan);
        std::vector<int> ranks;
        for (int k = 0; k <= fan.dim(); ++k) ranks.push_back(graded_rank(fan, k));
        result["graded_rank"] = ranks;
        auto pres = cohomology_presentation(fan);
        result["sr_monomials"] = pres.sr_monomials;
        result["linear_relations"] = pres.linear_relations;
      }
      if (all || want_pont) {
        json p = json::array();
        auto pc = pontrjagin_class(fan);
        for (int j = 0; 2 * j <= fan.dim(); ++j) p.push_back(io::graded_class_to_json(pc.p(j)));
        result["pontrjagin"] = p;
      }
      if (all || want_weights) {
        auto w = omni_weights(fan);
        json ws = json::array();
        for (std::size_t i = 0; i < w.facets.size(); ++i) ws.push_back({{"facet", w.facets[i]}, {"w", w.w[i]}});
        result["weights"] = ws;
      }
      if (all || want_todd) {
        auto t = dir.empty() ? todd_genus(fan, seed) : todd_genus(fan, parse_direction(dir));
        result["todd"] = {{"genus", t.genus}, {"direction", io::qvec_to_json(t.direction)}, {"cones", t.cones},
                          {"weights", t.weights}};
      }
    } else if (*charts) {
      auto fan = load_fan(fan_path);
      ChartAtlas atlas(fan);
      if (!kernel_facet.empty()) {
        auto kp = kernel_presentation(fan, make_simplex(parse_vertices(kernel_facet)));
        json gens = json::array();
        for (const auto& g : kp.generators)
          gens.push_back({{"k", g.k}, {"exponents", io::rvec_to_json(g.exponents)}, {"in_kernel", in_kernel(fan, g.exponents)}});
        result["kernel"] = {{"base", kp.base}, {"generators", gens}};
      }
      if (want_trans) {
        json ts = json::array();
        for (const auto& i : fan.complex().facets())
          for (const auto& j : fan.complex().facets()) ts.push_back(transition_json(transition_matrix(atlas, i, j)));
        result["transitions"] = ts;
      }
      if (want_cocycle) {
        auto c = check_cocycle(atlas);
        result["cocycle"] = {{"ok", c.ok}, {"triples_checked", c.triples_checked}};
        if (c.offending) result["cocycle"]["offending"] = {(*c.offending)[0], (*c.offending)[1], (*c.offending)[2]};
        if (!c.ok) result["cocycle"]["failed_identity"] = c.failed_identity;
        result["conjugation_equivariant"] = check_conjugation_equivariant(atlas);
        if (!c.ok) code = 1;
      }
      if (want_poset) {
        auto p = orbit_face_poset(fan);
        result["faceposet"] = {{"elements", p.elements}, {"rank", p.rank}, {"covers", p.covers},
                               {"cube_patterns", p.cube_patterns}};
      }
    } else if (*equiv) {
      auto a = load_fan(fan_path);
      auto b = load_fan(other_path);
      auto mode = mode_name == "strict" ? EquivalenceMode::Strict
                  : mode_name == "d"    ? EquivalenceMode::D
                                        : EquivalenceMode::H;
      auto e = equivalent(a, b, mode);
      result["equivalent"] = e.has_value();
      if (e) {
        result["sigma"] = e->sigma;
        json mus = json::array();
        for (const auto& mu : e->mu) mus.push_back(io::relem_to_json(mu));
        result["mu"] = mus;
      } else {
        code = 1;
      }
    } else if (*surgery) {
      auto fan = load_fan(fan_path);
      TopologicalFan out;
      if (!stellar.empty())
        out = stellar_subdivide_fan(fan, make_simplex(parse_vertices(stellar)));
      else if (want_suspend)
        out = suspend_fan(fan);
      else if (!product_path.empty())
        out = product_fan(fan, load_fan(product_path));
      else
        throw UsageError("surgery needs --stellar, --suspend or --product");
      auto rep = validate(out, seed);
      if (out_path.empty()) {
        raw = true;
        result = io::fan_to_json(out);
      } else {
        emit(io::fan_to_json(out), out_path);
        result = {{"written", out_path}, {"validation", io::validation_to_json(rep)}};
      }
      code = rep.complete_nonsingular() ? 0 : 1;
    } else if (*realize) {
      std::vector<Simplex> ordered;
      std::map<Vertex, std::string> labels;
      auto k = io::complex_from_json(load(fan_path).doc, &ordered, &labels);
      LabelingProblem p{k, ordered, LabelingMode::Unimodular, bound};
      p.mode = labeling_mode == "toric-sign" ? LabelingMode::ToricSign
               : labeling_mode == "mod2"     ? LabelingMode::Mod2
                                             : LabelingMode::Unimodular;
      if (!normalize.empty()) {
        auto target = make_simplex(parse_vertices(normalize));
        for (std::size_t i = 0; i < ordered.size(); ++i)
          if (make_simplex(ordered[i]) == target) p.normalization_facet = i;
        if (!p.normalization_facet) throw UsageError("--normalize is not a facet");
      }
      SearchOptions opt;
      opt.deterministic = deterministic;
      opt.node_limit = node_limit;
      auto out = search_labeling(p, opt);
      result = io::labeling_to_json(out);
      if (p.mode == LabelingMode::ToricSign && out.status == LabelingStatus::Sat)
        result["note"] = "necessary conditions satisfied";
      if (p.mode == LabelingMode::ToricSign && find_isomorphism(k, fixtures::barnette_sphere().complex))
        result["infeasibility_certificate"] = io::certificate_to_json(barnette_infeasibility_certificate());
      code = out.status == LabelingStatus::Sat ? 0 : 1;
    } else if (*fixtures_cmd) {
      json art;
      if (fixture_name == "barnette") {
        auto b = fixtures::barnette_sphere();
        art = io::complex_to_json(b.complex, b.ordered_facets, b.labels);
      } else if (fixture_name == "barnette-fan") {
        art = io::fan_to_json(fixtures::barnette_fan());
      } else if (fixture_name == "cp2cp2") {
        art = io::fan_to_json(fixtures::cp2_sharp_cp2());
      } else if (fixture_name == "octahedron" || fixture_name == "icosahedron") {
        auto e = fixture_name == "octahedron" ? fixtures::octahedron() : fixtures::icosahedron();
        art = io::fan_to_json(realize_2sphere(e.complex, e.positions));
      } else if (fixture_name.rfind("cyclic:", 0) == 0) {
        int n = 0, m = 0;
        if (std::sscanf(fixture_name.c_str(), "cyclic:%d:%d", &n, &m) != 2) throw UsageError("expected cyclic:<n>:<m>");
        art = io::complex_to_json(cyclic_polytope_boundary(n, m));
      } else {
        throw UsageError("unknown fixture " + fixture_name);
      }
      if (out_path.empty()) {
        raw = true;
        result = art;
      } else {
        emit(art, out_path);
        result = {{"written", out_path}};
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidFan& e) {
    std::cerr << "invalid fan: " << e.what() << "\n";
    return 2;
  } catch (const InvalidComplex& e) {
    std::cerr << "invalid complex: " << e.what() << "\n";
    return 2;
  } catch (const VertexOutOfRange& e) {
    std::cerr << "vertex out of range: " << e.what() << "\n";
    return 2;
  } catch (const BadParameters& e) {
    std::cerr << "bad parameters: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    json err{{"command", command}, {"error", e.what()}, {"seed", seed}};
    std::cout << err.dump(2) << "\n";
    return 1;
  }

  if (raw) {
    std::cout << result.dump(2) << "\n";
    return code;
  }
  json report{{"command", command}, {"inputs", g_digests}, {"seed", seed}, {"result", result}};
  if (!deterministic)
    report["elapsed_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  std::cout << report.dump(2) << "\n";
  return code;
}
