#include "topfan/io.hpp"

#include "topfan/errors.hpp"

#include <cstdio>

namespace topfan::io {

json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected a rational as \"p/q\" or an integer");
}

json relem_to_json(const RElem& x) {
  return json::array({numerator(x.b).str(), denominator(x.b).str(), numerator(x.c).str(), denominator(x.c).str(), x.v});
}

RElem relem_from_json(const json& j) {
  if (!j.is_array() || j.size() != 5) throw ParseError("ring element needs five entries");
  auto num = [&](std::size_t i) {
    return j[i].is_string() ? Integer(j[i].get<std::string>()) : Integer(j[i].get<long long>());
  };
  return {Rational(num(0), num(1)), Rational(num(2), num(3)), j[4].get<std::int64_t>()};
}

json rvec_to_json(const RVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(relem_to_json(x));
  return out;
}

json simplex_to_json(const Simplex& s) { return json(s); }

json qvec_to_json(const QVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rational_to_json(x));
  return out;
}

json complex_to_json(const SimplicialComplex& k, const std::vector<Simplex>& ordered,
                     const std::map<Vertex, std::string>& labels) {
  json j;
  j["m"] = k.vertex_count();
  j["facets"] = ordered.empty() ? json(k.facets()) : json(ordered);
  if (!labels.empty()) {
    json l = json::object();
    for (const auto& [v, name] : labels) l[std::to_string(v)] = name;
    j["labels"] = l;
  }
  return j;
}

SimplicialComplex complex_from_json(const json& j, std::vector<Simplex>* ordered,
                                    std::map<Vertex, std::string>* labels) {
  try {
    if (!j.is_object() || !j.contains("m") || !j.contains("facets")) throw ParseError("complex needs \"m\" and \"facets\"");
    int m = j.at("m").get<int>();
    auto facets = j.at("facets").get<std::vector<Simplex>>();
    if (ordered) *ordered = facets;
    if (labels && j.contains("labels"))
      for (const auto& [key, val] : j["labels"].items()) (*labels)[std::stoi(key)] = val.get<std::string>();
    return SimplicialComplex(m, std::move(facets));
  } catch (const json::exception& e) {
    throw ParseError(std::string("complex: ") + e.what());
  }
}

json fan_to_json(const TopologicalFan& fan) {
  json j;
  j["n"] = fan.dim();
  j["complex"] = complex_to_json(fan.complex());
  json rays = json::array();
  for (const auto& r : fan.rays()) rays.push_back({{"b", qvec_to_json(r.b)}, {"c", qvec_to_json(r.c)}, {"v", r.v}});
  j["rays"] = rays;
  return j;
}

TopologicalFan fan_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("n") || !j.contains("complex") || !j.contains("rays"))
      throw ParseError("fan needs \"n\", \"complex\" and \"rays\"");
    int n = j.at("n").get<int>();
    auto k = complex_from_json(j.at("complex"));
    std::vector<Ray> rays;
    for (const auto& r : j.at("rays")) {
      Ray ray;
      for (const auto& x : r.at("b")) ray.b.push_back(rational_from_json(x));
      if (r.contains("c"))
        for (const auto& x : r.at("c")) ray.c.push_back(rational_from_json(x));
      ray.v = r.at("v").get<ZVec>();
      rays.push_back(std::move(ray));
    }
    return TopologicalFan(n, std::move(k), std::move(rays));
  } catch (const json::exception& e) {
    throw ParseError(std::string("fan: ") + e.what());
  }
}

json validation_to_json(const ValidationReport& rep) {
  json j;
  const auto& fc = rep.fan_condition;
  j["fan_condition_ok"] = fc.ok;
  j["completeness_ok"] = rep.completeness.ok;
  j["nonsingularity_ok"] = rep.nonsingularity.ok;
  j["involutive"] = rep.involutive;
  j["complete_nonsingular"] = rep.complete_nonsingular();
  json w = json::array();
  if (fc.dependent) w.push_back({{"kind", "dependent"}, {"simplex", *fc.dependent}, {"part", std::string(1, fc.dependent_part)}});
  if (fc.overlap)
    w.push_back({{"kind", "cone-overlap"},
                 {"facets", {fc.overlap->first, fc.overlap->second}},
                 {"point", qvec_to_json(fc.point)}});
  const auto& c = rep.completeness;
  if (!c.ok && c.failure != "fan-condition") {
    json e{{"kind", "completeness"}, {"failure", c.failure}};
    if (c.wall) e["wall"] = *c.wall;
    if (!c.direction.empty()) e["direction"] = qvec_to_json(c.direction);
    w.push_back(e);
  }
  const auto& ns = rep.nonsingularity;
  if (!ns.ok) w.push_back({{"kind", "minor-gcd"}, {"facet", *ns.facet}, {"gcd", ns.minor_gcd.str()}});
  j["witnesses"] = w;
  json dets = json::array();
  for (const auto& d : ns.facet_dets) dets.push_back(d.str());
  j["facet_dets"] = dets;
  j["samples_checked"] = c.samples_checked;
  return j;
}

json graded_class_to_json(const GradedClass& c) {
  json basis = json::array();
  for (const auto& mono : c.basis) {
    std::string name;
    for (std::size_t i = 0; i < mono.size(); ++i)
      for (int e = 0; e < mono[i]; ++e) name += (name.empty() ? "" : "*") + std::string("mu") + std::to_string(i + 1);
    basis.push_back(name.empty() ? "1" : name);
  }
  return {{"degree", 2 * c.degree}, {"basis", basis}, {"coords", qvec_to_json(c.coords)}, {"integral", c.integral}};
}

json labeling_to_json(const LabelingOutcome& out) {
  json j;
  switch (out.status) {
    case LabelingStatus::Sat:
      j["verdict"] = "SAT";
      break;
    case LabelingStatus::Unsat:
      j["verdict"] = "UNSAT(" + std::to_string(out.bound) + ")";
      break;
    case LabelingStatus::Infeasible:
      j["verdict"] = "INFEASIBLE";
      break;
    case LabelingStatus::Unknown:
      j["verdict"] = "UNKNOWN";
      break;
  }
  j["bound"] = out.bound;
  j["nodes"] = out.nodes;
  if (!out.v.empty()) j["v"] = out.v;
  if (!out.facet_dets.empty()) j["facet_dets"] = out.facet_dets;
  if (!out.classes.empty()) j["classes"] = out.classes;
  if (!out.signs.empty()) j["signs"] = out.signs;
  if (!out.certificate.empty()) j["certificate"] = out.certificate;
  if (!out.cycle.empty()) j["cycle"] = out.cycle;
  if (!out.clique.empty()) j["clique"] = out.clique;
  return j;
}

json certificate_to_json(const BarnetteCertificate& cert) {
  json cases = json::array();
  for (const auto& c : cert.cases) {
    json steps = json::array();
    for (const auto& s : c.steps) steps.push_back({{"by", s.equation}, {"gives", s.conclusion}});
    cases.push_back({{"case", c.assumption}, {"refuted", c.refuted}, {"steps", steps}});
  }
  return {{"case_split", cert.case_split}, {"cases", cases}, {"complete", cert.complete()}};
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace topfan::io
