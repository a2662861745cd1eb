#pragma once

#include "topfan/charts.hpp"
#include "topfan/fan.hpp"
#include "topfan/fixtures.hpp"
#include "topfan/invariants.hpp"
#include "topfan/realizability.hpp"

#include "json.hpp"

#include <map>
#include <string>

namespace topfan::io {

using nlohmann::json;

json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);
json relem_to_json(const RElem& x);  // [b_num, b_den, c_num, c_den, v]
RElem relem_from_json(const json& j);
json rvec_to_json(const RVec& v);
json simplex_to_json(const Simplex& s);
json qvec_to_json(const QVec& v);

json complex_to_json(const SimplicialComplex& k, const std::vector<Simplex>& ordered = {},
                     const std::map<Vertex, std::string>& labels = {});
// throws ParseError
SimplicialComplex complex_from_json(const json& j, std::vector<Simplex>* ordered = nullptr,
                                    std::map<Vertex, std::string>* labels = nullptr);

json fan_to_json(const TopologicalFan& fan);
TopologicalFan fan_from_json(const json& j);

json validation_to_json(const ValidationReport& rep);
json graded_class_to_json(const GradedClass& c);
json labeling_to_json(const LabelingOutcome& out);
json certificate_to_json(const BarnetteCertificate& cert);

std::string fnv1a_hex(const std::string& bytes);

}  // namespace topfan::io
