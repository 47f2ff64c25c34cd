#include "circe/serialize.hpp"

#include <stdexcept>

namespace circe {

namespace {

template <typename Coeff, typename Parse>
std::vector<Coeff> coefficients_from_json(const Json& j, Parse parse) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<Coeff> c;
  c.reserve(j.size());
  for (const auto& e : j) c.push_back(parse(e.get<std::string>()));
  return c;
}

void check_series_header(const Json& j) {
  if (!j.is_object() || j.value("var", "") != "u" || !j.contains("cap") || !j.contains("terms")) {
    throw std::invalid_argument("series JSON must be {\"var\":\"u\",\"cap\":k,\"terms\":[...]}");
  }
}

}  // namespace

Json to_json(const BigRational& value) { return to_string(value); }

BigRational rational_from_json(const Json& j) { return parse_rational(j.get<std::string>()); }

Json to_json(const DimPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.get_str());
  return out;
}

Json to_json(const MPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

DimPolynomial dim_polynomial_from_json(const Json& j) {
  return DimPolynomial(coefficients_from_json<BigInt>(j, [](const std::string& s) { return parse_integer(s); }));
}

MPolynomial m_polynomial_from_json(const Json& j) {
  return MPolynomial(
      coefficients_from_json<BigRational>(j, [](const std::string& s) { return parse_rational(s); }));
}

Json to_json(const RationalSeries& s) {
  Json terms = Json::array();
  for (int k = 0; k <= s.cap(); ++k) terms.push_back(to_string(s.coefficient(k)));
  return Json{{"var", "u"}, {"cap", s.cap()}, {"terms", terms}};
}

Json to_json(const MSeries& s) {
  Json terms = Json::array();
  for (int k = 0; k <= s.cap(); ++k) terms.push_back(to_json(s.coefficient(k)));
  return Json{{"var", "u"}, {"cap", s.cap()}, {"terms", terms}};
}

RationalSeries rational_series_from_json(const Json& j) {
  check_series_header(j);
  std::vector<BigRational> terms;
  for (const auto& t : j.at("terms")) terms.push_back(rational_from_json(t));
  return RationalSeries(j.at("cap").get<int>(), std::move(terms));
}

MSeries m_series_from_json(const Json& j) {
  check_series_header(j);
  std::vector<MPolynomial> terms;
  for (const auto& t : j.at("terms")) terms.push_back(m_polynomial_from_json(t));
  return MSeries(j.at("cap").get<int>(), std::move(terms));
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) { return Partition(j.get<std::vector<int>>()); }

Json to_json(const DeltaPattern& p) {
  Json out = Json::array();
  for (std::size_t s = 0; s < p.match.size(); ++s) out.push_back(Json::array({static_cast<int>(s), p.match[s]}));
  return out;
}

Json to_json(const DiagramSum& sum) {
  Json patterns = Json::array();
  for (const auto& [pattern, poly] : sum.patterns) {
    patterns.push_back(Json{{"match", to_json(pattern)}, {"poly", to_json(poly)}});
  }
  return Json{{"edges", sum.edges}, {"patterns", patterns}};
}

DiagramSum diagram_sum_from_json(const Json& j, const ExternalSpec& spec, const Partition& vertex_type) {
  DiagramSum sum;
  sum.spec = spec;
  sum.vertex_type = vertex_type;
  sum.edges = j.at("edges").get<int>();
  for (const auto& entry : j.at("patterns")) {
    DeltaPattern pattern;
    for (const auto& pair : entry.at("match")) {
      const auto z = pair.at(0).get<std::size_t>();
      if (z != pattern.match.size()) throw std::invalid_argument("match pairs must be sorted by z slot");
      pattern.match.push_back(pair.at(1).get<int>());
    }
    sum.patterns.emplace(std::move(pattern), dim_polynomial_from_json(entry.at("poly")));
  }
  return sum;
}

Json to_json(const MomentSeries& ms) {
  Json patterns = Json::array();
  for (const auto& [pattern, series] : ms.patterns) {
    patterns.push_back(Json{{"pattern", pattern.describe(ms.spec.beta)},
                            {"match", to_json(pattern)},
                            {"series", to_json(series)}});
  }
  return Json{{"ensemble", ms.params.name()},
              {"N", "symbolic"},
              {"u", "1/(" + ms.params.expansion_base_label() + ")"},
              {"n", ms.spec.n},
              {"cap", ms.order_cap},
              {"experimental", ms.params.experimental()},
              {"patterns", patterns}};
}

Json to_json(const TraceMomentResult& r) {
  Json series = Json::array();
  for (int k = 0; k <= r.series.cap(); ++k) {
    series.push_back(Json{{"u_power", k}, {"M_poly", to_json(r.series.coefficient(k))}});
  }
  return Json{{"lambda", to_json(r.lambda)},
              {"mu", to_json(r.mu)},
              {"cap", r.series.cap()},
              {"u", "1/(N+1)"},
              {"series", series},
              {"selection_rule_zero", r.selection_rule_zero}};
}

}  // namespace circe
