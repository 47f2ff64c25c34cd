#pragma once

// Canonical JSON forms.
//
//   polynomial    ["8","10","4","2"]            decimal strings, lowest power first
//   rational      "3/4" or "-2"
//   series        {"var":"u","cap":k,"terms":[...]}
//   partition     [3,2]
//   diagram sum   {"edges":e,"patterns":[{"match":[[zslot,zbarslot],...],"poly":[...]}]}
//
// Parsing a serialised value and serialising it again gives identical text.

#include <nlohmann/json.hpp>

#include "circe/algebra.hpp"
#include "circe/ensemble.hpp"
#include "circe/partition.hpp"
#include "circe/series.hpp"
#include "circe/traces.hpp"
#include "circe/wick.hpp"

namespace circe {

using Json = nlohmann::json;

Json to_json(const BigRational& value);
BigRational rational_from_json(const Json& j);

Json to_json(const DimPolynomial& p);
Json to_json(const MPolynomial& p);
DimPolynomial dim_polynomial_from_json(const Json& j);
MPolynomial m_polynomial_from_json(const Json& j);

Json to_json(const RationalSeries& s);
Json to_json(const MSeries& s);
RationalSeries rational_series_from_json(const Json& j);
MSeries m_series_from_json(const Json& j);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const DeltaPattern& p);
Json to_json(const DiagramSum& sum);
DiagramSum diagram_sum_from_json(const Json& j, const ExternalSpec& spec, const Partition& vertex_type);

/// {"ensemble":"COE","N":"symbolic","u":"1/(N+1)","cap":k,"patterns":[{"pattern":...,"match":...,"series":...}]}
Json to_json(const MomentSeries& ms);

/// {"lambda":[...],"mu":[...],"cap":k,"series":[{"u_power":p,"M_poly":[...]}],"selection_rule_zero":b}
Json to_json(const TraceMomentResult& r);

}  // namespace circe
