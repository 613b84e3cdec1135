#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "eqk/decomposition.hpp"
#include "eqk/localization.hpp"
#include "eqk/presentation.hpp"
#include "eqk/symmetric_datum.hpp"

namespace eqk {

using Json = nlohmann::ordered_json;

/// A parsed job file: datum, optional subdivision and verb arguments.
struct JobInput {
  DatumSpec datum;
  std::optional<FanSpec> fan;
  Json args = Json::object();
};

/// Accepts {"type": "A5"} or {"type": "A", "rank": 5}; "theta_matrix" is
/// row-major with column j holding theta(alpha_j). Throws InvalidInput.
JobInput parse_job(const Json& j);
DatumSpec parse_datum_spec(const Json& j);
std::optional<FanSpec> parse_fan_spec(const Json& j);

Json to_json(const Vec& v);
Json to_json(const IntMatrix& m);
Vec vec_from_json(const Json& j);
IntMatrix matrix_from_json(const Json& j);

/// {"lattice": name, "terms": [{"exp": [...], "coef": n}, ...]}
Json to_json(const GroupRingElement& f);
/// `lattice` is the expected home; a "lattice" field, if present, must name it.
GroupRingElement element_from_json(const Json& j, const LatticePtr& lattice);

Json describe(const SymmetricDatum& d, const Fan& fan);
Json fixed_points_json(const FixedPointSet& pts);
Json curves_json(const FixedPointSet& pts, const std::vector<Curve>& curves);
Json to_json(const LocalizationClass& c);
/// {"values": [{"point": label, "element": ...}, ...]} in any order, one per point.
LocalizationClass localization_from_json(const Json& j, const std::shared_ptr<const FixedPointSet>& pts);
Json to_json(const MembershipResult& r);
Json to_json(const KModel& m, const GradedDecomposition& d);
Json to_json(const PresentationReport& r);
Json to_json(const SplittingReport& r);
Json error_json(const std::string& code, const std::string& message);

}  // namespace eqk
