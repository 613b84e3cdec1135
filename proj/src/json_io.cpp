#include "eqk/json_io.hpp"

#include <map>

namespace eqk {

namespace {

Error bad(const std::string& msg) { return Error(ErrorCode::InvalidInput, msg); }

Int to_int(const Json& j) {
  if (!j.is_number_integer()) throw bad("expected an integer, got " + j.dump());
  return j.get<Int>();
}

std::vector<CartanType> parse_types(const Json& j) {
  if (!j.contains("type") || !j["type"].is_string()) throw bad("datum spec needs a string field \"type\"");
  std::string t = j["type"].get<std::string>();
  if (j.contains("rank")) {
    Int r = to_int(j["rank"]);
    if (t.size() == 1) t += std::to_string(r);
    else if (CartanType::parse(t).rank != r) throw bad("\"rank\" disagrees with \"type\"");
  }
  std::vector<CartanType> out;
  std::size_t start = 0;
  while (start <= t.size()) {
    std::size_t x = t.find('x', start);
    out.push_back(CartanType::parse(t.substr(start, x == std::string::npos ? std::string::npos : x - start)));
    if (x == std::string::npos) break;
    start = x + 1;
  }
  return out;
}

}  // namespace

DatumSpec parse_datum_spec(const Json& j) {
  if (!j.is_object()) throw bad("datum spec must be a JSON object");
  DatumSpec s;
  s.types = parse_types(j);
  s.group_case = j.value("group_case", false);
  if (j.contains("theta_matrix")) {
    if (s.group_case) throw bad("give either theta_matrix or group_case, not both");
    s.theta = matrix_from_json(j["theta_matrix"]);
  } else if (!s.group_case) {
    throw bad("datum spec needs \"theta_matrix\" or \"group_case\": true");
  }
  return s;
}

std::optional<FanSpec> parse_fan_spec(const Json& j) {
  if (!j.contains("subdivision") || j["subdivision"].is_null()) return std::nullopt;
  const Json& s = j["subdivision"];
  if (!s.is_object() || !s.contains("rays") || !s.contains("max_cones"))
    throw bad("subdivision needs \"rays\" and \"max_cones\"");
  FanSpec f;
  for (const auto& r : s["rays"]) f.rays.push_back(vec_from_json(r));
  for (const auto& c : s["max_cones"]) {
    RaySet cone;
    for (const auto& i : c) {
      Int v = to_int(i);
      if (v < 0) throw bad("negative ray index");
      cone.push_back(static_cast<std::size_t>(v));
    }
    f.max_cones.push_back(std::move(cone));
  }
  return f;
}

JobInput parse_job(const Json& j) {
  JobInput in;
  in.datum = parse_datum_spec(j);
  in.fan = parse_fan_spec(j);
  if (j.contains("args")) {
    if (!j["args"].is_object()) throw bad("\"args\" must be an object");
    in.args = j["args"];
  }
  return in;
}

Json to_json(const Vec& v) {
  Json a = Json::array();
  for (Int x : v) a.push_back(x);
  return a;
}

Json to_json(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw bad("expected an integer array, got " + j.dump());
  Vec v;
  for (const auto& x : j) v.push_back(to_int(x));
  return v;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw bad("expected a nonempty array of rows");
  std::vector<Vec> rows;
  for (const auto& r : j) rows.push_back(vec_from_json(r));
  for (const auto& r : rows)
    if (r.size() != rows[0].size()) throw bad("ragged matrix");
  return IntMatrix::from_rows(rows, rows[0].size());
}

Json to_json(const GroupRingElement& f) {
  Json terms = Json::array();
  for (const auto& [u, c] : f.terms()) terms.push_back(Json{{"exp", to_json(u)}, {"coef", c}});
  return Json{{"lattice", f.lattice()->name}, {"terms", terms}};
}

GroupRingElement element_from_json(const Json& j, const LatticePtr& lattice) {
  if (j.is_number_integer()) return GroupRingElement::constant(lattice, to_int(j));
  if (!j.is_object() || !j.contains("terms")) throw bad("element needs a \"terms\" array");
  if (j.contains("lattice") && j["lattice"].get<std::string>() != lattice->name)
    throw Error(ErrorCode::LatticeMismatch,
                "element lives in " + j["lattice"].get<std::string>() + ", expected " + lattice->name);
  GroupRingElement f(lattice);
  for (const auto& t : j["terms"]) f.add_term(vec_from_json(t.at("exp")), to_int(t.at("coef")));
  return f;
}

Json describe(const SymmetricDatum& d, const Fan& fan) {
  auto root_label = [](std::size_t i) { return "a" + std::to_string(i + 1); };
  Json out;
  out["type"] = d.label();
  out["rank"] = d.rank();
  out["group_case"] = d.spec().group_case;
  Json simple = Json::array();
  for (std::size_t i = 0; i < d.rank(); ++i) simple.push_back(root_label(i));
  out["simple_roots"] = simple;
  out["theta_matrix"] = to_json(d.theta());
  Json pos = Json::array();
  for (const auto& a : d.roots().positive_roots()) pos.push_back(to_json(a));
  out["positive_roots"] = pos;
  Json dl = Json::array();
  for (auto i : d.delta_L()) dl.push_back(root_label(i));
  out["delta_L"] = dl;
  Json gam = Json::array();
  for (std::size_t i = 0; i < d.restricted_rank(); ++i)
    gam.push_back(Json{{"label", "g" + std::to_string(i + 1)},
                       {"root", to_json(d.restricted_simple_roots()[i])},
                       {"from", root_label(d.restricted_root_source(i))}});
  out["restricted_simple_roots"] = gam;
  out["rank_G"] = d.rank();
  out["rank_H"] = d.torus_h_rank();
  out["rank_G/H"] = d.restricted_rank();
  out["q_matrix"] = to_json(d.q().matrix());
  out["section_matrix"] = to_json(d.section().matrix());
  out["orders"] = Json{{"W", d.weyl().order()},
                       {"W_L", d.weyl_L().order()},
                       {"W_H", d.weyl_H().order()},
                       {"W_G/H", d.weyl_restricted().order()}};
  out["weyl_order_formula"] = d.roots().weyl_order_formula();

  Json f;
  f["wonderful"] = fan.is_wonderful();
  Json rays = Json::array();
  for (const auto& v : fan.positive_rays()) rays.push_back(to_json(v));
  f["rays"] = rays;
  Json cones = Json::array();
  Json stabs = Json::object();
  for (std::size_t t = 0; t < fan.positive_cones().size(); ++t) {
    cones.push_back(fan.cone_label(t));
    stabs[fan.cone_label(t)] = fan.stabilizer(t).size();
  }
  f["cones"] = cones;
  Json maxes = Json::array();
  for (auto m : fan.maximal_cones()) maxes.push_back(fan.cone_label(m));
  f["maximal_cones"] = maxes;
  f["stabilizer_orders"] = stabs;
  Json full = Json::array();
  for (const auto& v : fan.rays()) full.push_back(to_json(v));
  f["full_fan_rays"] = full;
  f["full_fan_cones"] = fan.cones().size();
  out["fan"] = f;
  return out;
}

Json fixed_points_json(const FixedPointSet& pts) {
  Json a = Json::array();
  for (std::size_t i = 0; i < pts.size(); ++i) a.push_back(pts.label(i));
  return Json{{"scope", to_string(pts.scope())}, {"count", pts.size()}, {"points", a}};
}

Json curves_json(const FixedPointSet& pts, const std::vector<Curve>& curves) {
  Json a = Json::array();
  std::map<int, std::size_t> by_type;
  for (const auto& c : curves) {
    ++by_type[c.type];
    a.push_back(Json{{"type", c.type},
                     {"endpoints", Json::array({pts.label(c.a), pts.label(c.b)})},
                     {"character", to_json(c.character)}});
  }
  Json counts = Json::object();
  for (const auto& [t, n] : by_type) counts["(" + std::to_string(t) + ")"] = n;
  return Json{{"scope", to_string(pts.scope())}, {"count", curves.size()}, {"by_type", counts}, {"curves", a}};
}

Json to_json(const LocalizationClass& c) {
  Json a = Json::array();
  for (std::size_t i = 0; i < c.values.size(); ++i)
    a.push_back(Json{{"point", c.points->label(i)}, {"element", to_json(c.values[i])}});
  return Json{{"scope", to_string(c.points->scope())}, {"values", a}};
}

LocalizationClass localization_from_json(const Json& j, const std::shared_ptr<const FixedPointSet>& pts) {
  if (!j.is_object() || !j.contains("values") || !j["values"].is_array())
    throw bad("localization class needs a \"values\" array");
  std::map<std::string, std::size_t> by_label;
  for (std::size_t i = 0; i < pts->size(); ++i) by_label[pts->label(i)] = i;
  const auto& lat = pts->fan().datum().character_lattice();
  std::vector<std::optional<GroupRingElement>> vals(pts->size());
  for (const auto& v : j["values"]) {
    std::string label = v.at("point").get<std::string>();
    auto it = by_label.find(label);
    if (it == by_label.end()) throw bad("unknown fixed point " + label);
    if (vals[it->second]) throw bad("fixed point " + label + " given twice");
    vals[it->second] = element_from_json(v.at("element"), lat);
  }
  LocalizationClass c{pts, {}};
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (!vals[i]) throw bad("missing value at fixed point " + pts->label(i));
    c.values.push_back(*vals[i]);
  }
  return c;
}

Json to_json(const MembershipResult& r) {
  Json out{{"member", r.ok}};
  if (r.witness)
  {
    const auto& w = *r.witness;
    out["witness"] = Json{{"rule", w.rule}, {"where", w.where}, {"character", to_json(w.character)}};
    if (w.lhs) out["witness"]["lhs"] = to_json(*w.lhs);
    if (w.rhs) out["witness"]["rhs"] = to_json(*w.rhs);
  }
  return out;
}

Json to_json(const KModel& m, const GradedDecomposition& d) {
  Json comps = Json::object();
  for (std::size_t t = 0; t < d.components.size(); ++t)
    if (!d.components[t].is_zero()) comps[m.fan().cone_label(t)] = to_json(d.components[t]);
  return Json{{"lattice", m.lattice()->name}, {"components", comps}};
}

Json to_json(const PresentationReport& r) {
  Json rels = Json::array();
  for (const auto& x : r.relations) {
    Json e{{"kind", x.kind}, {"relation", x.label}, {"vanishes", x.vanishes}};
    if (!x.vanishes) e["nonzero_at"] = x.failing_point;
    rels.push_back(e);
  }
  return Json{{"generators", r.generators}, {"fixed_points", r.fixed_points}, {"relations", rels}, {"ok", r.ok()}};
}

Json to_json(const SplittingReport& r) {
  return Json{{"splitting_exists", r.splitting_exists},
              {"WL_invariant_splitting_exists", r.wl_invariant_splitting_exists},
              {"WH_invariant_splitting_exists", r.wh_invariant_splitting_exists},
              {"adjoint",
               Json{{"splitting_exists", r.adjoint_splitting_exists},
                    {"WL_invariant_splitting_exists", r.adjoint_wl_invariant_splitting_exists},
                    {"WH_invariant_splitting_exists", r.adjoint_wh_invariant_splitting_exists}}}};
}

Json error_json(const std::string& code, const std::string& message) {
  return Json{{"error", Json{{"code", code}, {"message", message}}}};
}

}  // namespace eqk
