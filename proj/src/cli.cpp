#include "eqk/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "eqk/verification.hpp"

namespace eqk {

namespace {

Error bad(const std::string& msg) { return Error(ErrorCode::InvalidInput, msg); }

struct Context {
  DatumPtr datum;
  FanPtr fan;
  Json args;
  Int box;
};

Scope scope_arg(const Json& args, Scope fallback) {
  if (!args.contains("scope")) return fallback;
  auto s = args["scope"].get<std::string>();
  if (s == "X") return Scope::X;
  if (s == "Y") return Scope::Y;
  throw bad("scope must be \"X\" or \"Y\"");
}

std::size_t cone_arg(const Fan& fan, const Json& args, const char* key) {
  if (!args.contains(key)) throw bad(std::string("missing argument \"") + key + "\"");
  auto label = args[key].get<std::string>();
  auto c = fan.cone_from_label(label);
  if (!c) throw Error(ErrorCode::ConeNotInFan, label + " is not a cone of the fan");
  return *c;
}

// Invariant SR element: {"symmetrize": e} averages first, otherwise e must be invariant.
GroupRingElement sr_arg(const KModel& m, const Json& j) {
  if (j.is_object() && j.contains("symmetrize")) return m.reduce(m.symmetrize(element_from_json(j["symmetrize"], m.lattice())));
  return m.reduce(element_from_json(j, m.lattice()));
}

LocalizationClass kt_class(const Context& c, const std::shared_ptr<const FixedPointSet>& pts) {
  const Json& a = c.args;
  const auto& d = *c.datum;
  if (a.contains("class")) return localization_from_json(a["class"], pts);
  if (a.contains("line_bundle")) {
    Vec u = vec_from_json(a["line_bundle"]);
    if (u.size() != d.restricted_rank()) throw Error(ErrorCode::LatticeMismatch, "line_bundle needs gamma-coordinates");
    return line_bundle_class(pts, u);
  }
  if (a.contains("ray")) {
    Int r = a["ray"].get<Int>();
    if (r < 1) throw bad("rays are numbered from 1");
    return ray_class(pts, static_cast<std::size_t>(r - 1));
  }
  if (a.contains("elements")) {
    std::vector<GroupRingElement> f;
    for (const auto& e : a["elements"]) f.push_back(element_from_json(e, d.character_lattice()));
    return expand(pts, f);
  }
  return constant_class(pts, a.value("constant", Int{1}));
}

std::vector<GroupRingElement> kg_tuple(const Context& c) {
  const Json& a = c.args;
  const auto& d = *c.datum;
  const auto& L = d.character_lattice();
  const std::size_t m = c.fan->maximal_cones().size();
  if (a.contains("elements")) {
    std::vector<GroupRingElement> f;
    for (const auto& e : a["elements"]) f.push_back(element_from_json(e, L));
    return f;
  }
  if (a.contains("element")) return std::vector<GroupRingElement>(m, element_from_json(a["element"], L));
  if (a.contains("orbit_sum_of"))
    return std::vector<GroupRingElement>(m, orbit_sum(d.weyl_H(), element_from_json(a["orbit_sum_of"], L)));
  return std::vector<GroupRingElement>(m, GroupRingElement::constant(L, a.value("constant", Int{1})));
}

Json run_verb(const std::string& verb, const Context& c, int& exit_code) {
  const Fan& fan = *c.fan;
  if (verb == "describe") return describe(*c.datum, fan);
  if (verb == "fixed-points") {
    FixedPointSet pts(c.fan, scope_arg(c.args, Scope::X));
    return fixed_points_json(pts);
  }
  if (verb == "curves") {
    FixedPointSet pts(c.fan, scope_arg(c.args, Scope::X));
    return curves_json(pts, enumerate_curves(pts));
  }
  if (verb == "check-kt") {
    auto pts = std::make_shared<const FixedPointSet>(c.fan, scope_arg(c.args, Scope::X));
    auto r = kt_membership(kt_class(c, pts));
    if (!r.ok) exit_code = 1;
    return to_json(r);
  }
  if (verb == "check-kg") {
    auto r = kg_membership(fan, kg_tuple(c));
    if (!r.ok) exit_code = 1;
    return to_json(r);
  }
  if (verb == "decompose") {
    KModel m(c.fan);
    GroupRingElement f(m.lattice());
    if (c.args.contains("localization")) {
      auto cls = localization_from_json(c.args["localization"], m.y_points());
      f = m.preimage(cls, c.box);
    } else if (c.args.contains("element")) {
      f = sr_arg(m, c.args["element"]);
    } else {
      throw bad("decompose needs \"element\" or \"localization\"");
    }
    auto dec = kg_decompose(m, f);
    return Json{{"element", to_json(f)}, {"decomposition", to_json(m, dec)}, {"reassembles", reassemble(m, dec) == f}};
  }
  if (verb == "multiply") {
    KModel m(c.fan);
    if (!c.args.contains("left") || !c.args.contains("right")) throw bad("multiply needs \"left\" and \"right\"");
    auto f = sr_arg(m, c.args["left"]);
    auto g = sr_arg(m, c.args["right"]);
    auto prod = graded_multiply(m, kg_decompose(m, f), kg_decompose(m, g));
    bool agrees = prod.components == kg_decompose(m, m.reduce(f * g)).components;
    if (!agrees) exit_code = 1;
    return Json{{"product", to_json(m, prod)}, {"agrees_with_direct_product", agrees}};
  }
  if (verb == "filtration") {
    KModel m(c.fan);
    if (!c.args.contains("element")) throw bad("filtration needs \"element\"");
    std::size_t tau = cone_arg(fan, c.args, "cone");
    auto dec = kg_decompose(m, sr_arg(m, c.args["element"]));
    return Json{{"cone", fan.cone_label(tau)},
                {"member", filtration_membership(m, dec, tau)},
                {"decomposition", to_json(m, dec)}};
  }
  if (verb == "presentation") {
    auto rep = presentation_check(c.fan);
    if (!rep.ok()) exit_code = 1;
    return to_json(rep);
  }
  if (verb == "splitting-check") return to_json(splitting_check(*c.datum));
  if (verb == "verify") {
    SuiteOptions opt;
    opt.seed = c.args.value("seed", opt.seed);
    opt.samples = c.args.value("samples", opt.samples);
    opt.congruence_triples = c.args.value("congruence_triples", opt.congruence_triples);
    Json crit = Json::array();
    bool all = true;
    for (const auto& r : run_verification(c.fan, opt)) {
      crit.push_back(to_json(r));
      all = all && r.passed;
    }
    if (!all) exit_code = 1;
    return Json{{"criteria", crit}, {"passed", all}};
  }
  throw bad("unknown verb \"" + verb + "\"");
}

}  // namespace

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> v{"describe",  "fixed-points", "curves",     "check-kt",
                                          "check-kg",  "decompose",    "multiply",   "filtration",
                                          "presentation", "splitting-check", "verify"};
  return v;
}

RunResult run(const JobSpec& job) {
  RunResult out;
  try {
    if (std::find(verbs().begin(), verbs().end(), job.verb) == verbs().end())
      throw bad("unknown verb \"" + job.verb + "\"");
    if (job.box < 0) throw bad("--box must be nonnegative");
    JobInput in = parse_job(job.spec);
    Context c{SymmetricDatum::build(in.datum), nullptr, in.args, job.box};
    c.fan = Fan::build(c.datum, in.fan);
    out.report = run_verb(job.verb, c, out.exit_code);
  } catch (const Error& e) {
    out = {2, error_json(std::string(to_string(e.code())), e.what())};
  } catch (const Json::exception& e) {
    out = {2, error_json(std::string(to_string(ErrorCode::InvalidInput)), e.what())};
  } catch (const std::exception& e) {
    out = {2, error_json("InternalError", e.what())};
  }
  return out;
}

}  // namespace eqk
