#include "eqk/localization.hpp"

#include <algorithm>
#include <set>

#include "eqk/parallel.hpp"

namespace eqk {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

Vec normalize_sign(Vec v) {
  for (Int x : v) {
    if (x == 0) continue;
    if (x < 0) v = negate(v);
    break;
  }
  return v;
}

const RaySet& max_cone_rays(const Fan& fan, std::size_t sigma) {
  return fan.positive_cones().at(fan.maximal_cones().at(sigma));
}

std::string cone_name(const Fan& fan, std::size_t sigma) { return fan.cone_label(fan.maximal_cones().at(sigma)); }

}  // namespace

std::string to_string(Scope s) { return s == Scope::X ? "X" : "Y"; }

FixedPointSet::FixedPointSet(FanPtr fan, Scope scope) : fan_(std::move(fan)), scope_(scope) {
  const auto& d = fan_->datum();
  coset_of_w_.assign(d.weyl().order(), kNone);
  std::vector<std::size_t> reps;
  if (scope_ == Scope::X) {
    reps = d.cosets_W().representatives;
    coset_of_w_ = d.cosets_W().coset_of;
  } else {
    for (auto h : d.cosets_WH().representatives) reps.push_back(d.weyl_H_in_W(h));
    for (std::size_t h = 0; h < d.weyl_H().order(); ++h) coset_of_w_[d.weyl_H_in_W(h)] = d.cosets_WH().coset_of[h];
  }
  cosets_ = reps.size();
  for (std::size_t s = 0; s < fan_->maximal_cones().size(); ++s)
    for (std::size_t c = 0; c < cosets_; ++c) points_.push_back({s, c, reps[c]});
}

std::size_t FixedPointSet::locate(std::size_t sigma, std::size_t w) const {
  std::size_t c = coset_of_w_.at(w);
  if (c == kNone) throw Error(ErrorCode::InvalidInput, "Weyl element outside W_H used for a point of Y");
  return index(sigma, c);
}

std::string FixedPointSet::label(std::size_t i) const {
  const auto& p = points_.at(i);
  return "(" + cone_name(*fan_, p.sigma) + ", " + fan_->datum().weyl_label(p.w) + ")";
}

Curve make_curve(int type, std::size_t a, std::size_t b, Vec character) {
  if (a > b) std::swap(a, b);
  return Curve{type, a, b, normalize_sign(std::move(character))};
}

std::vector<Curve> enumerate_curves(const FixedPointSet& pts) {
  const Fan& fan = pts.fan();
  const auto& d = fan.datum();
  const auto& W = d.weyl();
  std::set<Curve> out;

  auto w_times = [&](std::size_t w, const IntMatrix& m) {
    auto idx = W.index_of(W.element(w) * m);
    if (!idx) throw Error(ErrorCode::RootSystemViolation, "internal: product left W");
    return *idx;
  };

  if (pts.scope() == Scope::X) {
    std::vector<bool> in_L(d.rank(), false);
    for (auto i : d.delta_L()) in_L[i] = true;
    std::vector<std::pair<Vec, IntMatrix>> split_roots;
    for (const auto& a : d.roots().positive_roots()) {
      bool levi = true;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && !in_L[i]) levi = false;
      if (!levi) split_roots.push_back({a, d.roots().reflection(a)});
    }
    for (std::size_t p = 0; p < pts.size(); ++p) {
      const auto& fp = pts[p];
      for (const auto& [a, s] : split_roots)
        out.insert(make_curve(2, p, pts.locate(fp.sigma, w_times(fp.w, s)), W.element(fp.w) * a));
    }
  }

  for (std::size_t p = 0; p < pts.size(); ++p) {
    const auto& fp = pts[p];
    for (auto i : fan.facet_orthogonal_restricted_roots(fp.sigma))
      out.insert(make_curve(3, p, pts.locate(fp.sigma, w_times(fp.w, d.restricted_reflection_lift(i))),
                            W.element(fp.w) * d.restricted_simple_roots()[i]));
  }

  const std::size_t m = fan.maximal_cones().size();
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = s + 1; t < m; ++t) {
      auto chi = fan.shared_facet_character(s, t);
      if (!chi) continue;
      Vec lifted = d.inclusion()(*chi);
      for (std::size_t c = 0; c < pts.coset_count(); ++c) {
        std::size_t p = pts.index(s, c);
        out.insert(make_curve(4, p, pts.index(t, c), W.element(pts[p].w) * lifted));
      }
    }
  return {out.begin(), out.end()};
}

MembershipResult kt_membership(const LocalizationClass& c) { return kt_membership(c, enumerate_curves(*c.points)); }

MembershipResult kt_membership(const LocalizationClass& c, const std::vector<Curve>& curves) {
  if (c.values.size() != c.points->size())
    throw Error(ErrorCode::InvalidInput, "class has " + std::to_string(c.values.size()) + " values for " +
                                             std::to_string(c.points->size()) + " fixed points");
  std::vector<char> ok(curves.size(), 1);
  parallel_for(curves.size(), [&](std::size_t i) {
    const auto& cv = curves[i];
    ok[i] = congruent_mod(c.values[cv.a], c.values[cv.b], cv.character);
  });
  for (std::size_t i = 0; i < curves.size(); ++i) {
    if (ok[i]) continue;
    const auto& cv = curves[i];
    return {false, Witness{"curve of type (" + std::to_string(cv.type) + ")",
                           c.points->label(cv.a) + " -- " + c.points->label(cv.b), cv.character,
                           c.values[cv.a], c.values[cv.b]}};
  }
  return {};
}

MembershipResult kg_membership(const Fan& fan, const std::vector<GroupRingElement>& f) {
  const auto& d = fan.datum();
  const std::size_t m = fan.maximal_cones().size();
  if (f.size() != m)
    throw Error(ErrorCode::InvalidInput, "expected one element per maximal cone (" + std::to_string(m) + ")");
  for (const auto& x : f)
    if (!same_lattice(*x.lattice(), *d.character_lattice()))
      throw Error(ErrorCode::LatticeMismatch, "elements must live in X*(T)");

  for (std::size_t s = 0; s < m; ++s)
    for (const auto& g : d.weyl_L().generators())
      if (!(f[s].act(g) == f[s])) return {false, Witness{"W_L-invariance", cone_name(fan, s), {}, {}, {}}};

  for (std::size_t s = 0; s < m; ++s)
    for (auto i : fan.facet_orthogonal_restricted_roots(s)) {
      const Vec& gamma = d.restricted_simple_roots()[i];
      GroupRingElement moved = f[s].act(d.restricted_reflection_lift(i));
      if (!congruent_mod(moved, f[s], gamma))
        return {false, Witness{"reflection congruence for g" + std::to_string(i + 1), cone_name(fan, s), gamma, moved,
                               f[s]}};
    }

  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = s + 1; t < m; ++t) {
      auto chi = fan.shared_facet_character(s, t);
      if (!chi) continue;
      Vec lifted = d.inclusion()(*chi);
      if (!congruent_mod(f[s], f[t], lifted))
        return {false, Witness{"shared facet congruence", cone_name(fan, s) + " | " + cone_name(fan, t), lifted, f[s],
                               f[t]}};
    }
  return {};
}

LocalizationClass expand(const std::shared_ptr<const FixedPointSet>& points, const std::vector<GroupRingElement>& f) {
  const auto& W = points->fan().datum().weyl();
  if (f.size() != points->fan().maximal_cones().size())
    throw Error(ErrorCode::InvalidInput, "expected one element per maximal cone");
  LocalizationClass c{points, {}};
  for (const auto& p : points->points()) c.values.push_back(f[p.sigma].act(W.element(p.w)));
  return c;
}

std::vector<GroupRingElement> collapse(const LocalizationClass& c) {
  std::vector<GroupRingElement> out;
  for (std::size_t s = 0; s < c.points->fan().maximal_cones().size(); ++s)
    out.push_back(c.values.at(c.points->index(s, 0)));
  return out;
}

LocalizationClass line_bundle_class(const std::shared_ptr<const FixedPointSet>& points, const Vec& u) {
  const auto& d = points->fan().datum();
  Vec lifted = d.inclusion()(u);
  LocalizationClass c{points, {}};
  for (const auto& p : points->points())
    c.values.push_back(GroupRingElement::monomial(d.character_lattice(), d.weyl().element(p.w) * lifted));
  return c;
}

LocalizationClass ray_class(const std::shared_ptr<const FixedPointSet>& points, std::size_t positive_ray) {
  const Fan& fan = points->fan();
  const auto& d = fan.datum();
  if (positive_ray >= fan.positive_rays().size()) throw Error(ErrorCode::InvalidInput, "ray index out of range");
  LocalizationClass c{points, {}};
  std::vector<IntMatrix> duals;
  for (std::size_t s = 0; s < fan.maximal_cones().size(); ++s) duals.push_back(fan.dual_basis(s));
  for (const auto& p : points->points()) {
    const auto& rays = max_cone_rays(fan, p.sigma);
    auto it = std::find(rays.begin(), rays.end(), positive_ray);
    if (it == rays.end()) {
      c.values.push_back(GroupRingElement::constant(d.character_lattice(), 1));
      continue;
    }
    Vec u = duals[p.sigma].row(static_cast<std::size_t>(it - rays.begin()));
    c.values.push_back(GroupRingElement::monomial(d.character_lattice(), d.weyl().element(p.w) * d.inclusion()(u)));
  }
  return c;
}

LocalizationClass constant_class(const std::shared_ptr<const FixedPointSet>& points, Int v) {
  LocalizationClass c{points, {}};
  const auto& l = points->fan().datum().character_lattice();
  for (std::size_t i = 0; i < points->size(); ++i) c.values.push_back(GroupRingElement::constant(l, v));
  return c;
}

LocalizationClass multiply(const LocalizationClass& a, const LocalizationClass& b) {
  if (a.points != b.points) throw Error(ErrorCode::InvalidInput, "classes live on different fixed-point sets");
  LocalizationClass c{a.points, {}};
  for (std::size_t i = 0; i < a.values.size(); ++i) c.values.push_back(a.values[i] * b.values[i]);
  return c;
}

LocalizationClass subtract(const LocalizationClass& a, const LocalizationClass& b) {
  if (a.points != b.points) throw Error(ErrorCode::InvalidInput, "classes live on different fixed-point sets");
  LocalizationClass c{a.points, {}};
  for (std::size_t i = 0; i < a.values.size(); ++i) c.values.push_back(a.values[i] - b.values[i]);
  return c;
}

bool is_zero(const LocalizationClass& c) {
  return std::all_of(c.values.begin(), c.values.end(), [](const GroupRingElement& f) { return f.is_zero(); });
}

}  // namespace eqk
