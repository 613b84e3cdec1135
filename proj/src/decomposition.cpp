#include "eqk/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

namespace eqk {

namespace {

using Rational = boost::multiprecision::cpp_rational;

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

}  // namespace

LatticePtr split_character_lattice(const SymmetricDatum& d) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d.restricted_rank(); ++i) labels.push_back("g" + std::to_string(i + 1));
  for (std::size_t i = 0; i < d.torus_h_rank(); ++i) labels.push_back("h" + std::to_string(i + 1));
  return make_lattice("X*(T/T_H)+X*(T_H)", labels);
}

GroupRingElement kiso_split(const SymmetricDatum& d, const GroupRingElement& f) {
  if (!same_lattice(*f.lattice(), *d.character_lattice()))
    throw Error(ErrorCode::LatticeMismatch, "expected an element of X*(T)");
  const IntMatrix& q = d.q().matrix();
  const IntMatrix& s = d.section().matrix();
  return f.transform(split_character_lattice(d), [&](const Vec& u) {
    Vec b = q * u;
    Vec a = d.to_quotient_coords(sub(u, s * b));
    a.insert(a.end(), b.begin(), b.end());
    return a;
  });
}

GroupRingElement kiso_join(const SymmetricDatum& d, const GroupRingElement& f) {
  const std::size_t r = d.restricted_rank();
  if (!same_lattice(*f.lattice(), *split_character_lattice(d))) throw Error(ErrorCode::LatticeMismatch, "expected an element of the split lattice");
  return f.transform(d.character_lattice(), [&](const Vec& ab) {
    Vec a(ab.begin(), ab.begin() + r);
    Vec b(ab.begin() + r, ab.end());
    return add(d.inclusion()(a), d.section()(b));
  });
}

KModel::KModel(FanPtr fan) : fan_(std::move(fan)), sr_(StanleyReisner::full(*fan_)) {
  const auto& d = datum();
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < fan_->rays().size(); ++j) labels.push_back("X" + std::to_string(j + 1));
  for (std::size_t i = 0; i < d.torus_h_rank(); ++i) labels.push_back("h" + std::to_string(i + 1));
  lattice_ = make_lattice("SR(F)xX*(T_H)", labels);

  for (const auto& g : d.weyl_H().generators()) generator_indices_.push_back(*d.weyl_H().index_of(g));
  w_to_wh_.assign(d.weyl().order(), kNone);
  for (std::size_t h = 0; h < d.weyl_H().order(); ++h) w_to_wh_[d.weyl_H_in_W(h)] = h;

  y_points_ = std::make_shared<const FixedPointSet>(fan_, Scope::Y);
  std::vector<IntMatrix> duals;
  for (std::size_t s = 0; s < fan_->maximal_cones().size(); ++s) duals.push_back(fan_->dual_basis(s));
  for (const auto& p : y_points_->points()) {
    std::vector<Vec> chars(ray_count());
    std::size_t h = w_to_wh_[p.w];
    const auto& perm = fan_->ray_permutation(d.restricted_image(h));
    const auto& rays = fan_->positive_cones()[fan_->maximal_cones()[p.sigma]];
    for (std::size_t k = 0; k < rays.size(); ++k)
      chars[perm[rays[k]]] = d.weyl().element(p.w) * d.inclusion()(duals[p.sigma].row(k));
    ray_characters_.push_back(std::move(chars));
  }
}

GroupRingElement KModel::variable(std::size_t j) const {
  Vec e(lattice_->rank(), 0);
  e.at(j) = 1;
  return GroupRingElement::monomial(lattice_, e);
}

GroupRingElement KModel::torus_h(const Vec& b) const {
  if (b.size() != datum().torus_h_rank()) throw Error(ErrorCode::LatticeMismatch, "expected a point of X*(T_H)");
  Vec e(ray_count(), 0);
  e.insert(e.end(), b.begin(), b.end());
  return GroupRingElement::monomial(lattice_, e);
}

GroupRingElement KModel::act(std::size_t h, const GroupRingElement& f) const {
  const auto& d = datum();
  const auto& perm = fan_->ray_permutation(d.restricted_image(h));
  const IntMatrix& a = d.torus_h_action(h);
  const std::size_t n = ray_count();
  return f.transform(lattice_, [&](const Vec& u) {
    Vec v(u.size(), 0);
    for (std::size_t j = 0; j < n; ++j) v[perm[j]] = u[j];
    Vec b(u.begin() + n, u.end());
    Vec ab = a * b;
    std::copy(ab.begin(), ab.end(), v.begin() + n);
    return v;
  });
}

bool KModel::is_invariant(const GroupRingElement& f) const { return is_invariant(f, generator_indices_); }

bool KModel::is_invariant(const GroupRingElement& f, const std::vector<std::size_t>& subgroup) const {
  for (auto h : subgroup)
    if (!(act(h, f) == f)) return false;
  return true;
}

GroupRingElement KModel::symmetrize(const GroupRingElement& f) const {
  TermAccumulator out(lattice_);
  for (std::size_t h = 0; h < datum().weyl_H().order(); ++h) out.add(act(h, f));
  return out.finish();
}

GroupRingElement KModel::induce(std::size_t positive_cone, const GroupRingElement& f) const {
  const auto& d = datum();
  TermAccumulator out(lattice_);
  std::set<std::size_t> seen;
  for (std::size_t h = 0; h < d.weyl_H().order(); ++h)
    if (seen.insert(fan_->translate(d.restricted_image(h), positive_cone)).second) out.add(act(h, f));
  return out.finish();
}

LocalizationClass KModel::localize(const GroupRingElement& f) const {
  if (!same_lattice(*f.lattice(), *lattice_)) throw Error(ErrorCode::LatticeMismatch, "expected an SR(F)xX*(T_H) element");
  const auto& d = datum();
  const std::size_t n = ray_count();
  LocalizationClass c{y_points_, {}};
  for (std::size_t p = 0; p < y_points_->size(); ++p) {
    const auto& chars = ray_characters_[p];
    c.values.push_back(f.transform(d.character_lattice(), [&](const Vec& u) {
      Vec x = d.section()(Vec(u.begin() + n, u.end()));
      for (std::size_t j = 0; j < n; ++j)
        if (u[j] != 0 && !chars[j].empty()) x = add(x, scale(chars[j], u[j]));
      return x;
    }));
  }
  return c;
}

GroupRingElement KModel::preimage(const LocalizationClass& c, Int box) const {
  if (c.points != y_points_ && (c.points->scope() != Scope::Y || c.values.size() != y_points_->size()))
    throw Error(ErrorCode::InvalidInput, "preimage needs a class on the fixed points of Y");
  if (box < 0) throw Error(ErrorCode::InvalidInput, "box must be nonnegative");
  const auto& d = datum();

  // group the target by T_H-degree; each degree is an independent system
  std::map<Vec, std::vector<std::pair<std::size_t, std::pair<Vec, Int>>>> by_degree;
  for (std::size_t p = 0; p < c.values.size(); ++p)
    for (const auto& [x, coef] : c.values[p].terms()) by_degree[d.q()(x)].push_back({p, {x, coef}});

  // basis of C_tau: X_tau * prod_{j in tau} X_j^{a_j}, |a_j| <= box
  std::vector<GroupRingElement> basis;
  for (const auto& cone : fan_->cones()) {
    const auto& tau = cone.rays;
    const std::size_t k = tau.size();
    std::vector<Int> a(k, -box);
    while (true) {
      Vec e(lattice_->rank(), 0);
      for (std::size_t i = 0; i < k; ++i) e[tau[i]] = a[i];
      basis.push_back(x_tau(tau) * GroupRingElement::monomial(lattice_, e));
      std::size_t i = 0;
      while (i < k && a[i] == box) a[i++] = -box;
      if (i == k) break;
      ++a[i];
    }
  }
  std::vector<LocalizationClass> basis_loc;
  for (const auto& b : basis) basis_loc.push_back(localize(b));

  GroupRingElement result(lattice_);
  for (const auto& [deg, target] : by_degree) {
    Vec shift = d.section()(deg);
    // rows: (fixed point, exponent) pairs; columns: basis elements times e^deg
    std::map<std::pair<std::size_t, Vec>, std::size_t> row_of;
    auto row = [&](std::size_t p, const Vec& x) { return row_of.emplace(std::make_pair(p, x), row_of.size()).first->second; };
    std::vector<std::map<std::size_t, Int>> cols(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
      for (std::size_t p = 0; p < basis_loc[j].values.size(); ++p)
        for (const auto& [x, coef] : basis_loc[j].values[p].terms()) cols[j][row(p, add(x, shift))] += coef;
    std::map<std::size_t, Int> rhs;
    for (const auto& [p, term] : target) rhs[row(p, term.first)] += term.second;

    // sparse elimination; each row is column -> value, column C is the right-hand side
    const std::size_t R = row_of.size(), C = basis.size();
    std::vector<std::map<std::size_t, Rational>> rows(R);
    for (std::size_t j = 0; j < C; ++j)
      for (const auto& [i, v] : cols[j])
        if (v != 0) rows[i][j] = v;
    for (const auto& [i, v] : rhs)
      if (v != 0) rows[i][C] = v;

    std::vector<bool> used(R, false);
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (column, row)
    for (std::size_t j = 0; j < C; ++j) {
      std::size_t best = R;
      for (std::size_t i = 0; i < R; ++i)
        if (!used[i] && rows[i].count(j) && (best == R || rows[i].size() < rows[best].size())) best = i;
      if (best == R) continue;
      used[best] = true;
      Rational inv = 1 / rows[best][j];
      for (auto& [k, v] : rows[best]) v *= inv;
      for (std::size_t i = 0; i < R; ++i) {
        if (i == best) continue;
        auto it = rows[i].find(j);
        if (it == rows[i].end()) continue;
        Rational f = it->second;
        for (const auto& [k, v] : rows[best]) {
          Rational& t = rows[i][k];
          t -= f * v;
          if (t == 0) rows[i].erase(k);
        }
      }
      pivots.push_back({j, best});
    }
    for (std::size_t i = 0; i < R; ++i)
      if (!used[i] && !rows[i].empty())
        throw Error(ErrorCode::NoPreimageInBox, "no preimage with exponents in [-" + std::to_string(box) + ", " +
                                                    std::to_string(box) + "]");
    for (const auto& [j, i] : pivots) {
      if (rows[i].size() > 2 || (rows[i].size() == 2 && !rows[i].count(C)))
        throw Error(ErrorCode::NoPreimageInBox, "the box does not determine a unique preimage");
      auto it = rows[i].find(C);
      if (it == rows[i].end()) continue;
      const Rational& v = it->second;
      if (boost::multiprecision::denominator(v) != 1)
        throw Error(ErrorCode::NoPreimageInBox, "the preimage in the box is not integral");
      Int coef = static_cast<Int>(boost::multiprecision::numerator(v));
      result += (basis[j] * torus_h(deg)).scaled(coef);
    }
  }
  if (!(localize(result).values == c.values))
    throw Error(ErrorCode::NoPreimageInBox, "internal: preimage does not localize back");
  return result;
}

GradedDecomposition kg_decompose(const KModel& m, const GroupRingElement& f) {
  if (!same_lattice(*f.lattice(), *m.lattice())) throw Error(ErrorCode::LatticeMismatch, "expected an SR(F)xX*(T_H) element");
  if (!m.is_invariant(f)) throw Error(ErrorCode::NotInvariant, "input is not invariant under W_H");
  auto all = m.sr().decompose(f);
  const std::size_t np = m.fan().positive_cones().size();
  GradedDecomposition d;
  d.components.assign(all.begin(), all.begin() + static_cast<long>(np));
  if (!components_valid(m, d)) throw Error(ErrorCode::DecompositionResidual, "a component is not stabilizer-invariant");
  if (!(reassemble(m, d) == m.reduce(f))) throw Error(ErrorCode::DecompositionResidual, "reassembly mismatch");
  return d;
}

GroupRingElement reassemble(const KModel& m, const GradedDecomposition& d) {
  TermAccumulator out(m.lattice());
  for (std::size_t t = 0; t < d.components.size(); ++t)
    if (!d.components[t].is_zero()) out.add(m.induce(t, d.components[t]));
  return out.finish();
}

GradedDecomposition graded_multiply(const KModel& m, const GradedDecomposition& a, const GradedDecomposition& b) {
  const auto& fan = m.fan();
  const std::size_t np = fan.positive_cones().size();
  if (a.components.size() != np || b.components.size() != np)
    throw Error(ErrorCode::InvalidInput, "decompositions do not match the fan");
  GradedDecomposition out;
  out.components.assign(np, GroupRingElement(m.lattice()));
  for (std::size_t t = 0; t < np; ++t) {
    if (a.components[t].is_zero()) continue;
    for (std::size_t s = 0; s < np; ++s) {
      if (b.components[s].is_zero()) continue;
      RaySet u;
      const auto& x = fan.positive_cones()[t];
      const auto& y = fan.positive_cones()[s];
      std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(u));
      auto g = fan.positive_cone_index(u);
      if (!g) continue;  // tau and sigma do not span a cone
      out.components[*g] += a.components[t] * b.components[s];
    }
  }
  return out;
}

bool filtration_membership(const KModel& m, const GradedDecomposition& d, std::size_t tau) {
  const auto& fan = m.fan();
  if (tau >= fan.positive_cones().size()) throw Error(ErrorCode::ConeNotInFan, "cone index out of range");
  for (std::size_t s = 0; s < d.components.size(); ++s)
    if (!d.components[s].is_zero() && !fan.is_face(tau, s)) return false;
  return true;
}

GradedDecomposition unit_decomposition(const KModel& m) {
  GradedDecomposition d;
  d.components.assign(m.fan().positive_cones().size(), GroupRingElement(m.lattice()));
  d.components[0] = m.one();
  return d;
}

bool components_valid(const KModel& m, const GradedDecomposition& d) {
  const auto& fan = m.fan();
  const auto& dat = m.datum();
  std::vector<std::size_t> wl;
  for (const auto& g : dat.weyl_L().generators()) wl.push_back(*dat.weyl_H().index_of(g));
  if (d.components.size() != fan.positive_cones().size()) return false;
  for (std::size_t t = 0; t < d.components.size(); ++t) {
    const auto& c = d.components[t];
    if (c.is_zero()) continue;
    if (!m.sr().in_component(c, fan.positive_cones()[t])) return false;
    if (!m.is_invariant(c, fan.stabilizer(t))) return false;
    if (!m.is_invariant(c, wl)) return false;
  }
  return true;
}

}  // namespace eqk
