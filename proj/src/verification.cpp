#include "eqk/verification.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "eqk/presentation.hpp"

namespace eqk {

namespace {

std::string str(std::size_t n) { return std::to_string(n); }

Int uniform(std::mt19937_64& rng, Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); }

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

Int nonzero_coef(std::mt19937_64& rng, Int range) {
  Int c = 0;
  while (c == 0) c = uniform(rng, -range, range);
  return c;
}

// Primitive normal of the hyperplane spanned by r-1 vectors in Z^r (cofactors).
Vec facet_normal(const std::vector<Vec>& facet, std::size_t r) {
  Vec u(r, 0);
  if (r == 1) return Vec{1};
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Vec> rows;
    for (const auto& v : facet) {
      Vec m;
      for (std::size_t j = 0; j < r; ++j)
        if (j != i) m.push_back(v[j]);
      rows.push_back(m);
    }
    Int d = determinant(IntMatrix::from_rows(rows, r - 1));
    u[i] = (i % 2 == 0) ? d : -d;
  }
  Int c = content(u);
  if (c == 0) return u;
  for (auto& x : u) x /= c;
  return u;
}

Vec gamma_combination(const SymmetricDatum& d, const Vec& u) {
  Vec x(d.rank(), 0);
  for (std::size_t i = 0; i < u.size(); ++i) x = add(x, scale(d.restricted_simple_roots()[i], u[i]));
  return x;
}

// Rays of a maximal cone of F+ as vectors.
std::vector<Vec> cone_vectors(const Fan& fan, std::size_t sigma) {
  std::vector<Vec> out;
  for (auto j : fan.positive_cones()[fan.maximal_cones()[sigma]]) out.push_back(fan.positive_rays()[j]);
  return out;
}

// gamma_i with exactly one ray of sigma off the wall gamma_i = 0
std::vector<std::size_t> orthogonal_walls(const Fan& fan, std::size_t sigma) {
  std::vector<std::size_t> out;
  auto rays = cone_vectors(fan, sigma);
  for (std::size_t i = 0; i < fan.dim(); ++i) {
    std::size_t off = 0;
    for (const auto& v : rays) off += v[i] != 0;
    if (off == 1) out.push_back(i);
  }
  return out;
}

// Shared facet of two maximal cones, if they have one.
std::optional<std::vector<Vec>> common_facet(const Fan& fan, std::size_t s, std::size_t t) {
  const auto& a = fan.positive_cones()[fan.maximal_cones()[s]];
  const auto& b = fan.positive_cones()[fan.maximal_cones()[t]];
  RaySet both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  if (both.size() + 1 != fan.dim()) return std::nullopt;
  std::vector<Vec> out;
  for (auto j : both) out.push_back(fan.positive_rays()[j]);
  return out;
}

GroupRingElement monomial_power(const GroupRingElement& m, Int e) {
  if (m.size() != 1) throw CheckFailure("expected a monomial");
  const auto& [u, c] = *m.terms().begin();
  if (c != 1) throw CheckFailure("expected a unit monomial");
  return GroupRingElement::monomial(m.lattice(), scale(u, e));
}

bool matches_some(const GroupRingElement& x, const std::vector<GroupRingElement>& pool) {
  return std::any_of(pool.begin(), pool.end(), [&](const GroupRingElement& y) { return x == y; });
}

// Witness of a failed congruence must be a genuine non-congruence.
void validate_witness(const MembershipResult& r, const std::vector<GroupRingElement>& values, const std::string& what) {
  require(!r.ok, what + ": perturbed class still accepted");
  require(r.witness.has_value(), what + ": no witness");
  const auto& w = *r.witness;
  if (!w.lhs) return;  // invariance failure
  require(w.rhs.has_value(), what + ": witness lacks a side");
  require(!oracle::congruent_by_projection(*w.lhs, *w.rhs, w.character),
          what + ": witness sides are congruent mod its character");
  require(matches_some(*w.rhs, values) || matches_some(*w.lhs, values), what + ": witness is not about the input");
}

}  // namespace

namespace oracle {

bool congruent_by_projection(const GroupRingElement& f, const GroupRingElement& g, const Vec& chi) {
  if (is_zero(chi)) throw Error(ErrorCode::ZeroCharacter, "congruence modulo 1 - e^0");
  std::size_t i0 = 0;
  while (chi[i0] == 0) ++i0;
  const Int m = chi[i0] < 0 ? -chi[i0] : chi[i0];
  const Vec step = chi[i0] < 0 ? negate(chi) : chi;
  std::map<Vec, Int> classes;
  auto add_class = [&](const Vec& x, Int c) {
    Int r = ((x[i0] % m) + m) % m;
    Int t = (x[i0] - r) / m;
    classes[sub(x, scale(step, t))] += c;
  };
  for (const auto& [x, c] : f.terms()) add_class(x, c);
  for (const auto& [x, c] : g.terms()) add_class(x, -c);
  return std::all_of(classes.begin(), classes.end(), [](const auto& kv) { return kv.second == 0; });
}

std::size_t coset_count(const MatrixGroup& group, const MatrixGroup& subgroup) {
  std::set<std::set<std::string>> cosets;
  for (const auto& g : group.elements()) {
    std::set<std::string> c;
    for (const auto& h : subgroup.elements()) c.insert((g * h).key());
    cosets.insert(std::move(c));
  }
  return cosets.size();
}

std::set<Curve> brute_force_curves(const FixedPointSet& pts) {
  const Fan& fan = pts.fan();
  const auto& d = fan.datum();
  const auto& W = d.weyl();
  const std::size_t r = fan.dim();
  std::set<Curve> out;

  std::vector<std::size_t> wl_in_w;
  for (const auto& l : d.weyl_L().elements()) wl_in_w.push_back(*W.index_of(l));
  std::vector<bool> in_L(d.rank(), false);
  for (auto i : d.delta_L()) in_L[i] = true;
  // reflection matrix -> positive root outside the Levi subsystem
  std::map<std::string, Vec> split_reflections;
  for (const auto& a : d.roots().positive_roots()) {
    bool levi = true;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0 && !in_L[i]) levi = false;
    if (!levi) split_reflections[d.roots().reflection(a).key()] = a;
  }

  auto restricted_matrix = [&](const IntMatrix& m) -> std::optional<IntMatrix> {
    std::vector<Vec> cols;
    try {
      for (const auto& g : d.restricted_simple_roots()) cols.push_back(d.to_quotient_coords(m * g));
    } catch (const Error&) {
      return std::nullopt;
    }
    return IntMatrix::from_columns(cols, r);
  };

  for (std::size_t a = 0; a < pts.size(); ++a) {
    const auto& pa = pts[a];
    const std::size_t inv_a = W.inverse(pa.w);
    for (std::size_t b = 0; b < pts.size(); ++b) {
      if (a == b) continue;
      const auto& pb = pts[b];
      if (pa.sigma == pb.sigma) {
        auto walls = orthogonal_walls(fan, pa.sigma);
        for (auto l : wl_in_w) {
          const IntMatrix& m = W.element(W.multiply(inv_a, W.multiply(pb.w, l)));
          if (pts.scope() == Scope::X) {
            auto it = split_reflections.find(m.key());
            if (it != split_reflections.end()) out.insert(make_curve(2, a, b, W.element(pa.w) * it->second));
          }
          if (!d.weyl_H().contains(m)) continue;
          auto rm = restricted_matrix(m);
          if (!rm) continue;
          const IntMatrix id = IntMatrix::identity(r);
          if (!(*rm * *rm == id) || rank(*rm - id) != 1) continue;
          for (auto i : walls) {
            Vec e(r, 0);
            e[i] = 1;
            if (*rm * e == negate(e)) out.insert(make_curve(3, a, b, W.element(pa.w) * d.restricted_simple_roots()[i]));
          }
        }
      } else if (pa.coset == pb.coset) {
        auto facet = common_facet(fan, pa.sigma, pb.sigma);
        if (!facet) continue;
        Vec u = facet_normal(*facet, r);
        out.insert(make_curve(4, a, b, W.element(pa.w) * gamma_combination(d, u)));
      }
    }
  }
  return out;
}

bool kg_membership(const Fan& fan, const std::vector<GroupRingElement>& f) {
  const auto& d = fan.datum();
  const std::size_t m = fan.maximal_cones().size();
  if (f.size() != m) return false;
  for (const auto& x : f)
    for (const auto& l : d.weyl_L().elements())
      if (!(x.act(l) == x)) return false;
  for (std::size_t s = 0; s < m; ++s)
    for (auto i : orthogonal_walls(fan, s))
      if (!congruent_by_projection(f[s].act(d.restricted_reflection_lift(i)), f[s], d.restricted_simple_roots()[i]))
        return false;
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = s + 1; t < m; ++t) {
      auto facet = common_facet(fan, s, t);
      if (!facet) continue;
      if (!congruent_by_projection(f[s], f[t], gamma_combination(d, facet_normal(*facet, fan.dim())))) return false;
    }
  return true;
}

}  // namespace oracle

Json to_json(const CriterionResult& r) {
  // no timings, so reports stay byte-identical across runs
  return Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"limit_seconds", r.limit_seconds}};
}

void require(bool condition, const std::string& what) {
  if (!condition) throw CheckFailure(what);
}

CriterionResult run_criterion(int id, std::string name, double limit_seconds, const std::function<std::string()>& body) {
  CriterionResult r{id, std::move(name), false, "", 0, limit_seconds};
  auto t0 = std::chrono::steady_clock::now();
  try {
    r.detail = body();
    r.passed = true;
  } catch (const Error& e) {
    r.detail = std::string(to_string(e.code())) + ": " + e.what();
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.passed && r.seconds > limit_seconds) {
    r.passed = false;
    r.detail += " (over the time limit)";
  }
  return r;
}

GroupRingElement random_element(const LatticePtr& l, std::mt19937_64& rng, std::size_t terms, Int range) {
  GroupRingElement f(l);
  for (std::size_t k = 0; k < terms; ++k) {
    Vec u(l->rank());
    for (auto& x : u) x = uniform(rng, -range, range);
    f.add_term(u, nonzero_coef(rng, 3));
  }
  return f;
}

GroupRingElement random_component(const KModel& m, std::size_t tau, std::mt19937_64& rng) {
  const auto& rays = m.fan().positive_cones().at(tau);
  GroupRingElement base(m.lattice());
  const std::size_t terms = 1 + pick(rng, 2);
  for (std::size_t k = 0; k < terms; ++k) {
    Vec e(m.lattice()->rank(), 0);
    for (auto j : rays) e[j] = uniform(rng, -1, 1);
    for (std::size_t i = m.ray_count(); i < e.size(); ++i) e[i] = uniform(rng, -1, 1);
    base.add_term(e, nonzero_coef(rng, 3));
  }
  base = base * m.x_tau(rays);
  GroupRingElement out(m.lattice());
  for (auto h : m.fan().stabilizer(tau)) out += m.act(h, base);
  return out;
}

GradedDecomposition random_filtered(const KModel& m, std::size_t tau, std::mt19937_64& rng) {
  const auto& fan = m.fan();
  GradedDecomposition d;
  d.components.assign(fan.positive_cones().size(), GroupRingElement(m.lattice()));
  d.components[tau] = random_component(m, tau, rng);
  for (std::size_t s = 0; s < fan.positive_cones().size(); ++s)
    if (s != tau && fan.is_face(tau, s) && pick(rng, 2) == 0) d.components[s] = random_component(m, s, rng);
  return d;
}

std::string check_datum(const Fan& fan) {
  const auto& d = fan.datum();
  const std::size_t n = d.rank(), r = d.restricted_rank();
  require(d.weyl().order() == d.roots().weyl_order_formula(), "|W| differs from the product formula");
  require(d.weyl_H().order() == d.weyl_L().order() * d.weyl_restricted().order(), "|W_H| != |W_L| |W_{G/H}|");
  require(oracle::coset_count(d.weyl(), d.weyl_L()) == d.cosets_W().size(), "coset count of W/W_L");
  require(oracle::coset_count(d.weyl_H(), d.weyl_L()) == d.cosets_WH().size(), "coset count of W_H/W_L");
  require(d.theta() * d.theta() == IntMatrix::identity(n), "theta is not an involution");
  for (std::size_t i = 0; i < r; ++i) {
    const Vec& g = d.restricted_simple_roots()[i];
    require(d.theta() * g == negate(g), "a restricted root is not anti-invariant");
    require(is_zero(d.q()(g)), "q does not kill a restricted root");
  }
  require(d.q().matrix() * d.section().matrix() == IntMatrix::identity(d.torus_h_rank()), "section is not a section");
  std::size_t fibers = 0;
  std::set<Vec> images;
  for (const auto& a : d.roots().roots()) images.insert(d.q()(a));
  for (const auto& b : images) fibers += d.q_fiber(b).size();
  require(fibers == d.roots().roots().size(), "q-fibers do not partition the roots");
  if (fan.is_wonderful()) require(fan.positive_cones().size() == (std::size_t{1} << r), "wonderful fan cone count");
  std::ostringstream os;
  os << d.label() << ": |W|=" << d.weyl().order() << " |W_L|=" << d.weyl_L().order()
     << " |W_H|=" << d.weyl_H().order() << " |W_G/H|=" << d.weyl_restricted().order() << ", "
     << fan.positive_cones().size() << " cones";
  return os.str();
}

std::string check_fixed_points_and_curves(const FanPtr& fan) {
  const auto& d = fan->datum();
  const std::size_t r = d.restricted_rank();
  const std::size_t half_split = (d.roots().roots().size() - [&] {
    std::size_t levi = 0;
    std::vector<bool> in_L(d.rank(), false);
    for (auto i : d.delta_L()) in_L[i] = true;
    for (const auto& a : d.roots().roots()) {
      bool l = true;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && !in_L[i]) l = false;
      levi += l;
    }
    return levi;
  }()) / 2;

  std::ostringstream os;
  for (Scope scope : {Scope::X, Scope::Y}) {
    FixedPointSet pts(fan, scope);
    const auto& group = scope == Scope::X ? d.weyl() : d.weyl_H();
    const std::size_t cosets = oracle::coset_count(group, d.weyl_L());
    require(pts.size() == fan->maximal_cones().size() * cosets, to_string(scope) + ": fixed point count");

    auto curves = enumerate_curves(pts);
    auto brute = oracle::brute_force_curves(pts);
    require(std::set<Curve>(curves.begin(), curves.end()) == brute, to_string(scope) + ": curves differ from brute force");

    // one type per curve
    std::map<std::tuple<std::size_t, std::size_t, Vec>, int> type_of;
    for (const auto& c : curves)
      require(type_of.emplace(std::make_tuple(c.a, c.b, c.character), c.type).second,
              to_string(scope) + ": curve classified twice");

    // characters: roots, translates of restricted roots, translates of facet normals
    const auto& W = d.weyl();
    for (const auto& c : curves) {
      const IntMatrix winv = W.element(W.inverse(pts[c.a].w));
      Vec local = winv * c.character;
      if (c.type == 2) {
        require(d.roots().is_root(c.character), "type (2) character is not a root");
      } else if (c.type == 3) {
        bool found = false;
        for (const auto& g : d.restricted_simple_roots()) found = found || local == g || local == negate(g);
        require(found, "type (3) character is not a translated restricted simple root");
      } else {
        require(c.type == 4, "unknown curve type");
        Vec u = d.to_quotient_coords(local);
        require(content(u) == 1, "type (4) character is not primitive");
      }
    }

    // stable under left multiplication by generators
    std::set<Curve> set(curves.begin(), curves.end());
    std::vector<std::size_t> gens;
    for (const auto& g : group.generators()) gens.push_back(*W.index_of(g));
    for (auto g : gens)
      for (const auto& c : curves) {
        std::size_t a = pts.locate(pts[c.a].sigma, W.multiply(g, pts[c.a].w));
        std::size_t b = pts.locate(pts[c.b].sigma, W.multiply(g, pts[c.b].w));
        require(set.count(make_curve(c.type, a, b, W.element(g) * c.character)) == 1,
                to_string(scope) + ": curve set is not Weyl-stable");
      }

    // every fixed point has dim-many curves
    std::vector<std::size_t> valence(pts.size(), 0);
    for (const auto& c : curves) ++valence[c.a], ++valence[c.b];
    const std::size_t expect = r + (scope == Scope::X ? half_split : 0);
    for (auto v : valence) require(v == expect, to_string(scope) + ": wrong number of curves at a fixed point");

    std::map<int, std::size_t> by_type;
    for (const auto& c : curves) ++by_type[c.type];
    os << to_string(scope) << ": " << pts.size() << " points, " << curves.size() << " curves (";
    for (int t : {2, 3, 4}) os << by_type[t] << (t == 4 ? ")" : "/");
    if (scope == Scope::X) os << "; ";
  }
  return os.str();
}

std::string check_congruences(const FanPtr& fan, const SuiteOptions& opt) {
  const auto& d = fan->datum();
  const auto& L = d.character_lattice();
  std::mt19937_64 rng(opt.seed);
  auto xpts = std::make_shared<const FixedPointSet>(fan, Scope::X);
  const auto curves = enumerate_curves(*xpts);
  const std::size_t m = fan->maximal_cones().size();

  std::vector<std::vector<GroupRingElement>> rays;
  for (std::size_t j = 0; j < fan->positive_rays().size(); ++j) rays.push_back(collapse(ray_class(xpts, j)));

  std::size_t kt_checked = 0;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    GroupRingElement g = orbit_sum(d.weyl_H(), random_element(L, rng, 1 + pick(rng, 3), 2));
    std::vector<GroupRingElement> f(m, g);
    for (std::size_t j = 0; j < rays.size(); ++j) {
      Int e = uniform(rng, -1, 2);
      for (std::size_t s = 0; s < m; ++s) f[s] = f[s] * monomial_power(rays[j][s], e);
    }
    require(oracle::kg_membership(*fan, f), "oracle rejects a generated class");
    auto res = kg_membership(*fan, f);
    require(res.ok, "orbit-sum class rejected: " + (res.witness ? res.witness->rule : std::string("?")));

    // a W_L-orbit sum added at one cone breaks a congruence
    std::vector<GroupRingElement> bad;
    for (int attempt = 0; attempt < 200 && bad.empty(); ++attempt) {
      Vec lambda(d.rank());
      for (auto& x : lambda) x = uniform(rng, -2, 2);
      auto p = orbit_sum(d.weyl_L(), exp_of(L, lambda));
      auto trial = f;
      trial[pick(rng, m)] += p;
      if (!oracle::kg_membership(*fan, trial)) bad = std::move(trial);
    }
    require(!bad.empty(), "no breaking perturbation found");
    validate_witness(kg_membership(*fan, bad), bad, "kg perturbation");

    // the same class on all of X, then a unit bumped at one fixed point
    if (k < 10) {
      auto c = expand(xpts, f);
      require(kt_membership(c, curves).ok, "kt rejects an expanded class");
      std::size_t p = pick(rng, c.values.size());
      c.values[p] += GroupRingElement::constant(L, 1);
      validate_witness(kt_membership(c, curves), c.values, "kt perturbation");
      ++kt_checked;
    }
  }

  std::size_t agreed = 0, congruent = 0;
  for (std::size_t k = 0; k < opt.congruence_triples; ++k) {
    Vec chi(d.rank(), 0);
    while (is_zero(chi))
      for (auto& x : chi) x = uniform(rng, -2, 2);
    if (pick(rng, 4) == 0) chi = scale(chi, 2);
    auto f = random_element(L, rng, 1 + pick(rng, 4), 3);
    GroupRingElement g(L);
    if (k % 2 == 0) {
      auto h = random_element(L, rng, 1 + pick(rng, 3), 2);
      g = f + (GroupRingElement::constant(L, 1) - exp_of(L, chi)) * h;
    } else {
      g = f + random_element(L, rng, 1 + pick(rng, 2), 2);
    }
    bool lib = congruent_mod(f, g, chi);
    bool ref = oracle::congruent_by_projection(f, g, chi);
    require(lib == ref, "congruent_mod disagrees with the projection oracle for chi = " + to_string(chi));
    agreed += 1;
    congruent += lib;
  }
  return str(opt.samples) + " orbit-sum classes accepted and perturbations rejected (" + str(kt_checked) +
         " on X); " + str(agreed) + " triples agree (" + str(congruent) + " congruent)";
}

std::string check_sr_decomposition(const FanPtr& fan, const SuiteOptions& opt) {
  KModel m(fan);
  std::mt19937_64 rng(opt.seed + 1);
  const auto& L = m.lattice();
  const std::size_t n = m.ray_count();

  auto random_sr = [&] {
    GroupRingElement f(L);
    const std::size_t terms = 1 + pick(rng, 3);
    for (std::size_t k = 0; k < terms; ++k) {
      Vec e(L->rank(), 0);
      for (int t = 0; t < 2; ++t) e[pick(rng, n)] = uniform(rng, -2, 2);
      for (std::size_t i = n; i < e.size(); ++i) e[i] = uniform(rng, -1, 1);
      f.add_term(e, nonzero_coef(rng, 3));
    }
    return f;
  };

  for (std::size_t k = 0; k < opt.samples; ++k) {
    auto f = random_sr();
    auto parts = m.sr().decompose(f);
    GroupRingElement sum(L);
    for (const auto& c : parts) sum += c;
    require(sum == m.reduce(f), "Stanley-Reisner components do not sum to the normal form");
  }

  std::vector<GroupRingElement> inv;
  for (std::size_t k = 0; k < opt.samples + 1; ++k) inv.push_back(m.reduce(m.symmetrize(random_sr())));
  std::vector<GradedDecomposition> dec;
  for (const auto& f : inv) {
    auto d = kg_decompose(m, f);
    require(reassemble(m, d) == f, "reassembly differs from the input");
    require(components_valid(m, d), "a component is not in C_tau (x) R(T_H)^{W_tau}");
    dec.push_back(std::move(d));
  }
  for (std::size_t k = 0; k < opt.samples; ++k) {
    auto prod = graded_multiply(m, dec[k], dec[k + 1]);
    auto direct = kg_decompose(m, m.reduce(inv[k] * inv[k + 1]));
    require(prod.components == direct.components, "graded_multiply differs from multiply-then-decompose");
  }

  // components on cones of F whose union is not a cone multiply to zero
  std::size_t zero_products = 0;
  const auto& cones = fan->cones();
  auto component_of = [&](const RaySet& rays) {
    Vec e(L->rank(), 0);
    for (auto j : rays) e[j] = uniform(rng, -2, 2);
    for (std::size_t i = n; i < e.size(); ++i) e[i] = uniform(rng, -1, 1);
    return m.x_tau(rays) * GroupRingElement::monomial(L, e, nonzero_coef(rng, 3));
  };
  for (std::size_t a = 0; a < cones.size(); ++a)
    for (std::size_t b = a + 1; b < cones.size(); ++b) {
      RaySet u;
      std::set_union(cones[a].rays.begin(), cones[a].rays.end(), cones[b].rays.begin(), cones[b].rays.end(),
                     std::back_inserter(u));
      if (m.sr().is_face(u)) continue;
      require(m.reduce(component_of(cones[a].rays) * component_of(cones[b].rays)).is_zero(),
              "product over a non-spanning pair is nonzero");
      ++zero_products;
    }
  return str(opt.samples) + " reductions and " + str(inv.size()) + " invariant decompositions reassemble; " +
         str(opt.samples) + " graded products agree; " + str(zero_products) + " non-spanning products vanish";
}

std::string check_kiso(const SymmetricDatum& d, const SuiteOptions& opt) {
  std::mt19937_64 rng(opt.seed + 2);
  const auto& L = d.character_lattice();
  auto S = split_character_lattice(d);
  for (std::size_t k = 0; k < opt.samples; ++k) {
    auto f = random_element(L, rng, 1 + pick(rng, 4), 3);
    auto g = random_element(L, rng, 1 + pick(rng, 4), 3);
    require(kiso_join(d, kiso_split(d, f)) == f, "join(split(f)) != f");
    require(kiso_split(d, f * g) == kiso_split(d, f) * kiso_split(d, g), "split is not multiplicative");
    auto a = random_element(S, rng, 1 + pick(rng, 4), 3);
    auto b = random_element(S, rng, 1 + pick(rng, 4), 3);
    require(kiso_split(d, kiso_join(d, a)) == a, "split(join(a)) != a");
    require(kiso_join(d, a * b) == kiso_join(d, a) * kiso_join(d, b), "join is not multiplicative");
    require(kiso_join(d, a + b) == kiso_join(d, a) + kiso_join(d, b), "join is not additive");
  }
  require(kiso_split(d, GroupRingElement::constant(L, 1)) == GroupRingElement::constant(S, 1), "split(1) != 1");
  return str(opt.samples) + " round trips in both directions, ring maps";
}

std::string check_splitting(const SymmetricDatum& d, std::optional<std::pair<bool, bool>> expected) {
  auto rep = splitting_check(d);
  auto b = [](bool x) { return x ? std::string("true") : std::string("false"); };
  if (expected) {
    require(rep.splitting_exists == expected->first, "splitting existence differs from the expected value");
    require(rep.wl_invariant_splitting_exists == expected->second,
            "W_L-invariant splitting existence differs from the expected value");
  } else {
    require(rep.adjoint_splitting_exists, "the restriction on X*(T) does not split");
  }
  require(!rep.wh_invariant_splitting_exists || rep.wl_invariant_splitting_exists,
          "W_H-invariant splitting without a W_L-invariant one");
  return "(" + b(rep.splitting_exists) + ", " + b(rep.wl_invariant_splitting_exists) + "), adjoint (" +
         b(rep.adjoint_splitting_exists) + ", " + b(rep.adjoint_wl_invariant_splitting_exists) + ")";
}

std::string check_presentation(const FanPtr& fan) {
  auto rep = presentation_check(fan);
  require_presentation(rep);
  std::size_t nonface = 0;
  for (const auto& r : rep.relations) nonface += r.kind == "non-face";
  return str(rep.relations.size()) + " generators (" + str(nonface) + " non-face) vanish at " + str(rep.fixed_points) +
         " fixed points";
}

std::string check_multifiltration(const FanPtr& fan, const SuiteOptions& opt) {
  KModel m(fan);
  std::mt19937_64 rng(opt.seed + 3);
  const auto& cones = fan->positive_cones();
  const std::size_t np = cones.size();
  std::size_t spanning = 0, vanishing = 0;
  const std::size_t rounds = std::max<std::size_t>(1, opt.samples / (np * np) + 1);
  for (std::size_t round = 0; round < rounds; ++round)
    for (std::size_t t = 0; t < np; ++t)
      for (std::size_t s = 0; s < np; ++s) {
        auto a = random_filtered(m, t, rng);
        auto b = random_filtered(m, s, rng);
        require(filtration_membership(m, a, t) && filtration_membership(m, b, s), "generated element not filtered");
        auto prod = graded_multiply(m, a, b);
        if (round == 0) {
          auto direct = kg_decompose(m, m.reduce(reassemble(m, a) * reassemble(m, b)));
          require(prod.components == direct.components, "graded product differs from the product in SR(F)");
        }
        RaySet u;
        std::set_union(cones[t].begin(), cones[t].end(), cones[s].begin(), cones[s].end(), std::back_inserter(u));
        if (auto g = fan->positive_cone_index(u)) {
          require(filtration_membership(m, prod, *g), "F_tau F_sigma not inside F_(tau+sigma)");
          if (t == 0) require(filtration_membership(m, prod, s), "F_0 F_sigma not inside F_sigma");
          ++spanning;
        } else {
          require(std::all_of(prod.components.begin(), prod.components.end(),
                              [](const GroupRingElement& c) { return c.is_zero(); }),
                  "product over a non-spanning pair is nonzero");
          ++vanishing;
        }
      }
  auto one = unit_decomposition(m);
  for (std::size_t t = 1; t < np; ++t) require(!filtration_membership(m, one, t), "1 lies in a proper filtration piece");
  return str(spanning) + " spanning pairs filtered, " + str(vanishing) + " non-spanning pairs vanish";
}

std::vector<CriterionResult> run_verification(const FanPtr& fan, const SuiteOptions& opt) {
  const auto& d = fan->datum();
  std::vector<CriterionResult> out;
  out.push_back(run_criterion(1, "datum", 5, [&] { return check_datum(*fan); }));
  out.push_back(run_criterion(2, "fixed points and curves", 60, [&] { return check_fixed_points_and_curves(fan); }));
  out.push_back(run_criterion(3, "congruence subring", 60, [&] { return check_congruences(fan, opt); }));
  out.push_back(run_criterion(4, "Stanley-Reisner decomposition", 120, [&] { return check_sr_decomposition(fan, opt); }));
  out.push_back(run_criterion(5, "R(T) splitting round trip", 10, [&] { return check_kiso(d, opt); }));
  out.push_back(run_criterion(6, "splitting of the character sequence", 5,
                              [&] { return check_splitting(d, std::nullopt); }));
  out.push_back(run_criterion(7, "presentation relations", 60, [&] { return check_presentation(fan); }));
  out.push_back(run_criterion(8, "multifiltration", 60, [&] { return check_multifiltration(fan, opt); }));
  return out;
}

}  // namespace eqk
