#include <random>

#include "fixtures.hpp"

using namespace eqk;

TEST_CASE("fixed points and curves of the wonderful compactification") {
  auto f = fx::pgl6_wonderful();
  auto x = std::make_shared<const FixedPointSet>(f, Scope::X);
  auto y = std::make_shared<const FixedPointSet>(f, Scope::Y);
  CHECK(x->size() == 90);
  CHECK(y->size() == 6);
  auto cx = enumerate_curves(*x);
  std::map<int, std::size_t> by_type;
  for (const auto& c : cx) ++by_type[c.type];
  CHECK(by_type[2] == 540);
  CHECK(by_type[3] == 90);
  CHECK(by_type[4] == 0);
  CHECK(enumerate_curves(*y).size() == 6);
  CHECK(x->label(0) == "(<1,2>, e)");
  CHECK(std::set<Curve>(cx.begin(), cx.end()) == oracle::brute_force_curves(*x));
}

TEST_CASE("fixed points and curves of the split fan") {
  auto f = fx::pgl6_split();
  FixedPointSet x(f, Scope::X), y(f, Scope::Y);
  CHECK(x.size() == 180);
  CHECK(y.size() == 12);
  auto cx = enumerate_curves(x);
  std::map<int, std::size_t> by_type;
  for (const auto& c : cx) ++by_type[c.type];
  CHECK(by_type[2] == 1080);
  CHECK(by_type[3] == 90);
  CHECK(by_type[4] == 90);
  auto cy = enumerate_curves(y);
  CHECK(cy.size() == 12);
  CHECK(std::set<Curve>(cy.begin(), cy.end()) == oracle::brute_force_curves(y));
}

TEST_CASE("toric and line bundle classes satisfy the curve congruences") {
  for (auto f : {fx::pgl6_wonderful(), fx::pgl6_split()}) {
    auto x = std::make_shared<const FixedPointSet>(f, Scope::X);
    auto curves = enumerate_curves(*x);
    for (std::size_t j = 0; j < f->positive_rays().size(); ++j) CHECK(kt_membership(ray_class(x, j), curves).ok);
    CHECK(kt_membership(line_bundle_class(x, {1, 0}), curves).ok);
    CHECK(kt_membership(line_bundle_class(x, {-2, 3}), curves).ok);
    CHECK(kt_membership(constant_class(x, 7), curves).ok);

    auto bumped = constant_class(x, 1);
    bumped.values[3] += GroupRingElement::constant(f->datum().character_lattice(), 1);
    auto r = kt_membership(bumped, curves);
    CHECK_FALSE(r.ok);
    REQUIRE(r.witness);
    REQUIRE(r.witness->lhs);
    CHECK_FALSE(oracle::congruent_by_projection(*r.witness->lhs, *r.witness->rhs, r.witness->character));
  }
}

TEST_CASE("G-equivariant congruences") {
  auto f = fx::pgl6_wonderful();
  const auto& d = f->datum();
  const auto& L = d.character_lattice();
  std::vector<GroupRingElement> one(1, GroupRingElement::constant(L, 1));
  CHECK(kg_membership(*f, one).ok);
  // e^{gamma_1} is W_L-invariant and congruent to its reflection e^{-gamma_1}
  std::vector<GroupRingElement> g1(1, exp_of(L, d.restricted_simple_roots()[0]));
  CHECK(kg_membership(*f, g1).ok);
  CHECK(oracle::kg_membership(*f, g1));
  std::vector<GroupRingElement> a2(1, exp_of(L, {0, 1, 0, 0, 0}));
  auto r = kg_membership(*f, a2);
  CHECK_FALSE(r.ok);
  REQUIRE(r.witness);
  CHECK(r.witness->rule == "W_L-invariance");
  CHECK(fx::code_of([&] { kg_membership(*f, {}); }) == ErrorCode::InvalidInput);
}

TEST_CASE("R(T) splits as R(T/T_H) tensor R(T_H)") {
  auto d = fx::pgl6();
  std::mt19937_64 rng(11);
  const auto& L = d->character_lattice();
  for (int k = 0; k < 100; ++k) {
    auto f = random_element(L, rng, 4, 3);
    auto g = random_element(L, rng, 3, 3);
    CHECK(kiso_join(*d, kiso_split(*d, f)) == f);
    CHECK(kiso_split(*d, f * g) == kiso_split(*d, f) * kiso_split(*d, g));
  }
  auto gamma = exp_of(L, d->restricted_simple_roots()[1]);
  CHECK(kiso_split(*d, gamma) == GroupRingElement::monomial(split_character_lattice(*d), {0, 1, 0, 0, 0}));
  CHECK(fx::code_of([&] { kiso_join(*d, gamma); }) == ErrorCode::LatticeMismatch);
}

TEST_CASE("graded decomposition of an invariant element") {
  KModel m(fx::pgl6_wonderful());
  auto f = m.symmetrize(m.variable(0) * m.torus_h({1, 0, 0}));
  auto dec = kg_decompose(m, f);
  std::vector<std::size_t> sizes;
  for (const auto& c : dec.components) sizes.push_back(c.size());
  CHECK(sizes == std::vector<std::size_t>{6, 4, 0, 0});
  CHECK(reassemble(m, dec) == m.reduce(f));
  CHECK(components_valid(m, dec));
  CHECK(filtration_membership(m, dec, 0));
  CHECK_FALSE(filtration_membership(m, dec, 1));
  CHECK(fx::code_of([&] { filtration_membership(m, dec, 9); }) == ErrorCode::ConeNotInFan);
  CHECK(fx::code_of([&] { kg_decompose(m, m.variable(0)); }) == ErrorCode::NotInvariant);

  auto one = unit_decomposition(m);
  CHECK(graded_multiply(m, one, dec).components == dec.components);
  CHECK(reassemble(m, one) == m.one());
}

TEST_CASE("localization of the Stanley-Reisner model") {
  KModel m(fx::pgl6_split());
  std::mt19937_64 rng(5);
  auto f = m.reduce(m.symmetrize(m.variable(1) * m.torus_h({0, 1, 0})));
  auto loc = m.localize(f);
  CHECK(kt_membership(loc).ok);
  CHECK(m.preimage(loc, 1) == f);

  // nonzero reduced elements have nonzero restrictions
  for (int k = 0; k < 20; ++k) {
    GroupRingElement g(m.lattice());
    for (int t = 0; t < 3; ++t) {
      Vec e(m.lattice()->rank(), 0);
      e[std::uniform_int_distribution<std::size_t>(0, m.ray_count() - 1)(rng)] = 1;
      g.add_term(e, 1 + t);
    }
    g = m.reduce(g);
    if (!g.is_zero()) CHECK_FALSE(is_zero(m.localize(g)));
  }

  auto cube = m.reduce(m.symmetrize(m.variable(0) * m.variable(0) * m.variable(0)));
  CHECK(fx::code_of([&] { m.preimage(m.localize(cube), 0); }) == ErrorCode::NoPreimageInBox);
}

TEST_CASE("presentation relations vanish") {
  auto w = presentation_check(fx::pgl6_wonderful());
  CHECK(w.ok());
  CHECK(w.relations.size() == 2);
  CHECK(w.fixed_points == 90);
  auto s = presentation_check(fx::pgl6_split());
  CHECK(s.ok());
  REQUIRE(s.relations.size() == 3);
  CHECK(s.relations[0].label == "X<1,3>");
  CHECK(s.relations[0].kind == "non-face");
  CHECK_NOTHROW(require_presentation(s));
}
