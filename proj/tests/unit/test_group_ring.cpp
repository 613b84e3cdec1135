#include <random>

#include "fixtures.hpp"

using namespace eqk;
using fx::mono;

namespace {
LatticePtr z2() {
  static auto l = make_lattice("Z2", 2, "x");
  return l;
}
}  // namespace

TEST_CASE("arithmetic keeps a canonical form") {
  auto l = z2();
  auto a = mono(l, {1, 0}) + mono(l, {0, 1}, 2);
  auto b = mono(l, {1, 0}, -1) + GroupRingElement::constant(l, 3);
  CHECK((a + b) == mono(l, {0, 1}, 2) + GroupRingElement::constant(l, 3));
  CHECK((a - a).is_zero());
  CHECK(a * b == b * a);
  CHECK((a * b).coefficient({2, 0}) == -1);
  CHECK((a * b).augmentation() == a.augmentation() * b.augmentation());
  auto c = mono(l, {-1, 2}, 5);
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * (b + c) == a * b + a * c);
  CHECK(GroupRingElement(l).to_string() == "0");

  auto other = make_lattice("W", 2, "y");
  CHECK(fx::code_of([&] { a + GroupRingElement::constant(other, 1); }) == ErrorCode::LatticeMismatch);
  CHECK(fx::code_of([&] { mono(l, {1, 2, 3}); }) == ErrorCode::LatticeMismatch);
}

TEST_CASE("congruences modulo 1 - e^chi") {
  auto l = z2();
  auto one = GroupRingElement::constant(l, 1);
  CHECK(congruent_mod(mono(l, {2, 0}), one, {1, 0}));
  CHECK(congruent_mod(mono(l, {-3, 0}), one, {1, 0}));
  CHECK_FALSE(congruent_mod(mono(l, {1, 0}), one, {2, 0}));
  CHECK(congruent_mod(mono(l, {1, 0}), mono(l, {-1, 0}), {2, 0}));
  CHECK_FALSE(congruent_mod(mono(l, {0, 1}), one, {1, 0}));
  CHECK(congruent_mod(mono(l, {1, 1}) + mono(l, {0, 0}), mono(l, {2, 2}) + mono(l, {-1, -1}), {1, 1}));
  CHECK_FALSE(congruent_mod(one, GroupRingElement(l), {1, 1}));
  CHECK(fx::code_of([&] { congruent_mod(one, one, {0, 0}); }) == ErrorCode::ZeroCharacter);
  CHECK(fx::code_of([&] { oracle::congruent_by_projection(one, one, {0, 0}); }) == ErrorCode::ZeroCharacter);
}

TEST_CASE("congruence agrees with the projection oracle and ignores the sign of chi") {
  auto l = make_lattice("Z3", 3, "x");
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Int> small(-2, 2);
  int congruent = 0;
  for (int k = 0; k < 2000; ++k) {
    Vec chi(3, 0);
    while (is_zero(chi))
      for (auto& x : chi) x = small(rng);
    if (k % 3 == 0) chi = scale(chi, 3);
    auto f = random_element(l, rng, 3, 2);
    auto g = k % 2 ? f + (GroupRingElement::constant(l, 1) - exp_of(l, chi)) * random_element(l, rng, 2, 2)
                   : random_element(l, rng, 3, 2);
    bool lib = congruent_mod(f, g, chi);
    CHECK(lib == oracle::congruent_by_projection(f, g, chi));
    CHECK(lib == congruent_mod(f, g, negate(chi)));
    congruent += lib;
  }
  CHECK(congruent >= 1000);
}

TEST_CASE("orbit sums and invariance") {
  RootSystem a2({CartanType::parse("A2")});
  auto W = MatrixGroup::generated_by(a2.simple_reflections(), 2);
  auto l = z2();
  auto f = orbit_sum(W, mono(l, {1, 0}));
  CHECK(f.size() == 6);
  for (const auto& r : a2.roots()) CHECK(f.coefficient(r) == 1);
  CHECK(is_invariant(W.generators(), f));
  CHECK_FALSE(is_invariant(W.generators(), mono(l, {1, 0})));
  CHECK(orbit_sum(W, GroupRingElement::constant(l, 1)) == GroupRingElement::constant(l, 6));
}

TEST_CASE("maps of exponents") {
  auto l = z2();
  auto t = make_lattice("Z", 1, "t");
  auto f = mono(l, {1, 0}) + mono(l, {0, 1});
  auto g = f.map_exponents(t, IntMatrix::from_rows({{1, 1}}, 2));
  CHECK(g == GroupRingElement::monomial(t, {1}, 2));
  auto swapped = f.act(IntMatrix::from_rows({{0, 1}, {1, 0}}, 2));
  CHECK(swapped == f);
}
