#include "fixtures.hpp"

using namespace eqk;

TEST_CASE("checked arithmetic reports overflow") {
  const Int big = std::numeric_limits<Int>::max();
  CHECK(fx::code_of([&] { checked_add(big, 1); }) == ErrorCode::Overflow);
  CHECK(fx::code_of([&] { checked_mul(big / 2 + 1, 2); }) == ErrorCode::Overflow);
  CHECK(checked_mul(-3, 7) == -21);
}

TEST_CASE("determinant, rank and inverse") {
  auto m = IntMatrix::from_rows({{2, 1}, {1, 1}}, 2);
  CHECK(determinant(m) == 1);
  CHECK(unimodular_inverse(m) * m == IntMatrix::identity(2));
  CHECK(rank(IntMatrix::from_rows({{1, 2, 3}, {2, 4, 6}}, 3)) == 1);
  CHECK(fx::code_of([] { unimodular_inverse(IntMatrix::from_rows({{2, 0}, {0, 1}}, 2)); }) == ErrorCode::InvalidInput);
}

TEST_CASE("Smith normal form") {
  auto a = IntMatrix::from_rows({{1, 2}, {3, 0}}, 2);
  auto s = smith_normal_form(a);
  CHECK(s.U * a * s.V == s.D);
  CHECK(s.elementary_divisors() == std::vector<Int>{1, 6});
  CHECK(std::abs(determinant(s.U)) == 1);
  CHECK(std::abs(determinant(s.V)) == 1);

  auto b = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, 3);
  auto t = smith_normal_form(b);
  CHECK(t.U * b * t.V == t.D);
  CHECK(t.elementary_divisors() == std::vector<Int>{2, 6, 12});
}

TEST_CASE("kernel, solve and Hermite form") {
  auto a = IntMatrix::from_rows({{1, 1, 1}}, 3);
  auto k = integer_kernel(a);
  CHECK(k.cols() == 2);
  CHECK(rank(k) == 2);
  CHECK(is_zero(a * k.column(0)));
  auto x = solve_integer(IntMatrix::from_rows({{2, 0}, {0, 3}}, 2), Vec{4, 9});
  REQUIRE(x);
  CHECK(*x == Vec{2, 3});
  CHECK_FALSE(solve_integer(IntMatrix::from_rows({{2}}, 1), Vec{1}));
  auto h = row_hermite_form(IntMatrix::from_rows({{2, 4}, {1, 3}}, 2));
  CHECK(h(1, 0) == 0);
  CHECK(h(0, 0) > 0);
}

TEST_CASE("sections of surjections") {
  auto src = make_lattice("Z2", 2, "e");
  auto tgt = make_lattice("Z", 1, "f");
  LatticeMap sum(src, tgt, IntMatrix::from_rows({{1, 1}}, 2));
  auto s = split_surjection(sum);
  CHECK(sum.matrix() * s.matrix() == IntMatrix::identity(1));

  LatticeMap twice(tgt, tgt, IntMatrix::from_rows({{2}}, 1));
  CHECK(fx::code_of([&] { split_surjection(twice); }) == ErrorCode::NotSurjective);

  // the swap forces s(1) = (x, x) with 2x = 1
  LatticeAction swap{IntMatrix::from_rows({{0, 1}, {1, 0}}, 2), IntMatrix::identity(1)};
  CHECK(equivariant_section_exists(sum, {}));
  CHECK_FALSE(equivariant_section_exists(sum, std::span<const LatticeAction>(&swap, 1)));

  LatticeAction bad{IntMatrix::identity(3), IntMatrix::identity(1)};
  CHECK(fx::code_of([&] { equivariant_section_exists(sum, std::span<const LatticeAction>(&bad, 1)); }) ==
        ErrorCode::IncompatibleAction);
}

TEST_CASE("equivariant sections: more symmetry, fewer sections") {
  auto d = fx::pgl6();
  std::vector<LatticeAction> acts;
  bool previous = true;
  for (const auto& g : d->weyl_H().generators()) {
    auto idx = *d->weyl_H().index_of(g);
    acts.push_back({g, d->torus_h_action(idx)});
    bool now = equivariant_section_exists(d->q(), acts);
    CHECK((previous || !now));
    previous = now;
  }
  auto s = equivariant_section(d->q(), {});
  REQUIRE(s);
  CHECK(d->q().matrix() * *s == IntMatrix::identity(d->torus_h_rank()));
}

TEST_CASE("lattice maps check their domains") {
  auto a = make_lattice("A", 2, "a");
  auto b = make_lattice("B", 3, "b");
  CHECK(fx::code_of([&] { LatticeMap(a, b, IntMatrix::identity(2)); }) == ErrorCode::InvalidInput);
  CHECK(same_lattice(*a, *make_lattice("A", 2, "a")));
  CHECK_FALSE(same_lattice(*a, *b));
}

TEST_CASE("matrix groups and cosets") {
  auto s = IntMatrix::from_rows({{0, 1}, {1, 0}}, 2);
  auto r = IntMatrix::from_rows({{0, -1}, {1, 0}}, 2);
  auto g = MatrixGroup::generated_by({s, r}, 2);
  CHECK(g.order() == 8);
  auto h = MatrixGroup::generated_by({s}, 2);
  auto c = left_cosets(g, h);
  CHECK(c.size() == 4);
  CHECK(oracle::coset_count(g, h) == 4);
  CHECK(fx::code_of([&] { left_cosets(h, g); }) == ErrorCode::NotSubgroup);
  // a shear has infinite order
  CHECK(fx::code_of([] { MatrixGroup::generated_by({IntMatrix::from_rows({{1, 1}, {0, 1}}, 2)}, 2, 50); }) ==
        ErrorCode::UnsupportedType);
}
