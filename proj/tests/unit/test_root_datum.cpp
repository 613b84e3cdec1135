#include <set>

#include "fixtures.hpp"

using namespace eqk;

TEST_CASE("root systems of the classical and exceptional types") {
  struct Row {
    const char* type;
    std::size_t positive;
    std::size_t weyl;
  };
  for (Row r : {Row{"A5", 15, 720}, Row{"B2", 4, 8}, Row{"C3", 9, 48}, Row{"D4", 12, 192}, Row{"G2", 6, 12},
                Row{"F4", 24, 1152}}) {
    CAPTURE(r.type);
    RootSystem rs({CartanType::parse(r.type)});
    CHECK(rs.positive_roots().size() == r.positive);
    CHECK(rs.weyl_order_formula() == r.weyl);
    CHECK(MatrixGroup::generated_by(rs.simple_reflections(), rs.rank()).order() == r.weyl);
  }
  CHECK(fx::code_of([] { CartanType::parse("Q3"); }) == ErrorCode::UnsupportedType);
  CHECK(fx::code_of([] { RootSystem({CartanType::parse("G3")}); }) == ErrorCode::UnsupportedType);
}

TEST_CASE("Cartan matrix convention: s_i(a_j) = a_j - a_ij a_i") {
  RootSystem b2({CartanType::parse("B2")});
  const auto& a = b2.cartan();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Vec aj(2, 0);
      aj[j] = 1;
      Vec ai(2, 0);
      ai[i] = 1;
      CHECK(b2.simple_reflections()[i] * aj == sub(aj, scale(ai, a(i, j))));
    }
  CHECK(a(0, 1) * a(1, 0) == 2);
}

TEST_CASE("PGL(6)/PSp(6) datum") {
  auto d = fx::pgl6();
  CHECK(d->delta_L() == std::vector<std::size_t>{0, 2, 4});
  REQUIRE(d->restricted_rank() == 2);
  CHECK(d->restricted_simple_roots()[0] == Vec{1, 2, 1, 0, 0});
  CHECK(d->restricted_simple_roots()[1] == Vec{0, 0, 1, 2, 1});
  CHECK(d->theta() * Vec{0, 1, 0, 0, 0} == Vec{-1, -1, -1, 0, 0});
  CHECK(d->theta() * Vec{0, 0, 0, 1, 0} == Vec{0, 0, -1, -1, -1});
  CHECK(d->weyl().order() == 720);
  CHECK(d->weyl_L().order() == 8);
  CHECK(d->weyl_H().order() == 48);
  CHECK(d->weyl_restricted().order() == 6);
  CHECK(d->torus_h_rank() == 3);
  CHECK(d->cosets_W().size() == 90);
  CHECK(d->cosets_WH().size() == 6);

  auto fiber = [&](Vec root) {
    auto f = d->q_fiber(d->q()(root));
    return std::set<Vec>(f.begin(), f.end());
  };
  CHECK(fiber({1, 0, 0, 0, 0}) == std::set<Vec>{{1, 0, 0, 0, 0}});
  CHECK(fiber({0, 1, 1, 0, 0}) == std::set<Vec>{{0, 1, 1, 0, 0}, {-1, -1, 0, 0, 0}});
  CHECK(fiber({0, 0, 0, 1, 1}) == std::set<Vec>{{0, 0, -1, -1, 0}, {0, 0, 0, 1, 1}});
}

TEST_CASE("exact sequence and section") {
  for (auto d : {fx::pgl6(), fx::pgl4(), fx::group("A2"), fx::group("B2")}) {
    CAPTURE(d->label());
    const auto& q = d->q().matrix();
    CHECK(q * d->inclusion().matrix() == IntMatrix(q.rows(), d->restricted_rank()));
    CHECK(q * d->section().matrix() == IntMatrix::identity(d->torus_h_rank()));
    for (const auto& g : d->restricted_simple_roots()) CHECK(d->theta() * g == negate(g));
    CHECK(d->weyl_H().order() == d->weyl_L().order() * d->weyl_restricted().order());
    CHECK(d->to_quotient_coords(d->restricted_simple_roots()[0])[0] == 1);
  }
  CHECK(fx::code_of([] { fx::pgl6()->to_quotient_coords({1, 0, 0, 0, 0}); }) == ErrorCode::LatticeMismatch);
}

TEST_CASE("group case") {
  auto a1 = fx::group("A1");
  CHECK(a1->rank() == 2);
  CHECK(a1->weyl_H().order() == 2);
  CHECK(a1->weyl_L().order() == 1);
  CHECK(a1->restricted_simple_roots() == std::vector<Vec>{{1, 1}});
  CHECK(a1->cosets_W().size() == 4);

  auto a2 = fx::group("A2");
  CHECK(a2->weyl_H().order() == 6);
  CHECK(a2->weyl_restricted().order() == 6);
  CHECK(a2->delta_L().empty());
}

TEST_CASE("splitting of the character sequence") {
  auto sl4 = splitting_check(*fx::pgl4());
  CHECK(sl4.splitting_exists);
  CHECK_FALSE(sl4.wl_invariant_splitting_exists);
  CHECK_FALSE(sl4.wh_invariant_splitting_exists);
  CHECK(sl4.adjoint_splitting_exists);

  auto g = splitting_check(*fx::group("A2"));
  CHECK(g.splitting_exists);
  CHECK(g.wl_invariant_splitting_exists);
}

TEST_CASE("invalid involutions are rejected") {
  DatumSpec s;
  s.types = {CartanType::parse("A2")};
  s.theta = IntMatrix::from_rows({{1, 1}, {0, 1}}, 2);
  CHECK(fx::code_of([&] { SymmetricDatum::build(s); }) == ErrorCode::NotInvolution);

  // theta^2 = 1 but a1 + a2 goes to a1 - a2
  s.theta = IntMatrix::from_rows({{1, 0}, {0, -1}}, 2);
  CHECK(fx::code_of([&] { SymmetricDatum::build(s); }) == ErrorCode::RootSystemViolation);

  // the split involution of SL(3): rank H = 1 but T^theta is finite
  s.theta = IntMatrix::from_rows({{-1, 0}, {0, -1}}, 2);
  CHECK(fx::code_of([&] { SymmetricDatum::build(s); }) == ErrorCode::NotMinimalRank);

  s.theta = IntMatrix::identity(3);
  CHECK(fx::code_of([&] { SymmetricDatum::build(s); }) == ErrorCode::InvalidInput);
}
