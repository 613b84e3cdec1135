#include "fixtures.hpp"

using namespace eqk;

TEST_CASE("wonderful fan of PGL(6)/PSp(6)") {
  auto f = fx::pgl6_wonderful();
  CHECK(f->is_wonderful());
  REQUIRE(f->positive_cones().size() == 4);
  std::vector<std::string> labels;
  for (std::size_t t = 0; t < 4; ++t) labels.push_back(f->cone_label(t));
  CHECK(labels == std::vector<std::string>{"<>", "<1>", "<2>", "<1,2>"});
  CHECK(f->positive_rays() == std::vector<Vec>{{1, 0}, {0, 1}});
  CHECK(f->maximal_cones().size() == 1);
  std::vector<std::size_t> stab;
  for (std::size_t t = 0; t < 4; ++t) stab.push_back(f->stabilizer(t).size());
  CHECK(stab == std::vector<std::size_t>{48, 16, 16, 8});
  CHECK(f->minimal_non_faces().empty());
  CHECK(f->facet_orthogonal_restricted_roots(0) == std::vector<std::size_t>{0, 1});
  CHECK(f->rays().size() == 6);
  CHECK(*f->cone_from_label("<1,2>") == 3);
  CHECK_FALSE(f->cone_from_label("<3>"));
  CHECK(fx::code_of([&] { f->require_positive_cone({0, 5}); }) == ErrorCode::ConeNotInFan);
}

TEST_CASE("split rank-2 fan") {
  auto f = fx::pgl6_split();
  CHECK_FALSE(f->is_wonderful());
  CHECK(f->positive_cones().size() == 6);
  CHECK(f->maximal_cones().size() == 2);
  CHECK(f->rays().size() == 12);
  CHECK(f->cones().size() == 25);
  std::vector<std::size_t> stab;
  for (std::size_t j = 0; j < 3; ++j) stab.push_back(f->stabilizer(*f->positive_cone_index({j})).size());
  CHECK(stab == std::vector<std::size_t>{16, 8, 16});
  CHECK(f->minimal_non_faces() == std::vector<RaySet>{{0, 2}});
  auto chi = f->shared_facet_character(0, 1);
  REQUIRE(chi);
  CHECK((*chi == Vec{1, -1} || *chi == Vec{-1, 1}));
  CHECK(f->facet_orthogonal_restricted_roots(0) == std::vector<std::size_t>{1});
  CHECK(f->facet_orthogonal_restricted_roots(1) == std::vector<std::size_t>{0});
  // the dual basis pairs to the identity with the rays of the cone
  auto du = f->dual_basis(0);
  const auto& rays = f->positive_cones()[f->maximal_cones()[0]];
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k) CHECK(dot(du.row(i), f->positive_rays()[rays[k]]) == (i == k ? 1 : 0));
  CHECK(f->is_face(*f->positive_cone_index({1}), f->maximal_cones()[0]));
  CHECK_FALSE(f->is_face(*f->positive_cone_index({0}), f->maximal_cones()[1]));
}

TEST_CASE("invalid subdivisions") {
  auto d = fx::pgl6();
  auto build = [&](FanSpec s) { return fx::code_of([&] { Fan::build(d, s); }); };
  CHECK(build({{{2, 0}, {0, 1}}, {{0, 1}}}) == ErrorCode::NotSmooth);
  CHECK(build({{{1, 0}, {1, 2}, {0, 1}}, {{0, 1}, {1, 2}}}) == ErrorCode::NotSmooth);
  CHECK(build({{{1, 0}, {-1, 1}, {0, 1}}, {{0, 1}, {1, 2}}}) == ErrorCode::NotInChamber);
  CHECK(build({{{1, 0}, {1, 1}, {0, 1}}, {{0, 1}}}) == ErrorCode::NotSubdivision);
  CHECK(build({{{1, 0}, {1, 1}, {0, 1}}, {{0, 1}, {0, 1}}}) == ErrorCode::NotSubdivision);
  CHECK(build({{{1, 0}, {0, 1}}, {{0, 1, 1}}}) == ErrorCode::NotSubdivision);
}

TEST_CASE("Stanley-Reisner ring of two points") {
  auto l = make_lattice("SR", 2, "X");
  StanleyReisner sr(2, {{}, {0}, {1}});
  auto x0 = fx::mono(l, {1, 0});
  auto x1 = fx::mono(l, {0, 1});
  CHECK(sr.reduce(sr.face_product(l, {0, 1})).is_zero());
  auto parts = sr.decompose(x0);
  CHECK(parts[0] == GroupRingElement::constant(l, 1));
  CHECK(parts[1] == x0 - GroupRingElement::constant(l, 1));
  CHECK(parts[2].is_zero());
  CHECK(sr.reduce(x0) == x0);
  // X0 X1 = X0 + X1 - 1 modulo (1 - X0)(1 - X1)
  CHECK(sr.reduce(x0 * x1) == x0 + x1 - GroupRingElement::constant(l, 1));
  CHECK(sr.in_component(sr.face_product(l, {0}) * x0, {0}));
  CHECK_FALSE(sr.in_component(x0, {0}));
}

TEST_CASE("full-fan Stanley-Reisner complex") {
  auto f = fx::pgl6_split();
  auto sr = StanleyReisner::full(*f);
  CHECK(sr.vertices() == 12);
  CHECK(sr.faces().size() == 25);
  for (const auto& c : f->cones()) CHECK(sr.is_face(c.rays));
  auto pos = StanleyReisner::positive(*f);
  CHECK(pos.faces().size() == 6);
  CHECK_FALSE(pos.is_face({0, 2}));
}
