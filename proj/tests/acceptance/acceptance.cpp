// One line per acceptance criterion; exit status is nonzero if any fails.
#include <chrono>
#include <iostream>
#include <set>

#include "eqk/verification.hpp"

using namespace eqk;

namespace {

DatumPtr pgl6() {
  DatumSpec s;
  s.types = {CartanType::parse("A5")};
  s.theta = IntMatrix::from_rows({{1, -1, 0, 0, 0},
                                  {0, -1, 0, 0, 0},
                                  {0, -1, 1, -1, 0},
                                  {0, 0, 0, -1, 0},
                                  {0, 0, 0, -1, 1}}, 5);
  return SymmetricDatum::build(s);
}

DatumPtr sl4() {
  DatumSpec s;
  s.types = {CartanType::parse("A3")};
  s.theta = IntMatrix::from_rows({{1, -1, 0}, {0, -1, 0}, {0, -1, 1}}, 3);
  return SymmetricDatum::build(s);
}

std::set<Vec> as_set(std::vector<Vec> v) { return {v.begin(), v.end()}; }

std::string pgl6_values(const Fan& fan) {
  const auto& d = fan.datum();
  require(d.delta_L() == std::vector<std::size_t>{0, 2, 4}, "Delta_L");
  require(d.restricted_simple_roots() == std::vector<Vec>{{1, 2, 1, 0, 0}, {0, 0, 1, 2, 1}}, "gamma_1, gamma_2");
  require(d.theta() * Vec{0, 1, 0, 0, 0} == Vec{-1, -1, -1, 0, 0}, "theta(alpha_2)");
  require(d.theta() * Vec{0, 0, 0, 1, 0} == Vec{0, 0, -1, -1, -1}, "theta(alpha_4)");
  require(as_set(d.q_fiber(d.q()({1, 0, 0, 0, 0}))) == as_set({{1, 0, 0, 0, 0}}), "fiber of q(alpha_1)");
  require(as_set(d.q_fiber(d.q()({0, 1, 1, 0, 0}))) == as_set({{0, 1, 1, 0, 0}, {-1, -1, 0, 0, 0}}),
          "fiber of q(alpha_2+alpha_3)");
  require(as_set(d.q_fiber(d.q()({0, 0, -1, -1, 0}))) == as_set({{0, 0, -1, -1, 0}, {0, 0, 0, 1, 1}}),
          "fiber of q(-alpha_3-alpha_4)");
  require(d.weyl().order() == 720 && d.weyl_L().order() == 8 && d.weyl_restricted().order() == 6 &&
              d.weyl_H().order() == 48,
          "Weyl group orders");
  require(fan.positive_cones().size() == 4, "F+ has 4 cones");
  return check_datum(fan);
}

std::string fixed_point_counts(const FanPtr& fan) {
  require(FixedPointSet(fan, Scope::X).size() == 90, "90 fixed points in X");
  require(FixedPointSet(fan, Scope::Y).size() == 6, "6 fixed points in Y");
  return check_fixed_points_and_curves(fan);
}

}  // namespace

int main() {
  SuiteOptions opt;
  auto datum = pgl6();
  FanPtr wonderful = Fan::build(datum);
  FanPtr split = Fan::build(datum, FanSpec{{{1, 0}, {1, 1}, {0, 1}}, {{0, 1}, {1, 2}}});
  auto both = [&](auto check) {
    return [=] { return "wonderful: " + check(wonderful) + "; split: " + check(split); };
  };

  std::vector<CriterionResult> results;
  results.push_back(run_criterion(1, "PGL(6)/PSp(6) datum", 5, [&] { return pgl6_values(*wonderful); }));
  results.push_back(run_criterion(2, "fixed points and curves", 60, [&] { return fixed_point_counts(wonderful); }));
  results.push_back(run_criterion(3, "congruence subring", 60, [&] { return check_congruences(wonderful, opt); }));
  results.push_back(run_criterion(4, "Stanley-Reisner decomposition", 120,
                                  both([&](const FanPtr& f) { return check_sr_decomposition(f, opt); })));
  results.push_back(run_criterion(5, "R(T) splitting round trip", 10, [&] { return check_kiso(*datum, opt); }));
  results.push_back(run_criterion(6, "SL(4) splitting", 5, [&] {
    return check_splitting(*sl4(), std::make_pair(true, false));
  }));
  results.push_back(
      run_criterion(7, "presentation relations", 60, both([](const FanPtr& f) { return check_presentation(f); })));
  results.push_back(run_criterion(8, "multifiltration", 60,
                                  both([&](const FanPtr& f) { return check_multifiltration(f, opt); })));

  bool all = true;
  for (const auto& r : results) {
    std::cout << "criterion " << r.id << " (" << r.name << "): " << (r.passed ? "PASS" : "FAIL") << "  "
              << r.seconds << "s/" << r.limit_seconds << "s  " << r.detail << std::endl;
    all = all && r.passed;
  }
  std::cout << (all ? "all criteria passed" : "some criteria failed") << std::endl;
  return all ? 0 : 1;
}
