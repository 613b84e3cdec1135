#include "eqk/presentation.hpp"

#include <algorithm>

namespace eqk {

namespace {

Relation evaluate(std::string kind, std::string label, const LocalizationClass& c) {
  Relation r{std::move(kind), std::move(label), true, {}};
  for (std::size_t i = 0; i < c.values.size(); ++i)
    if (!c.values[i].is_zero()) {
      r.vanishes = false;
      r.failing_point = c.points->label(i);
      break;
    }
  return r;
}

}  // namespace

bool PresentationReport::ok() const {
  return std::all_of(relations.begin(), relations.end(), [](const Relation& r) { return r.vanishes; });
}

PresentationReport presentation_check(const FanPtr& fan) {
  auto pts = std::make_shared<const FixedPointSet>(fan, Scope::X);
  PresentationReport rep;
  rep.fixed_points = pts->size();
  const std::size_t nrays = fan->positive_rays().size();
  std::vector<LocalizationClass> x;
  for (std::size_t j = 0; j < nrays; ++j) {
    rep.generators.push_back("X" + std::to_string(j + 1));
    x.push_back(ray_class(pts, j));
  }
  const LocalizationClass one = constant_class(pts, 1);

  for (const auto& f : fan->minimal_non_faces()) {
    LocalizationClass prod = one;
    std::string label;
    for (auto j : f) {
      prod = multiply(prod, subtract(one, x[j]));
      label += (label.empty() ? "" : ",") + std::to_string(j + 1);
    }
    rep.relations.push_back(evaluate("non-face", "X<" + label + ">", prod));
  }

  const std::size_t r = fan->dim();
  for (std::size_t i = 0; i < r; ++i) {
    Vec u(r, 0);
    u[i] = 1;
    LocalizationClass prod = one;
    std::string label;
    for (std::size_t j = 0; j < nrays; ++j) {
      Int e = dot(u, fan->positive_rays()[j]);
      label += (label.empty() ? "" : "*") + std::string("X") + std::to_string(j + 1) + "^" + std::to_string(e);
      for (Int k = 0; k < e; ++k) prod = multiply(prod, x[j]);
    }
    rep.relations.push_back(evaluate("line-bundle", label + " - [L_g" + std::to_string(i + 1) + "]",
                                     subtract(prod, line_bundle_class(pts, u))));
  }
  return rep;
}

void require_presentation(const PresentationReport& report) {
  for (const auto& r : report.relations)
    if (!r.vanishes)
      throw Error(ErrorCode::RelationViolation, "relation " + r.label + " is nonzero at " + r.failing_point);
}

}  // namespace eqk
