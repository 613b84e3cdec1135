#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqk/fan.hpp"
#include "eqk/group_ring.hpp"

namespace eqk {

/// X is the whole variety (fixed points F+(r) x W/W_L); Y is the closure of
/// the torus orbit (fixed points F+(r) x W_H/W_L).
enum class Scope { X, Y };

std::string to_string(Scope s);

struct FixedPoint {
  std::size_t sigma;  // index into Fan::maximal_cones()
  std::size_t coset;  // index into the coset table of the scope
  std::size_t w;      // representative, as an index into W
};

/// T-fixed points in order: maximal cone major, coset minor.
class FixedPointSet {
 public:
  FixedPointSet(FanPtr fan, Scope scope);

  const Fan& fan() const noexcept { return *fan_; }
  const FanPtr& fan_ptr() const noexcept { return fan_; }
  Scope scope() const noexcept { return scope_; }
  std::size_t size() const noexcept { return points_.size(); }
  const FixedPoint& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<FixedPoint>& points() const noexcept { return points_; }
  std::size_t coset_count() const noexcept { return cosets_; }

  std::size_t index(std::size_t sigma, std::size_t coset) const { return sigma * cosets_ + coset; }
  /// Fixed point (sigma, w W_L) for an arbitrary w in W (scope X) or W_H (scope Y,
  /// given as an index into W).
  std::size_t locate(std::size_t sigma, std::size_t w) const;
  /// "(<1,2>, s2.s1)"
  std::string label(std::size_t i) const;

 private:
  FanPtr fan_;
  Scope scope_;
  std::size_t cosets_ = 0;
  std::vector<FixedPoint> points_;
  std::vector<std::size_t> coset_of_w_;  // W index -> coset (or npos outside W_H)
};

/// A T-stable curve between two fixed points. The character is stored up to
/// sign with the first nonzero coordinate positive.
struct Curve {
  int type = 0;  // 2, 3 or 4
  std::size_t a = 0, b = 0;  // fixed-point indices, a < b
  Vec character;             // in X*(T)
  auto operator<=>(const Curve&) const = default;
};

/// Normalizes the endpoint order and character sign.
Curve make_curve(int type, std::size_t a, std::size_t b, Vec character);

std::vector<Curve> enumerate_curves(const FixedPointSet& points);

/// A tuple of restrictions to the T-fixed points.
struct LocalizationClass {
  std::shared_ptr<const FixedPointSet> points;
  std::vector<GroupRingElement> values;  // in X*(T), one per fixed point
};

struct Witness {
  std::string rule;  // which congruence failed
  std::string where;
  Vec character;
  // the two sides of the failed congruence (empty for invariance failures)
  std::optional<GroupRingElement> lhs, rhs;
};

struct MembershipResult {
  bool ok = true;
  std::optional<Witness> witness;
};

/// All curve congruences f_a = f_b mod (1 - e^{-chi}).
MembershipResult kt_membership(const LocalizationClass& c);
MembershipResult kt_membership(const LocalizationClass& c, const std::vector<Curve>& curves);

/// G-equivariant model: one element of R(T) per maximal cone.
MembershipResult kg_membership(const Fan& fan, const std::vector<GroupRingElement>& f);

/// f_{sigma, w} = w . f_sigma
LocalizationClass expand(const std::shared_ptr<const FixedPointSet>& points, const std::vector<GroupRingElement>& f);
/// Value at the identity coset of each maximal cone.
std::vector<GroupRingElement> collapse(const LocalizationClass& c);

/// Class of the line bundle L_u, u in gamma-coordinates: e^{w(u)} everywhere.
LocalizationClass line_bundle_class(const std::shared_ptr<const FixedPointSet>& points, const Vec& u);
/// Toric divisor class X_j for a ray of F+: e^{w(u_{sigma,j})} where
/// u_{sigma,j} is the sigma-dual character, and 1 when the ray is not in sigma.
LocalizationClass ray_class(const std::shared_ptr<const FixedPointSet>& points, std::size_t positive_ray);

LocalizationClass constant_class(const std::shared_ptr<const FixedPointSet>& points, Int c);
LocalizationClass multiply(const LocalizationClass& a, const LocalizationClass& b);
LocalizationClass subtract(const LocalizationClass& a, const LocalizationClass& b);
bool is_zero(const LocalizationClass& c);

}  // namespace eqk
