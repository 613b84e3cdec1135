#pragma once

#include <memory>
#include <vector>

#include "eqk/fan.hpp"
#include "eqk/group_ring.hpp"
#include "eqk/localization.hpp"
#include "eqk/stanley_reisner.hpp"

namespace eqk {

// ---- R(T) = R(T/T_H) (x) R(T_H) via the fixed section of q ----

/// Lattice X*(T/T_H) + X*(T_H) with labels g1..gr, h1..hm.
LatticePtr split_character_lattice(const SymmetricDatum& d);
/// e^u -> e^{(u - s q u, q u)}
GroupRingElement kiso_split(const SymmetricDatum& d, const GroupRingElement& f);
/// e^{(a, b)} -> e^{iota(a) + s(b)}
GroupRingElement kiso_join(const SymmetricDatum& d, const GroupRingElement& f);

/// Stanley-Reisner model SR(F) (x) R(T_H) of the equivariant K-ring of the
/// toric closure Y, with the combined W_H action. Elements live in the
/// lattice Z^{F(1)} + X*(T_H): exponent coordinates X1..Xd then h1..hm.
class KModel {
 public:
  explicit KModel(FanPtr fan);

  const Fan& fan() const noexcept { return *fan_; }
  const FanPtr& fan_ptr() const noexcept { return fan_; }
  const SymmetricDatum& datum() const noexcept { return fan_->datum(); }
  const StanleyReisner& sr() const noexcept { return sr_; }
  const LatticePtr& lattice() const noexcept { return lattice_; }
  std::size_t ray_count() const noexcept { return fan_->rays().size(); }
  const std::shared_ptr<const FixedPointSet>& y_points() const noexcept { return y_points_; }

  GroupRingElement one() const { return GroupRingElement::constant(lattice_, 1); }
  /// X_j (full ray index j)
  GroupRingElement variable(std::size_t j) const;
  /// e^b for b in X*(T_H)
  GroupRingElement torus_h(const Vec& b) const;
  /// X_tau = prod_{j in tau}(1 - X_j) for a cone of F (ray set)
  GroupRingElement x_tau(const RaySet& rays) const { return sr_.face_product(lattice_, rays); }

  GroupRingElement reduce(const GroupRingElement& f) const { return sr_.reduce(f); }
  /// Action of the h-th element of W_H.
  GroupRingElement act(std::size_t h, const GroupRingElement& f) const;
  bool is_invariant(const GroupRingElement& f) const;
  bool is_invariant(const GroupRingElement& f, const std::vector<std::size_t>& subgroup) const;
  /// sum over W_H of h.f
  GroupRingElement symmetrize(const GroupRingElement& f) const;
  /// sum over W_H / W_tau of h.f (one h per translate of tau)
  GroupRingElement induce(std::size_t positive_cone, const GroupRingElement& f) const;

  /// Restriction to the fixed points of Y (through the fixed section of q).
  LocalizationClass localize(const GroupRingElement& f) const;
  /// The unique element with the given restrictions whose SR exponents lie in
  /// [-box, box]. Throws NoPreimageInBox.
  GroupRingElement preimage(const LocalizationClass& c, Int box) const;

 private:
  FanPtr fan_;
  StanleyReisner sr_;
  LatticePtr lattice_;
  std::vector<std::size_t> generator_indices_;  // W_H generators as W_H indices
  std::vector<std::size_t> w_to_wh_;
  std::shared_ptr<const FixedPointSet> y_points_;
  // per Y fixed point: character in X*(T) of each full ray, or empty
  std::vector<std::vector<Vec>> ray_characters_;
};

/// Components indexed by the cones of F+ (Fan::positive_cones() order), each
/// in C_tau (x) R(T_H)^{W_tau}, stored in KModel::lattice().
struct GradedDecomposition {
  std::vector<GroupRingElement> components;
};

/// Throws NotInvariant if f is not W_H-invariant.
GradedDecomposition kg_decompose(const KModel& m, const GroupRingElement& f);
/// sum_tau sum_{W_H / W_tau} w . c_tau
GroupRingElement reassemble(const KModel& m, const GradedDecomposition& d);
GradedDecomposition graded_multiply(const KModel& m, const GradedDecomposition& a, const GradedDecomposition& b);
/// True iff every nonzero component sits at a cone having tau as a face.
bool filtration_membership(const KModel& m, const GradedDecomposition& d, std::size_t tau);
/// Decomposition of 1.
GradedDecomposition unit_decomposition(const KModel& m);
/// Structural checks: divisibility by X_tau, W_tau- and W_L-invariance.
bool components_valid(const KModel& m, const GradedDecomposition& d);

}  // namespace eqk
