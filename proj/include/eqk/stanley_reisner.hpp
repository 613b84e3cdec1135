#pragma once

#include <map>
#include <vector>

#include "eqk/fan.hpp"
#include "eqk/group_ring.hpp"

namespace eqk {

/// Stanley-Reisner ring of a simplicial complex on vertices 0..n-1, with
/// invertible variables X_j, modulo X_F = prod_{j in F}(1 - X_j) for non-faces F.
///
/// Elements are group-ring elements whose first n exponent coordinates are
/// the powers of X_1..X_n; any further coordinates are carried along as an
/// untouched coefficient factor (used for the R(T_H) tensor factor).
class StanleyReisner {
 public:
  /// `faces` must be closed under subsets and contain the empty face.
  StanleyReisner(std::size_t vertices, std::vector<RaySet> faces);
  /// Complex of F+ (vertices = positive rays) or of F (all rays).
  static StanleyReisner positive(const Fan& fan);
  static StanleyReisner full(const Fan& fan);

  std::size_t vertices() const noexcept { return n_; }
  const std::vector<RaySet>& faces() const noexcept { return faces_; }
  std::optional<std::size_t> face_index(const RaySet& f) const;
  bool is_face(const RaySet& f) const { return face_index(f).has_value(); }

  /// X_F as an element of `lattice`.
  GroupRingElement face_product(const LatticePtr& lattice, const RaySet& f) const;
  /// X_j -> 1 for every vertex j outside `face`.
  GroupRingElement restrict_to_face(const GroupRingElement& f, const RaySet& face) const;
  /// Components c_tau, one per face (same order as faces()), with
  /// eps_tau(f) = sum_{rho <= tau} c_rho. Throws DecompositionResidual if an
  /// internal consistency check fails.
  std::vector<GroupRingElement> decompose(const GroupRingElement& f) const;
  /// Normal form: the sum of the components.
  GroupRingElement reduce(const GroupRingElement& f) const;
  bool equal(const GroupRingElement& f, const GroupRingElement& g) const { return reduce(f - g).is_zero(); }
  /// f lies in C_tau (tensor the extra factor): only variables of tau occur and
  /// f vanishes whenever one of them is set to 1.
  bool in_component(const GroupRingElement& f, const RaySet& face) const;

 private:
  std::size_t n_;
  std::vector<RaySet> faces_;
  std::map<RaySet, std::size_t> index_;
};

}  // namespace eqk
