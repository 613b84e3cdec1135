#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eqk/lattice.hpp"
#include "eqk/matrix_group.hpp"
#include "eqk/root_system.hpp"

namespace eqk {

/// Input for building a datum. Either `theta` is given (a simple or product
/// type with an explicit involution on the root lattice, column j = theta(alpha_j)),
/// or `group_case` is set and the datum is G x G / diag(G) for the single
/// component in `types`.
struct DatumSpec {
  std::vector<CartanType> types;
  bool group_case = false;
  std::optional<IntMatrix> theta;
};

/// The combinatorial datum of an adjoint symmetric space G/H of minimal rank.
///
/// X*(T) has basis the simple roots. In the group case the basis is
/// (alpha_i, 0) followed by (0, -alpha_i), so theta is a signed swap.
/// X*(T/T_H) is the kernel of q with basis the restricted simple roots
/// gamma_1..gamma_r; X*(T_H) is the quotient, in a Hermite-reduced basis.
class SymmetricDatum {
 public:
  /// Validates everything; throws NotInvolution, RootSystemViolation,
  /// NotMinimalRank, UnsupportedType.
  static std::shared_ptr<const SymmetricDatum> build(const DatumSpec& spec);

  const DatumSpec& spec() const noexcept { return spec_; }
  std::string label() const;
  const RootSystem& roots() const noexcept { return roots_; }

  std::size_t rank() const noexcept { return roots_.rank(); }           // rk G
  std::size_t restricted_rank() const noexcept { return gammas_.size(); }  // rk G/H
  std::size_t torus_h_rank() const noexcept { return rank() - restricted_rank(); }

  const IntMatrix& theta() const noexcept { return theta_; }
  /// Simple roots fixed by theta (0-based indices).
  const std::vector<std::size_t>& delta_L() const noexcept { return delta_L_; }
  /// gamma_i = alpha - theta(alpha) as a point of X*(T).
  const std::vector<Vec>& restricted_simple_roots() const noexcept { return gammas_; }
  /// A simple root alpha with gamma_i = alpha - theta(alpha) (the first one).
  std::size_t restricted_root_source(std::size_t i) const { return gamma_source_[i]; }
  /// s_alpha s_theta(alpha) in W for the source alpha of gamma_i.
  const IntMatrix& restricted_reflection_lift(std::size_t i) const { return gamma_lift_[i]; }

  const LatticePtr& character_lattice() const noexcept { return xt_; }
  const LatticePtr& torus_h_lattice() const noexcept { return xth_; }
  const LatticePtr& quotient_lattice() const noexcept { return xtth_; }

  /// Restriction X*(T) -> X*(T_H).
  const LatticeMap& q() const noexcept { return *q_; }
  /// Inclusion X*(T/T_H) -> X*(T); columns are the gamma_i.
  const LatticeMap& inclusion() const noexcept { return *incl_; }
  /// A fixed section of q.
  const LatticeMap& section() const noexcept { return *section_; }

  /// gamma-coordinates of a point of ker q. Throws LatticeMismatch otherwise.
  Vec to_quotient_coords(const Vec& x) const;
  /// Restriction to the split torus: gamma-coordinates of x - theta(x)
  /// (twice the restricted weight).
  Vec restrict_to_split(const Vec& x) const;

  /// Roots alpha with q(alpha) = beta.
  std::vector<Vec> q_fiber(const Vec& beta) const;

  const MatrixGroup& weyl() const noexcept { return w_; }
  const MatrixGroup& weyl_L() const noexcept { return wl_; }
  const MatrixGroup& weyl_H() const noexcept { return wh_; }
  /// W_{G/H} realized on X*(T/T_H) in gamma-coordinates.
  const MatrixGroup& weyl_restricted() const noexcept { return wr_; }

  /// Index in W of the i-th element of W_H.
  std::size_t weyl_H_in_W(std::size_t i) const { return wh_in_w_[i]; }
  /// Index in W_{G/H} of the image of the i-th element of W_H.
  std::size_t restricted_image(std::size_t i) const { return wh_image_[i]; }
  /// Action of the i-th element of W_H on X*(T_H).
  const IntMatrix& torus_h_action(std::size_t i) const { return wh_on_th_[i]; }

  const CosetTable& cosets_W() const noexcept { return cosets_w_; }    // W / W_L
  const CosetTable& cosets_WH() const noexcept { return cosets_wh_; }  // W_H / W_L

  /// "e" or a dotted word in simple reflections, e.g. "s2.s1".
  std::string weyl_label(std::size_t w_index) const;

 private:
  SymmetricDatum(DatumSpec spec, RootSystem roots);

  DatumSpec spec_;
  RootSystem roots_;
  IntMatrix theta_;
  std::vector<std::size_t> delta_L_;
  std::vector<Vec> gammas_;
  std::vector<std::size_t> gamma_source_;
  std::vector<IntMatrix> gamma_lift_;
  LatticePtr xt_, xth_, xtth_;
  std::optional<LatticeMap> q_, incl_, section_;
  IntMatrix to_gamma_;  // r x n, valid on ker q
  MatrixGroup w_, wl_, wh_, wr_;
  std::vector<std::size_t> wh_in_w_;
  std::vector<std::size_t> wh_image_;
  std::vector<IntMatrix> wh_on_th_;
  CosetTable cosets_w_, cosets_wh_;
};

using DatumPtr = std::shared_ptr<const SymmetricDatum>;

/// Existence of (equivariant) splittings of 0 -> X*(T/T_H) -> X*(T) -> X*(T_H) -> 0.
struct SplittingReport {
  // simply connected cover: X*(T) replaced by the weight lattice
  bool splitting_exists = false;
  bool wl_invariant_splitting_exists = false;
  bool wh_invariant_splitting_exists = false;
  // the adjoint lattice of the datum itself
  bool adjoint_splitting_exists = false;
  bool adjoint_wl_invariant_splitting_exists = false;
  bool adjoint_wh_invariant_splitting_exists = false;
};

SplittingReport splitting_check(const SymmetricDatum& datum);

/// The restriction q: L -> L / L^{-theta} for an involution on L, with the
/// kernel saturated and the target basis Hermite-reduced.
IntMatrix quotient_by_minus_eigenlattice(const IntMatrix& theta);

}  // namespace eqk
