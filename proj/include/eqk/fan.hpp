#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "eqk/symmetric_datum.hpp"

namespace eqk {

/// A cone as a sorted list of ray indices.
using RaySet = std::vector<std::size_t>;

/// User-supplied subdivision of the positive chamber. Ray coordinates are
/// the values <gamma_i, v> on the restricted simple roots, so the chamber
/// is the nonnegative orthant.
struct FanSpec {
  std::vector<Vec> rays;
  std::vector<RaySet> max_cones;
};

/// A cone of the full fan F, represented as w(tau) for tau in F+ and the
/// first w in the enumeration of W_{G/H} that produces it.
struct FullCone {
  RaySet rays;             // indices into Fan::rays()
  std::size_t restricted;  // index in W_{G/H}
  std::size_t positive;    // index of tau in Fan::positive_cones()
};

/// A smooth subdivision F+ of the positive restricted chamber together with
/// its W_{G/H}-translates F.
class Fan {
 public:
  /// No spec means the wonderful fan. Throws NotInChamber, NotSmooth,
  /// NotSubdivision, InvalidInput.
  static std::shared_ptr<const Fan> build(DatumPtr datum, const std::optional<FanSpec>& spec = std::nullopt);

  const SymmetricDatum& datum() const noexcept { return *datum_; }
  const DatumPtr& datum_ptr() const noexcept { return datum_; }
  std::size_t dim() const noexcept { return datum_->restricted_rank(); }
  bool is_wonderful() const noexcept { return wonderful_; }

  // ---- F+ ----
  const std::vector<Vec>& positive_rays() const noexcept { return pos_rays_; }
  /// All cones of F+, by dimension then lexicographically; index 0 is {0}.
  const std::vector<RaySet>& positive_cones() const noexcept { return pos_cones_; }
  /// Indices into positive_cones() of the maximal cones F+(r).
  const std::vector<std::size_t>& maximal_cones() const noexcept { return max_cones_; }
  std::optional<std::size_t> positive_cone_index(const RaySet& rays) const;
  /// Throws ConeNotInFan.
  std::size_t require_positive_cone(const RaySet& rays) const;
  /// tau is a face of sigma (both indices into positive_cones()).
  bool is_face(std::size_t tau, std::size_t sigma) const;
  /// "<>" or "<1,3>" (1-based positive ray numbers).
  std::string cone_label(std::size_t positive_cone) const;
  std::optional<std::size_t> cone_from_label(const std::string& label) const;
  /// Minimal subsets of F+(1) that do not span a cone.
  std::vector<RaySet> minimal_non_faces() const;

  /// Rows u_j with <u_j, v_i> = delta_ij for the rays of a maximal cone
  /// (in the order of the cone's ray list); characters in gamma-coordinates.
  IntMatrix dual_basis(std::size_t max_cone) const;

  /// Stabilizer W_tau as indices into W_H. Memoized.
  const std::vector<std::size_t>& stabilizer(std::size_t positive_cone) const;

  /// None unless sigma and sigma' (indices into maximal_cones()) share a
  /// facet; otherwise the primitive character vanishing on it, positive on
  /// the ray of sigma' outside sigma.
  std::optional<Vec> shared_facet_character(std::size_t sigma, std::size_t sigma2) const;
  /// i such that some facet of the maximal cone lies in gamma_i^perp.
  std::vector<std::size_t> facet_orthogonal_restricted_roots(std::size_t sigma) const;

  // ---- F ----
  /// Rays of F: those of F+ first, then new ones in enumeration order.
  const std::vector<Vec>& rays() const noexcept { return rays_; }
  const std::vector<FullCone>& cones() const noexcept { return cones_; }
  std::optional<std::size_t> cone_index(const RaySet& rays) const;
  /// Action of the restricted Weyl element on coweights.
  const IntMatrix& coweight_action(std::size_t restricted) const { return coweight_[restricted]; }
  /// Permutation of rays() induced by a restricted Weyl element.
  const std::vector<std::size_t>& ray_permutation(std::size_t restricted) const { return ray_perm_[restricted]; }
  /// Image of a positive cone under a restricted Weyl element, as an index into cones().
  std::size_t translate(std::size_t restricted, std::size_t positive_cone) const;

 private:
  Fan() = default;
  void build_positive(const std::optional<FanSpec>& spec);
  void build_full();

  DatumPtr datum_;
  bool wonderful_ = false;
  std::vector<Vec> pos_rays_;
  std::vector<RaySet> pos_cones_;
  std::map<RaySet, std::size_t> pos_index_;
  std::vector<std::size_t> max_cones_;

  std::vector<Vec> rays_;
  std::map<Vec, std::size_t> ray_index_;
  std::vector<FullCone> cones_;
  std::map<RaySet, std::size_t> cone_index_;
  std::vector<IntMatrix> coweight_;
  std::vector<std::vector<std::size_t>> ray_perm_;

  mutable std::mutex stab_mutex_;
  mutable std::map<std::size_t, std::vector<std::size_t>> stab_cache_;
};

using FanPtr = std::shared_ptr<const Fan>;

}  // namespace eqk
