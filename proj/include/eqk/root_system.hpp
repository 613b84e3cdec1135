#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqk/matrix.hpp"

namespace eqk {

/// Irreducible Cartan type, Bourbaki numbering.
struct CartanType {
  char family = 'A';  // one of A B C D E F G
  int rank = 1;

  std::string label() const { return std::string(1, family) + std::to_string(rank); }
  /// Parses "A5", "B3", ... Throws UnsupportedType.
  static CartanType parse(const std::string& s);
  /// Closed-form order of the Weyl group.
  std::size_t weyl_order() const;
  bool operator==(const CartanType&) const = default;
};

/// Cartan matrix a_ij = <alpha_i^vee, alpha_j>.
IntMatrix cartan_matrix(const CartanType& t);

/// A (possibly reducible) root system realized in the basis of its simple
/// roots: simple root i is the unit vector e_i.
class RootSystem {
 public:
  explicit RootSystem(std::vector<CartanType> components);

  const std::vector<CartanType>& components() const noexcept { return components_; }
  std::size_t rank() const noexcept { return cartan_.rows(); }
  const IntMatrix& cartan() const noexcept { return cartan_; }

  /// Positive roots, ordered by height then lexicographically.
  const std::vector<Vec>& positive_roots() const noexcept { return positive_; }
  /// Positive roots followed by their negatives.
  const std::vector<Vec>& roots() const noexcept { return roots_; }
  std::optional<std::size_t> root_index(const Vec& v) const;
  bool is_root(const Vec& v) const { return root_index(v).has_value(); }

  /// W-invariant symmetric form (integral, up to a global scalar).
  Int form(const Vec& x, const Vec& y) const;
  /// <x, alpha^vee> for a root alpha.
  Int coroot_pairing(const Vec& x, const Vec& alpha) const;
  /// Matrix of the reflection s_alpha on the root lattice.
  IntMatrix reflection(const Vec& alpha) const;
  const std::vector<IntMatrix>& simple_reflections() const noexcept { return simple_reflections_; }

  std::size_t weyl_order_formula() const;

 private:
  std::vector<CartanType> components_;
  IntMatrix cartan_;
  IntMatrix form_;
  std::vector<IntMatrix> simple_reflections_;
  std::vector<Vec> positive_;
  std::vector<Vec> roots_;
  std::map<Vec, std::size_t> index_;
};

}  // namespace eqk
