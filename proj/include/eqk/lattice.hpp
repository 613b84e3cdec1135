#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eqk/matrix.hpp"

namespace eqk {

/// A free abelian group Z^rank with named basis vectors.
struct Lattice {
  std::string name;
  std::vector<std::string> basis_labels;

  std::size_t rank() const noexcept { return basis_labels.size(); }
};

using LatticePtr = std::shared_ptr<const Lattice>;

LatticePtr make_lattice(std::string name, std::vector<std::string> labels);
/// Lattice with labels prefix1..prefixN.
LatticePtr make_lattice(std::string name, std::size_t rank, const std::string& prefix);

/// Two lattices are the same if they carry the same name and rank.
bool same_lattice(const Lattice& a, const Lattice& b);

/// Homomorphism source -> target; matrix is target.rank x source.rank.
class LatticeMap {
 public:
  LatticeMap(LatticePtr source, LatticePtr target, IntMatrix matrix);

  const LatticePtr& source() const noexcept { return source_; }
  const LatticePtr& target() const noexcept { return target_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }

  Vec operator()(const Vec& x) const { return matrix_ * x; }

  /// (*this) o inner
  LatticeMap after(const LatticeMap& inner) const;

 private:
  LatticePtr source_;
  LatticePtr target_;
  IntMatrix matrix_;
};

/// U * M * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  std::size_t rank() const;
  std::vector<Int> elementary_divisors() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Row Hermite normal form H = U * M (U unimodular), with zero rows dropped.
IntMatrix row_hermite_form(const IntMatrix& m);

/// Columns form a Z-basis of {x : M x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

/// Some integer x with A x = b, or nullopt if none exists.
std::optional<Vec> solve_integer(const IntMatrix& a, const Vec& b);

/// A section s with q o s = id. Throws NotSurjective when q is not onto.
LatticeMap split_surjection(const LatticeMap& q);

/// A compatible pair of automorphisms of q's source and target.
struct LatticeAction {
  IntMatrix on_source;
  IntMatrix on_target;
};

/// True iff q admits a section commuting with every action in `actions`.
bool equivariant_section_exists(const LatticeMap& q, std::span<const LatticeAction> actions);

/// The section itself, if one exists.
std::optional<IntMatrix> equivariant_section(const LatticeMap& q, std::span<const LatticeAction> actions);

}  // namespace eqk
