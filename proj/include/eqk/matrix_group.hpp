#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "eqk/matrix.hpp"

namespace eqk {

/// A finite group of integer matrices, materialized element by element.
///
/// Elements are stored in breadth-first order from the identity, each one
/// the product of its parent with one generator (on the right). The order is
/// deterministic given the generator order, and every element carries the
/// generator word that produced it.
class MatrixGroup {
 public:
  /// Closure of `generators`. Throws UnsupportedType if the group exceeds
  /// `max_order` elements.
  static MatrixGroup generated_by(std::vector<IntMatrix> generators, std::size_t dim, std::size_t max_order = 200000);

  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<IntMatrix>& generators() const noexcept { return generators_; }
  const std::vector<IntMatrix>& elements() const noexcept { return elements_; }
  const IntMatrix& element(std::size_t i) const { return elements_[i]; }
  /// Generator indices whose product (left to right) is element i.
  const std::vector<int>& word(std::size_t i) const { return words_[i]; }

  std::optional<std::size_t> index_of(const IntMatrix& m) const;
  bool contains(const IntMatrix& m) const { return index_of(m).has_value(); }

  /// Index of element(i) * element(j).
  std::size_t multiply(std::size_t i, std::size_t j) const;
  std::size_t inverse(std::size_t i) const;

 private:
  std::size_t dim_ = 0;
  std::vector<IntMatrix> generators_;
  std::vector<IntMatrix> elements_;
  std::vector<std::vector<int>> words_;
  std::unordered_map<std::string, std::size_t> lookup_;
};

/// Left cosets g*H of a subgroup H inside a group G (both as MatrixGroups
/// over the same ambient lattice).
struct CosetTable {
  /// For each coset, the index in G of its representative: the element of
  /// the coset appearing first in G's enumeration order.
  std::vector<std::size_t> representatives;
  /// For each element index of G, the coset it lies in.
  std::vector<std::size_t> coset_of;

  std::size_t size() const noexcept { return representatives.size(); }
};

/// Throws NotSubgroup if some element of `subgroup` is not in `group`.
CosetTable left_cosets(const MatrixGroup& group, const MatrixGroup& subgroup);

}  // namespace eqk
