#pragma once

#include <map>
#include <span>
#include <string>
#include <unordered_map>

#include "eqk/lattice.hpp"
#include "eqk/matrix_group.hpp"

namespace eqk {

class GroupRingElement;

struct VecHash {
  std::size_t operator()(const Vec& v) const noexcept;
};

/// Unordered scratch space for building an element from many terms.
class TermAccumulator {
 public:
  explicit TermAccumulator(LatticePtr lattice) : lattice_(std::move(lattice)) {}
  void add(const Vec& exponent, Int coef);
  void add(const GroupRingElement& f, Int scale = 1);
  std::size_t size() const noexcept { return terms_.size(); }
  GroupRingElement finish() const;

 private:
  LatticePtr lattice_;
  std::unordered_map<Vec, Int, VecHash> terms_;
};

/// Finite integer combination of formal exponentials e^u, u in a lattice.
/// Terms are kept in lexicographic order of exponents with no zero
/// coefficients, so equality is structural.
class GroupRingElement {
 public:
  using Terms = std::map<Vec, Int>;

  explicit GroupRingElement(LatticePtr lattice) : lattice_(std::move(lattice)) {}
  GroupRingElement(LatticePtr lattice, Terms terms);

  static GroupRingElement constant(LatticePtr lattice, Int c);
  static GroupRingElement monomial(LatticePtr lattice, Vec exponent, Int coef = 1);

  const LatticePtr& lattice() const noexcept { return lattice_; }
  std::size_t rank() const noexcept { return lattice_->rank(); }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Int coefficient(const Vec& exponent) const;
  /// Sum of coefficients (value at the trivial character).
  Int augmentation() const;

  void add_term(const Vec& exponent, Int coef);

  GroupRingElement operator+(const GroupRingElement& o) const;
  GroupRingElement operator-(const GroupRingElement& o) const;
  GroupRingElement operator*(const GroupRingElement& o) const;
  GroupRingElement operator-() const;
  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  GroupRingElement scaled(Int k) const;

  /// e^u -> e^{w u}. w must be square of the lattice rank.
  GroupRingElement act(const IntMatrix& w) const;
  /// e^u -> e^{f(u)} into another lattice (collisions are summed).
  GroupRingElement map_exponents(const LatticePtr& target, const IntMatrix& f) const;
  /// e^u -> e^{g(u)} for an arbitrary exponent map.
  template <class F>
  GroupRingElement transform(const LatticePtr& target, F&& g) const;

  bool operator==(const GroupRingElement& o) const;
  std::string to_string() const;

 private:
  friend class TermAccumulator;
  void require_same(const GroupRingElement& o) const;

  LatticePtr lattice_;
  Terms terms_;
};

template <class F>
GroupRingElement GroupRingElement::transform(const LatticePtr& target, F&& g) const {
  TermAccumulator acc(target);
  for (const auto& [u, c] : terms_) acc.add(g(u), c);
  return acc.finish();
}

/// e^{chi} for a single character.
inline GroupRingElement exp_of(const LatticePtr& l, const Vec& chi) { return GroupRingElement::monomial(l, chi); }

/// True iff f - g lies in the principal ideal (1 - e^{-chi}). Throws ZeroCharacter.
bool congruent_mod(const GroupRingElement& f, const GroupRingElement& g, const Vec& chi);

GroupRingElement orbit_sum(std::span<const IntMatrix> group, const GroupRingElement& f);
inline GroupRingElement orbit_sum(const MatrixGroup& group, const GroupRingElement& f) {
  return orbit_sum(group.elements(), f);
}

/// True iff act(g, f) == f for every g.
bool is_invariant(std::span<const IntMatrix> generators, const GroupRingElement& f);

}  // namespace eqk
