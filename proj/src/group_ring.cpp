#include "eqk/group_ring.hpp"

#include <algorithm>
#include <sstream>

#include <boost/container_hash/hash.hpp>

namespace eqk {

std::size_t VecHash::operator()(const Vec& v) const noexcept { return boost::hash_range(v.begin(), v.end()); }

void TermAccumulator::add(const Vec& exponent, Int coef) {
  if (exponent.size() != lattice_->rank())
    throw Error(ErrorCode::LatticeMismatch, "exponent " + eqk::to_string(exponent) + " has wrong rank for " +
                                                lattice_->name);
  if (coef == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coef);
  if (!inserted) it->second = checked_add(it->second, coef);
}

void TermAccumulator::add(const GroupRingElement& f, Int scale) {
  if (!same_lattice(*f.lattice(), *lattice_))
    throw Error(ErrorCode::LatticeMismatch, "operands live in " + lattice_->name + " and " + f.lattice()->name);
  for (const auto& [u, c] : f.terms()) add(u, checked_mul(c, scale));
}

GroupRingElement TermAccumulator::finish() const {
  std::vector<std::pair<Vec, Int>> sorted;
  sorted.reserve(terms_.size());
  for (const auto& [u, c] : terms_)
    if (c != 0) sorted.emplace_back(u, c);
  std::sort(sorted.begin(), sorted.end());
  GroupRingElement out(lattice_);
  for (auto& [u, c] : sorted) out.terms_.emplace_hint(out.terms_.end(), std::move(u), c);
  return out;
}

GroupRingElement::GroupRingElement(LatticePtr lattice, Terms terms) : lattice_(std::move(lattice)) {
  for (auto& [u, c] : terms) add_term(u, c);
}

GroupRingElement GroupRingElement::constant(LatticePtr lattice, Int c) {
  GroupRingElement f(lattice);
  f.add_term(Vec(lattice->rank(), 0), c);
  return f;
}

GroupRingElement GroupRingElement::monomial(LatticePtr lattice, Vec exponent, Int coef) {
  GroupRingElement f(lattice);
  f.add_term(exponent, coef);
  return f;
}

Int GroupRingElement::coefficient(const Vec& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

Int GroupRingElement::augmentation() const {
  Int s = 0;
  for (const auto& [u, c] : terms_) s = checked_add(s, c);
  return s;
}

void GroupRingElement::add_term(const Vec& exponent, Int coef) {
  if (exponent.size() != rank())
    throw Error(ErrorCode::LatticeMismatch, "exponent " + eqk::to_string(exponent) + " has wrong rank for " +
                                                lattice_->name);
  if (coef == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coef);
  if (inserted) return;
  it->second = checked_add(it->second, coef);
  if (it->second == 0) terms_.erase(it);
}

void GroupRingElement::require_same(const GroupRingElement& o) const {
  if (!same_lattice(*lattice_, *o.lattice_))
    throw Error(ErrorCode::LatticeMismatch, "operands live in " + lattice_->name + " and " + o.lattice_->name);
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  require_same(o);
  for (const auto& [u, c] : o.terms_) add_term(u, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  require_same(o);
  for (const auto& [u, c] : o.terms_) add_term(u, checked_sub(0, c));
  return *this;
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
  GroupRingElement r = *this;
  r += o;
  return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
  GroupRingElement r = *this;
  r -= o;
  return r;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
  require_same(o);
  TermAccumulator r(lattice_);
  for (const auto& [u, a] : terms_)
    for (const auto& [v, b] : o.terms_) r.add(add(u, v), checked_mul(a, b));
  return r.finish();
}

GroupRingElement GroupRingElement::operator-() const { return scaled(-1); }

GroupRingElement GroupRingElement::scaled(Int k) const {
  GroupRingElement r(lattice_);
  for (const auto& [u, c] : terms_) r.add_term(u, checked_mul(c, k));
  return r;
}

GroupRingElement GroupRingElement::act(const IntMatrix& w) const {
  if (w.rows() != rank() || w.cols() != rank())
    throw Error(ErrorCode::LatticeMismatch, "matrix does not act on " + lattice_->name);
  return map_exponents(lattice_, w);
}

GroupRingElement GroupRingElement::map_exponents(const LatticePtr& target, const IntMatrix& f) const {
  if (f.cols() != rank() || f.rows() != target->rank())
    throw Error(ErrorCode::LatticeMismatch, "map does not start at " + lattice_->name);
  TermAccumulator r(target);
  for (const auto& [u, c] : terms_) r.add(f * u, c);
  return r.finish();
}

bool GroupRingElement::operator==(const GroupRingElement& o) const {
  return same_lattice(*lattice_, *o.lattice_) && terms_ == o.terms_;
}

std::string GroupRingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [u, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Int a = c < 0 ? -c : c;
    bool unit = eqk::is_zero(u);
    if (a != 1 || unit) os << a;
    if (!unit) os << (a != 1 ? "*" : "") << "e^" << eqk::to_string(u);
  }
  return os.str();
}

bool congruent_mod(const GroupRingElement& f, const GroupRingElement& g, const Vec& chi) {
  if (is_zero(chi)) throw Error(ErrorCode::ZeroCharacter, "congruence modulo 1 - e^0 is meaningless");
  if (chi.size() != f.rank()) throw Error(ErrorCode::LatticeMismatch, "character has wrong rank");
  GroupRingElement d = f - g;
  if (d.is_zero()) return true;

  // chi = k chi0, chi0 primitive; U chi0 = +-e_0 puts chi0 first in a basis.
  const Int k = content(chi);
  Vec chi0(chi.size());
  for (std::size_t i = 0; i < chi.size(); ++i) chi0[i] = chi[i] / k;
  IntMatrix col = IntMatrix::from_columns({chi0}, chi.size());
  SmithForm sf = smith_normal_form(col);
  const Int lead = (sf.U * chi0)[0];  // +-1

  // t = e^{chi0}; group by the complementary coordinates
  std::map<Vec, std::map<Int, Int>> laurent;
  for (const auto& [u, c] : d.terms()) {
    Vec y = sf.U * u;
    Int deg = checked_mul(y[0], lead);
    y.erase(y.begin());
    laurent[y][deg] += c;
  }
  // 1 - t^{-k} = -t^{-k}(1 - t^k): divide each Laurent polynomial by t^k - 1
  for (auto& [rest, poly] : laurent) {
    while (!poly.empty()) {
      auto top = std::prev(poly.end());
      if (top->second == 0) {
        poly.erase(top);
        continue;
      }
      const Int deg = top->first;
      const Int c = top->second;
      const Int low = poly.begin()->first;
      if (deg - low < k) return false;  // nonzero remainder
      poly.erase(top);
      Int& below = poly[deg - k];
      below = checked_add(below, c);
    }
  }
  return true;
}

GroupRingElement orbit_sum(std::span<const IntMatrix> group, const GroupRingElement& f) {
  TermAccumulator r(f.lattice());
  for (const auto& w : group) r.add(f.act(w));
  return r.finish();
}

bool is_invariant(std::span<const IntMatrix> generators, const GroupRingElement& f) {
  for (const auto& g : generators)
    if (!(f.act(g) == f)) return false;
  return true;
}

}  // namespace eqk
