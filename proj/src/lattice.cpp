#include "eqk/lattice.hpp"

#include <cstdlib>
#include <utility>

namespace eqk {

LatticePtr make_lattice(std::string name, std::vector<std::string> labels) {
  return std::make_shared<const Lattice>(Lattice{std::move(name), std::move(labels)});
}

LatticePtr make_lattice(std::string name, std::size_t rank, const std::string& prefix) {
  std::vector<std::string> labels;
  labels.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) labels.push_back(prefix + std::to_string(i + 1));
  return make_lattice(std::move(name), std::move(labels));
}

bool same_lattice(const Lattice& a, const Lattice& b) { return a.name == b.name && a.rank() == b.rank(); }

LatticeMap::LatticeMap(LatticePtr source, LatticePtr target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_->rank() || matrix_.cols() != source_->rank())
    throw Error(ErrorCode::InvalidInput, "lattice map matrix has wrong shape for " + source_->name + " -> " +
                                             target_->name);
}

LatticeMap LatticeMap::after(const LatticeMap& inner) const {
  if (!same_lattice(*inner.target_, *source_))
    throw Error(ErrorCode::LatticeMismatch, "cannot compose " + inner.target_->name + " with " + source_->name);
  return LatticeMap(inner.source_, target_, matrix_ * inner.matrix_);
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  while (r < D.rows() && r < D.cols() && D(r, r) != 0) ++r;
  return r;
}

std::vector<Int> SmithForm::elementary_divisors() const {
  std::vector<Int> d;
  for (std::size_t i = 0; i < rank(); ++i) d.push_back(D(i, i));
  return d;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SmithForm s{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
  IntMatrix& D = s.D;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Pivot on the smallest nonzero entry of the trailing block.
    auto bring_smallest = [&]() -> bool {
      std::size_t bi = rows, bj = cols;
      Int best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          Int a = std::llabs(D(i, j));
          if (a != 0 && (best == 0 || a < best)) {
            best = a;
            bi = i;
            bj = j;
          }
        }
      if (best == 0) return false;
      D.swap_rows(t, bi);
      s.U.swap_rows(t, bi);
      D.swap_cols(t, bj);
      s.V.swap_cols(t, bj);
      return true;
    };
    if (!bring_smallest()) break;

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (D(i, t) == 0) continue;
        Int q = D(i, t) / D(t, t);
        D.add_row_multiple(i, t, -q);
        s.U.add_row_multiple(i, t, -q);
        if (D(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (D(t, j) == 0) continue;
        Int q = D(t, j) / D(t, t);
        D.add_col_multiple(j, t, -q);
        s.V.add_col_multiple(j, t, -q);
        if (D(t, j) != 0) dirty = true;
      }
      if (dirty) {
        bring_smallest();
        continue;
      }
      // Enforce divisibility of the remaining block by the pivot.
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (D(i, j) % D(t, t) != 0) {
            D.add_row_multiple(t, i, 1);
            s.U.add_row_multiple(t, i, 1);
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      s.U.negate_row(t);
    }
  }
  return s;
}

IntMatrix row_hermite_form(const IntMatrix& m) {
  IntMatrix h = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    // Euclid on column c among rows r..end.
    for (;;) {
      std::size_t best = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i)
        if (h(i, c) != 0 && (best == h.rows() || std::llabs(h(i, c)) < std::llabs(h(best, c)))) best = i;
      if (best == h.rows()) break;
      h.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        h.add_row_multiple(i, r, -(h(i, c) / h(r, c)));
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (r >= h.rows() || h(r, c) == 0) continue;
    if (h(r, c) < 0) h.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) {
      // reduce entries above the pivot into [0, pivot)
      Int q = h(i, c) / h(r, c);
      if (h(i, c) - q * h(r, c) < 0) --q;
      h.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  return h.row_block(0, r);
}

IntMatrix integer_kernel(const IntMatrix& m) {
  SmithForm s = smith_normal_form(m);
  return s.V.col_block(s.rank(), m.cols());
}

std::optional<Vec> solve_integer(const IntMatrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::InvalidInput, "right-hand side has wrong length");
  SmithForm s = smith_normal_form(a);
  Vec ub = s.U * b;
  const std::size_t r = s.rank();
  Vec y(a.cols(), 0);
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < r) {
      if (ub[i] % s.D(i, i) != 0) return std::nullopt;
      y[i] = ub[i] / s.D(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V * y;
}

LatticeMap split_surjection(const LatticeMap& q) {
  const IntMatrix& m = q.matrix();
  SmithForm s = smith_normal_form(m);
  if (s.rank() != m.rows())
    throw Error(ErrorCode::NotSurjective, "map " + q.source()->name + " -> " + q.target()->name + " is not of full rank");
  for (Int d : s.elementary_divisors())
    if (d != 1)
      throw Error(ErrorCode::NotSurjective,
                  "map " + q.source()->name + " -> " + q.target()->name + " has elementary divisor " + std::to_string(d));
  // q = U^-1 [I 0] V^-1, so s = V [U; 0] is a section.
  IntMatrix padded(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) padded(i, j) = s.U(i, j);
  return LatticeMap(q.target(), q.source(), s.V * padded);
}

std::optional<IntMatrix> equivariant_section(const LatticeMap& q, std::span<const LatticeAction> actions) {
  split_surjection(q);  // surjectivity check
  const IntMatrix& qm = q.matrix();
  const std::size_t n = qm.cols();  // source rank
  const std::size_t m = qm.rows();  // target rank
  for (const auto& g : actions) {
    if (g.on_source.rows() != n || g.on_source.cols() != n || g.on_target.rows() != m || g.on_target.cols() != m)
      throw Error(ErrorCode::IncompatibleAction, "action matrices have wrong shape");
    if (!(qm * g.on_source == g.on_target * qm))
      throw Error(ErrorCode::IncompatibleAction, "action does not commute with the surjection");
  }
  // Unknown S (n x m), S(i, b) stored at index b * n + i.
  auto var = [n](std::size_t i, std::size_t b) { return b * n + i; };
  const std::size_t unknowns = n * m;
  std::vector<Vec> rows;
  Vec rhs;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Vec row(unknowns, 0);
      for (std::size_t i = 0; i < n; ++i) row[var(i, b)] = qm(a, i);
      rows.push_back(std::move(row));
      rhs.push_back(a == b ? 1 : 0);
    }
  for (const auto& g : actions)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t b = 0; b < m; ++b) {
        // (G S)(i,b) - (S H)(i,b) = 0
        Vec row(unknowns, 0);
        for (std::size_t k = 0; k < n; ++k) row[var(k, b)] = checked_add(row[var(k, b)], g.on_source(i, k));
        for (std::size_t c = 0; c < m; ++c) row[var(i, c)] = checked_sub(row[var(i, c)], g.on_target(c, b));
        rows.push_back(std::move(row));
        rhs.push_back(0);
      }
  auto x = solve_integer(IntMatrix::from_rows(rows, unknowns), rhs);
  if (!x) return std::nullopt;
  IntMatrix section(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < m; ++b) section(i, b) = (*x)[var(i, b)];
  return section;
}

bool equivariant_section_exists(const LatticeMap& q, std::span<const LatticeAction> actions) {
  return equivariant_section(q, actions).has_value();
}

}  // namespace eqk
