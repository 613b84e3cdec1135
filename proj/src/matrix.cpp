#include "eqk/matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>

namespace eqk {

namespace mp = boost::multiprecision;

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::IncompatibleAction: return "IncompatibleAction";
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::NotMinimalRank: return "NotMinimalRank";
    case ErrorCode::RootSystemViolation: return "RootSystemViolation";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::UnsupportedType: return "UnsupportedType";
    case ErrorCode::LatticeMismatch: return "LatticeMismatch";
    case ErrorCode::ZeroCharacter: return "ZeroCharacter";
    case ErrorCode::NotSmooth: return "NotSmooth";
    case ErrorCode::NotSubdivision: return "NotSubdivision";
    case ErrorCode::NotInChamber: return "NotInChamber";
    case ErrorCode::ConeNotInFan: return "ConeNotInFan";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::DecompositionResidual: return "DecompositionResidual";
    case ErrorCode::RelationViolation: return "RelationViolation";
    case ErrorCode::NoPreimageInBox: return "NoPreimageInBox";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
  return r;
}

Vec scale(const Vec& a, Int k) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(a[i], k);
  return r;
}

Vec negate(const Vec& a) { return scale(a, -1); }

Int dot(const Vec& a, const Vec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

bool is_zero(const Vec& a) {
  for (Int x : a)
    if (x != 0) return false;
  return true;
}

Int content(const Vec& a) {
  Int g = 0;
  for (Int x : a) g = std::gcd(g, x);
  return g;
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::InvalidInput, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::InvalidInput, "row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<Vec>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw Error(ErrorCode::InvalidInput, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vec IntMatrix::row(std::size_t i) const { return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

Vec IntMatrix::column(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::InvalidInput, "matrix product dimension mismatch");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      Int a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) = checked_add(r(i, j), checked_mul(a, o(k, j)));
    }
  return r;
}

Vec IntMatrix::operator*(const Vec& v) const {
  if (cols_ != v.size()) throw Error(ErrorCode::InvalidInput, "matrix-vector dimension mismatch");
  Vec r(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s = checked_add(s, checked_mul((*this)(i, j), v[j]));
    r[i] = s;
  }
  return r;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r = *this;
  for (Int& x : r.data_) x = checked_mul(x, -1);
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::InvalidInput, "matrix sum dimension mismatch");
  IntMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = checked_add(r.data_[i], o.data_[i]);
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const { return *this + (-o); }

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, Int k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j)
    (*this)(dst, j) = checked_add((*this)(dst, j), checked_mul(k, (*this)(src, j)));
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, Int k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i)
    (*this)(i, dst) = checked_add((*this)(i, dst), checked_mul(k, (*this)(i, src)));
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = checked_mul((*this)(i, j), -1);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = checked_mul((*this)(i, j), -1);
}

IntMatrix IntMatrix::row_block(std::size_t begin, std::size_t end) const {
  IntMatrix r(end - begin, cols_);
  for (std::size_t i = begin; i < end; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i - begin, j) = (*this)(i, j);
  return r;
}

IntMatrix IntMatrix::col_block(std::size_t begin, std::size_t end) const {
  IntMatrix r(rows_, end - begin);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = begin; j < end; ++j) r(i, j - begin) = (*this)(i, j);
  return r;
}

std::string IntMatrix::key() const {
  std::string k(reinterpret_cast<const char*>(data_.data()), data_.size() * sizeof(Int));
  return k;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) os << (i ? "," : "") << to_string(m.row(i));
  return os << ']';
}

namespace {

using Big = mp::cpp_int;
using BigRat = mp::cpp_rational;

Int to_int(const Big& b) {
  if (b > Big(std::numeric_limits<Int>::max()) || b < Big(std::numeric_limits<Int>::min()))
    throw Error(ErrorCode::Overflow, "value does not fit in 64 bits");
  return static_cast<Int>(b);
}

}  // namespace

Int determinant(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::InvalidInput, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<Big>> a(n, std::vector<Big>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  Big prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return to_int(sign * a[n - 1][n - 1]);
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::InvalidInput, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::vector<BigRat>> a(n, std::vector<BigRat>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw Error(ErrorCode::InvalidInput, "matrix is singular");
    std::swap(a[p], a[c]);
    BigRat piv = a[c][c];
    for (auto& x : a[c]) x /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      BigRat f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const BigRat& x = a[i][n + j];
      if (mp::denominator(x) != 1) throw Error(ErrorCode::InvalidInput, "matrix is not unimodular");
      inv(i, j) = to_int(mp::numerator(x));
    }
  return inv;
}

std::size_t rank(const IntMatrix& m) {
  std::vector<std::vector<BigRat>> a(m.rows(), std::vector<BigRat>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (a[i][c] == 0) continue;
      BigRat f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

IntMatrix solve_exact(const IntMatrix& a, const IntMatrix& b) {
  if (!a.is_square() || a.rows() != b.rows()) throw Error(ErrorCode::InvalidInput, "solve_exact: shape mismatch");
  const std::size_t n = a.rows();
  const std::size_t k = b.cols();
  std::vector<std::vector<BigRat>> m(n, std::vector<BigRat>(n + k));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
    for (std::size_t j = 0; j < k; ++j) m[i][n + j] = b(i, j);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw Error(ErrorCode::InvalidInput, "solve_exact: singular matrix");
    std::swap(m[p], m[c]);
    BigRat piv = m[c][c];
    for (auto& x : m[c]) x /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      BigRat f = m[i][c];
      for (std::size_t j = 0; j < n + k; ++j) m[i][j] -= f * m[c][j];
    }
  }
  IntMatrix x(n, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const BigRat& v = m[i][n + j];
      if (mp::denominator(v) != 1) throw Error(ErrorCode::InvalidInput, "solve_exact: solution is not integral");
      x(i, j) = to_int(mp::numerator(v));
    }
  return x;
}

}  // namespace eqk
