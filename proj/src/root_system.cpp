#include "eqk/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace eqk {

namespace {

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// Squared lengths of simple roots, up to a common scalar.
std::vector<Int> root_lengths(const CartanType& t) {
  std::vector<Int> d(t.rank, 1);
  switch (t.family) {
    case 'B':
      std::fill(d.begin(), d.end(), 2);
      d.back() = 1;
      break;
    case 'C':
      d.back() = 2;
      break;
    case 'F':
      d = {2, 2, 1, 1};
      break;
    case 'G':
      d = {1, 3};
      break;
    default:
      break;
  }
  return d;
}

}  // namespace

CartanType CartanType::parse(const std::string& s) {
  if (s.size() < 2 || !std::isalpha(static_cast<unsigned char>(s[0])))
    throw Error(ErrorCode::UnsupportedType, "cannot parse Cartan type '" + s + "'");
  CartanType t;
  t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  try {
    t.rank = std::stoi(s.substr(1));
  } catch (const std::exception&) {
    throw Error(ErrorCode::UnsupportedType, "cannot parse Cartan type '" + s + "'");
  }
  cartan_matrix(t);  // validates
  return t;
}

std::size_t CartanType::weyl_order() const {
  const std::size_t n = static_cast<std::size_t>(rank);
  switch (family) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return (std::size_t{1} << n) * factorial(n);
    case 'D': return (std::size_t{1} << (n - 1)) * factorial(n);
    case 'E': return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case 'F': return 1152;
    case 'G': return 12;
  }
  return 0;
}

IntMatrix cartan_matrix(const CartanType& t) {
  const int n = t.rank;
  auto bad = [&]() { return Error(ErrorCode::UnsupportedType, "unsupported Cartan type " + t.label()); };
  if (n < 1) throw bad();
  IntMatrix a(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  auto link = [&](int i, int j) { a(i, j) = a(j, i) = -1; };
  switch (t.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      if (n < 2) throw bad();
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 1, n - 2) = -2;
      break;
    case 'C':
      if (n < 2) throw bad();
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 2, n - 1) = -2;
      break;
    case 'D':
      if (n < 4) throw bad();
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) throw bad();
      link(0, 2);
      link(1, 3);
      link(2, 3);
      for (int i = 3; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      if (n != 4) throw bad();
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a(2, 1) = -2;
      break;
    case 'G':
      if (n != 2) throw bad();
      a(0, 1) = -3;
      a(1, 0) = -1;
      break;
    default:
      throw bad();
  }
  return a;
}

RootSystem::RootSystem(std::vector<CartanType> components) : components_(std::move(components)) {
  std::size_t n = 0;
  for (const auto& c : components_) n += static_cast<std::size_t>(c.rank);
  cartan_ = IntMatrix(n, n);
  form_ = IntMatrix(n, n);
  std::size_t off = 0;
  for (const auto& c : components_) {
    IntMatrix a = cartan_matrix(c);
    std::vector<Int> d = root_lengths(c);
    for (int i = 0; i < c.rank; ++i)
      for (int j = 0; j < c.rank; ++j) {
        cartan_(off + i, off + j) = a(i, j);
        form_(off + i, off + j) = d[i] * a(i, j);
      }
    off += static_cast<std::size_t>(c.rank);
  }
  if (!(form_ == form_.transpose())) throw Error(ErrorCode::UnsupportedType, "internal: form is not symmetric");

  // s_i(alpha_j) = alpha_j - a_ij alpha_i
  for (std::size_t i = 0; i < n; ++i) {
    IntMatrix s = IntMatrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) s(i, j) = checked_sub(s(i, j), cartan_(i, j));
    simple_reflections_.push_back(std::move(s));
  }

  std::set<Vec> seen;
  std::vector<Vec> queue;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    if (seen.insert(e).second) queue.push_back(e);
  }
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (const auto& s : simple_reflections_) {
      Vec v = s * queue[h];
      if (seen.insert(v).second) queue.push_back(v);
    }
  for (const auto& v : seen) {
    bool pos = std::all_of(v.begin(), v.end(), [](Int x) { return x >= 0; });
    bool neg = std::all_of(v.begin(), v.end(), [](Int x) { return x <= 0; });
    if (!pos && !neg) throw Error(ErrorCode::RootSystemViolation, "internal: root with mixed signs");
    if (pos) positive_.push_back(v);
  }
  std::stable_sort(positive_.begin(), positive_.end(), [](const Vec& a, const Vec& b) {
    Int ha = std::accumulate(a.begin(), a.end(), Int{0});
    Int hb = std::accumulate(b.begin(), b.end(), Int{0});
    return ha < hb;
  });
  roots_ = positive_;
  for (const auto& v : positive_) roots_.push_back(negate(v));
  for (std::size_t i = 0; i < roots_.size(); ++i) index_.emplace(roots_[i], i);
}

std::optional<std::size_t> RootSystem::root_index(const Vec& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Int RootSystem::form(const Vec& x, const Vec& y) const { return dot(x, form_ * y); }

Int RootSystem::coroot_pairing(const Vec& x, const Vec& alpha) const {
  Int num = checked_mul(2, form(x, alpha));
  Int den = form(alpha, alpha);
  if (den == 0 || num % den != 0) throw Error(ErrorCode::RootSystemViolation, "coroot pairing is not integral");
  return num / den;
}

IntMatrix RootSystem::reflection(const Vec& alpha) const {
  const std::size_t n = rank();
  IntMatrix s = IntMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec e(n, 0);
    e[j] = 1;
    Int c = coroot_pairing(e, alpha);
    for (std::size_t i = 0; i < n; ++i) s(i, j) = checked_sub(s(i, j), checked_mul(c, alpha[i]));
  }
  return s;
}

std::size_t RootSystem::weyl_order_formula() const {
  std::size_t o = 1;
  for (const auto& c : components_) o *= c.weyl_order();
  return o;
}

}  // namespace eqk
