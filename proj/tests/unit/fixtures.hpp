#pragma once

#include <doctest.h>

#include "eqk/verification.hpp"

namespace fx {

using namespace eqk;

// PGL(2n)/PSp(2n): theta fixes the odd simple roots and sends
// a_{2k} to -(a_{2k-1} + a_{2k} + a_{2k+1}).
inline DatumSpec pgl_spec(int n) {
  const std::size_t rank = static_cast<std::size_t>(2 * n - 1);
  DatumSpec s;
  s.types = {CartanType::parse("A" + std::to_string(rank))};
  IntMatrix th = IntMatrix::identity(rank);
  for (std::size_t j = 1; j < rank; j += 2) {
    th(j, j) = -1;
    th(j - 1, j) = -1;
    th(j + 1, j) = -1;
  }
  s.theta = th;
  return s;
}

inline DatumPtr pgl6() {
  static DatumPtr d = SymmetricDatum::build(pgl_spec(3));
  return d;
}

inline DatumPtr pgl4() {
  static DatumPtr d = SymmetricDatum::build(pgl_spec(2));
  return d;
}

inline DatumPtr group(const std::string& type) {
  DatumSpec s;
  s.types = {CartanType::parse(type)};
  s.group_case = true;
  return SymmetricDatum::build(s);
}

inline FanSpec split_rank2() { return FanSpec{{{1, 0}, {1, 1}, {0, 1}}, {{0, 1}, {1, 2}}}; }

inline FanPtr pgl6_wonderful() {
  static FanPtr f = Fan::build(pgl6());
  return f;
}

inline FanPtr pgl6_split() {
  static FanPtr f = Fan::build(pgl6(), split_rank2());
  return f;
}

inline GroupRingElement mono(const LatticePtr& l, Vec u, Int c = 1) { return GroupRingElement::monomial(l, std::move(u), c); }

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an eqk::Error");
  return ErrorCode::InvalidInput;
}

}  // namespace fx
