#pragma once

// Small shared instances for the unit tests.

#include <memory>

#include "ydual/braided.hpp"
#include "ydual/hopf.hpp"
#include "ydual/yd.hpp"

namespace ydual::testing {

inline BaseRef make_base(HopfAlgebraData b) {
  return std::make_shared<const HopfAlgebraData>(std::move(b));
}

inline BaseRef kz(std::size_t n, Field f = Field::rationals()) {
  return make_base(build_group_algebra(cyclic_group_table(n), f, "B", cyclic_group_labels(n)));
}

/// span{x} over kZ_n with g·x = q x and δ(x) = g^e ⊗ x.
inline YDModule line_module(const BaseRef& b, const std::string& name, const Scalar& q,
                            std::size_t e) {
  const Field f = b->field();
  const std::size_t n = b->dim();
  const SpaceRef v = make_space(name, 1, {name == "W" ? "w" : "x"});
  Matrix act(1, n, f);
  Scalar p = Scalar::one(f);
  for (std::size_t a = 0; a < n; ++a) {
    act(0, a) = p;
    p *= q.in(f);
  }
  Matrix co(n, 1, f);
  co(e % n, 0) = Scalar::one(f);
  return YDModule{b, {v}, LinMap({b->carrier, v}, {v}, std::move(act)),
                  LinMap({v}, {b->carrier, v}, std::move(co))};
}

inline std::size_t failures(const Report& r) {
  return r.count(Status::fail) + r.count(Status::error);
}

inline std::string failing_ids(const Report& r) {
  std::string s;
  for (const auto& it : r.items())
    if (it.status == Status::fail || it.status == Status::error)
      s += it.id + " [" + it.detail + "] ";
  return s;
}

}  // namespace ydual::testing
