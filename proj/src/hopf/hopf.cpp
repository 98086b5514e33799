#include "ydual/hopf.hpp"

namespace ydual {

namespace {

Op id(const HopfAlgebraData& b) { return Op::identity(b.sig(), b.field()); }

Op flip(const HopfAlgebraData& b) { return LinMap::swap(b.sig(), b.sig(), b.field()); }

}  // namespace

Report check_hopf(const HopfAlgebraData& b, const std::string& prefix) {
  Report r;
  const Op m = b.mult;
  const Op eta = b.unit;
  const Op delta = b.comult;
  const Op eps = b.counit;
  const Op s = b.antipode;
  const Op i = id(b);
  const Field f = b.field();
  auto add = [&](const std::string& name, const std::string& what, const Op& lhs, const Op& rhs) {
    r.add(guarded(prefix + "-" + name, what, [&] { return compare(prefix + "-" + name, what, lhs, rhs); }));
  };
  add("associativity", "m(m⊗id) = m(id⊗m)", m * Op::tensor({m, i}), m * Op::tensor({i, m}));
  add("unit", "m(η⊗id) = id", m * Op::tensor({eta, i}), i);
  add("unit-right", "m(id⊗η) = id", m * Op::tensor({i, eta}), i);
  add("coassociativity", "(Δ⊗id)Δ = (id⊗Δ)Δ", Op::tensor({delta, i}) * delta,
      Op::tensor({i, delta}) * delta);
  add("counit", "(ε⊗id)Δ = id", Op::tensor({eps, i}) * delta, i);
  add("counit-right", "(id⊗ε)Δ = id", Op::tensor({i, eps}) * delta, i);
  add("bialgebra", "Δm = (m⊗m)(id⊗τ⊗id)(Δ⊗Δ)", delta * m,
      Op::tensor({m, m}) * Op::tensor({i, flip(b), i}) * Op::tensor({delta, delta}));
  add("comult-unit", "Δη = η⊗η", delta * eta, Op::tensor({eta, eta}));
  add("counit-mult", "εm = ε⊗ε", eps * m, Op::tensor({eps, eps}));
  add("counit-unit", "εη = 1", eps * eta, Op::identity({}, f));
  add("antipode-left", "m(S⊗id)Δ = ηε", m * Op::tensor({s, i}) * delta, eta * eps);
  add("antipode-right", "m(id⊗S)Δ = ηε", m * Op::tensor({i, s}) * delta, eta * eps);
  if (b.antipode_inv) {
    const Op si = *b.antipode_inv;
    add("antipode-inverse", "S S⁻¹ = id", s * si, i);
    add("antipode-inverse-left", "S⁻¹ S = id", si * s, i);
  }
  return r;
}

LinMap invert_antipode(const HopfAlgebraData& b) {
  auto inv = b.antipode.matrix().inverse();
  if (!inv) throw NotInvertible("antipode of " + b.carrier->name + " is singular");
  return LinMap(b.sig(), b.sig(), std::move(*inv));
}

HopfAlgebraData with_antipode_inverse(HopfAlgebraData b) {
  b.antipode_inv = invert_antipode(b);
  return b;
}

bool is_commutative(const HopfAlgebraData& b) {
  return equal(b.mult, compose(b.mult, LinMap::swap(b.sig(), b.sig(), b.field())));
}

bool is_cocommutative(const HopfAlgebraData& b) {
  return equal(b.comult, compose(LinMap::swap(b.sig(), b.sig(), b.field()), b.comult));
}

HopfAlgebraData build_group_algebra(const std::vector<std::vector<std::size_t>>& table, Field f,
                                    std::string name, std::vector<std::string> labels) {
  const std::size_t n = table.size();
  if (n == 0) throw StructureError("group table is empty");
  for (const auto& row : table) {
    if (row.size() != n) throw StructureError("group table is not square");
    for (auto v : row)
      if (v >= n) throw StructureError("group table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw StructureError("group table is not associative at (" + std::to_string(a) + ", " +
                               std::to_string(b) + ", " + std::to_string(c) + ")");
  std::optional<std::size_t> e;
  for (std::size_t c = 0; c < n && !e; ++c) {
    bool ok = true;
    for (std::size_t a = 0; a < n; ++a) ok = ok && table[c][a] == a && table[a][c] == a;
    if (ok) e = c;
  }
  if (!e) throw StructureError("group table has no identity element");
  std::vector<std::size_t> inv(n);
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t c = 0; c < n && !found; ++c)
      if (table[a][c] == *e && table[c][a] == *e) {
        inv[a] = c;
        found = true;
      }
    if (!found) throw StructureError("element " + std::to_string(a) + " has no inverse");
  }
  if (labels.empty())
    for (std::size_t a = 0; a < n; ++a) labels.push_back(a == *e ? "1" : "g" + std::to_string(a));
  const auto sp = make_space(std::move(name), n, std::move(labels));
  const Signature s{sp};
  Matrix m(n, n * n, f);
  Matrix u(n, 1, f);
  Matrix d(n * n, n, f);
  Matrix c(1, n, f);
  Matrix sm(n, n, f);
  u(*e, 0) = Scalar::one(f);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) m(table[a][b], a * n + b) = Scalar::one(f);
    d(a * n + a, a) = Scalar::one(f);
    c(0, a) = Scalar::one(f);
    sm(inv[a], a) = Scalar::one(f);
  }
  HopfAlgebraData h{sp,
                    LinMap({sp, sp}, s, std::move(m)),
                    LinMap({}, s, std::move(u)),
                    LinMap(s, {sp, sp}, std::move(d)),
                    LinMap(s, {}, std::move(c)),
                    LinMap(s, s, std::move(sm)),
                    std::nullopt};
  return with_antipode_inverse(std::move(h));
}

std::vector<std::vector<std::size_t>> cyclic_group_table(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

std::vector<std::string> cyclic_group_labels(std::size_t n) {
  std::vector<std::string> l;
  for (std::size_t a = 0; a < n; ++a)
    l.push_back(a == 0 ? "1" : a == 1 ? "g" : "g^" + std::to_string(a));
  return l;
}

HopfAlgebraData dual_hopf(const HopfAlgebraData& b, std::string name) {
  if (name.empty()) name = b.carrier->name + "*";
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < b.dim(); ++i) labels.push_back(b.carrier->label(i) + "*");
  const auto sp = make_space(std::move(name), b.dim(), std::move(labels));
  const Signature s{sp};
  HopfAlgebraData d{sp,
                    LinMap({sp, sp}, s, b.comult.matrix().transpose()),
                    LinMap({}, s, b.counit.matrix().transpose()),
                    LinMap(s, {sp, sp}, b.mult.matrix().transpose()),
                    LinMap(s, {}, b.unit.matrix().transpose()),
                    LinMap(s, s, b.antipode.matrix().transpose()),
                    std::nullopt};
  if (b.antipode_inv) d.antipode_inv = LinMap(s, s, b.antipode_inv->matrix().transpose());
  return d;
}

HopfAlgebraData trivial_hopf(Field f, std::string name) {
  return build_group_algebra({{0}}, f, std::move(name), {"1"});
}

HopfAlgebraData sweedler_hopf(Field f, std::string name) {
  // basis g^a x^b at index 2b + a: 1, g, x, gx
  const auto sp = make_space(std::move(name), 4, {"1", "g", "x", "gx"});
  const Signature s{sp};
  auto idx = [](int a, int b) { return static_cast<std::size_t>(2 * b + a); };
  const Scalar one = Scalar::one(f);
  Matrix m(4, 16, f);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          if (b + d >= 2) continue;  // x^2 = 0
          // x^b g^c = (-1)^{bc} g^c x^b
          const Scalar sign = (b * c) % 2 ? -one : one;
          m(idx((a + c) % 2, b + d), idx(a, b) * 4 + idx(c, d)) = sign;
        }
  Matrix u(4, 1, f);
  u(0, 0) = one;
  Matrix dl(16, 4, f);
  dl(0 * 4 + 0, 0) = one;          // Δ1 = 1⊗1
  dl(1 * 4 + 1, 1) = one;          // Δg = g⊗g
  dl(2 * 4 + 0, 2) = one;          // Δx = x⊗1 + g⊗x
  dl(1 * 4 + 2, 2) = one;
  dl(3 * 4 + 1, 3) = one;          // Δ(gx) = gx⊗g + 1⊗gx
  dl(0 * 4 + 3, 3) = one;
  Matrix c(1, 4, f);
  c(0, 0) = one;
  c(0, 1) = one;
  Matrix sm(4, 4, f);
  sm(0, 0) = one;   // S1 = 1
  sm(1, 1) = one;   // Sg = g
  sm(3, 2) = -one;  // Sx = -gx
  sm(2, 3) = one;   // S(gx) = x
  HopfAlgebraData h{sp,
                    LinMap({sp, sp}, s, std::move(m)),
                    LinMap({}, s, std::move(u)),
                    LinMap(s, {sp, sp}, std::move(dl)),
                    LinMap(s, {}, std::move(c)),
                    LinMap(s, s, std::move(sm)),
                    std::nullopt};
  return with_antipode_inverse(std::move(h));
}

}  // namespace ydual
