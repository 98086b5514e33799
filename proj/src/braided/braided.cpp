#include "ydual/braided.hpp"

#include <bit>

namespace ydual {

namespace {

Signature swap_leg(const Signature& s, const SpaceRef& from, const SpaceRef& to) {
  Signature out;
  for (const auto& l : flatten(s)) out.push_back(l->name == from->name ? to : l);
  return out;
}

LinMap move_to(const LinMap& m, const SpaceRef& from, const SpaceRef& to) {
  return m.retyped(swap_leg(m.domain(), from, to), swap_leg(m.codomain(), from, to));
}

std::optional<int> bound(const BraidedHopfAlgebra& h, std::optional<int> max_degree) {
  return max_degree ? max_degree : h.truncation();
}

}  // namespace

GradedMap BraidedHopfAlgebra::graded_view(const LinMap& m) const {
  if (!graded) throw StructureError(carrier()->name + " is not graded");
  auto spaces = [&](const Signature& s) {
    std::vector<GradedSpace> out;
    for (const auto& l : flatten(s)) {
      if (l->name != carrier()->name)
        throw StructureError("graded_view: leg " + l->name + " is not " + carrier()->name);
      out.push_back(*graded);
    }
    return out;
  };
  return GradedMap::from_flat(spaces(m.domain()), spaces(m.codomain()), m);
}

Report check_braided_hopf(const BraidedHopfAlgebra& h, const std::string& prefix,
                          std::optional<int> max_degree) {
  const std::optional<int> n = bound(h, max_degree);
  Report r = check_yd(h.module, prefix + "-yd", n);
  YDContext ctx(h.module.base);
  ctx.add(h.module);
  const Field f = h.field();
  const Op m = h.mult;
  const Op eta = h.unit;
  const Op delta = h.comult;
  const Op eps = h.counit;
  const Op s = h.antipode;
  const Op i = Op::identity(h.sig(), f);
  auto add = [&](const std::string& name, const std::string& what, auto lhs, auto rhs) {
    const std::string id = prefix + "-" + name;
    r.add(guarded(id, what, [&] { return compare(id, what, lhs(), rhs(), n); }));
  };
  add("associativity", "m(m⊗H) = m(H⊗m)", [&] { return m * Op::tensor({m, i}); },
      [&] { return m * Op::tensor({i, m}); });
  add("unit-left", "m(η⊗H) = id", [&] { return m * Op::tensor({eta, i}); }, [&] { return i; });
  add("unit-right", "m(H⊗η) = id", [&] { return m * Op::tensor({i, eta}); }, [&] { return i; });
  add("coassociativity", "(Δ⊗H)Δ = (H⊗Δ)Δ", [&] { return Op::tensor({delta, i}) * delta; },
      [&] { return Op::tensor({i, delta}) * delta; });
  add("counit-left", "(ε⊗H)Δ = id", [&] { return Op::tensor({eps, i}) * delta; },
      [&] { return i; });
  add("counit-right", "(H⊗ε)Δ = id", [&] { return Op::tensor({i, eps}) * delta; },
      [&] { return i; });
  add("bialgebra", "Δm = (m⊗m)(H⊗C⊗H)(Δ⊗Δ)", [&] { return delta * m; },
      [&] {
        return Op::tensor({m, m}) * Op::tensor({i, ctx.braid(h.sig(), h.sig()), i}) *
               Op::tensor({delta, delta});
      });
  add("comult-unit", "Δη = η⊗η", [&] { return delta * eta; },
      [&] { return Op::tensor({eta, eta}); });
  add("counit-mult", "εm = ε⊗ε", [&] { return eps * m; },
      [&] { return Op::tensor({eps, eps}); });
  add("counit-unit", "εη = 1", [&] { return eps * eta; },
      [&] { return Op::identity({}, f); });
  add("antipode-left", "m(S⊗H)Δ = ηε", [&] { return m * Op::tensor({s, i}) * delta; },
      [&] { return eta * eps; });
  add("antipode-right", "m(H⊗S)Δ = ηε", [&] { return m * Op::tensor({i, s}) * delta; },
      [&] { return eta * eps; });
  if (h.antipode_inv) {
    const Op si = *h.antipode_inv;
    add("antipode-inverse", "S S⁻¹ = id", [&] { return s * si; }, [&] { return i; });
    add("antipode-inverse-left", "S⁻¹ S = id", [&] { return si * s; }, [&] { return i; });
  }
  const std::vector<std::pair<std::string, Op>> maps{
      {"mult", m}, {"unit", eta}, {"comult", delta}, {"counit", eps}, {"antipode", s}};
  for (const auto& [name, op] : maps)
    r.add(yd_morphism_item(prefix + "-yd-morphism-" + name, name + " is a YD morphism", ctx, op,
                           n));
  if (h.antipode_inv)
    r.add(yd_morphism_item(prefix + "-yd-morphism-antipode-inverse",
                           "antipode inverse is a YD morphism", ctx, *h.antipode_inv, n));
  return r;
}

bool is_symmetric(const BraidedHopfAlgebra& h) { return is_symmetric_pair(h.module, h.module); }

bool is_quantum_cocommutative(const BraidedHopfAlgebra& h, std::optional<int> max_degree) {
  const Op delta = h.comult;
  return !first_mismatch(delta, Op(braiding(h.module, h.module)) * delta, bound(h, max_degree));
}

BraidedHopfAlgebra with_antipode_inverse(BraidedHopfAlgebra h) {
  auto inv = h.antipode.matrix().inverse();
  if (!inv) throw NotInvertible("antipode of " + h.carrier()->name + " is singular");
  h.antipode_inv = LinMap(h.sig(), h.sig(), std::move(*inv));
  return h;
}

BraidedHopfAlgebra renamed(const BraidedHopfAlgebra& h, std::string name) {
  const SpaceRef from = h.carrier();
  const SpaceRef to = rename_space(from, std::move(name));
  BraidedHopfAlgebra r = h;
  r.module.legs = {to};
  r.module.action = move_to(h.module.action, from, to);
  r.module.coaction = move_to(h.module.coaction, from, to);
  r.mult = move_to(h.mult, from, to);
  r.unit = move_to(h.unit, from, to);
  r.comult = move_to(h.comult, from, to);
  r.counit = move_to(h.counit, from, to);
  r.antipode = move_to(h.antipode, from, to);
  if (h.antipode_inv) r.antipode_inv = move_to(*h.antipode_inv, from, to);
  if (h.graded) r.graded = GradedSpace::adopt(to);
  return r;
}

BraidedHopfAlgebra dual_braided_hopf(const BraidedHopfAlgebra& h, std::string name) {
  if (!is_symmetric(h))
    throw RefusalError("the braiding on " + h.carrier()->name +
                       " is not symmetric (C∘C ≠ id), so its dual is not formed");
  const Field f = h.field();
  const YDModule dm = dual_module(h.module, std::move(name));
  const SpaceRef hd = dm.legs[0];
  const SpaceRef hc = h.carrier();
  const std::size_t d = h.dim();
  YDContext ctx(h.module.base);
  ctx.add(h.module);
  ctx.add(dm);
  const Op ev = evaluation_map(hd, h.module, unit_module(h.module.base));
  const Op ih = Op::identity({hc}, f);
  const Op ihd = Op::identity({hd}, f);

  // ⟨fg, x⟩ = Σ ⟨f, g₍₋₁₎·x₁⟩⟨g₍₀₎, x₂⟩
  const Op mult_val = Op::tensor({ev, ev}) *
                      Op::tensor({ihd, ctx.braid({hd}, {hc}), ih}) *
                      Op::tensor({ihd, ihd, Op(h.comult)});
  Matrix mm(d, d * d, f);
  for (std::size_t ab = 0; ab < d * d; ++ab)
    for (std::size_t x = 0; x < d; ++x)
      for (const auto& [idx, c] : mult_val.apply_basis(ab * d + x)) mm(x, ab) += c;

  // ⟨f, xy⟩ = Σ ⟨f₁, f₂₍₋₁₎·x⟩⟨f₂₍₀₎, y⟩ determines Δ(f)
  const Op pair_val = Op::tensor({ev, ev}) * Op::tensor({ihd, ctx.braid({hd}, {hc}), ih});
  const SpaceRef hh = make_space("(" + hc->name + "⊗" + hc->name + ")*", d * d);
  Matrix t(d * d, d * d, f);
  for (std::size_t ab = 0; ab < d * d; ++ab)
    for (std::size_t xy = 0; xy < d * d; ++xy)
      for (const auto& [idx, c] : pair_val.apply_basis(ab * d * d + xy)) t(xy, ab) += c;
  auto solved = solve_preimage(LinMap({hd, hd}, {hh}, std::move(t)),
                               LinMap({hd}, {hh}, h.mult.matrix().transpose()));
  if (std::holds_alternative<NoSolution>(solved))
    throw StructureError("cannot dualise the multiplication of " + hc->name + ": " +
                         std::get<NoSolution>(solved).message);

  BraidedHopfAlgebra r{dm,
                       LinMap({hd, hd}, {hd}, std::move(mm)),
                       LinMap({}, {hd}, h.counit.matrix().transpose()),
                       std::get<LinMap>(solved),
                       LinMap({hd}, {}, h.unit.matrix().transpose()),
                       LinMap({hd}, {hd}, h.antipode.matrix().transpose()),
                       std::nullopt,
                       std::nullopt};
  if (h.antipode_inv) r.antipode_inv = LinMap({hd}, {hd}, h.antipode_inv->matrix().transpose());
  if (h.graded) r.graded = GradedSpace::adopt(hd);
  return r;
}

BraidedHopfAlgebra build_exterior_algebra(int n, const BaseRef& base, std::string name) {
  if (n < 1) throw StructureError("exterior algebra needs at least one generator");
  if (base->dim() < 2) throw StructureError("exterior algebra needs a base with g at index 1");
  const Field f = base->field();
  const std::size_t nb = base->dim();
  {
    // g must be a grouplike involution; the parity character sends g to -1
    // and every other non-unit basis vector to 0
    const Op dg = base->comult;
    const Op mg = base->mult;
    const SparseVec gg{{nb + 1, Scalar::one(f)}};
    if (dg.apply_basis(1) != gg || mg.apply_basis(nb + 1) != basis_vector(0, f))
      throw StructureError("basis vector 1 of " + base->carrier->name +
                           " is not a grouplike involution");
  }
  const std::size_t d = std::size_t{1} << n;
  auto gen = [&](int i) { return n == 1 ? std::string("x") : "x" + std::to_string(i + 1); };
  std::vector<std::string> labels;
  std::vector<int> degrees;
  for (std::size_t s = 0; s < d; ++s) {
    std::string l;
    for (int i = 0; i < n; ++i)
      if (s >> i & 1) l += gen(i);
    labels.push_back(l.empty() ? "1" : l);
    degrees.push_back(std::popcount(s));
  }
  const SpaceRef h = make_space(std::move(name), d, std::move(labels), std::move(degrees));
  const SpaceRef b = base->carrier;
  const Scalar one = Scalar::one(f);
  auto parity = [](std::size_t s) { return std::popcount(s) % 2; };
  // sign of x_S x_T -> x_{S∪T}: one -1 for every i in S, j in T with i > j
  auto sign = [&](std::size_t s, std::size_t t) {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      if (s >> i & 1)
        for (int j = 0; j < i; ++j) inv += static_cast<int>(t >> j & 1);
    return inv % 2 ? -one : one;
  };
  Matrix act(d, nb * d, f);
  Matrix co(nb * d, d, f);
  Matrix m(d, d * d, f);
  Matrix u(d, 1, f);
  Matrix dl(d * d, d, f);
  Matrix c(1, d, f);
  Matrix sm(d, d, f);
  u(0, 0) = one;
  c(0, 0) = one;
  for (std::size_t s = 0; s < d; ++s) {
    act(s, s) = one;
    act(s, d + s) = parity(s) ? -one : one;
    co(static_cast<std::size_t>(parity(s)) * d + s, s) = one;
    sm(s, s) = parity(s) ? -one : one;
    for (std::size_t t = 0; t < d; ++t)
      if ((s & t) == 0) m(s | t, s * d + t) = sign(s, t);
    for (std::size_t a = s;; a = (a - 1) & s) {  // subsets of s
      dl(a * d + (s & ~a), s) = sign(a, s & ~a);
      if (a == 0) break;
    }
  }
  YDModule mod{base, {h}, LinMap({b, h}, {h}, std::move(act)), LinMap({h}, {b, h}, std::move(co))};
  BraidedHopfAlgebra r{mod,
                       LinMap({h, h}, {h}, std::move(m)),
                       LinMap({}, {h}, std::move(u)),
                       LinMap({h}, {h, h}, std::move(dl)),
                       LinMap({h}, {}, std::move(c)),
                       LinMap({h}, {h}, std::move(sm)),
                       std::nullopt,
                       std::nullopt};
  if (nb != 2) {
    const Report yd = check_yd(r.module, h->name);
    if (!yd.ok())
      throw StructureError("the parity character does not make " + h->name +
                           " a Yetter-Drinfeld module over " + b->name);
  }
  return with_antipode_inverse(std::move(r));
}

namespace {

Scalar binomial(int n, int k, Field f) {
  Scalar r = Scalar::one(f);
  for (int i = 1; i <= k; ++i) r = r * Scalar::from_int(n - k + i, f) / Scalar::from_int(i, f);
  return r;
}

}  // namespace

BraidedHopfAlgebra build_polynomial_hopf(int truncation, const BaseRef& base, std::string name,
                                         std::string var) {
  if (truncation < 0) throw StructureError("truncation must be non-negative");
  if (base->dim() != 1) throw StructureError("the polynomial algebra lives over the trivial base");
  const Field f = base->field();
  const auto p = static_cast<int>(f.characteristic());
  if (p != 0 && p <= truncation)
    throw RefusalError("characteristic " + std::to_string(p) + " <= truncation " +
                         std::to_string(truncation) + ": binomial coefficients degenerate");
  std::vector<std::vector<std::string>> labels;
  for (int k = 0; k <= truncation; ++k)
    labels.push_back({k == 0 ? "1" : k == 1 ? var : var + "^" + std::to_string(k)});
  const GradedSpace g(std::move(name), std::vector<std::size_t>(truncation + 1, 1), labels);
  const std::vector<GradedSpace> one{g};
  const std::vector<GradedSpace> two{g, g};
  const std::vector<GradedSpace> none;
  auto scalar_block = [f](bool nz, Scalar v) {
    Matrix b(1, 1, f);
    if (nz) b(0, 0) = v;
    return b;
  };
  const Scalar unit = Scalar::one(f);
  const GradedMap mult(two, one, f, [&](const MultiDegree& out, const MultiDegree& in) {
    return scalar_block(out[0] == in[0] + in[1], unit);
  });
  const GradedMap eta(none, one, f, [&](const MultiDegree& out, const MultiDegree&) {
    return scalar_block(out[0] == 0, unit);
  });
  const GradedMap comult(one, two, f, [&](const MultiDegree& out, const MultiDegree& in) {
    return scalar_block(out[0] + out[1] == in[0], binomial(in[0], out[0], f));
  });
  const GradedMap eps(one, none, f, [&](const MultiDegree&, const MultiDegree& in) {
    return scalar_block(in[0] == 0, unit);
  });
  const GradedMap anti(one, one, f, [&](const MultiDegree& out, const MultiDegree& in) {
    return scalar_block(out[0] == in[0], in[0] % 2 ? -unit : unit);
  });
  BraidedHopfAlgebra r{trivial_module(base, {g.flat()}),
                       mult.materialize(),
                       eta.materialize(),
                       comult.materialize(),
                       eps.materialize(),
                       anti.materialize(),
                       anti.materialize(),
                       g};
  return r;
}

BraidedHopfAlgebra build_quantum_line(const BaseRef& cyclic, const Scalar& q_in, std::string name) {
  const Field f = cyclic->field();
  const Scalar q = q_in.in(f);
  const std::size_t n = cyclic->dim();
  std::size_t ell = 1;
  Scalar pw = q;
  while (!pw.is_one()) {
    if (pw.is_zero() || ell > 256) throw StructureError("q must be a root of unity");
    pw *= q;
    ++ell;
  }
  Scalar qn = Scalar::one(f);
  for (std::size_t k = 0; k < n; ++k) qn *= q;
  if (!qn.is_one()) throw StructureError("q^|G| must be 1 for g to act by q");
  auto qpow = [&](std::size_t e) {
    Scalar r = Scalar::one(f);
    for (std::size_t k = 0; k < e; ++k) r *= q;
    return r;
  };
  // Gaussian binomials [m, k]_q by [m, k] = [m-1, k] + q^{m-k} [m-1, k-1]
  std::vector<std::vector<Scalar>> gb(ell, std::vector<Scalar>(ell, Scalar::zero(f)));
  for (std::size_t mm = 0; mm < ell; ++mm) {
    gb[mm][0] = Scalar::one(f);
    for (std::size_t k = 1; k <= mm; ++k)
      gb[mm][k] = (k <= mm - 1 ? gb[mm - 1][k] : Scalar::zero(f)) + qpow(mm - k) * gb[mm - 1][k - 1];
  }
  std::vector<std::string> labels;
  std::vector<int> degrees;
  for (std::size_t k = 0; k < ell; ++k) {
    labels.push_back(k == 0 ? "1" : k == 1 ? "x" : "x^" + std::to_string(k));
    degrees.push_back(static_cast<int>(k));
  }
  const SpaceRef h = make_space(std::move(name), ell, std::move(labels), std::move(degrees));
  const SpaceRef b = cyclic->carrier;
  Matrix act(ell, n * ell, f);
  Matrix co(n * ell, ell, f);
  Matrix m(ell, ell * ell, f);
  Matrix u(ell, 1, f);
  Matrix dl(ell * ell, ell, f);
  Matrix c(1, ell, f);
  Matrix sm(ell, ell, f);
  u(0, 0) = Scalar::one(f);
  c(0, 0) = Scalar::one(f);
  for (std::size_t k = 0; k < ell; ++k) {
    for (std::size_t a = 0; a < n; ++a) act(k, a * ell + k) = qpow(a * k);
    co((k % n) * ell + k, k) = Scalar::one(f);
    for (std::size_t j = 0; j + k < ell; ++j) m(k + j, k * ell + j) = Scalar::one(f);
    for (std::size_t j = 0; j <= k; ++j) dl(j * ell + (k - j), k) = gb[k][j];
    const Scalar sgn = k % 2 ? -Scalar::one(f) : Scalar::one(f);
    sm(k, k) = sgn * qpow(k * (k - 1) / 2);
  }
  YDModule mod{cyclic, {h}, LinMap({b, h}, {h}, std::move(act)),
               LinMap({h}, {b, h}, std::move(co))};
  BraidedHopfAlgebra r{mod,
                       LinMap({h, h}, {h}, std::move(m)),
                       LinMap({}, {h}, std::move(u)),
                       LinMap({h}, {h, h}, std::move(dl)),
                       LinMap({h}, {}, std::move(c)),
                       LinMap({h}, {h}, std::move(sm)),
                       std::nullopt,
                       std::nullopt};
  return with_antipode_inverse(std::move(r));
}

BraidedHopfAlgebra from_hopf(const HopfAlgebraData& a, const BaseRef& base, std::string name) {
  const SpaceRef from = a.carrier;
  const SpaceRef to = rename_space(from, std::move(name));
  BraidedHopfAlgebra r{trivial_module(base, {to}),
                       move_to(a.mult, from, to),
                       move_to(a.unit, from, to),
                       move_to(a.comult, from, to),
                       move_to(a.counit, from, to),
                       move_to(a.antipode, from, to),
                       std::nullopt,
                       std::nullopt};
  if (a.antipode_inv) r.antipode_inv = move_to(*a.antipode_inv, from, to);
  return r;
}

}  // namespace ydual
