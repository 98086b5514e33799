#include "ydual/pairing.hpp"

namespace ydual {

namespace {

Op id(const Signature& s, Field f) { return Op::identity(s, f); }

Op t(const std::vector<Op>& ops) { return Op::tensor(ops); }

YDContext context_for(const QuasiDualPairing& p) {
  YDContext ctx(p.h->module.base);
  ctx.add(p.h->module);
  ctx.add(p.hd->module);
  return ctx;
}

void add_item(Report& r, const std::string& id, const std::string& what,
              const std::function<Op()>& lhs, const std::function<Op()>& rhs,
              std::optional<int> max_degree) {
  r.add(guarded(id, what, [&] { return compare(id, what, lhs(), rhs(), max_degree); }));
}

Op pick(const CachedOp& m, bool dense) { return dense ? m.dense() : m.lazy(); }

}  // namespace

Matrix QuasiDualPairing::values() const {
  const std::size_t dhd = hd->dim();
  const std::size_t dh = h->dim();
  Matrix v(dhd, dh, form.field());
  for (std::size_t i = 0; i < dhd; ++i)
    for (std::size_t j = 0; j < dh; ++j) v(i, j) = form.matrix()(0, i * dh + j);
  return v;
}

QuasiDualPairing make_pairing(BraidedRef hd, BraidedRef h, const Matrix& values) {
  const std::size_t dhd = hd->dim();
  const std::size_t dh = h->dim();
  if (values.rows() != dhd || values.cols() != dh)
    throw SignatureError("pairing values are " + std::to_string(values.rows()) + "x" +
                         std::to_string(values.cols()) + ", expected " + std::to_string(dhd) +
                         "x" + std::to_string(dh));
  const bool graded = hd->graded.has_value() || h->graded.has_value();
  Matrix m(1, dhd * dh, h->field());
  for (std::size_t i = 0; i < dhd; ++i)
    for (std::size_t j = 0; j < dh; ++j) {
      const Scalar v = values(i, j).in(h->field());
      if (v.is_zero()) continue;
      if (graded && hd->carrier()->degree(i) != h->carrier()->degree(j))
        throw StructureError("graded pairing pairs " + hd->carrier()->label(i) + " (degree " +
                             std::to_string(hd->carrier()->degree(i)) + ") with " +
                             h->carrier()->label(j) + " (degree " +
                             std::to_string(h->carrier()->degree(j)) + ")");
      m(0, i * dh + j) = v;
    }
  return QuasiDualPairing{hd, h, LinMap({hd->carrier(), h->carrier()}, {}, std::move(m))};
}

QuasiDualPairing evaluation_pairing(BraidedRef hd, BraidedRef h) {
  if (hd->dim() != h->dim())
    throw StructureError(hd->carrier()->name + " is not the dual of " + h->carrier()->name);
  return make_pairing(hd, h, Matrix::identity(h->dim(), h->field()));
}

QuasiDualPairing evaluation_composed_with_braiding(BraidedRef v, BraidedRef u) {
  if (v->dim() != u->dim())
    throw StructureError(u->carrier()->name + " is not the dual of " + v->carrier()->name);
  YDContext ctx(v->module.base);
  ctx.add(v->module);
  ctx.add(u->module);
  const Field f = v->field();
  // ev: U⊗V -> k pairs dual bases
  const std::size_t d = v->dim();
  Matrix ev(1, d * d, f);
  for (std::size_t i = 0; i < d; ++i) ev(0, i * d + i) = Scalar::one(f);
  const Op form = Op(LinMap({u->carrier(), v->carrier()}, {}, std::move(ev))) *
                  ctx.braid({v->carrier()}, {u->carrier()});
  return QuasiDualPairing{v, u, form.materialize()};
}

Report check_quasi_dual(const QuasiDualPairing& p, const std::string& prefix,
                        std::optional<int> max_degree) {
  const BraidedHopfAlgebra& h = *p.h;
  const BraidedHopfAlgebra& hd = *p.hd;
  const BaseRef& b = h.module.base;
  const YDContext ctx = context_for(p);
  const Field f = h.field();
  const Op pr = p.form;
  const Op ih = id(h.sig(), f);
  const Op ihd = id(hd.sig(), f);
  const Op cross = ctx.braid(hd.sig(), h.sig());
  const std::optional<int> n = max_degree ? max_degree : h.truncation();
  Report r;
  auto add = [&](const std::string& name, const std::string& what, auto lhs, auto rhs) {
    add_item(r, prefix + "-" + name, what, lhs, rhs, n);
  };
  add("mult-h", "⟨,⟩(H^d⊗m) = (⟨,⟩⊗⟨,⟩)(H^d⊗C⊗H)(Δ⊗H⊗H)",
      [&] { return pr * t({ihd, Op(h.mult)}); },
      [&] { return t({pr, pr}) * t({ihd, cross, ih}) * t({Op(hd.comult), ih, ih}); });
  add("unit-h", "⟨,⟩(H^d⊗η) = ε_{H^d}", [&] { return pr * t({ihd, Op(h.unit)}); },
      [&] { return Op(hd.counit); });
  add("mult-hd", "⟨,⟩(m⊗H) = (⟨,⟩⊗⟨,⟩)(H^d⊗C⊗H)(H^d⊗H^d⊗Δ)",
      [&] { return pr * t({Op(hd.mult), ih}); },
      [&] { return t({pr, pr}) * t({ihd, cross, ih}) * t({ihd, ihd, Op(h.comult)}); });
  add("unit-hd", "⟨,⟩(η⊗H) = ε_H", [&] { return pr * t({Op(hd.unit), ih}); },
      [&] { return Op(h.counit); });
  add("antipode", "⟨,⟩(S⊗H) = ⟨,⟩(H^d⊗S)", [&] { return pr * t({Op(hd.antipode), ih}); },
      [&] { return pr * t({ihd, Op(h.antipode)}); });
  add("b-linear", "⟨b·f, x⟩ = ⟨f, S(b)·x⟩", [&] { return pr * t({Op(hd.module.action), ih}); },
      [&] {
        const Op swap = Op::permutation({b->carrier, hd.carrier()}, {1, 0}, f);
        return pr * t({ihd, Op(h.module.action)}) * t({swap, ih}) *
               t({Op(b->antipode), ihd, ih});
      });
  add("b-colinear", "Σ ⟨f₍₀₎, x⟩ f₍₋₁₎ = Σ ⟨f, x₍₀₎⟩ S⁻¹(x₍₋₁₎)",
      [&] { return t({id(b->sig(), f), pr}) * t({Op(hd.module.coaction), ih}); },
      [&] {
        if (!b->antipode_inv) throw StructureError("base antipode is not invertible");
        const Op swap = Op::permutation({hd.carrier(), b->carrier}, {1, 0}, f);
        return t({Op(*b->antipode_inv), pr}) * t({swap, ih}) *
               t({ihd, Op(h.module.coaction)});
      });
  return r;
}

std::size_t pairing_rank(const QuasiDualPairing& p) { return p.values().rank(); }

bool is_left_faithful(const QuasiDualPairing& p) { return pairing_rank(p) == p.hd->dim(); }

// ---------------------------------------------------------------- algebras

Algebra algebra_of(const BraidedHopfAlgebra& h) {
  return Algebra{h.carrier()->name, h.sig(), CachedOp(Op(h.mult)), Op(h.unit)};
}

Report check_algebra(const Algebra& a, const YDContext& ctx, const std::string& prefix,
                     std::optional<int> max_degree, bool dense) {
  Report r;
  const Field f = ctx.field();
  const Op m = pick(a.mult, dense);
  const Op i = id(a.legs, f);
  auto add = [&](const std::string& name, const std::string& what, auto lhs, auto rhs) {
    add_item(r, prefix + "-" + name, what, lhs, rhs, max_degree);
  };
  add("associativity", "m(m⊗A) = m(A⊗m)", [&] { return m * t({m, i}); },
      [&] { return m * t({i, m}); });
  add("unit-left", "m(η⊗A) = id", [&] { return m * t({a.unit, i}); }, [&] { return i; });
  add("unit-right", "m(A⊗η) = id", [&] { return m * t({i, a.unit}); }, [&] { return i; });
  r.add(yd_morphism_item(prefix + "-yd-morphism-mult", "multiplication is a YD morphism", ctx,
                         m, max_degree));
  r.add(yd_morphism_item(prefix + "-yd-morphism-unit", "unit is a YD morphism", ctx, a.unit,
                         max_degree));
  return r;
}

Algebra braided_tensor_algebra(const Algebra& a, const Algebra& b, const YDContext& ctx,
                               std::string name) {
  const Field f = ctx.field();
  const Op m = t({a.mult.lazy(), b.mult.lazy()}) *
               t({id(a.legs, f), ctx.braid(b.legs, a.legs), id(b.legs, f)});
  return Algebra{std::move(name), concat(a.legs, b.legs), CachedOp(m), t({a.unit, b.unit})};
}

Report check_module_algebra(const ModuleAlgebraAction& a, const YDContext& ctx,
                            const std::string& prefix, std::optional<int> max_degree) {
  Report r;
  const BraidedHopfAlgebra& k = *a.acting;
  const Field f = ctx.field();
  const Op act = a.action;
  const Op ik = id(k.sig(), f);
  const Op ia = id(a.algebra.legs, f);
  const Op m = a.algebra.mult.lazy();
  auto add = [&](const std::string& name, const std::string& what, auto lhs, auto rhs) {
    add_item(r, prefix + "-" + name, what, lhs, rhs, max_degree);
  };
  add("module-associativity", "⇀(m⊗A) = ⇀(K⊗⇀)", [&] { return act * t({Op(k.mult), ia}); },
      [&] { return act * t({ik, act}); });
  add("module-unit", "⇀(η⊗A) = id", [&] { return act * t({Op(k.unit), ia}); },
      [&] { return ia; });
  add("module-algebra", "⇀(K⊗m) = m(⇀⊗⇀)(K⊗C⊗A)(Δ⊗A⊗A)",
      [&] { return act * t({ik, m}); },
      [&] {
        return m * t({act, act}) * t({ik, ctx.braid(k.sig(), a.algebra.legs), ia}) *
               t({Op(k.comult), ia, ia});
      });
  add("module-algebra-unit", "⇀(K⊗η) = ηε", [&] { return act * t({ik, a.algebra.unit}); },
      [&] { return a.algebra.unit * Op(k.counit); });
  r.add(yd_morphism_item(prefix + "-yd-morphism", "the action is a YD morphism", ctx, act,
                         max_degree));
  return r;
}

Op action_h_on_hd(const QuasiDualPairing& p, const YDContext& ctx) {
  const Field f = ctx.field();
  const Signature h = p.h->sig();
  const Signature hd = p.hd->sig();
  const Op ihd = id(hd, f);
  return t({ihd, Op(p.form)}) * t({ihd, ctx.braid(h, hd)}) * t({ctx.braid(h, hd), ihd}) *
         t({id(h, f), Op(p.hd->comult)});
}

Op action_hd_on_h(const QuasiDualPairing& p, const YDContext& ctx) {
  const Field f = ctx.field();
  const Signature h = p.h->sig();
  const Signature hd = p.hd->sig();
  const Op ih = id(h, f);
  return t({ih, Op(p.form)}) * t({ctx.braid(hd, h), ih}) * t({id(hd, f), Op(p.h->comult)});
}

Op right_action_hd_on_h(const QuasiDualPairing& p, const YDContext& ctx) {
  const Field f = ctx.field();
  const Signature h = p.h->sig();
  const Signature hd = p.hd->sig();
  const Op ih = id(h, f);
  return t({Op(p.form), ih}) * t({ctx.braid(h, hd), ih}) * t({ih, ctx.braid(h, hd)}) *
         t({Op(p.h->comult), id(hd, f)});
}

// ---------------------------------------------------------------- comodule algebras

ComoduleAlgebra comodule_from_comult(const BraidedHopfAlgebra& hd, std::string name) {
  const BraidedHopfAlgebra r = renamed(hd, std::move(name));
  const Op psi = Op(hd.comult).retyped(r.sig(), {r.carrier(), hd.carrier()});
  return ComoduleAlgebra{algebra_of(r), r.module, psi};
}

ComoduleAlgebra trivial_comodule(const BraidedHopfAlgebra& r, const BraidedHopfAlgebra& hd,
                                 std::string name) {
  const BraidedHopfAlgebra rr = renamed(r, std::move(name));
  const Op psi = t({id(rr.sig(), rr.field()), Op(hd.unit)});
  return ComoduleAlgebra{algebra_of(rr), rr.module, psi};
}

Report check_comodule_algebra(const ComoduleAlgebra& r, const BraidedHopfAlgebra& hd,
                              const YDContext& ctx, const std::string& prefix,
                              std::optional<int> max_degree) {
  Report rep;
  const Field f = ctx.field();
  const Op psi = r.coaction;
  const Op ir = id(r.algebra.legs, f);
  const Op ihd = id(hd.sig(), f);
  auto add = [&](const std::string& name, const std::string& what, auto lhs, auto rhs) {
    add_item(rep, prefix + "-" + name, what, lhs, rhs, max_degree);
  };
  add("coassociativity", "(ψ⊗H^d)ψ = (R⊗Δ)ψ", [&] { return t({psi, ihd}) * psi; },
      [&] { return t({ir, Op(hd.comult)}) * psi; });
  add("counit", "(R⊗ε)ψ = id", [&] { return t({ir, Op(hd.counit)}) * psi; },
      [&] { return ir; });
  const Algebra target = braided_tensor_algebra(r.algebra, algebra_of(hd), ctx, "R⊗H^d");
  add("algebra-map", "ψm = m_{R⊗H^d}(ψ⊗ψ)", [&] { return psi * r.algebra.mult.lazy(); },
      [&] { return target.mult.lazy() * t({psi, psi}); });
  add("unit-map", "ψη = η⊗η", [&] { return psi * r.algebra.unit; },
      [&] { return target.unit; });
  rep.add(yd_morphism_item(prefix + "-yd-morphism", "ψ is a YD morphism", ctx, psi, max_degree));
  return rep;
}

Op comodule_to_module(const ComoduleAlgebra& r, const QuasiDualPairing& p,
                      const YDContext& ctx) {
  const Field f = ctx.field();
  const Signature h = p.h->sig();
  const Signature hd = p.hd->sig();
  const Signature rl = r.algebra.legs;
  return t({id(rl, f), Op(p.form)}) * t({id(rl, f), ctx.braid(h, hd)}) *
         t({ctx.braid(h, rl), id(hd, f)}) * t({id(h, f), r.coaction});
}

// ---------------------------------------------------------------- smash products

Algebra smash_product(const Algebra& a, const BraidedHopfAlgebra& k, const Op& action,
                      const YDContext& ctx, std::string name, bool verify,
                      std::optional<int> max_degree) {
  const Field f = ctx.field();
  const Signature ks = k.sig();
  const Op ia = id(a.legs, f);
  const Op ik = id(ks, f);
  const Op m = t({a.mult.lazy(), Op(k.mult)}) * t({ia, action, ik, ik}) *
               t({ia, ik, ctx.braid(ks, a.legs), ik}) * t({ia, Op(k.comult), ia, ik});
  Algebra s{std::move(name), concat(a.legs, ks), CachedOp(m), t({a.unit, Op(k.unit)})};
  if (verify) {
    const Op mm = max_degree ? s.mult.lazy() : s.mult.dense();
    const Op i = id(s.legs, f);
    if (auto bad = first_mismatch(mm * t({mm, i}), mm * t({i, mm}), max_degree))
      throw StructureError("smash product " + s.name + " is not associative " +
                           bad->describe());
    if (auto bad = first_mismatch(mm * t({s.unit, i}), i, max_degree))
      throw StructureError("smash product " + s.name + " has no left unit " + bad->describe());
    if (auto bad = first_mismatch(mm * t({i, s.unit}), i, max_degree))
      throw StructureError("smash product " + s.name + " has no right unit " +
                           bad->describe());
  }
  return s;
}

Op lifted_action(const Signature& r_legs, const QuasiDualPairing& p, const Op& hd_on_h,
                 const YDContext& ctx) {
  const Field f = ctx.field();
  return t({id(r_legs, f), hd_on_h}) * t({ctx.braid(p.hd->sig(), r_legs), id(p.h->sig(), f)});
}

}  // namespace ydual
