#include "ydual/yd.hpp"

#include <algorithm>
#include <tuple>

namespace ydual {

namespace {

Op swap_op(const Signature& a, const Signature& b, Field f) {
  const Signature fa = flatten(a);
  const Signature fb = flatten(b);
  std::vector<std::size_t> perm;
  for (std::size_t k = 0; k < fb.size(); ++k) perm.push_back(fa.size() + k);
  for (std::size_t k = 0; k < fa.size(); ++k) perm.push_back(k);
  return Op::permutation(concat(fa, fb), perm, f);
}

Op id_op(const Signature& s, Field f) { return Op::identity(s, f); }

const LinMap& need_inverse(const HopfAlgebraData& b) {
  if (!b.antipode_inv)
    throw StructureError("base " + b.carrier->name + " has no antipode inverse");
  return *b.antipode_inv;
}

void same_base(const YDModule& v, const YDModule& w) {
  if (v.base != w.base && !(v.base && w.base && v.base->carrier->name == w.base->carrier->name &&
                            equal(v.base->mult, w.base->mult)))
    throw StructureError("modules " + v.name() + " and " + w.name() +
                         " live over different base algebras");
}

}  // namespace

Op iterated_comult(const HopfAlgebraData& b, std::size_t n) {
  if (n == 0) return Op(b.counit);
  Op acc = id_op(b.sig(), b.field());
  for (std::size_t k = 2; k <= n; ++k) {
    std::vector<Op> parts{Op(b.comult)};
    if (k > 2) {
      Signature rest(k - 2, b.carrier);
      parts.push_back(id_op(rest, b.field()));
    }
    acc = Op::tensor(parts) * acc;
  }
  return acc;
}

Op iterated_mult(const HopfAlgebraData& b, std::size_t n) {
  if (n == 0) return Op(b.unit);
  Op acc = id_op(b.sig(), b.field());
  for (std::size_t k = 2; k <= n; ++k) {
    // acc: B^{k-1} -> B; extend to B^k by multiplying the last factor in
    acc = Op(b.mult) * Op::tensor({acc, id_op(b.sig(), b.field())});
  }
  return acc;
}

YDModule trivial_module(const BaseRef& base, const Signature& legs) {
  const Field f = base->field();
  const Signature v = flatten(legs);
  YDModule m{base, v, {}, {}};
  m.action = Op::tensor({Op(base->counit), id_op(v, f)}).materialize();
  m.coaction = Op::tensor({Op(base->unit), id_op(v, f)}).materialize();
  return m;
}

YDModule unit_module(const BaseRef& base) { return trivial_module(base, {}); }

Report check_yd(const YDModule& v, const std::string& prefix, std::optional<int> max_degree) {
  Report r;
  const HopfAlgebraData& b = *v.base;
  const Field f = v.field();
  const Op a = v.action;
  const Op d = v.coaction;
  const Op iv = id_op(v.legs, f);
  const Op ib = id_op(b.sig(), f);
  auto add = [&](const std::string& name, const std::string& what, auto lhs, auto rhs) {
    const std::string id = prefix + "-" + name;
    r.add(guarded(id, what, [&] { return compare(id, what, lhs(), rhs(), max_degree); }));
  };
  add("module-associativity", "α(m⊗V) = α(B⊗α)",
      [&] { return a * Op::tensor({Op(b.mult), iv}); },
      [&] { return a * Op::tensor({ib, a}); });
  add("module-unit", "α(η⊗V) = id", [&] { return a * Op::tensor({Op(b.unit), iv}); },
      [&] { return iv; });
  add("comodule-coassociativity", "(Δ⊗V)δ = (B⊗δ)δ",
      [&] { return Op::tensor({Op(b.comult), iv}) * d; },
      [&] { return Op::tensor({ib, d}) * d; });
  add("comodule-counit", "(ε⊗V)δ = id", [&] { return Op::tensor({Op(b.counit), iv}) * d; },
      [&] { return iv; });
  add("compatibility", "δ(b·v) = b₁v₍₋₁₎S(b₃) ⊗ b₂·v₍₀₎", [&] { return d * a; },
      [&] {
        // b1 b2 b3 v-1 v0  ->  b1 v-1 b3 b2 v0
        const Signature bbbb{b.carrier, b.carrier, b.carrier, b.carrier};
        const std::size_t nv = v.legs.size();
        std::vector<std::size_t> perm{0, 3, 2, 1};
        for (std::size_t k = 0; k < nv; ++k) perm.push_back(4 + k);
        const Op p = Op::permutation(concat(bbbb, v.legs), perm, f);
        const Op s3 = Op::tensor({ib, ib, Op(b.antipode), ib, iv});
        return Op::tensor({iterated_mult(b, 3), a}) * s3 * p *
               Op::tensor({iterated_comult(b, 3), d});
      });
  return r;
}

LinMap braiding(const YDModule& v, const YDModule& w) {
  same_base(v, w);
  const Field f = v.field();
  const Op ib = id_op(v.base->sig(), f);
  return (Op::tensor({Op(w.action), id_op(v.legs, f)}) *
          Op::tensor({ib, swap_op(v.legs, w.legs, f)}) *
          Op::tensor({Op(v.coaction), id_op(w.legs, f)}))
      .materialize();
}

LinMap braiding_inverse(const YDModule& v, const YDModule& w) {
  same_base(v, w);
  const Field f = v.field();
  const HopfAlgebraData& b = *v.base;
  const Op sinv = need_inverse(b);
  // w⊗v -> v⊗w -> v-1 v0 w -> v0 v-1 w -> v0 S⁻¹(v-1) w -> v0 (S⁻¹(v-1)·w)
  const Op to_vbw = swap_op(b.sig(), v.legs, f);
  return (Op::tensor({id_op(v.legs, f), Op(w.action)}) *
          Op::tensor({id_op(v.legs, f), sinv, id_op(w.legs, f)}) *
          Op::tensor({to_vbw, id_op(w.legs, f)}) *
          Op::tensor({Op(v.coaction), id_op(w.legs, f)}) * swap_op(w.legs, v.legs, f))
      .materialize();
}

bool is_symmetric_pair(const YDModule& v, const YDModule& w) {
  const LinMap round = compose(braiding(w, v), braiding(v, w));
  return equal(round, LinMap::identity(concat(v.legs, w.legs), v.field()));
}

YDModule tensor_module(const YDModule& v, const YDModule& w) {
  same_base(v, w);
  const Field f = v.field();
  const HopfAlgebraData& b = *v.base;
  const Signature legs = concat(v.legs, w.legs);
  YDModule m{v.base, legs, {}, {}};
  const Op ib = id_op(b.sig(), f);
  // b1 b2 v w -> b1 v b2 w
  m.action = (Op::tensor({Op(v.action), Op(w.action)}) *
              Op::tensor({ib, swap_op(b.sig(), v.legs, f), id_op(w.legs, f)}) *
              Op::tensor({Op(b.comult), id_op(legs, f)}))
                 .materialize();
  // v-1 v0 w-1 w0 -> v-1 w-1 v0 w0 -> v-1w-1 v0 w0
  m.coaction = (Op::tensor({Op(b.mult), id_op(legs, f)}) *
                Op::tensor({ib, swap_op(v.legs, b.sig(), f), id_op(w.legs, f)}) *
                Op::tensor({Op(v.coaction), Op(w.coaction)}))
                   .materialize();
  return m;
}

LinMap evaluation_map(const SpaceRef& hom, const YDModule& v, const YDModule& w) {
  const std::size_t dv = v.dim();
  const std::size_t dw = w.dim();
  if (hom->dim != dv * dw)
    throw SignatureError("carrier " + hom->name + " is not Hom(" + v.name() + ", " + w.name() + ")");
  Matrix m(dw, hom->dim * dv, v.field());
  for (std::size_t wi = 0; wi < dw; ++wi)
    for (std::size_t vi = 0; vi < dv; ++vi)
      m(wi, (wi * dv + vi) * dv + vi) = Scalar::one(v.field());
  return LinMap(concat({hom}, v.legs), w.legs, std::move(m));
}

LinMap curry(const Op& g, const Signature& u, const Signature& y, const SpaceRef& hom,
             std::size_t dv, std::size_t dw) {
  const std::size_t du = sig_dim(u);
  Matrix m(sig_dim(y) * hom->dim, du, g.field());
  for (std::size_t ui = 0; ui < du; ++ui)
    for (std::size_t vi = 0; vi < dv; ++vi)
      for (const auto& [idx, c] : g.apply_basis(ui * dv + vi)) {
        const std::size_t yi = idx / dw;
        const std::size_t wi = idx % dw;
        m(yi * hom->dim + wi * dv + vi, ui) += c;
      }
  return LinMap(u, concat(y, {hom}), std::move(m));
}

YDModule hom_module(const YDModule& v, const YDModule& w, std::string name) {
  same_base(v, w);
  const Field f = v.field();
  const HopfAlgebraData& b = *v.base;
  const std::size_t dv = v.dim();
  const std::size_t dw = w.dim();
  std::vector<std::string> labels;
  std::vector<int> degrees;
  bool graded = false;
  for (std::size_t wi = 0; wi < dw; ++wi)
    for (std::size_t vi = 0; vi < dv; ++vi) {
      labels.push_back(w.legs.empty() ? index_label(v.legs, vi) + "*"
                                      : index_label(w.legs, wi) + "·" +
                                            index_label(v.legs, vi) + "*");
      // a dual keeps the grading of V (component d of V* is (V_d)*)
      const int d = w.legs.empty() ? index_degree(v.legs, vi) : 0;
      graded = graded || d != 0;
      degrees.push_back(d);
    }
  if (!graded) degrees.clear();
  const SpaceRef hom =
      make_space(std::move(name), dv * dw, std::move(labels), std::move(degrees));
  const Op val = evaluation_map(hom, v, w);
  const Op ib = id_op(b.sig(), f);
  const Op ih = id_op({hom}, f);
  const Op iv = id_op(v.legs, f);
  const Op iw = id_op(w.legs, f);

  // (b·f)(x) = b1·f(S(b2)·x) on b⊗f⊗x. With the legs of Δb the other way
  // round the result is a module but breaks YD compatibility once B is not
  // cocommutative (the Sweedler algebra shows it).
  std::vector<std::size_t> perm{0, 2, 1};
  for (std::size_t k = 0; k < v.legs.size(); ++k) perm.push_back(3 + k);
  const Op act_val =
      Op(w.action) * Op::tensor({ib, val}) *
      Op::tensor({ib, ih, Op(v.action) * Op::tensor({Op(b.antipode), iv})}) *
      Op::permutation(concat({b.carrier, b.carrier, hom}, v.legs), perm, f) *
      Op::tensor({Op(b.comult), ih, iv});

  // f⊗x -> f(x0)-1 S⁻¹(x-1) ⊗ f(x0)0
  const Op sinv = need_inverse(b);
  const Op coact_val = Op::tensor({Op(b.mult), iw}) * Op::tensor({ib, sinv, iw}) *
                       Op::tensor({swap_op(b.sig(), b.sig(), f), iw}) *
                       Op::tensor({ib, Op(w.coaction)}) * Op::tensor({ib, val}) *
                       Op::tensor({swap_op({hom}, b.sig(), f), iv}) *
                       Op::tensor({ih, Op(v.coaction)});

  YDModule m{v.base, {hom}, {}, {}};
  m.action = curry(act_val, {b.carrier, hom}, {}, hom, dv, dw);
  m.coaction = curry(coact_val, {hom}, {b.carrier}, hom, dv, dw);
  return m;
}

YDModule dual_module(const YDModule& v, std::string name) {
  return hom_module(v, unit_module(v.base), std::move(name));
}

bool is_yd_morphism(const LinMap& f, const YDModule& v, const YDModule& w) {
  const Op fo = f;
  const Op ib = id_op(v.base->sig(), f.field());
  return !first_mismatch(fo * Op(v.action), Op(w.action) * Op::tensor({ib, fo}), std::nullopt) &&
         !first_mismatch(Op(w.coaction) * fo, Op::tensor({ib, fo}) * Op(v.coaction),
                         std::nullopt);
}

YDModule from_quasitriangular(const BaseRef& base, const QuasitriangularData& qt,
                              const Signature& legs, const LinMap& action) {
  const Field f = base->field();
  const std::size_t nb = base->dim();
  const std::size_t dv = sig_dim(legs);
  Matrix co(nb * dv, dv, f);
  const Op a = action;
  for (std::size_t vi = 0; vi < dv; ++vi)
    for (const auto& [idx, c] : qt.rmatrix) {
      const std::size_t r1 = idx / nb;
      const std::size_t r2 = idx % nb;
      for (const auto& [out, c2] : a.apply_basis(r1 * dv + vi)) co(r2 * dv + out, vi) += c * c2;
    }
  const Signature flat = flatten(legs);
  YDModule m{base, flat, action, LinMap(flat, concat(base->sig(), flat), std::move(co))};
  const Report r = check_yd(m, "qt");
  if (!r.ok()) {
    std::string why;
    for (const auto& it : r.items())
      if (it.status != Status::pass) why += " " + it.id + " (" + it.detail + ")";
    throw StructureError("R-matrix does not induce a Yetter-Drinfeld structure on " + m.name() +
                         ":" + why);
  }
  return m;
}

// ---------------------------------------------------------------- context

YDContext::YDContext(const YDContext& o) : base_(o.base_), modules_(o.modules_) {
  const std::lock_guard<std::mutex> lock(o.mu_);
  cache_ = o.cache_;
}

YDContext& YDContext::operator=(const YDContext& o) {
  if (this == &o) return *this;
  std::scoped_lock lock(mu_, o.mu_);
  base_ = o.base_;
  modules_ = o.modules_;
  cache_ = o.cache_;
  return *this;
}

void YDContext::add(const YDModule& m) {
  if (m.legs.size() != 1)
    throw StructureError("context modules need exactly one leg, got " + m.name());
  if (!base_) base_ = m.base;
  same_base(YDModule{base_, {}, m.action, m.coaction}, m);
  std::lock_guard<std::mutex> lock(mu_);
  modules_[m.legs[0]->name] = m;
  // drop cached braidings involving a replaced module
  for (auto it = cache_.begin(); it != cache_.end();)
    if (std::get<0>(it->first) == m.legs[0]->name || std::get<1>(it->first) == m.legs[0]->name)
      it = cache_.erase(it);
    else
      ++it;
}

const YDModule& YDContext::module(const SpaceRef& leg) const {
  auto it = modules_.find(leg->name);
  if (it == modules_.end())
    throw StructureError("no Yetter-Drinfeld structure registered for " + leg->name);
  if (it->second.legs[0]->dim != leg->dim)
    throw StructureError("registered module " + leg->name + " has a different dimension");
  return it->second;
}

Op YDContext::action(const Signature& legs_in) const {
  const Signature legs = flatten(legs_in);
  const Field f = field();
  const std::size_t n = legs.size();
  if (n == 0) return Op(base_->counit);
  if (n == 1) return Op(module(legs[0]).action);
  std::vector<std::size_t> perm;
  for (std::size_t k = 0; k < n; ++k) {
    perm.push_back(k);
    perm.push_back(n + k);
  }
  std::vector<Op> acts;
  for (const auto& l : legs) acts.push_back(module(l).action);
  return Op::tensor(acts) *
         Op::permutation(concat(Signature(n, base_->carrier), legs), perm, f) *
         Op::tensor({iterated_comult(*base_, n), id_op(legs, f)});
}

Op YDContext::coaction(const Signature& legs_in) const {
  const Signature legs = flatten(legs_in);
  const Field f = field();
  const std::size_t n = legs.size();
  if (n == 0) return Op(base_->unit);
  if (n == 1) return Op(module(legs[0]).coaction);
  Signature interleaved;
  std::vector<std::size_t> perm;
  for (std::size_t k = 0; k < n; ++k) {
    interleaved.push_back(base_->carrier);
    interleaved.push_back(legs[k]);
  }
  for (std::size_t k = 0; k < n; ++k) perm.push_back(2 * k);
  for (std::size_t k = 0; k < n; ++k) perm.push_back(2 * k + 1);
  std::vector<Op> co;
  for (const auto& l : legs) co.push_back(module(l).coaction);
  return Op::tensor({iterated_mult(*base_, n), id_op(legs, f)}) *
         Op::permutation(interleaved, perm, f) * Op::tensor(co);
}

const LinMap& YDContext::elementary(const SpaceRef& a, const SpaceRef& b, bool inverse) const {
  const auto key = std::make_tuple(a->name, b->name, inverse);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  const YDModule& ma = module(a);
  const YDModule& mb = module(b);
  LinMap c = inverse ? braiding_inverse(ma, mb) : braiding(ma, mb);
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.emplace(key, std::move(c)).first->second;
}

namespace {

struct Step {
  Signature before;  // signature the step acts on
  std::size_t pos;   // the pair (pos, pos + 1) is braided
};

std::vector<Step> braid_steps(const Signature& x, const Signature& y) {
  std::vector<Step> steps;
  Signature cur = concat(x, y);
  for (std::size_t k = x.size(); k-- > 0;)
    for (std::size_t j = 0; j < y.size(); ++j) {
      const std::size_t pos = k + j;
      steps.push_back({cur, pos});
      std::swap(cur[pos], cur[pos + 1]);
    }
  return steps;
}

}  // namespace

Op YDContext::braid(const Signature& x_in, const Signature& y_in) const {
  const Signature x = flatten(x_in);
  const Signature y = flatten(y_in);
  const Field f = field();
  std::vector<Op> ops;
  for (const auto& s : braid_steps(x, y))
    ops.push_back(on_legs(s.before, s.pos, Op(elementary(s.before[s.pos], s.before[s.pos + 1], false))));
  if (ops.empty()) return id_op(concat(x, y), f);
  std::reverse(ops.begin(), ops.end());
  return Op::compose(ops);
}

Op YDContext::braid_inverse(const Signature& x_in, const Signature& y_in) const {
  const Signature x = flatten(x_in);
  const Signature y = flatten(y_in);
  const Field f = field();
  std::vector<Op> ops;  // already in composition order: first step outermost
  for (const auto& s : braid_steps(x, y)) {
    Signature after = s.before;
    std::swap(after[s.pos], after[s.pos + 1]);
    ops.push_back(
        on_legs(after, s.pos, Op(elementary(s.before[s.pos], s.before[s.pos + 1], true))));
  }
  if (ops.empty()) return id_op(concat(y, x), f);
  return Op::compose(ops);
}

YDModule YDContext::module_of(const Signature& legs) const {
  const Signature l = flatten(legs);
  return YDModule{base_, l, action(l).materialize(), coaction(l).materialize()};
}

ReportItem yd_morphism_item(const std::string& id, const std::string& description,
                            const YDContext& ctx, const Op& f, std::optional<int> max_degree) {
  return guarded(id, description, [&] {
    const Op ib = id_op(ctx.base()->sig(), ctx.field());
    ReportItem a = compare(id, description, f * ctx.action(f.domain()),
                           ctx.action(f.codomain()) * Op::tensor({ib, f}), max_degree);
    if (a.status != Status::pass) {
      a.detail = "B-linearity: " + a.detail;
      return a;
    }
    ReportItem c = compare(id, description, ctx.coaction(f.codomain()) * f,
                           Op::tensor({ib, f}) * ctx.coaction(f.domain()), max_degree);
    if (c.status != Status::pass) c.detail = "B-colinearity: " + c.detail;
    return c;
  });
}

}  // namespace ydual
