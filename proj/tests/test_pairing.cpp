#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "ydual/pairing.hpp"

using namespace ydual;
using namespace ydual::testing;

namespace {

const Field Q = Field::rationals();

SparseVec e(std::size_t i) { return basis_vector(i, Q); }

struct Odd {
  BaseRef b = kz(2);
  BraidedRef h = std::make_shared<const BraidedHopfAlgebra>(build_exterior_algebra(1, b));
  BraidedRef hd = std::make_shared<const BraidedHopfAlgebra>(dual_braided_hopf(*h, "Hd"));
  QuasiDualPairing p = evaluation_pairing(hd, h);
  YDContext ctx{b};
  Odd() {
    ctx.add(h->module);
    ctx.add(hd->module);
  }
};

struct Poly {
  int n;
  BaseRef b = make_base(trivial_hopf());
  BraidedRef h;
  BraidedRef hd;
  YDContext ctx{b};
  explicit Poly(int n_) : n(n_) {
    h = std::make_shared<const BraidedHopfAlgebra>(build_polynomial_hopf(n, b, "H", "x"));
    hd = std::make_shared<const BraidedHopfAlgebra>(build_polynomial_hopf(n, b, "Hd", "y"));
    ctx.add(h->module);
    ctx.add(hd->module);
  }
  QuasiDualPairing factorial() const {
    Matrix v(n + 1, n + 1);
    Scalar fact(1);
    for (int i = 0; i <= n; ++i) {
      if (i > 0) fact *= Scalar(i);
      v(i, i) = fact;
    }
    return make_pairing(hd, h, v);
  }
};

Op tens(const std::vector<Op>& ops) { return Op::tensor(ops); }

}  // namespace

TEST_CASE("evaluation pairing of the odd line with its dual") {
  const Odd o;
  const Report r = check_quasi_dual(o.p, "qd");
  INFO(failing_ids(r));
  CHECK(r.items().size() == 7);
  CHECK(failures(r) == 0);
  CHECK(is_left_faithful(o.p));
  CHECK(pairing_rank(o.p) == 2);
}

TEST_CASE("factorial pairing of k[y] with k[x]") {
  const Poly q(6);
  const Report r = check_quasi_dual(q.factorial(), "qd");
  INFO(failing_ids(r));
  CHECK(failures(r) == 0);
  CHECK(is_left_faithful(q.factorial()));
}

TEST_CASE("a pairing without the factorials is not quasi-dual") {
  const Poly q(4);
  const QuasiDualPairing p = make_pairing(q.hd, q.h, Matrix::identity(5));
  const Report r = check_quasi_dual(p, "qd");
  const ReportItem* it = r.find("qd-mult-h");
  REQUIRE(it != nullptr);
  CHECK(it->status == Status::fail);
  // ⟨y², x·x⟩ = 1 while the coproduct side gives 2.
  CHECK(it->witness.find("y^2") != std::string::npos);
  CHECK(it->witness.find("x⊗x") != std::string::npos);
}

TEST_CASE("graded pairings must respect degrees") {
  const Poly q(3);
  Matrix v = Matrix::identity(4);
  v(1, 2) = Scalar(1);
  CHECK_THROWS_AS(make_pairing(q.hd, q.h, v), StructureError);
  CHECK_THROWS_AS(make_pairing(q.hd, q.h, Matrix::identity(3)), SignatureError);
}

TEST_CASE("left faithfulness is the row rank") {
  const Odd o;
  Matrix v = Matrix::identity(2);
  v(1, 1) = Scalar(0);
  CHECK_FALSE(is_left_faithful(make_pairing(o.hd, o.h, v)));
  CHECK(pairing_rank(make_pairing(o.hd, o.h, v)) == 1);
}

TEST_CASE("induced actions on the odd line") {
  const Odd o;
  const Op act = action_hd_on_h(o.p, o.ctx);
  // x* ⇀ x = 1, x* ⇀ 1 = 0, 1 ⇀ x = x
  CHECK(act.apply_basis(1 * 2 + 1) == e(0));
  CHECK(act.apply_basis(1 * 2 + 0).empty());
  CHECK(act.apply_basis(0 * 2 + 1) == e(1));
  const Op left = action_h_on_hd(o.p, o.ctx);
  // x ⇀ x*: only x⊗1*⊗x* pairs, and moving x past x* costs a sign
  CHECK(left.apply_basis(1 * 2 + 1) == scale(e(0), Scalar(-1)));
  const Op right = right_action_hd_on_h(o.p, o.ctx);
  // x ↼ x* = -⟨x*, x⟩ 1 (x* passes x on its way to the pairing), 1 ↼ x* = 0
  CHECK(right.apply_basis(1 * 2 + 1) == scale(e(0), Scalar(-1)));
  CHECK(right.apply_basis(0 * 2 + 1).empty());

  const Report r1 = check_module_algebra({o.hd, algebra_of(*o.h), act}, o.ctx, "a");
  INFO(failing_ids(r1));
  CHECK(failures(r1) == 0);
  const Report r2 = check_module_algebra({o.h, algebra_of(*o.hd), left}, o.ctx, "b");
  INFO(failing_ids(r2));
  CHECK(failures(r2) == 0);
}

TEST_CASE("y acts on k[x] by differentiation") {
  const Poly q(6);
  const QuasiDualPairing p = q.factorial();
  const Op act = action_hd_on_h(p, q.ctx);
  for (int n = 0; n <= 6; ++n) {
    SparseVec want;
    if (n > 0) want[n - 1] = Scalar(n);
    CHECK(act.apply_basis(7 + n) == want);
  }
  const Report r = check_module_algebra({q.hd, algebra_of(*q.h), act}, q.ctx, "a", 6);
  INFO(failing_ids(r));
  CHECK(failures(r) == 0);
}

TEST_CASE("algebras and braided tensor products") {
  const Odd o;
  const Report r = check_algebra(algebra_of(*o.h), o.ctx, "H");
  INFO(failing_ids(r));
  CHECK(failures(r) == 0);
  const Algebra a = algebra_of(*o.h);
  const Algebra b = algebra_of(*o.hd);
  const Algebra ab = braided_tensor_algebra(a, b, o.ctx, "H⊗Hd");
  const Report r2 = check_algebra(ab, o.ctx, "HHd");
  INFO(failing_ids(r2));
  CHECK(failures(r2) == 0);
  // (1⊗v)(a⊗1) = C(v⊗a)
  const Op ia = Op::identity(a.legs, Q);
  const Op ib = Op::identity(b.legs, Q);
  const Op lhs = ab.mult.lazy() * tens({a.unit, ib, ia, b.unit});
  CHECK_FALSE(first_mismatch(lhs, o.ctx.braid(b.legs, a.legs), std::nullopt));
  // the odd generators anticommute across the factors
  const SparseVec xy = lhs.apply_basis(1 * 2 + 1);
  CHECK(xy == scale(e(3), Scalar(-1)));
}

TEST_CASE("comodule algebras and their induced actions") {
  Odd o;
  const ComoduleAlgebra r = comodule_from_comult(*o.hd, "R");
  o.ctx.add(r.module);
  const Report rep = check_comodule_algebra(r, *o.hd, o.ctx, "R");
  INFO(failing_ids(rep));
  CHECK(failures(rep) == 0);
  const Op alpha = comodule_to_module(r, o.p, o.ctx);
  const Report rep2 = check_module_algebra({o.h, r.algebra, alpha}, o.ctx, "alpha");
  INFO(failing_ids(rep2));
  CHECK(failures(rep2) == 0);

  // ψ(r) = r⊗1 makes h act by ε(h)
  const auto rr = std::make_shared<const BraidedHopfAlgebra>(build_exterior_algebra(1, o.b, "T"));
  const ComoduleAlgebra t = trivial_comodule(*rr, *o.hd, "T");
  o.ctx.add(t.module);
  CHECK(failures(check_comodule_algebra(t, *o.hd, o.ctx, "T")) == 0);
  const Op triv = comodule_to_module(t, o.p, o.ctx);
  const Op expect = tens({Op(o.h->counit), Op::identity(t.algebra.legs, Q)});
  CHECK_FALSE(first_mismatch(triv, expect, std::nullopt));
}

TEST_CASE("smash products") {
  const Odd o;
  const Algebra a = algebra_of(*o.h);
  const Op act = action_hd_on_h(o.p, o.ctx);
  const Algebra s = smash_product(a, *o.hd, act, o.ctx, "H#Hd");
  const Report r = check_algebra(s, o.ctx, "smash");
  INFO(failing_ids(r));
  CHECK(failures(r) == 0);
  const Op ia = Op::identity(a.legs, Q);
  const Op ik = Op::identity(o.hd->sig(), Q);
  const Op ku = Op(o.hd->unit);
  // (a#1)(b#1) = ab#1 and (a#1)(1#k) = a#k
  CHECK_FALSE(first_mismatch(s.mult.lazy() * tens({ia, ku, ia, ku}),
                             tens({a.mult.lazy(), ku}), std::nullopt));
  CHECK_FALSE(first_mismatch(s.mult.lazy() * tens({ia, ku, a.unit, ik}), tens({ia, ik}),
                             std::nullopt));
  // (1#x*)(x#1) = x*⇀x # 1 + (g·x)#x* = 1#1 - x#x*
  SparseVec want = e(0);
  want[3] = Scalar(-1);
  CHECK(s.mult.dense().apply_basis(1 * 4 + 2) == want);

  const Op zero = LinMap::zero(concat(o.hd->sig(), a.legs), a.legs, Q);
  CHECK_THROWS_AS(smash_product(a, *o.hd, zero, o.ctx, "bad"), StructureError);
}

TEST_CASE("graded smash product k[x]#k[y] is the Weyl algebra") {
  const Poly q(6);
  const Op act = action_hd_on_h(q.factorial(), q.ctx);
  const Algebra s = smash_product(algebra_of(*q.h), *q.hd, act, q.ctx, "H#Hd", true, 6);
  // (1#y)(x#1) = 1#1 + x#y
  SparseVec want = e(0);
  want[1 * 7 + 1] = Scalar(1);
  CHECK(s.mult.lazy().apply_basis(1 * 49 + 1 * 7) == want);
}

TEST_CASE("the lifted action ignores R up to the braiding") {
  Odd o;
  const ComoduleAlgebra r = comodule_from_comult(*o.hd, "R");
  o.ctx.add(r.module);
  const Op act = action_hd_on_h(o.p, o.ctx);
  const Op lifted = lifted_action(r.algebra.legs, o.p, act, o.ctx);
  // x* ⇀' (r_x ⊗ x) = (g·r_x) ⊗ (x*⇀x) = -r_x ⊗ 1
  SparseVec want;
  want[1 * 2 + 0] = Scalar(-1);
  CHECK(lifted.apply_basis(1 * 4 + 1 * 2 + 1) == want);
  // 1 ⇀' is the identity
  const Op one = lifted * tens({Op(o.hd->unit), Op::identity(concat(r.algebra.legs, o.h->sig()), Q)});
  CHECK_FALSE(first_mismatch(one, Op::identity(concat(r.algebra.legs, o.h->sig()), Q), std::nullopt));
}

TEST_CASE("evaluation composed with the braiding") {
  const Odd o;
  // V = Hd, U = H: ⟨v, u⟩ = ⟨v₍₋₁₎·u, v₍₀₎⟩
  const QuasiDualPairing p = evaluation_composed_with_braiding(o.hd, o.h);
  const Matrix v = p.values();
  CHECK(v(0, 0) == Scalar(1));
  CHECK(v(1, 1) == Scalar(-1));
  CHECK(v(0, 1) == Scalar(0));
}
