#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "ydual/hopf.hpp"

using namespace ydual;
using namespace ydual::testing;

namespace {

// Product of basis elements through the multiplication matrix.
SparseVec mul(const HopfAlgebraData& b, const SparseVec& x, const SparseVec& y) {
  return Op(b.mult).apply(kron(x, y, b.dim()));
}

SparseVec e(std::size_t i) { return basis_vector(i, Field::rationals()); }

}  // namespace

TEST_CASE("group algebra of Z2 passes every Hopf axiom") {
  const auto b = build_group_algebra(cyclic_group_table(2));
  const Report r = check_hopf(b);
  CHECK(failures(r) == 0);
  CHECK(r.items().size() >= 12);
  CHECK(equal(b.antipode, LinMap::identity(b.sig())));
  CHECK(equal(invert_antipode(b), LinMap::identity(b.sig())));
  CHECK(is_commutative(b));
  CHECK(is_cocommutative(b));
}

TEST_CASE("zero antipode fails the antipode axiom") {
  auto b = build_group_algebra(cyclic_group_table(2), Field::rationals(), "B",
                               cyclic_group_labels(2));
  b.antipode = LinMap::zero(b.sig(), b.sig());
  b.antipode_inv.reset();
  const Report r = check_hopf(b);
  const ReportItem* it = r.find("B-antipode-left");
  REQUIRE(it != nullptr);
  CHECK(it->status == Status::fail);
  // the witness is the first failing basis input; g fails as well
  CHECK((it->witness == "1" || it->witness == "g"));
  const Op lhs = Op(b.mult) * Op::tensor({Op(b.antipode), Op::identity(b.sig(), b.field())}) *
                 Op(b.comult);
  CHECK(lhs.apply_basis(1).empty());
  CHECK_THROWS_AS(invert_antipode(b), NotInvertible);
}

TEST_CASE("Sweedler algebra matches its presentation") {
  const auto h = sweedler_hopf();
  CHECK(failures(check_hopf(h)) == 0);
  const SparseVec one = e(0), g = e(1), x = e(2), gx = e(3);
  // relations g^2 = 1, x^2 = 0, xg = -gx, and gx is g times x
  CHECK(mul(h, g, g) == one);
  CHECK(mul(h, x, x).empty());
  CHECK(mul(h, x, g) == scale(gx, Scalar(-1)));
  CHECK(mul(h, g, x) == gx);
  // Δg = g⊗g, Δx = x⊗1 + g⊗x, and Δ is multiplicative on gx
  const Op d = h.comult;
  CHECK(d.apply(g) == kron(g, g, 4));
  CHECK(d.apply(x) == add(kron(x, one, 4), kron(g, x, 4)));
  const SparseVec dgx = d.apply(gx);
  // (g⊗g)(x⊗1 + g⊗x) computed in B⊗B factorwise
  SparseVec expect;
  for (const auto& [i, c] : d.apply(x)) {
    const SparseVec l = mul(h, g, e(i / 4));
    const SparseVec r = mul(h, g, e(i % 4));
    expect = add(expect, scale(kron(l, r, 4), c));
  }
  CHECK(dgx == expect);
  // S(g) = g, S(x) = -gx
  const Op s = h.antipode;
  CHECK(s.apply(g) == g);
  CHECK(s.apply(x) == scale(gx, Scalar(-1)));
  CHECK_FALSE(is_commutative(h));
  CHECK_FALSE(is_cocommutative(h));
}

TEST_CASE("Sweedler antipode has order four and its inverse is S^3") {
  const auto h = sweedler_hopf();
  const Matrix& s = h.antipode.matrix();
  const Matrix s2 = s * s;
  CHECK_FALSE(s2 == Matrix::identity(4));
  CHECK(s2 * s2 == Matrix::identity(4));
  CHECK(invert_antipode(h).matrix() == s2 * s);
  CHECK(h.antipode_inv.has_value());
  CHECK(compose(*h.antipode_inv, h.antipode).matrix() == Matrix::identity(4));
}

TEST_CASE("group algebra builder") {
  const auto z4 = build_group_algebra(cyclic_group_table(4));
  CHECK(z4.dim() == 4);
  CHECK(Op(z4.antipode).apply_basis(1) == e(3));
  CHECK(failures(check_hopf(z4)) == 0);

  std::vector<std::vector<std::size_t>> no_identity{{0, 0}, {0, 0}};
  CHECK_THROWS_WITH_AS(build_group_algebra(no_identity), doctest::Contains("identity"),
                       StructureError);
  std::vector<std::vector<std::size_t>> not_assoc{{0, 1, 2}, {1, 0, 0}, {2, 2, 0}};
  CHECK_THROWS_AS(build_group_algebra(not_assoc), StructureError);
  CHECK_THROWS_AS(build_group_algebra({{0, 1}, {1}}), StructureError);

  // S3 as permutations of {0,1,2}; non-abelian, so kS3 is not commutative
  std::vector<std::vector<int>> perms{{0, 1, 2}, {1, 0, 2}, {0, 2, 1},
                                      {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      for (std::size_t k = 0; k < 6; ++k)
        if (perms[k] == c) table[a][b] = k;
    }
  const auto s3 = build_group_algebra(table);
  CHECK(failures(check_hopf(s3)) == 0);
  CHECK_FALSE(is_commutative(s3));
  CHECK(is_cocommutative(s3));
  const auto fs3 = dual_hopf(s3);
  CHECK(failures(check_hopf(fs3)) == 0);
  CHECK(is_commutative(fs3));
  CHECK_FALSE(is_cocommutative(fs3));
}

TEST_CASE("dual Hopf algebras") {
  const auto b = build_group_algebra(cyclic_group_table(2));
  const auto d = dual_hopf(b);
  CHECK(failures(check_hopf(d)) == 0);
  // indicator functions multiply pointwise: δ_i δ_j = δ_ij δ_i
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(mul(d, e(i), e(j)) == (i == j ? e(i) : SparseVec{}));
  const auto dd = dual_hopf(d, "B");
  CHECK(dd.mult.matrix() == b.mult.matrix());
  CHECK(dd.comult.matrix() == b.comult.matrix());
  CHECK(dd.antipode.matrix() == b.antipode.matrix());
  const auto k = trivial_hopf();
  CHECK(dual_hopf(k).dim() == 1);
  CHECK(failures(check_hopf(dual_hopf(k))) == 0);
  CHECK(failures(check_hopf(dual_hopf(sweedler_hopf()))) == 0);
}

TEST_CASE("prime field group algebra") {
  const auto b = build_group_algebra(cyclic_group_table(4), Field::prime(5));
  CHECK(failures(check_hopf(b)) == 0);
  CHECK(b.field() == Field::prime(5));
}
