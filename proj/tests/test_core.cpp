#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "random.hpp"
#include "ydual/linalg.hpp"
#include "ydual/op.hpp"
#include "ydual/scalar.hpp"

using namespace ydual;
using ydual::testing::random_map;
using ydual::testing::random_matrix;
using ydual::testing::random_vector;

TEST_CASE("rational arithmetic is exact") {
  CHECK(Scalar(1, 2) + Scalar(1, 3) == Scalar(5, 6));
  CHECK((Scalar(1, 2) - Scalar(1, 2)).is_zero());
  CHECK(Scalar(-4, -6) == Scalar(2, 3));
  CHECK(Scalar(3, 4).inverse() == Scalar(4, 3));
  CHECK(Scalar(7, 3).to_string() == "7/3");
  CHECK_THROWS_AS(Scalar(1, 0), ArithmeticError);
  CHECK_THROWS_AS(Scalar(0).inverse(), ArithmeticError);
}

TEST_CASE("rationals promote past 64 bits and come back") {
  const Scalar big(1LL << 62);
  const Scalar sq = big * big * big;
  mpz_class expect = mpz_class(1) << 186;
  CHECK(sq.to_mpq() == mpq_class(expect));
  const Scalar back = sq / (big * big);
  CHECK(back == big);
  CHECK(back.to_string() == std::to_string(1LL << 62));
  // (2^62 + 1)/2^62 - 1 = 2^-62 stays exact
  const Scalar frac = Scalar((1LL << 62) + 1, 1LL << 62) - Scalar(1);
  CHECK(frac == Scalar(1, 1LL << 62));
}

TEST_CASE("prime field arithmetic") {
  const Field f = Field::prime(5);
  CHECK(Scalar::from_int(2, f) * Scalar::from_int(3, f) == Scalar::one(f));
  CHECK(Scalar::from_int(2, f).inverse() == Scalar::from_int(3, f));
  CHECK(Scalar::from_int(-1, f) == Scalar::from_int(4, f));
  CHECK(Scalar(1, 2).in(f) == Scalar::from_int(3, f));
  // rational operand reduces into the prime field
  CHECK(Scalar::from_int(2, f) + Scalar(1, 2) == Scalar::zero(f));
  CHECK_THROWS_AS(Scalar(1, 5).in(f), ArithmeticError);
  CHECK_THROWS_AS(Scalar::one(f) + Scalar::one(Field::prime(7)), ArithmeticError);
  CHECK_THROWS_AS(Field::prime(6), ArithmeticError);
}

TEST_CASE("field and scalar parsing") {
  CHECK(Field::parse("Q").is_rational());
  CHECK(Field::parse("GF:7").characteristic() == 7);
  CHECK_THROWS_AS(Field::parse("GF:x"), ArithmeticError);
  CHECK_THROWS_AS(Field::parse("R"), ArithmeticError);
  CHECK(Scalar::parse("-3/6") == Scalar(-1, 2));
  CHECK(Scalar::parse("12") == Scalar(12));
  CHECK(Scalar::parse("123456789012345678901234567890").to_string() ==
        "123456789012345678901234567890");
  CHECK_THROWS_AS(Scalar::parse("1/0"), ArithmeticError);
  CHECK_THROWS_AS(Scalar::parse("1.5"), ArithmeticError);
  CHECK_THROWS_AS(Scalar::parse(""), ArithmeticError);
  CHECK(Scalar::parse("3/2", Field::prime(5)) == Scalar::from_int(4, Field::prime(5)));
}

TEST_CASE("kronecker product follows the row-major convention") {
  std::mt19937_64 rng(1);
  const Matrix a = random_matrix(rng, 2, 3);
  const Matrix b = random_matrix(rng, 3, 2);
  const Matrix k = Matrix::kron(a, b);
  REQUIRE(k.rows() == 6);
  REQUIRE(k.cols() == 6);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t p = 0; p < 3; ++p)
        for (std::size_t q = 0; q < 2; ++q) CHECK(k(i * 3 + p, j * 2 + q) == a(i, j) * b(p, q));
}

TEST_CASE("matrix inverse and rank") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = random_matrix(rng, 4, 4, Field::rationals(), 0.8);
    auto inv = m.inverse();
    if (m.rank() == 4) {
      REQUIRE(inv.has_value());
      CHECK(m * *inv == Matrix::identity(4));
      CHECK(*inv * m == Matrix::identity(4));
    } else {
      CHECK_FALSE(inv.has_value());
    }
  }
  Matrix singular = Matrix::from_rows({{1, 2}, {2, 4}});
  CHECK(singular.rank() == 1);
  CHECK_FALSE(singular.inverse().has_value());
}

TEST_CASE("solve_preimage") {
  const auto v = make_space("V", 2);
  const auto w = make_space("W", 3);
  const auto u = make_space("U", 2);
  // f: V -> W injective
  const LinMap f({v}, {w}, Matrix::from_rows({{1, 0}, {1, 1}, {0, 2}}));
  std::mt19937_64 rng(3);
  const LinMap g = random_map(rng, {u}, {v});
  auto r = solve_preimage(f, compose(f, g));
  REQUIRE(std::holds_alternative<LinMap>(r));
  CHECK(equal(std::get<LinMap>(r), g));

  const LinMap outside({u}, {w}, Matrix::from_rows({{1, 0}, {0, 0}, {0, 0}}));
  auto bad = solve_preimage(f, outside);
  REQUIRE(std::holds_alternative<NoSolution>(bad));
  CHECK(std::get<NoSolution>(bad).reason == NoSolution::Reason::outside_image);
  CHECK(std::get<NoSolution>(bad).column == 0);

  const LinMap collapse({v}, {w}, Matrix::from_rows({{1, 1}, {0, 0}, {0, 0}}));
  auto amb = solve_preimage(collapse, LinMap::zero({u}, {w}));
  REQUIRE(std::holds_alternative<NoSolution>(amb));
  CHECK(std::get<NoSolution>(amb).reason == NoSolution::Reason::ambiguous);
}

TEST_CASE("lazy tensor and composition agree with dense matrices") {
  std::mt19937_64 rng(4);
  const auto a = make_space("A", 2);
  const auto b = make_space("B", 3);
  const auto c = make_space("C", 2);
  const auto d = make_space("D", 4);
  for (int trial = 0; trial < 10; ++trial) {
    const LinMap f = random_map(rng, {a}, {b});
    const LinMap g = random_map(rng, {c, a}, {d});
    const LinMap h = random_map(rng, {b, d}, {c});
    const Op lazy = Op(h) * Op::tensor({Op(f), Op(g)});
    const LinMap dense = compose(h, tensor(f, g));
    CHECK(equal(lazy.materialize(), dense));
    const SparseVec x = random_vector(rng, sig_dim({a, c, a}));
    // apply to a full vector, not just basis vectors
    SparseVec expect;
    for (const auto& [j, cj] : x)
      for (std::size_t i = 0; i < dense.matrix().rows(); ++i)
        accumulate(expect, i, dense.matrix()(i, j) * cj);
    CHECK(lazy.apply(x) == expect);
  }
}

TEST_CASE("interchange law holds for lazy maps") {
  std::mt19937_64 rng(5);
  const auto a = make_space("A", 2);
  const auto b = make_space("B", 3);
  const auto c = make_space("C", 2);
  const Field f = Field::prime(7);
  for (int trial = 0; trial < 10; ++trial) {
    const Op f1 = random_map(rng, {a}, {b}, f);
    const Op f2 = random_map(rng, {b}, {c}, f);
    const Op g1 = random_map(rng, {c}, {a}, f);
    const Op g2 = random_map(rng, {a}, {b}, f);
    const Op lhs = Op::tensor({f2, g2}) * Op::tensor({f1, g1});
    const Op rhs = Op::tensor({f2 * f1, g2 * g1});
    CHECK_FALSE(first_mismatch(lhs, rhs, std::nullopt).has_value());
  }
}

TEST_CASE("permutations and on_legs") {
  const auto v = make_space("V", 2);
  const auto w = make_space("W", 3);
  const auto u = make_space("U", 2);
  const Op p = Op::permutation({v, w}, {1, 0}, Field::rationals());
  CHECK(equal(p.materialize(), LinMap::swap({v}, {w})));
  // cyclic permutation V W U -> U V W sends (i, j, k) to (k, i, j)
  const Op cyc = Op::permutation({v, w, u}, {2, 0, 1}, Field::rationals());
  const std::size_t in = join_index({v, w, u}, {1, 2, 0});
  const SparseVec out = cyc.apply_basis(in);
  REQUIRE(out.size() == 1);
  CHECK(out.begin()->first == join_index({u, v, w}, {0, 1, 2}));
  CHECK_THROWS_AS(Op::permutation({v, w}, {0, 0}, Field::rationals()), SignatureError);

  std::mt19937_64 rng(6);
  const LinMap g = random_map(rng, {w}, {u});
  const Op lifted = on_legs({v, w, u}, 1, Op(g));
  CHECK(same_signature(lifted.codomain(), {v, u, u}));
  CHECK(equal(lifted.materialize(), tensor(tensor(LinMap::identity({v}), g), LinMap::identity({u}))));
  CHECK_THROWS_AS(on_legs({v, w, u}, 0, Op(g)), SignatureError);
}

TEST_CASE("composition checks leg names, not just dimensions") {
  const auto h = make_space("H", 2);
  const auto hd = make_space("Hd", 2);
  const Op f = LinMap::identity({h});
  const Op g = LinMap::identity({hd});
  CHECK_THROWS_AS(f * g, SignatureError);
  CHECK_NOTHROW(f * g.retyped({hd}, {h}));
}

TEST_CASE("sum of maps") {
  std::mt19937_64 rng(7);
  const auto a = make_space("A", 3);
  const LinMap f = random_map(rng, {a}, {a});
  const LinMap g = random_map(rng, {a}, {a});
  CHECK(equal(sum(f, g).materialize(), add(f, g)));
}

TEST_CASE("basis inputs are ordered by degree and truncated") {
  const auto x = make_space("X", 3, {"1", "x", "x^2"}, {0, 1, 2});
  const auto inputs = basis_inputs({x, x}, 2);
  // pairs (i, j) with i + j <= 2: 6 of them
  REQUIRE(inputs.size() == 6);
  CHECK(inputs[0] == 0);
  int last = -1;
  for (auto i : inputs) {
    const int d = index_degree({x, x}, i);
    CHECK(d <= 2);
    CHECK(d >= last);
    last = d;
  }
  CHECK(basis_inputs({x, x}, std::nullopt).size() == 9);
}

TEST_CASE("first_mismatch reports the lowest-degree witness") {
  const auto x = make_space("X", 3, {"1", "x", "x^2"}, {0, 1, 2});
  Matrix m = Matrix::identity(3);
  m(2, 2) = Scalar(2);
  m(1, 1) = Scalar(3);
  const auto mm = first_mismatch(Op(LinMap({x}, {x}, m)), Op::identity({x}, Field::rationals()),
                                 std::nullopt);
  REQUIRE(mm.has_value());
  CHECK(mm->input_label == "x");
  CHECK(mm->input_degree == 1);
  CHECK_FALSE(first_mismatch(Op(LinMap({x}, {x}, m)), Op::identity({x}, Field::rationals()), 0)
                  .has_value());
}
