#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rhc/complexes.hpp"
#include "rhc/sparse_matrix.hpp"

using namespace rhc;

TEST_CASE("rational canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational::from_string("-3/6") == Rational(-1, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(1, 3) * Rational(3)) == Rational(1));
  CHECK(Rational(7, 1).to_long() == 7);
  CHECK_THROWS(Rational(1, 2).to_long());
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
}

TEST_CASE("identity and rank") {
  CHECK(SparseMatrix::identity(5).rank() == 5);
  SparseMatrix z(4, 7);
  CHECK(z.rank() == 0);
  CHECK(z.is_zero());
}

TEST_CASE("kernel of a 1x2 matrix") {
  SparseMatrix m(1, 2);
  m.set(0, 0, Rational(1));
  m.set(0, 1, Rational(-1));
  SparseMatrix k = m.kernel_basis();
  REQUIRE(k.rows() == 1);
  CHECK(k.get(0, 0) == Rational(1));
  CHECK(k.get(0, 1) == Rational(1));
}

TEST_CASE("rank nullity and canonical echelon") {
  // deterministic pseudorandom small matrices
  unsigned state = 12345;
  auto next = [&]() {
    state = state * 1103515245 + 12345;
    return static_cast<int>((state >> 16) % 7) - 3;
  };
  for (int trial = 0; trial < 25; ++trial) {
    int rows = 1 + static_cast<int>((state >> 20) % 6);
    int cols = 1 + static_cast<int>((state >> 8) % 6);
    SparseMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int col = 0; col < cols; ++col) m.set(r, col, Rational(next()));
    int rank = m.rank();
    SparseMatrix k = m.kernel_basis();
    CHECK(rank + k.rows() == cols);
    // kernel vectors really lie in the kernel
    for (int i = 0; i < k.rows(); ++i) {
      std::vector<Rational> x(cols, Rational(0));
      for (const auto& [c, v] : k.row(i)) x[c] = v;
      for (const Rational& y : m.apply(x)) CHECK(y == Rational(0));
    }
    // echelon is reproducible
    auto e1 = m.echelon();
    auto e2 = m.echelon();
    CHECK(e1.rref == e2.rref);
    CHECK(e1.pivot_cols == e2.pivot_cols);
    CHECK(m.image_basis().rows() == rank);
    CHECK(m.transpose().transpose() == m);
  }
}

TEST_CASE("product identities") {
  unsigned state = 99;
  auto next = [&]() {
    state = state * 1103515245 + 12345;
    return static_cast<int>((state >> 16) % 5) - 2;
  };
  auto random_matrix = [&](int rows, int cols) {
    SparseMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m.set(r, c, Rational(next(), 1 + (next() & 1)));
    return m;
  };
  for (int trial = 0; trial < 10; ++trial) {
    SparseMatrix a = random_matrix(3, 4), b = random_matrix(4, 2), c = random_matrix(2, 5);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
    CHECK(a * SparseMatrix::identity(4) == a);
  }
}

TEST_CASE("solve") {
  SparseMatrix m(2, 2);
  m.set(0, 0, Rational(2));
  m.set(1, 1, Rational(3));
  auto x = m.solve({Rational(1), Rational(1)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(1, 2));
  CHECK((*x)[1] == Rational(1, 3));

  SparseMatrix singular(2, 1);
  singular.set(0, 0, Rational(1));
  singular.set(1, 0, Rational(1));
  CHECK_FALSE(singular.solve({Rational(1), Rational(2)}).has_value());
  CHECK(singular.solve({Rational(2), Rational(2)}).has_value());
}

TEST_CASE("block operations") {
  SparseMatrix a = SparseMatrix::identity(2);
  SparseMatrix b(1, 3);
  b.set(0, 2, Rational(5));
  SparseMatrix d = SparseMatrix::direct_sum(a, b);
  CHECK(d.rows() == 3);
  CHECK(d.cols() == 5);
  CHECK(d.get(2, 4) == Rational(5));
  CHECK(SparseMatrix::vstack(a, SparseMatrix(3, 2)).rows() == 5);
  CHECK(SparseMatrix::hstack(a, SparseMatrix(2, 4)).cols() == 6);
  CHECK_THROWS_AS(SparseMatrix::vstack(a, b), std::invalid_argument);
  CHECK((a * a) == a);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("mu matrix rank equals the glued dimension") {
  Composition a = parse_composition("(2,2)");
  Composition b = parse_composition("(1,2,1)");
  ModuleMap mu = mu_map(a, b);
  CHECK(mu.matrix.rank() == dim_projective(near_concat(a, b)));
  CHECK(near_concat(a, b) == parse_composition("(2,3,2,1)"));
}
