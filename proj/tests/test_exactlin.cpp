#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "qgdk/linalg.hpp"

using namespace qgdk;

namespace {

Matrix randomMatrix(std::mt19937& rng, int rows, int cols) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = Scalar(num(rng), den(rng));
  return m;
}

// Independent rank oracle: repeatedly pick a vector, strip off components
// along already-collected ones by explicit pivot division.  Shares no code
// with the library rref.
int rankOracle(const Matrix& m) {
  std::vector<Vec> basis;
  std::vector<int> pivotCol;
  for (int j = 0; j < m.cols(); ++j) {
    Vec v = m.col(j);
    for (size_t k = 0; k < basis.size(); ++k) {
      const Scalar& c = v[pivotCol[k]];
      if (c.isZero()) continue;
      Scalar f = c / basis[k][pivotCol[k]];
      for (int i = 0; i < m.rows(); ++i) v[i] -= f * basis[k][i];
    }
    int p = -1;
    for (int i = 0; i < m.rows(); ++i)
      if (!v[i].isZero()) {
        p = i;
        break;
      }
    if (p >= 0) {
      basis.push_back(std::move(v));
      pivotCol.push_back(p);
    }
  }
  return int(basis.size());
}

}  // namespace

TEST_CASE("scalar canonical forms") {
  CHECK(Scalar(2, 6).str() == "1/3");
  CHECK(Scalar(-2, -6).str() == "1/3");
  CHECK(Scalar(2, -6).str() == "-1/3");
  CHECK(Scalar(0, 5).str() == "0");
  CHECK(Scalar::parse("7/21") == Scalar(1, 3));
  CHECK(Scalar::parse("-4") == Scalar(-4));
  CHECK(Scalar::parse("3/4") + Scalar::parse("1/4") == Scalar(1));
  CHECK(Scalar(1, 2) * Scalar(2, 3) == Scalar(1, 3));
  CHECK(Scalar(5).modp(3) == Scalar(2, 1, 3));
  CHECK(Scalar(1, 2).modp(5) == Scalar(3, 1, 5));  // 2^{-1} = 3 mod 5
  CHECK_THROWS(Scalar(1, 0));
  CHECK_THROWS(Scalar::parse("x"));
}

TEST_CASE("randomized rank, kernel, and quotient suite") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> dim(1, 6);
  int failures = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    int r = dim(rng), c = dim(rng);
    Matrix m = randomMatrix(rng, r, c);

    int rk = rank(m);
    if (rk != rankOracle(m)) ++failures;
    // Rank-nullity.
    Subspace ker = kernel(m);
    if (rk + ker.dim() != c) ++failures;
    Subspace im = image(m);
    if (im.dim() != rk) ++failures;
    // Kernel vectors are annihilated; image contains every column.
    for (int i = 0; i < ker.dim(); ++i)
      if (!isZeroVec(m.apply(ker.basisVector(i)))) ++failures;
    for (int j = 0; j < c; ++j)
      if (!im.contains(m.col(j))) ++failures;

    // Solvable systems are solved exactly.
    Vec x = randomMatrix(rng, c, 1).col(0);
    Vec b = m.apply(x);
    auto sol = solve(m, b);
    if (!sol || m.apply(*sol) != b) ++failures;

    // Quotient laws: projection kills exactly the relations and the
    // section is a right inverse.
    QuotientSpace q = QuotientSpace::make(r, im);
    if (q.projection * q.section != Matrix::identity(q.quotDim)) ++failures;
    for (int j = 0; j < c; ++j)
      if (!isZeroVec(q.projection.apply(m.col(j)))) ++failures;
    if (q.quotDim != r - im.dim()) ++failures;

    // Canonical stability: generator order must not matter.
    std::vector<Vec> gens, shuffled;
    for (int j = 0; j < c; ++j) gens.push_back(m.col(j));
    shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    if (Subspace::fromVectors(r, gens) != Subspace::fromVectors(r, shuffled))
      ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("subspace dimension formula and membership") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    Matrix a = randomMatrix(rng, 5, 3), b = randomMatrix(rng, 5, 3);
    Subspace u = image(a), w = image(b);
    Subspace s = Subspace::sum(u, w), i = Subspace::intersect(u, w);
    CHECK(u.dim() + w.dim() == s.dim() + i.dim());
    for (int j = 0; j < i.dim(); ++j) {
      CHECK(u.contains(i.basisVector(j)));
      CHECK(w.contains(i.basisVector(j)));
    }
    for (int j = 0; j < u.dim(); ++j) {
      auto co = u.coords(u.basisVector(j));
      REQUIRE(co.has_value());
      CHECK((*co) == unitVec(u.dim(), j));
    }
  }
}

TEST_CASE("inverse matrices") {
  std::mt19937 rng(99);
  int found = 0;
  for (int iter = 0; iter < 100; ++iter) {
    Matrix m = randomMatrix(rng, 4, 4);
    auto inv = inverseMatrix(m);
    if (rank(m) == 4) {
      REQUIRE(inv.has_value());
      CHECK((*inv) * m == Matrix::identity(4));
      CHECK(m * (*inv) == Matrix::identity(4));
      ++found;
    } else {
      CHECK(!inv.has_value());
    }
  }
  CHECK(found > 50);  // random 4x4 matrices are mostly invertible
}

TEST_CASE("rational and prime-field arithmetic agree") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> ent(-9, 9);
  const unsigned long p = 7;
  for (int iter = 0; iter < 100; ++iter) {
    Matrix a(3, 4), b(4, 2);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) a.at(i, j) = Scalar(ent(rng));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 2; ++j) b.at(i, j) = Scalar(ent(rng));
    CHECK((a * b).modp(p) == a.modp(p) * b.modp(p));
  }
}

TEST_CASE("kron index convention") {
  Matrix a(2, 2), b(2, 2);
  a.at(0, 1) = Scalar(1);
  b.at(1, 0) = Scalar(1);
  Vec x = kronVec(unitVec(2, 1), unitVec(2, 0));
  CHECK(x == unitVec(4, 2));  // (i, j) -> i * d2 + j
  CHECK(Matrix::kron(a, b).apply(x) == kronVec(a.apply(unitVec(2, 1)),
                                               b.apply(unitVec(2, 0))));
  CHECK(Matrix::swap(2, 3).apply(kronVec(unitVec(2, 1), unitVec(3, 2))) ==
        kronVec(unitVec(3, 2), unitVec(2, 1)));
}
