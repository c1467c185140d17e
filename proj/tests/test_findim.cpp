#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgdk/corpus.hpp"

using namespace qgdk;

namespace {

FinAlgebra diagonalPair() {
  FinAlgebra a;
  a.dim = 2;
  a.basisNames = {"p1", "p2"};
  a.mult = Matrix(2, 4);
  a.mult.at(0, 0) = Scalar(1);
  a.mult.at(1, 3) = Scalar(1);
  a.unit = {Scalar(1), Scalar(1)};
  return a;
}

}  // namespace

TEST_CASE("algebra checker accepts matrix units and rejects mutations") {
  FinAlgebra m2 = groupoidAlgebra(pairGroupoid(2)).alg;
  CHECK(checkAlgebra(m2).pass());

  FinAlgebra broken = m2;
  broken.mult.at(0, 1) += Scalar(1);  // e11 * e12 gains a spurious e11 term
  Report rep = checkAlgebra(broken);
  CHECK(!rep.pass());
  const LawResult* assoc = rep.find("associativity");
  REQUIRE(assoc != nullptr);
  CHECK(!assoc->pass);
  CHECK(assoc->witness.has_value());

  FinAlgebra badUnit = m2;
  badUnit.unit = unitVec(4, 0);
  CHECK(!checkAlgebra(badUnit).pass());
}

TEST_CASE("regular bimodule and tensor over the base collapse correctly") {
  FinAlgebra r = diagonalPair();
  RBimodule reg = regularBimodule(r);
  CHECK(checkBimodule(reg).pass());

  // R (x)_R R has the dimension of R.
  QuotientSpace t = tensorOverBase(r.dim, reg.right, r.dim, r.dim, reg.left);
  CHECK(t.quotDim == r.dim);
  // p1 (x) p2 is balanced to zero: p1 (x) p2 = p1 p2 (x) 1-part.
  Vec mixed = kronVec(unitVec(2, 0), unitVec(2, 1));
  CHECK(isZeroVec(t.projection.apply(mixed)));
  // m (x) 1 and 1 (x) m agree in the quotient.
  for (int i = 0; i < 2; ++i)
    CHECK(t.projection.apply(kronVec(unitVec(2, i), r.unit)) ==
          t.projection.apply(kronVec(r.unit, unitVec(2, i))));
}

TEST_CASE("triple tensor equals iterated pair tensor in dimension") {
  FinAlgebra r = diagonalPair();
  RBimodule reg = regularBimodule(r);
  QuotientSpace t3 = tripleTensorOverBase(r.dim, reg.right, r.dim, r.dim,
                                          reg.left, reg.right, r.dim, reg.left);
  CHECK(t3.quotDim == r.dim);  // R (x)_R R (x)_R R = R
  CHECK(t3.projection * t3.section == Matrix::identity(t3.quotDim));
}

TEST_CASE("trivial coring over a base algebra") {
  FinAlgebra r = diagonalPair();
  RBimodule reg = regularBimodule(r);
  QuotientSpace t = tensorOverBase(r.dim, reg.right, r.dim, r.dim, reg.left);
  // C = R, Delta(c) = c (x)_R 1, eps = id.
  Matrix comultAmbient(r.dim * r.dim, r.dim);
  for (int c = 0; c < r.dim; ++c)
    comultAmbient.setCol(c, kronVec(unitVec(r.dim, c), r.unit));
  Coring coring =
      Coring::make(reg, t.projection * comultAmbient, Matrix::identity(r.dim));
  CHECK(checkCoring(coring).pass());

  // The regular comodule M = R with m -> 1 (x)_R m.
  Matrix coactionAmbient(r.dim * r.dim, r.dim);
  for (int m = 0; m < r.dim; ++m)
    coactionAmbient.setCol(m, kronVec(r.unit, unitVec(r.dim, m)));
  QuotientSpace tm = tensorOverBase(r.dim, reg.right, r.dim, r.dim, r.mult);
  CoringComodule com = CoringComodule::make(
      coring, r.dim, r.mult, tm.projection * coactionAmbient);
  CHECK(checkCoringComodule(com).pass());

  // A wrong counit breaks the counit law with a witness.
  Coring broken = Coring::make(coring.bim, coring.comult, Matrix(r.dim, r.dim));
  Report rep = checkCoring(broken);
  CHECK(!rep.pass());
  const LawResult* l = rep.find("left-counit");
  REQUIRE(l != nullptr);
  CHECK(!l->pass);
}

TEST_CASE("Takeuchi subspace of the enveloping bialgebroid") {
  Bialgebroid b = reBialgebroid(diagonalPair());
  // Every Delta column lies in H x_R H and products stay inside.
  for (int i = 0; i < b.total().dim; ++i) {
    CHECK(b.takeuchi.contains(b.coring.comult.col(i)));
    for (int j = 0; j < b.total().dim; ++j)
      CHECK(b.takeuchi.contains(
          b.takeuchiProduct(b.coring.comult.col(i), b.coring.comult.col(j))));
  }
  CHECK(b.takeuchi.contains(b.unitTensor()));
}

TEST_CASE("pair products descend to the quotient") {
  Bialgebroid b = reBialgebroid(diagonalPair());
  const FinAlgebra& h = b.total();
  for (int i = 0; i < h.dim; ++i)
    for (int j = 0; j < h.dim; ++j) {
      Vec amb = pairProductAmbient(h, h, kronVec(unitVec(h.dim, i), h.unit),
                                   kronVec(h.unit, unitVec(h.dim, j)));
      Vec viaQuot = pairProductQuot(
          h, h, b.coring.tensorRR,
          b.coring.tensorRR.projection.apply(kronVec(unitVec(h.dim, i), h.unit)),
          b.coring.tensorRR.projection.apply(kronVec(h.unit, unitVec(h.dim, j))));
      CHECK(b.coring.tensorRR.projection.apply(amb) == viaQuot);
    }
}

TEST_CASE("algebra map checker") {
  FinAlgebra r = diagonalPair();
  // Diagonal embedding Q -> Q x Q.
  FinAlgebra k;
  k.dim = 1;
  k.mult = Matrix(1, 1);
  k.mult.at(0, 0) = Scalar(1);
  k.unit = {Scalar(1)};
  Matrix diag(2, 1);
  diag.at(0, 0) = diag.at(1, 0) = Scalar(1);
  CHECK(checkAlgebraMap({k, r, diag}).pass());
  Matrix notUnital(2, 1);
  notUnital.at(0, 0) = Scalar(1);
  CHECK(!checkAlgebraMap({k, r, notUnital}).pass());
}
