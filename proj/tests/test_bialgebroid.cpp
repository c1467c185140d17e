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

FinAlgebra upperTriangular2() {
  FinAlgebra a;
  a.dim = 3;
  a.basisNames = {"e11", "e12", "e22"};
  a.mult = Matrix(3, 9);
  a.mult.at(0, 0) = Scalar(1);
  a.mult.at(1, 1) = Scalar(1);
  a.mult.at(1, 5) = Scalar(1);
  a.mult.at(2, 8) = Scalar(1);
  a.unit = {Scalar(1), Scalar(0), Scalar(1)};
  return a;
}

}  // namespace

TEST_CASE("weak Hopf algebras induce bialgebroids") {
  for (const auto& inst : weakHopfCorpus()) {
    INFO(inst.name);
    BaseAlgebra base = extractBase(inst.hopf);
    Bialgebroid b = fromWeakHopf(inst.hopf, base);
    CHECK(checkBialgebroid(b).pass());

    // The corestricted structures are exactly can . Delta and Pi^L.
    CHECK(b.coring.comult ==
          b.coring.tensorRR.projection * inst.hopf.coa.comult);
    CHECK(b.coring.counit == base.coordsR * base.piL);

    // Source and target commute.
    for (int i = 0; i < base.dimR(); ++i)
      for (int j = 0; j < base.dimR(); ++j)
        CHECK(inst.hopf.alg.mul(b.re.source.col(i), b.re.target.col(j)) ==
              inst.hopf.alg.mul(b.re.target.col(j), b.re.source.col(i)));
  }
}

TEST_CASE("derived quotient dimensions") {
  WeakHopf p2 = groupoidAlgebra(pairGroupoid(2));
  Bialgebroid b2 = fromWeakHopf(p2, extractBase(p2));
  CHECK(b2.coring.tensorRR.quotDim == 8);

  WeakHopf p3 = groupoidAlgebra(pairGroupoid(3));
  Bialgebroid b3 = fromWeakHopf(p3, extractBase(p3));
  CHECK(b3.coring.tensorRR.quotDim == 27);
}

TEST_CASE("converse recovers the weak bialgebra") {
  for (const auto& inst : weakHopfCorpus()) {
    INFO(inst.name);
    BaseAlgebra base = extractBase(inst.hopf);
    Bialgebroid b = fromWeakHopf(inst.hopf, base);
    WeakBialgebra w = toWeakBialgebra(b, base.idempotentE, base.frobeniusPhi);
    CHECK(w.coa.comult == inst.hopf.coa.comult);
    CHECK(w.coa.counit == inst.hopf.coa.counit);
    CHECK(checkWeakBialgebra(w).pass());
  }
}

TEST_CASE("triangle action on the matrix-unit groupoid") {
  WeakHopf p2 = groupoidAlgebra(pairGroupoid(2));
  BaseAlgebra base = extractBase(p2);
  Bialgebroid b = fromWeakHopf(p2, base);
  // R has echelon basis {e11, e22}; e12 |> e22 = e11.
  REQUIRE(base.inclusion.col(0) == unitVec(4, 0));  // e11
  REQUIRE(base.inclusion.col(1) == unitVec(4, 3));  // e22
  Vec result = triangleAction(b, unitVec(4, 1) /* e12 */, unitVec(2, 1));
  CHECK(result == unitVec(2, 0));
  // e12 |> e11 = 0: the composite e12 e11 vanishes.
  CHECK(isZeroVec(triangleAction(b, unitVec(4, 1), unitVec(2, 0))));
}

TEST_CASE("enveloping bialgebroids and their triangle action") {
  for (const FinAlgebra& r : {diagonalPair(), upperTriangular2()}) {
    Bialgebroid b = reBialgebroid(r);
    CHECK(checkBialgebroid(b).pass());
    int dR = r.dim;
    // (r (x) rbar) |> a = r a rbar.
    for (int i = 0; i < dR; ++i)
      for (int j = 0; j < dR; ++j)
        for (int a = 0; a < dR; ++a) {
          Vec expected =
              r.mul(r.mul(unitVec(dR, i), unitVec(dR, a)), unitVec(dR, j));
          CHECK(triangleAction(b, unitVec(dR * dR, i * dR + j),
                               unitVec(dR, a)) == expected);
        }
  }
  CHECK(reBialgebroid(upperTriangular2()).total().dim == 9);
  CHECK(reBialgebroid(diagonalPair()).coring.tensorRR.quotDim == 8);
}

TEST_CASE("trivial module-coalgebra identity of the base") {
  // s_H(h_(1) |> r) h_(2) = h s_H(r) for all basis h, r.
  for (const auto& inst : weakHopfCorpus()) {
    INFO(inst.name);
    BaseAlgebra base = extractBase(inst.hopf);
    Bialgebroid b = fromWeakHopf(inst.hopf, base);
    int dH = b.total().dim, dR = base.dimR();
    for (int h = 0; h < dH; ++h) {
      Vec dh = b.coring.tensorRR.section.apply(b.coring.comult.col(h));
      for (int r = 0; r < dR; ++r) {
        Vec lhs = zeroVec(dH);
        for (int h1 = 0; h1 < dH; ++h1)
          for (int h2 = 0; h2 < dH; ++h2) {
            const Scalar& c = dh[h1 * dH + h2];
            if (c.isZero()) continue;
            Vec tri = triangleAction(b, unitVec(dH, h1), unitVec(dR, r));
            lhs = addVec(lhs, scaleVec(c, b.total().mul(
                                              b.re.source.apply(tri),
                                              unitVec(dH, h2))));
          }
        Vec rhs = b.total().mul(unitVec(dH, h), b.re.source.col(r));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("checker rejects a broken counit") {
  WeakHopf p2 = groupoidAlgebra(pairGroupoid(2));
  BaseAlgebra base = extractBase(p2);
  Bialgebroid b = fromWeakHopf(p2, base);
  Bialgebroid broken = b;
  broken.coring.counit.at(0, 1) += Scalar(1);
  Report rep = checkBialgebroid(broken);
  CHECK(!rep.pass());
}

TEST_CASE("r-ring checker") {
  FinAlgebra r = diagonalPair();
  Bialgebroid b = reBialgebroid(r);
  CHECK(checkRRing({r, b.total(), b.re.source}).pass());
  CHECK(checkReRing(b.re).pass());
  ReRing bad = b.re;
  bad.target = b.re.source * Matrix(r.dim, r.dim);  // zero map
  CHECK(!checkReRing(bad).pass());
}
