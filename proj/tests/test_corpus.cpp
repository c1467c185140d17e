#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "qgdk/corpus.hpp"

using namespace qgdk;

TEST_CASE("presentations validate and broken tables throw") {
  for (int n = 1; n <= 5; ++n) {
    cyclicGroup(n).validate();
    pairGroupoid(n).validate();
    discreteGroupoid(n).validate();
  }

  GroupoidPresentation bad = pairGroupoid(2);
  bad.inverseOf[1] = 1;  // e12 is not its own inverse
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  GroupoidPresentation noId = cyclicGroup(3);
  noId.identityAt[0] = 1;
  CHECK_THROWS_AS(noId.validate(), std::invalid_argument);

  GroupoidPresentation nonAssoc = pairGroupoid(2);
  nonAssoc.compose[0][0] = 1;  // e11 e11 = e12 breaks associativity
  CHECK_THROWS_AS(nonAssoc.validate(), std::invalid_argument);
}

TEST_CASE("shape of the standard families") {
  CHECK(cyclicGroup(4).size() == 4);
  CHECK(cyclicGroup(4).objects == 1);
  CHECK(pairGroupoid(3).size() == 9);
  CHECK(pairGroupoid(3).objects == 3);
  CHECK(discreteGroupoid(2).size() == 2);
  // In the pair groupoid every composite of composable arrows exists.
  GroupoidPresentation p = pairGroupoid(3);
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j)
      CHECK((p.compose[i][j] >= 0) ==
            (p.arrows[i].target == p.arrows[j].source));
}

TEST_CASE("groupoid algebras are weak Hopf with involutive antipode") {
  for (const auto& inst : weakHopfCorpus()) {
    INFO(inst.name);
    const WeakHopf& h = inst.hopf;
    CHECK(h.antipode * h.antipode == Matrix::identity(h.alg.dim));
    CHECK(h.antipodeInv == h.antipode);
    // Basis vectors are group-like with counit one.
    for (int i = 0; i < h.alg.dim; ++i) {
      CHECK(h.coa.comult.col(i) ==
            kronVec(unitVec(h.alg.dim, i), unitVec(h.alg.dim, i)));
      CHECK(h.coa.counit.at(0, i) == Scalar(1));
    }
  }
  // Over F_5 the same tables still pass.
  WeakHopf hp = groupoidAlgebra(pairGroupoid(2), 5);
  CHECK(hp.alg.prime() == 5);
  CHECK(checkWeakHopf(hp).pass());
}

TEST_CASE("corpus coverage") {
  auto corpus = weakHopfCorpus();
  CHECK(corpus.size() == 8);
  bool sawP3 = false;
  for (const auto& inst : corpus) {
    CHECK(!inst.name.empty());
    if (inst.name == "P3") {
      sawP3 = true;
      CHECK(inst.hopf.alg.dim == 9);
    }
  }
  CHECK(sawP3);
}

TEST_CASE("canonical dk data counts and flavours") {
  WeakHopf p2 = groupoidAlgebra(pairGroupoid(2));
  Bialgebroid b = fromWeakHopf(p2, extractBase(p2));
  auto data = canonicalDKData(b);
  REQUIRE(data.size() == 4);
  CHECK(data[0].a.alg.dim == 4);  // (H, H)
  CHECK(data[0].c.dimC() == 4);
  CHECK(data[1].c.dimC() == 2);  // (H, R)
  CHECK(data[2].a.alg.dim == 2);  // (R, H)
  CHECK(data[3].a.alg.dim == 2);  // (R, R)
  CHECK(data[3].c.dimC() == 2);

  FinAlgebra qq;
  qq.dim = 2;
  qq.mult = Matrix(2, 4);
  qq.mult.at(0, 0) = Scalar(1);
  qq.mult.at(1, 3) = Scalar(1);
  qq.unit = {Scalar(1), Scalar(1)};
  auto re = canonicalDKData(reBialgebroid(qq), true);
  CHECK(re.size() == 5);
  for (const auto& d : re) CHECK(checkDKDatumB(d).pass());
}

TEST_CASE("regular weak datum structure") {
  WeakHopf z3 = groupoidAlgebra(cyclicGroup(3));
  DKDatumW d = weakRegularDatum(z3);
  CHECK(d.a.coaction == z3.coa.comult);
  CHECK(d.c.hAction == z3.alg.mult);
  CHECK(d.c.coa.comult == z3.coa.comult);
}

TEST_CASE("enveloping bialgebroid of a noncommutative base") {
  FinAlgebra m2 = groupoidAlgebra(pairGroupoid(2)).alg;
  Bialgebroid b = reBialgebroid(m2);
  CHECK(b.total().dim == 16);
  // The full coring-law check cubes dim H, so verify the cheap parts:
  // the R^e-ring axioms, the quotient dimension, and the Takeuchi
  // membership of the coproduct.
  CHECK(checkReRing(b.re).pass());
  CHECK(b.coring.tensorRR.quotDim == 64);
  for (int i = 0; i < b.total().dim; ++i)
    CHECK(b.takeuchi.contains(b.coring.comult.col(i)));
}
