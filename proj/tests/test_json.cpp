#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgdk/json_io.hpp"

using namespace qgdk;

namespace {

Bialgebroid p2Bialgebroid() {
  WeakHopf h = groupoidAlgebra(pairGroupoid(2));
  return fromWeakHopf(h, extractBase(h));
}

}  // namespace

TEST_CASE("weak hopf round trip is byte-stable") {
  for (const auto& inst : weakHopfCorpus()) {
    INFO(inst.name);
    Json doc = toJson(inst.hopf);
    CHECK(schemaOf(doc) == "weak-hopf/1");
    WeakHopf back = weakHopfFromJson(doc);
    CHECK(back.alg.mult == inst.hopf.alg.mult);
    CHECK(back.coa.comult == inst.hopf.coa.comult);
    CHECK(back.antipode == inst.hopf.antipode);
    CHECK(toJson(back).dump() == doc.dump());
  }
}

TEST_CASE("prime field tags survive the round trip") {
  WeakHopf hp = groupoidAlgebra(pairGroupoid(2), 7);
  Json doc = toJson(hp);
  CHECK(doc.at("field") == "Fp:7");
  WeakHopf back = weakHopfFromJson(doc);
  CHECK(back.alg.prime() == 7);
  CHECK(toJson(back).dump() == doc.dump());
}

TEST_CASE("bialgebroid and datum round trips") {
  Bialgebroid b = p2Bialgebroid();
  Json doc = toJson(b);
  Bialgebroid back = bialgebroidFromJson(doc);
  CHECK(back.coring.comult == b.coring.comult);
  CHECK(back.re.source == b.re.source);
  CHECK(back.re.target == b.re.target);
  CHECK(toJson(back).dump() == doc.dump());

  for (const auto& d : canonicalDKData(b)) {
    Json dd = toJson(d);
    DKDatumB dBack = dkDatumBFromJson(dd);
    CHECK(dBack.a.coaction() == d.a.coaction());
    CHECK(dBack.c.coalg.comult == d.c.coalg.comult);
    CHECK(toJson(dBack).dump() == dd.dump());

    // The regular module M = H only exists for the (H, H) datum.
    int dH = d.b.total().dim;
    if (d.a.alg.dim != dH || d.c.dimC() != dH) continue;
    DKModule m = DKModule::make(d, dH, d.b.total().mult, d.b.coring.comult);
    Json md = toJson(m);
    DKModule mBack = dkModuleFromJson(md);
    CHECK(mBack.coaction == m.coaction);
    CHECK(toJson(mBack).dump() == md.dump());
  }
}

TEST_CASE("weak flavour round trips") {
  WeakHopf p2 = groupoidAlgebra(pairGroupoid(2));
  DKDatumW w = weakRegularDatum(p2);
  Json doc = toJson(w);
  CHECK(schemaOf(doc) == "weak-dk-datum/1");
  DKDatumW back = dkDatumWFromJson(doc);
  CHECK(back.a.coaction == w.a.coaction);
  CHECK(back.c.hAction == w.c.hAction);
  CHECK(toJson(back).dump() == doc.dump());
}

TEST_CASE("coring round trip rebuilds the quotient deterministically") {
  Bialgebroid b = p2Bialgebroid();
  Json doc = toJson(b.coring);
  Coring back = coringFromJson(doc);
  CHECK(back.tensorRR.quotDim == b.coring.tensorRR.quotDim);
  CHECK(back.tensorRR.projection == b.coring.tensorRR.projection);
  CHECK(back.comult == b.coring.comult);
  CHECK(toJson(back).dump() == doc.dump());
}

TEST_CASE("malformed documents raise JsonError") {
  Bialgebroid b = p2Bialgebroid();
  Json good = toJson(b);

  Json missing = good;
  missing.erase("counit");
  CHECK_THROWS_AS(bialgebroidFromJson(missing), JsonError);

  Json badScalar = good;
  badScalar["counit"][0][0] = "not-a-number";
  CHECK_THROWS_AS(bialgebroidFromJson(badScalar), JsonError);

  Json wrongSchema = good;
  wrongSchema["schema"] = "weak-hopf/1";
  CHECK_THROWS_AS(bialgebroidFromJson(wrongSchema), JsonError);

  Json badField = good;
  badField["field"] = "Zp:5";
  CHECK_THROWS_AS(bialgebroidFromJson(badField), JsonError);

  CHECK_THROWS_AS(algebraFromJson(Json::array()), JsonError);
}

TEST_CASE("reports serialize deterministically with witnesses") {
  WeakHopf broken = groupoidAlgebra(pairGroupoid(2));
  broken.alg.mult.at(0, 1) += Scalar(1);
  Report rep = checkWeakHopf(broken);
  REQUIRE(!rep.pass());
  Json doc = toJson(rep);
  CHECK(doc.at("schema") == "report/1");
  CHECK(doc.at("verdict") == "fail");
  bool sawWitness = false;
  for (const auto& law : doc.at("laws"))
    if (law.at("status") == "fail" && law.contains("witness")) sawWitness = true;
  CHECK(sawWitness);
  CHECK(toJson(rep).dump() == doc.dump());
}

TEST_CASE("scalars are written in canonical lowest terms") {
  FinAlgebra a;
  a.dim = 1;
  a.mult = Matrix(1, 1);
  a.mult.at(0, 0) = Scalar(4, 6);
  a.unit = {Scalar(3, 2)};
  Json doc = toJson(a);
  CHECK(doc.at("mult")[0][0][0] == "2/3");
  CHECK(doc.at("unit")[0] == "3/2");
}
