#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "qgdk/json_io.hpp"

#ifndef QGDK_CLI_PATH
#error "QGDK_CLI_PATH must point at the built command line binary"
#endif

using namespace qgdk;
namespace fs = std::filesystem;

namespace {

const fs::path& workDir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "qgdk-cli-tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string p(const std::string& name) { return (workDir() / name).string(); }

int run(const std::string& args) {
  std::string cmd = std::string(QGDK_CLI_PATH) + " " + args + " >" +
                    p("stdout.txt") + " 2>" + p("stderr.txt");
  int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  return WEXITSTATUS(rc);
}

void writeDoc(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  out << doc.dump(2) << '\n';
}

}  // namespace

TEST_CASE("corpus generation feeds the verifier") {
  CHECK(run("corpus group 2 -o " + p("z2.json")) == 0);
  CHECK(run("verify weak-hopf " + p("z2.json")) == 0);

  CHECK(run("corpus pair-groupoid 2 -o " + p("p2.json")) == 0);
  CHECK(run("verify weak-hopf " + p("p2.json")) == 0);

  CHECK(run("corpus re QxQ -o " + p("re.json")) == 0);
  CHECK(run("verify bialgebroid " + p("re.json")) == 0);

  CHECK(run("corpus group 2 --field Fp:5 -o " + p("z2p5.json")) == 0);
  CHECK(run("verify weak-hopf " + p("z2p5.json")) == 0);
  CHECK(weakHopfFromJson(loadJsonFile(p("z2p5.json"))).alg.prime() == 5);

  CHECK(run("corpus group 0") == 2);
  CHECK(run("corpus group 2 --field Zp:5") == 2);
}

TEST_CASE("build pipeline: weak hopf to bialgebroid and back") {
  REQUIRE(run("corpus pair-groupoid 2 -o " + p("p2.json")) == 0);
  CHECK(run("build bialgebroid " + p("p2.json") + " -o " + p("b.json")) == 0);
  CHECK(run("verify bialgebroid " + p("b.json")) == 0);

  CHECK(run("build weak-bialgebra " + p("b.json") + " -o " + p("wb.json")) ==
        0);
  WeakBialgebra wb = weakBialgebraFromJson(loadJsonFile(p("wb.json")));
  WeakHopf orig = weakHopfFromJson(loadJsonFile(p("p2.json")));
  CHECK(wb.coa.comult == orig.coa.comult);
  CHECK(wb.coa.counit == orig.coa.counit);
}

TEST_CASE("failing verification reports a witness and exits 1") {
  REQUIRE(run("corpus pair-groupoid 2 -o " + p("p2.json")) == 0);
  Json doc = loadJsonFile(p("p2.json"));
  doc["mult"][0][1][0] = "1";  // e11 e12 gains a spurious e11 term
  writeDoc(p("broken.json"), doc);

  CHECK(run("verify weak-hopf " + p("broken.json") + " --report " +
            p("rep.json")) == 1);
  Json rep = loadJsonFile(p("rep.json"));
  CHECK(rep.at("verdict") == "fail");
  bool sawWitness = false;
  for (const auto& law : rep.at("laws"))
    if (law.at("status") == "fail" && law.contains("witness"))
      sawWitness = true;
  CHECK(sawWitness);
}

TEST_CASE("malformed input exits 2") {
  {
    std::ofstream out(p("garbage.json"));
    out << "{ not json";
  }
  CHECK(run("verify weak-hopf " + p("garbage.json")) == 2);

  REQUIRE(run("corpus group 2 -o " + p("z2.json")) == 0);
  CHECK(run("verify bialgebroid " + p("z2.json")) == 2);  // wrong schema
  CHECK(run("verify no-such-kind " + p("z2.json")) == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("verify weak-hopf " + p("does-not-exist.json")) == 2);
}

TEST_CASE("dk datum flows") {
  WeakHopf h = groupoidAlgebra(pairGroupoid(2));
  Bialgebroid b = fromWeakHopf(h, extractBase(h));
  auto data = canonicalDKData(b);
  writeDoc(p("hh.json"), toJson(data[0]));
  writeDoc(p("rr.json"), toJson(data[3]));

  CHECK(run("verify dk-datum " + p("hh.json")) == 0);
  CHECK(run("build dk-coring " + p("hh.json") + " -o " + p("coring.json")) ==
        0);
  CHECK(run("verify coring " + p("coring.json")) == 0);

  // Category dictionary round trip, with an explicit module file.
  DKModule m = DKModule::make(data[0], h.alg.dim, h.alg.mult, b.coring.comult);
  writeDoc(p("mod.json"), toJson(m));
  CHECK(run("verify dk-module " + p("mod.json")) == 0);
  CHECK(run("check dk-iso " + p("hh.json") + " " + p("mod.json")) == 0);

  // Separability of the trivial datum, by search and by certificate file.
  CHECK(run("check induction-sep " + p("rr.json") + " --search-certificate") ==
        0);
  CHECK(run("check forgetful-sep " + p("rr.json") + " --search-certificate") ==
        0);

  Json ecert = Json::object();
  ecert["schema"] = "induction-cert/1";
  ecert["field"] = "Q";
  ecert["e"] = Json::array({Json::array({"1", "1"}), Json::array({"1", "1"})});
  writeDoc(p("ecert.json"), ecert);
  CHECK(run("check induction-sep " + p("rr.json") + " " + p("ecert.json")) ==
        0);

  Json gcert = Json::object();
  gcert["schema"] = "forgetful-cert/1";
  gcert["field"] = "Q";
  gcert["gamma"] =
      Json::array({Json::array({Json::array({"1", "0"}), Json::array({"0", "0"})}),
                   Json::array({Json::array({"0", "0"}), Json::array({"0", "1"})})});
  writeDoc(p("gcert.json"), gcert);
  CHECK(run("check forgetful-sep " + p("rr.json") + " " + p("gcert.json")) ==
        0);

  // A wrong certificate is a fail verdict (exit 1), not a parse error.
  Json badCert = ecert;
  badCert["e"] = Json::array({Json::array({"1", "0"}), Json::array({"0", "0"})});
  writeDoc(p("bad-ecert.json"), badCert);
  CHECK(run("check induction-sep " + p("rr.json") + " " + p("bad-ecert.json")) ==
        1);
}

TEST_CASE("weak datum flows") {
  WeakHopf h = groupoidAlgebra(pairGroupoid(2));
  DKDatumW w = weakRegularDatum(h);
  writeDoc(p("weak.json"), toJson(w));
  CHECK(run("verify dk-datum " + p("weak.json")) == 0);

  CHECK(run("build weak-coring-iso " + p("weak.json") + " -o " +
            p("iso.json")) == 0);
  Json iso = loadJsonFile(p("iso.json"));
  CHECK(iso.at("schema") == "weak-coring-iso/1");
  CHECK(iso.at("dim_tilde") == 8);
  CHECK(iso.at("dim_quotient") == 8);

  writeDoc(p("ca.json"), toJson(w.a));
  CHECK(run("build translate-ca " + p("ca.json") + " -o " + p("ca-b.json")) ==
        0);
  CHECK(run("verify comodule-algebra " + p("ca-b.json")) == 0);

  writeDoc(p("mc.json"), toJson(w.c));
  CHECK(run("build translate-mc " + p("mc.json") + " -o " + p("mc-b.json")) ==
        0);
  CHECK(run("verify module-coalgebra " + p("mc-b.json")) == 0);
}
