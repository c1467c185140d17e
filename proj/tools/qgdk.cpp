#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qgdk/json_io.hpp"

using namespace qgdk;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitParse = 2;

struct Options {
  std::string kind;
  std::vector<std::string> files;
  std::string out;
  std::string reportPath;
  std::string field = "Q";
  bool searchCertificate = false;
};

unsigned long parseField(const std::string& s) {
  Json probe = Json::object();
  probe["field"] = s;
  return parseFieldTag(probe);
}

void emitReport(const Options& opt, const std::vector<Report>& reports) {
  Json doc;
  if (reports.size() == 1) {
    doc = toJson(reports[0]);
  } else {
    doc = Json::array();
    for (const auto& r : reports) doc.push_back(toJson(r));
  }
  if (!opt.reportPath.empty())
    writeJsonFile(opt.reportPath, doc);
  else
    std::cout << doc.dump(2) << '\n';
}

int verdict(const std::vector<Report>& reports) {
  for (const auto& r : reports)
    if (!r.pass()) return kExitFail;
  return kExitPass;
}

Report verifyOne(const std::string& kind, const Json& doc) {
  std::string schema = schemaOf(doc);
  if (kind == "weak-hopf") return checkWeakHopf(weakHopfFromJson(doc));
  if (kind == "bialgebroid") return checkBialgebroid(bialgebroidFromJson(doc));
  if (kind == "coring") return checkCoring(coringFromJson(doc));
  if (kind == "module-coalgebra") {
    if (schema == "weak-module-coalgebra/1")
      return checkModuleCoalgebraW(moduleCoalgebraWFromJson(doc));
    return checkModuleCoalgebraB(moduleCoalgebraBFromJson(doc));
  }
  if (kind == "comodule-algebra") {
    if (schema == "weak-comodule-algebra/1")
      return checkComoduleAlgebraW(comoduleAlgebraWFromJson(doc));
    return checkComoduleAlgebraB(comoduleAlgebraBFromJson(doc));
  }
  if (kind == "dk-datum") {
    if (schema == "weak-dk-datum/1")
      return checkDKDatumW(dkDatumWFromJson(doc));
    return checkDKDatumB(dkDatumBFromJson(doc));
  }
  if (kind == "dk-module") return checkDKModule(dkModuleFromJson(doc));
  throw JsonError("unknown verify kind \"" + kind + "\"");
}

int runVerify(const Options& opt) {
  if (opt.files.empty()) throw JsonError("verify: no input files");
  std::vector<Report> reports;
  for (const auto& f : opt.files) {
    Report r = verifyOne(opt.kind, loadJsonFile(f));
    r.subject = f + ":" + r.subject;
    reports.push_back(std::move(r));
  }
  emitReport(opt, reports);
  return verdict(reports);
}

void writeOutput(const Options& opt, const Json& doc) {
  if (!opt.out.empty())
    writeJsonFile(opt.out, doc);
  else
    std::cout << doc.dump(2) << '\n';
}

Json matrixColsJson(const Matrix& m) {
  Json out = Json::array();
  for (int j = 0; j < m.cols(); ++j) {
    Json col = Json::array();
    for (int i = 0; i < m.rows(); ++i) col.push_back(m.at(i, j).str());
    out.push_back(std::move(col));
  }
  return out;
}

// Separability data for the base algebra of a bialgebroid, found by
// solving the (linear) idempotent conditions, then the Frobenius ones.
std::optional<std::pair<Vec, Matrix>> findSeparability(const FinAlgebra& r) {
  int d = r.dim;
  unsigned long p = r.prime();
  Matrix id = Matrix::identity(d, p);
  // Unknown e in R (x) R: mult(e) = 1 and (r_i (x) 1)e = e(1 (x) r_i).
  int rows = d + d * d * d;
  Matrix sys(rows, d * d, p);
  Vec rhs = zeroVec(rows, p);
  for (int i = 0; i < d; ++i) {
    for (int c = 0; c < d * d; ++c) sys.at(i, c) = r.mult.at(i, c);
    rhs[i] = r.unit[i];
  }
  for (int i = 0; i < d; ++i) {
    Matrix diff = Matrix::kron(r.leftMult(unitVec(d, i, p)), id) -
                  Matrix::kron(id, r.rightMult(unitVec(d, i, p)));
    for (int u = 0; u < d * d; ++u)
      for (int c = 0; c < d * d; ++c)
        sys.at(d + i * d * d + u, c) = diff.at(u, c);
  }
  auto e = solve(sys, rhs);
  if (!e) return std::nullopt;
  // Unknown phi (1 x d): phi(e1) e2 = 1 = e1 phi(e2).
  Matrix psys(2 * d, d, p);
  Vec prhs = zeroVec(2 * d, p);
  for (int u = 0; u < d; ++u)
    for (int v = 0; v < d; ++v) {
      const Scalar& c = (*e)[u * d + v];
      if (c.isZero()) continue;
      psys.at(v, u) += c;      // phi(e1) e2
      psys.at(d + u, v) += c;  // e1 phi(e2)
    }
  for (int i = 0; i < d; ++i) prhs[i] = prhs[d + i] = r.unit[i];
  auto phiV = solve(psys, prhs);
  if (!phiV) return std::nullopt;
  Matrix phi(1, d, p);
  for (int i = 0; i < d; ++i) phi.at(0, i) = (*phiV)[i];
  return std::make_pair(*e, phi);
}

int runBuild(const Options& opt) {
  if (opt.files.empty()) throw JsonError("build: no input file");
  Json in = loadJsonFile(opt.files[0]);
  if (opt.kind == "bialgebroid") {
    WeakHopf h = weakHopfFromJson(in);
    writeOutput(opt, toJson(fromWeakHopf(h, extractBase(h))));
    return kExitPass;
  }
  if (opt.kind == "weak-bialgebra") {
    Bialgebroid b = bialgebroidFromJson(in);
    auto sep = findSeparability(b.base());
    if (!sep) {
      std::cerr << "base algebra admits no separability/Frobenius pair\n";
      return kExitFail;
    }
    writeOutput(opt, toJson(toWeakBialgebra(b, sep->first, sep->second)));
    return kExitPass;
  }
  if (opt.kind == "dk-coring") {
    DKCoring dk = buildDKCoring(dkDatumBFromJson(in));
    writeOutput(opt, toJson(dk.coring));
    return kExitPass;
  }
  if (opt.kind == "weak-coring-iso") {
    DKDatumW w = dkDatumWFromJson(in);
    BaseAlgebra base = extractBase(w.h);
    Bialgebroid b = fromWeakHopf(w.h, base);
    WeakCoringIso iso = buildWeakCoringIso(w, translateDatum(w, b, base));
    Report rep = checkWeakCoringIso(iso);
    Json out = Json::object();
    out["schema"] = "weak-coring-iso/1";
    out["field"] = fieldTag(w.h.alg.prime());
    out["dim_tilde"] = iso.cTilde.dim();
    out["dim_quotient"] = iso.dk.tensorCA.quotDim;
    out["theta"] = matrixColsJson(iso.theta);
    out["theta_inv"] = matrixColsJson(iso.thetaTilde);
    out["tilde_coring"] = toJson(iso.tilde);
    writeOutput(opt, out);
    if (!opt.reportPath.empty()) writeJsonFile(opt.reportPath, toJson(rep));
    return rep.pass() ? kExitPass : kExitFail;
  }
  if (opt.kind == "translate-ca") {
    ComoduleAlgebraW a = comoduleAlgebraWFromJson(in);
    BaseAlgebra base = extractBase(a.h);
    writeOutput(opt, toJson(translateCA(a, fromWeakHopf(a.h, base))));
    return kExitPass;
  }
  if (opt.kind == "translate-mc") {
    ModuleCoalgebraW c = moduleCoalgebraWFromJson(in);
    BaseAlgebra base = extractBase(c.h);
    writeOutput(opt, toJson(translateMC(c, fromWeakHopf(c.h, base), base)));
    return kExitPass;
  }
  throw JsonError("unknown build kind \"" + opt.kind + "\"");
}

int runCheck(const Options& opt) {
  if (opt.files.empty()) throw JsonError("check: no input file");
  Json in = loadJsonFile(opt.files[0]);
  std::vector<Report> reports;

  if (opt.kind == "dk-iso") {
    DKCoring dk = buildDKCoring(dkDatumBFromJson(in));
    Report rep("dk-iso");
    // The regular comodule of the coring C (x)_R A.
    CoringComodule reg = CoringComodule::make(
        dk.coring, dk.coring.dim(), dk.coring.bim.left, dk.coring.comult);
    DKModule asDK = comoduleToDK(dk, reg);
    CoringComodule back = dkToComodule(dk, asDK);
    rep.check("regular-round-trip", back.coaction == reg.coaction);
    rep.merge(checkDKModule(asDK), "regular-image");
    if (opt.files.size() > 1) {
      DKModule m = dkModuleFromJson(loadJsonFile(opt.files[1]));
      CoringComodule co = dkToComodule(dk, m);
      DKModule round = comoduleToDK(dk, co);
      rep.check("module-round-trip", round.coaction == m.coaction &&
                                         round.aAction == m.aAction);
    }
    reports.push_back(std::move(rep));
  } else if (opt.kind == "induction-sep") {
    DKCoring dk = buildDKCoring(dkDatumBFromJson(in));
    if (opt.searchCertificate) {
      auto e = searchInductionCertificate(dk);
      Report rep("induction-sep");
      rep.check("certificate-exists", e.has_value());
      if (e) rep.merge(checkInductionSeparable(dk, *e), "certificate");
      reports.push_back(std::move(rep));
    } else {
      if (opt.files.size() < 2)
        throw JsonError("induction-sep: certificate file required "
                        "(or use --search-certificate)");
      Json cj = loadJsonFile(opt.files[1]);
      unsigned long p = parseFieldTag(cj);
      if (schemaOf(cj) != "induction-cert/1")
        throw JsonError("expected schema \"induction-cert/1\"");
      int dC = dk.d.c.dimC(), dA = dk.d.a.alg.dim;
      if (!cj.contains("e")) throw JsonError("missing key \"e\"");
      const Json& tab = cj.at("e");
      if (!tab.is_array() || int(tab.size()) != dC)
        throw JsonError("certificate shape");
      Vec amb = zeroVec(dC * dA, p);
      for (int c = 0; c < dC; ++c) {
        const Json& row = tab[c];
        if (!row.is_array() || int(row.size()) != dA)
          throw JsonError("certificate shape");
        for (int a = 0; a < dA; ++a)
          amb[c * dA + a] = Scalar::parse(row[a].get<std::string>(), p);
      }
      reports.push_back(
          checkInductionSeparable(dk, dk.tensorCA.projection.apply(amb)));
    }
  } else if (opt.kind == "forgetful-sep") {
    DKCoring dk = buildDKCoring(dkDatumBFromJson(in));
    if (opt.searchCertificate) {
      auto g = searchForgetfulCertificate(dk);
      Report rep("forgetful-sep");
      rep.check("certificate-exists", g.has_value());
      if (g) rep.merge(checkForgetfulSeparable(dk, *g), "certificate");
      reports.push_back(std::move(rep));
    } else {
      if (opt.files.size() < 2)
        throw JsonError("forgetful-sep: certificate file required "
                        "(or use --search-certificate)");
      Json cj = loadJsonFile(opt.files[1]);
      unsigned long p = parseFieldTag(cj);
      if (schemaOf(cj) != "forgetful-cert/1")
        throw JsonError("expected schema \"forgetful-cert/1\"");
      int dC = dk.d.c.dimC(), dA = dk.d.a.alg.dim;
      if (!cj.contains("gamma")) throw JsonError("missing key \"gamma\"");
      const Json& tab = cj.at("gamma");
      if (!tab.is_array() || int(tab.size()) != dC)
        throw JsonError("certificate shape");
      // gamma given on the ambient C (x) C, as gamma[c][c'] = vector in A.
      Matrix amb(dA, dC * dC, p);
      for (int c = 0; c < dC; ++c) {
        const Json& row = tab[c];
        if (!row.is_array() || int(row.size()) != dC)
          throw JsonError("certificate shape");
        for (int cp = 0; cp < dC; ++cp) {
          const Json& v = row[cp];
          if (!v.is_array() || int(v.size()) != dA)
            throw JsonError("certificate shape");
          for (int a = 0; a < dA; ++a)
            amb.at(a, c * dC + cp) = Scalar::parse(v[a].get<std::string>(), p);
        }
      }
      Matrix gamma = amb * dk.d.c.coalg.tensorRR.section;
      reports.push_back(checkForgetfulSeparable(dk, gamma));
    }
  } else {
    throw JsonError("unknown check kind \"" + opt.kind + "\"");
  }

  emitReport(opt, reports);
  return verdict(reports);
}

FinAlgebra presetAlgebra(const std::string& name, unsigned long p) {
  if (name == "Q") {
    FinAlgebra a;
    a.dim = 1;
    a.basisNames = {"1"};
    a.mult = Matrix(1, 1, p);
    a.mult.at(0, 0) = Scalar::one(p);
    a.unit = {Scalar::one(p)};
    return a;
  }
  if (name == "QxQ") {
    FinAlgebra a;
    a.dim = 2;
    a.basisNames = {"p1", "p2"};
    a.mult = Matrix(2, 4, p);
    a.mult.at(0, 0) = Scalar::one(p);
    a.mult.at(1, 3) = Scalar::one(p);
    a.unit = {Scalar::one(p), Scalar::one(p)};
    return a;
  }
  if (name == "ut2") {
    // Upper-triangular 2x2 matrices, basis e11, e12, e22.
    FinAlgebra a;
    a.dim = 3;
    a.basisNames = {"e11", "e12", "e22"};
    a.mult = Matrix(3, 9, p);
    a.mult.at(0, 0 * 3 + 0) = Scalar::one(p);  // e11 e11
    a.mult.at(1, 0 * 3 + 1) = Scalar::one(p);  // e11 e12
    a.mult.at(1, 1 * 3 + 2) = Scalar::one(p);  // e12 e22
    a.mult.at(2, 2 * 3 + 2) = Scalar::one(p);  // e22 e22
    a.unit = {Scalar::one(p), Scalar::zero(p), Scalar::one(p)};
    return a;
  }
  throw JsonError("unknown base algebra preset \"" + name + "\"");
}

int runCorpus(const Options& opt) {
  unsigned long p = parseField(opt.field);
  if (opt.kind == "group" || opt.kind == "pair-groupoid") {
    if (opt.files.empty()) throw JsonError("corpus: missing size argument");
    int n = 0;
    try {
      n = std::stoi(opt.files[0]);
    } catch (const std::exception&) {
      throw JsonError("corpus: size must be an integer");
    }
    if (n < 1 || n > 32) throw JsonError("corpus: size out of range");
    GroupoidPresentation g =
        opt.kind == "group" ? cyclicGroup(n) : pairGroupoid(n);
    writeOutput(opt, toJson(groupoidAlgebra(g, p)));
    return kExitPass;
  }
  if (opt.kind == "re") {
    if (opt.files.empty()) throw JsonError("corpus re: missing base algebra");
    FinAlgebra r;
    const std::string& arg = opt.files[0];
    if (arg == "Q" || arg == "QxQ" || arg == "ut2")
      r = presetAlgebra(arg, p);
    else
      r = algebraFromJson(loadJsonFile(arg));
    writeOutput(opt, toJson(reBialgebroid(r)));
    return kExitPass;
  }
  throw JsonError("unknown corpus kind \"" + opt.kind + "\"");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification toolkit for weak Hopf algebras, "
               "bialgebroids and Doi-Koppinen data"};
  app.require_subcommand(1);

  Options opt;
  auto addCommon = [&](CLI::App* sub, const char* kindDesc,
                       const char* filesDesc) {
    sub->add_option("kind", opt.kind, kindDesc)->required();
    sub->add_option("args", opt.files, filesDesc);
    sub->add_option("-o,--out", opt.out, "output file (default: stdout)");
    sub->add_option("--report", opt.reportPath, "write the report JSON here");
    sub->add_option("--field", opt.field, "scalar field: Q or Fp:<p>");
    sub->add_flag("--search-certificate", opt.searchCertificate,
                  "solve the linear certificate conditions instead of "
                  "reading a certificate file");
  };

  CLI::App* verify = app.add_subcommand("verify", "run a law checker");
  addCommon(verify,
            "weak-hopf|bialgebroid|coring|module-coalgebra|"
            "comodule-algebra|dk-datum|dk-module",
            "input files");
  CLI::App* build = app.add_subcommand("build", "construct derived structures");
  addCommon(build,
            "bialgebroid|weak-bialgebra|dk-coring|weak-coring-iso|"
            "translate-ca|translate-mc",
            "input files");
  CLI::App* check = app.add_subcommand("check", "category-level checks");
  addCommon(check, "dk-iso|induction-sep|forgetful-sep", "input files");
  CLI::App* corpus = app.add_subcommand("corpus", "generate example instances");
  addCommon(corpus, "group|pair-groupoid|re", "size or base algebra");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitParse;
  }

  try {
    if (verify->parsed()) return runVerify(opt);
    if (build->parsed()) return runBuild(opt);
    if (check->parsed()) return runCheck(opt);
    if (corpus->parsed()) return runCorpus(opt);
  } catch (const JsonError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitParse;
}
