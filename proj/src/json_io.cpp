#include "qgdk/json_io.hpp"

#include <fstream>

namespace qgdk {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw JsonError(msg);
}

const Json& key(const Json& doc, const char* k) {
  require(doc.is_object() && doc.contains(k),
          std::string("missing key \"") + k + "\"");
  return doc.at(k);
}

int intKey(const Json& doc, const char* k) {
  const Json& v = key(doc, k);
  require(v.is_number_integer(), std::string("key \"") + k + "\" not integer");
  return v.get<int>();
}

Scalar scalarFromJ(const Json& j, unsigned long p) {
  require(j.is_string(), "scalar entries must be strings");
  try {
    return Scalar::parse(j.get<std::string>(), p);
  } catch (const std::exception& e) {
    throw JsonError(std::string("bad scalar: ") + e.what());
  }
}

Json vecJ(const Vec& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

Vec vecFromJ(const Json& j, int n, unsigned long p) {
  require(j.is_array() && int(j.size()) == n, "vector length mismatch");
  Vec v = zeroVec(n, p);
  for (int i = 0; i < n; ++i) v[i] = scalarFromJ(j[i], p);
  return v;
}

// Array over columns.
Json colsJ(const Matrix& m) {
  Json out = Json::array();
  for (int j = 0; j < m.cols(); ++j) out.push_back(vecJ(m.col(j)));
  return out;
}

Matrix colsFromJ(const Json& j, int rows, int cols, unsigned long p) {
  require(j.is_array() && int(j.size()) == cols, "column count mismatch");
  Matrix m(rows, cols, p);
  for (int c = 0; c < cols; ++c) m.setCol(c, vecFromJ(j[c], rows, p));
  return m;
}

// Array over columns, each column a d1 x d2 table of tensor coefficients.
Json tensorColsJ(const Matrix& m, int d1, int d2) {
  Json out = Json::array();
  for (int j = 0; j < m.cols(); ++j) {
    Vec v = m.col(j);
    Json tab = Json::array();
    for (int u = 0; u < d1; ++u) {
      Json row = Json::array();
      for (int w = 0; w < d2; ++w) row.push_back(v[u * d2 + w].str());
      tab.push_back(std::move(row));
    }
    out.push_back(std::move(tab));
  }
  return out;
}

Matrix tensorColsFromJ(const Json& j, int d1, int d2, int cols,
                       unsigned long p) {
  require(j.is_array() && int(j.size()) == cols, "column count mismatch");
  Matrix m(d1 * d2, cols, p);
  for (int c = 0; c < cols; ++c) {
    const Json& tab = j[c];
    require(tab.is_array() && int(tab.size()) == d1, "tensor table shape");
    Vec v = zeroVec(d1 * d2, p);
    for (int u = 0; u < d1; ++u) {
      const Json& row = tab[u];
      require(row.is_array() && int(row.size()) == d2, "tensor table shape");
      for (int w = 0; w < d2; ++w) v[u * d2 + w] = scalarFromJ(row[w], p);
    }
    m.setCol(c, v);
  }
  return m;
}

// Columns indexed (i, j) -> i * n2 + j, exposed as table[i][j] = vector.
Json pairTableJ(const Matrix& m, int n1, int n2) {
  Json out = Json::array();
  for (int i = 0; i < n1; ++i) {
    Json row = Json::array();
    for (int j = 0; j < n2; ++j) row.push_back(vecJ(m.col(i * n2 + j)));
    out.push_back(std::move(row));
  }
  return out;
}

Matrix pairTableFromJ(const Json& j, int rows, int n1, int n2,
                      unsigned long p) {
  require(j.is_array() && int(j.size()) == n1, "table height mismatch");
  Matrix m(rows, n1 * n2, p);
  for (int i = 0; i < n1; ++i) {
    const Json& row = j[i];
    require(row.is_array() && int(row.size()) == n2, "table width mismatch");
    for (int c = 0; c < n2; ++c)
      m.setCol(i * n2 + c, vecFromJ(row[c], rows, p));
  }
  return m;
}

Json algebraCoreJ(const FinAlgebra& a) {
  Json out = Json::object();
  out["dim"] = a.dim;
  Json names = Json::array();
  for (int i = 0; i < a.dim; ++i) names.push_back(a.name(i));
  out["basis"] = std::move(names);
  out["mult"] = pairTableJ(a.mult, a.dim, a.dim);
  out["unit"] = vecJ(a.unit);
  return out;
}

FinAlgebra algebraCoreFromJ(const Json& j, unsigned long p) {
  FinAlgebra a;
  a.dim = intKey(j, "dim");
  require(a.dim >= 1, "dim must be positive");
  const Json& names = key(j, "basis");
  require(names.is_array() && int(names.size()) == a.dim, "basis names");
  for (const auto& n : names) a.basisNames.push_back(n.get<std::string>());
  a.mult = pairTableFromJ(key(j, "mult"), a.dim, a.dim, a.dim, p);
  a.unit = vecFromJ(key(j, "unit"), a.dim, p);
  return a;
}

Json weakBialgebraCoreJ(const WeakBialgebra& h) {
  Json out = algebraCoreJ(h.alg);
  out["comult"] = tensorColsJ(h.coa.comult, h.coa.dim, h.coa.dim);
  out["counit"] = vecJ(h.coa.counit.row(0));
  return out;
}

WeakBialgebra weakBialgebraCoreFromJ(const Json& j, unsigned long p) {
  WeakBialgebra h;
  h.alg = algebraCoreFromJ(j, p);
  int d = h.alg.dim;
  h.coa.dim = d;
  h.coa.comult = tensorColsFromJ(key(j, "comult"), d, d, d, p);
  h.coa.counit = Matrix(1, d, p);
  Vec cu = vecFromJ(key(j, "counit"), d, p);
  for (int i = 0; i < d; ++i) h.coa.counit.at(0, i) = cu[i];
  return h;
}

Json weakHopfCoreJ(const WeakHopf& h) {
  Json out = weakBialgebraCoreJ(h.bialgebra());
  out["antipode"] = colsJ(h.antipode);
  out["antipode_inv"] = colsJ(h.antipodeInv);
  return out;
}

WeakHopf weakHopfCoreFromJ(const Json& j, unsigned long p) {
  WeakBialgebra wb = weakBialgebraCoreFromJ(j, p);
  int d = wb.alg.dim;
  WeakHopf h;
  h.alg = std::move(wb.alg);
  h.coa = std::move(wb.coa);
  h.antipode = colsFromJ(key(j, "antipode"), d, d, p);
  h.antipodeInv = colsFromJ(key(j, "antipode_inv"), d, d, p);
  return h;
}

Json bialgebroidCoreJ(const Bialgebroid& b) {
  Json out = Json::object();
  out["base"] = algebraCoreJ(b.base());
  out["total"] = algebraCoreJ(b.total());
  out["source"] = colsJ(b.re.source);
  out["target"] = colsJ(b.re.target);
  int dH = b.total().dim;
  out["comult"] =
      tensorColsJ(b.coring.tensorRR.section * b.coring.comult, dH, dH);
  out["counit"] = colsJ(b.coring.counit);
  return out;
}

Bialgebroid bialgebroidCoreFromJ(const Json& j, unsigned long p) {
  ReRing re;
  re.base = algebraCoreFromJ(key(j, "base"), p);
  re.total = algebraCoreFromJ(key(j, "total"), p);
  int dR = re.base.dim, dH = re.total.dim;
  re.source = colsFromJ(key(j, "source"), dH, dR, p);
  re.target = colsFromJ(key(j, "target"), dH, dR, p);
  Matrix comultAmbient = tensorColsFromJ(key(j, "comult"), dH, dH, dH, p);
  Matrix counit = colsFromJ(key(j, "counit"), dR, dH, p);
  RBimodule bim = re.coringBimodule();
  QuotientSpace t = tensorOverBase(dH, bim.right, dR, dH, bim.left);
  return makeBialgebroid(std::move(re), t.projection * comultAmbient,
                         std::move(counit));
}

Json coringCoreJ(const Coring& c) {
  Json out = Json::object();
  out["base"] = algebraCoreJ(c.base);
  out["dim"] = c.dim();
  int dR = c.base.dim, dC = c.dim();
  out["left"] = pairTableJ(c.bim.left, dR, dC);
  out["right"] = pairTableJ(c.bim.right, dC, dR);
  out["comult"] = tensorColsJ(c.tensorRR.section * c.comult, dC, dC);
  out["counit"] = colsJ(c.counit);
  return out;
}

Coring coringCoreFromJ(const Json& j, unsigned long p) {
  RBimodule bim;
  bim.base = algebraCoreFromJ(key(j, "base"), p);
  bim.dim = intKey(j, "dim");
  int dR = bim.base.dim, dC = bim.dim;
  require(dC >= 1, "dim must be positive");
  bim.left = pairTableFromJ(key(j, "left"), dC, dR, dC, p);
  bim.right = pairTableFromJ(key(j, "right"), dC, dC, dR, p);
  Matrix comultAmbient = tensorColsFromJ(key(j, "comult"), dC, dC, dC, p);
  Matrix counit = colsFromJ(key(j, "counit"), dR, dC, p);
  QuotientSpace t = tensorOverBase(dC, bim.right, dR, dC, bim.left);
  return Coring::make(std::move(bim), t.projection * comultAmbient,
                      std::move(counit));
}

Json moduleCoalgebraCoreJ(const ModuleCoalgebraB& m) {
  Json out = Json::object();
  int dH = m.b.total().dim, dC = m.dimC();
  out["dim"] = dC;
  out["action"] = pairTableJ(m.hAction, dH, dC);
  out["comult"] =
      tensorColsJ(m.coalg.tensorRR.section * m.coalg.comult, dC, dC);
  out["counit"] = colsJ(m.coalg.counit);
  return out;
}

ModuleCoalgebraB moduleCoalgebraCoreFromJ(const Json& j, Bialgebroid b,
                                          unsigned long p) {
  int dH = b.total().dim, dR = b.base().dim;
  int dC = intKey(j, "dim");
  require(dC >= 1, "dim must be positive");
  Matrix action = pairTableFromJ(key(j, "action"), dC, dH, dC, p);
  Matrix comultAmbient = tensorColsFromJ(key(j, "comult"), dC, dC, dC, p);
  Matrix counit = colsFromJ(key(j, "counit"), dR, dC, p);
  return ModuleCoalgebraB::makeFromAmbient(std::move(b), dC, std::move(action),
                                           std::move(comultAmbient),
                                           std::move(counit));
}

Json comoduleAlgebraCoreJ(const ComoduleAlgebraB& a) {
  Json out = Json::object();
  int dH = a.b.total().dim, dA = a.alg.dim;
  out["algebra"] = algebraCoreJ(a.alg);
  out["s_map"] = colsJ(a.sA);
  out["coaction"] =
      tensorColsJ(a.comod.tensorCM.section * a.coaction(), dH, dA);
  return out;
}

ComoduleAlgebraB comoduleAlgebraCoreFromJ(const Json& j, Bialgebroid b,
                                          unsigned long p) {
  FinAlgebra alg = algebraCoreFromJ(key(j, "algebra"), p);
  int dH = b.total().dim, dR = b.base().dim, dA = alg.dim;
  Matrix sA = colsFromJ(key(j, "s_map"), dA, dR, p);
  Matrix coactionAmbient = tensorColsFromJ(key(j, "coaction"), dH, dA, dA, p);
  return ComoduleAlgebraB::makeFromAmbient(std::move(b), std::move(alg),
                                           std::move(sA),
                                           std::move(coactionAmbient));
}

Json dkDatumCoreJ(const DKDatumB& d) {
  Json out = Json::object();
  out["bialgebroid"] = bialgebroidCoreJ(d.b);
  out["comodule_algebra"] = comoduleAlgebraCoreJ(d.a);
  out["module_coalgebra"] = moduleCoalgebraCoreJ(d.c);
  return out;
}

DKDatumB dkDatumCoreFromJ(const Json& j, unsigned long p) {
  Bialgebroid b = bialgebroidCoreFromJ(key(j, "bialgebroid"), p);
  ComoduleAlgebraB a =
      comoduleAlgebraCoreFromJ(key(j, "comodule_algebra"), b, p);
  ModuleCoalgebraB c = moduleCoalgebraCoreFromJ(key(j, "module_coalgebra"), b, p);
  return {std::move(b), std::move(a), std::move(c)};
}

Json weakComoduleAlgebraCoreJ(const ComoduleAlgebraW& a) {
  Json out = Json::object();
  out["algebra"] = algebraCoreJ(a.alg);
  out["coaction"] = tensorColsJ(a.coaction, a.h.alg.dim, a.alg.dim);
  return out;
}

ComoduleAlgebraW weakComoduleAlgebraCoreFromJ(const Json& j, WeakHopf h,
                                              unsigned long p) {
  ComoduleAlgebraW a;
  a.alg = algebraCoreFromJ(key(j, "algebra"), p);
  a.coaction =
      tensorColsFromJ(key(j, "coaction"), h.alg.dim, a.alg.dim, a.alg.dim, p);
  a.h = std::move(h);
  return a;
}

Json weakModuleCoalgebraCoreJ(const ModuleCoalgebraW& m) {
  Json out = Json::object();
  int dC = m.coa.dim;
  out["dim"] = dC;
  out["action"] = pairTableJ(m.hAction, m.h.alg.dim, dC);
  out["comult"] = tensorColsJ(m.coa.comult, dC, dC);
  out["counit"] = vecJ(m.coa.counit.row(0));
  return out;
}

ModuleCoalgebraW weakModuleCoalgebraCoreFromJ(const Json& j, WeakHopf h,
                                              unsigned long p) {
  ModuleCoalgebraW m;
  int dC = intKey(j, "dim");
  require(dC >= 1, "dim must be positive");
  m.coa.dim = dC;
  m.hAction = pairTableFromJ(key(j, "action"), dC, h.alg.dim, dC, p);
  m.coa.comult = tensorColsFromJ(key(j, "comult"), dC, dC, dC, p);
  Vec cu = vecFromJ(key(j, "counit"), dC, p);
  m.coa.counit = Matrix(1, dC, p);
  for (int i = 0; i < dC; ++i) m.coa.counit.at(0, i) = cu[i];
  m.h = std::move(h);
  return m;
}

Json withHeader(const char* schema, unsigned long p, Json core) {
  Json out = Json::object();
  out["schema"] = schema;
  out["field"] = fieldTag(p);
  for (auto& [k, v] : core.items()) out[k] = std::move(v);
  return out;
}

unsigned long checkHeader(const Json& doc, const char* schema) {
  require(schemaOf(doc) == schema,
          std::string("expected schema \"") + schema + "\"");
  return parseFieldTag(doc);
}

}  // namespace

std::string fieldTag(unsigned long p) {
  return p == 0 ? "Q" : "Fp:" + std::to_string(p);
}

unsigned long parseFieldTag(const Json& doc) {
  const Json& f = key(doc, "field");
  require(f.is_string(), "field tag must be a string");
  std::string s = f.get<std::string>();
  if (s == "Q") return 0;
  if (s.rfind("Fp:", 0) == 0) {
    try {
      unsigned long p = std::stoul(s.substr(3));
      require(p >= 2, "modulus must be at least 2");
      return p;
    } catch (const JsonError&) {
      throw;
    } catch (const std::exception&) {
      throw JsonError("bad field tag \"" + s + "\"");
    }
  }
  throw JsonError("bad field tag \"" + s + "\"");
}

std::string schemaOf(const Json& doc) {
  const Json& s = key(doc, "schema");
  require(s.is_string(), "schema must be a string");
  return s.get<std::string>();
}

Json toJson(const FinAlgebra& a) {
  return withHeader("algebra/1", a.prime(), algebraCoreJ(a));
}

Json toJson(const WeakBialgebra& h) {
  return withHeader("weak-bialgebra/1", h.alg.prime(),
                    weakBialgebraCoreJ(h));
}

Json toJson(const WeakHopf& h) {
  return withHeader("weak-hopf/1", h.alg.prime(), weakHopfCoreJ(h));
}

Json toJson(const Coring& c) {
  return withHeader("coring/1", c.base.prime(), coringCoreJ(c));
}

Json toJson(const Bialgebroid& b) {
  return withHeader("bialgebroid/1", b.total().prime(), bialgebroidCoreJ(b));
}

Json toJson(const ModuleCoalgebraB& m) {
  Json core = Json::object();
  core["bialgebroid"] = bialgebroidCoreJ(m.b);
  Json inner = moduleCoalgebraCoreJ(m);
  for (auto& [k, v] : inner.items()) core[k] = std::move(v);
  return withHeader("module-coalgebra/1", m.b.total().prime(),
                    std::move(core));
}

Json toJson(const ComoduleAlgebraB& a) {
  Json core = Json::object();
  core["bialgebroid"] = bialgebroidCoreJ(a.b);
  Json inner = comoduleAlgebraCoreJ(a);
  for (auto& [k, v] : inner.items()) core[k] = std::move(v);
  return withHeader("comodule-algebra/1", a.b.total().prime(),
                    std::move(core));
}

Json toJson(const DKDatumB& d) {
  return withHeader("dk-datum/1", d.b.total().prime(), dkDatumCoreJ(d));
}

Json toJson(const DKModule& m) {
  Json core = Json::object();
  core["datum"] = dkDatumCoreJ(m.d);
  core["dim"] = m.dimM;
  core["a_action"] = pairTableJ(m.aAction, m.d.a.alg.dim, m.dimM);
  core["coaction"] = tensorColsJ(m.tensorCM.section * m.coaction,
                                 m.d.c.dimC(), m.dimM);
  return withHeader("dk-module/1", m.d.b.total().prime(), std::move(core));
}

Json toJson(const ModuleCoalgebraW& m) {
  Json core = Json::object();
  core["weak_hopf"] = weakHopfCoreJ(m.h);
  Json inner = weakModuleCoalgebraCoreJ(m);
  for (auto& [k, v] : inner.items()) core[k] = std::move(v);
  return withHeader("weak-module-coalgebra/1", m.h.alg.prime(),
                    std::move(core));
}

Json toJson(const ComoduleAlgebraW& a) {
  Json core = Json::object();
  core["weak_hopf"] = weakHopfCoreJ(a.h);
  Json inner = weakComoduleAlgebraCoreJ(a);
  for (auto& [k, v] : inner.items()) core[k] = std::move(v);
  return withHeader("weak-comodule-algebra/1", a.h.alg.prime(),
                    std::move(core));
}

Json toJson(const DKDatumW& d) {
  Json core = Json::object();
  core["weak_hopf"] = weakHopfCoreJ(d.h);
  core["comodule_algebra"] = weakComoduleAlgebraCoreJ(d.a);
  core["module_coalgebra"] = weakModuleCoalgebraCoreJ(d.c);
  return withHeader("weak-dk-datum/1", d.h.alg.prime(), std::move(core));
}

Json toJson(const Report& r) {
  Json out = Json::object();
  out["schema"] = "report/1";
  out["subject"] = r.subject;
  out["verdict"] = r.pass() ? "pass" : "fail";
  Json laws = Json::array();
  for (const auto& l : r.laws) {
    Json e = Json::object();
    e["name"] = l.law;
    e["status"] = l.pass ? "pass" : "fail";
    if (l.witness) {
      Json w = Json::object();
      w["indices"] = l.witness->indices;
      w["lhs"] = vecJ(l.witness->lhs);
      w["rhs"] = vecJ(l.witness->rhs);
      if (!l.witness->note.empty()) w["note"] = l.witness->note;
      e["witness"] = std::move(w);
    }
    laws.push_back(std::move(e));
  }
  out["laws"] = std::move(laws);
  return out;
}

FinAlgebra algebraFromJson(const Json& doc) {
  return algebraCoreFromJ(doc, checkHeader(doc, "algebra/1"));
}

WeakBialgebra weakBialgebraFromJson(const Json& doc) {
  return weakBialgebraCoreFromJ(doc, checkHeader(doc, "weak-bialgebra/1"));
}

WeakHopf weakHopfFromJson(const Json& doc) {
  return weakHopfCoreFromJ(doc, checkHeader(doc, "weak-hopf/1"));
}

Coring coringFromJson(const Json& doc) {
  return coringCoreFromJ(doc, checkHeader(doc, "coring/1"));
}

Bialgebroid bialgebroidFromJson(const Json& doc) {
  return bialgebroidCoreFromJ(doc, checkHeader(doc, "bialgebroid/1"));
}

ModuleCoalgebraB moduleCoalgebraBFromJson(const Json& doc) {
  unsigned long p = checkHeader(doc, "module-coalgebra/1");
  Bialgebroid b = bialgebroidCoreFromJ(key(doc, "bialgebroid"), p);
  return moduleCoalgebraCoreFromJ(doc, std::move(b), p);
}

ComoduleAlgebraB comoduleAlgebraBFromJson(const Json& doc) {
  unsigned long p = checkHeader(doc, "comodule-algebra/1");
  Bialgebroid b = bialgebroidCoreFromJ(key(doc, "bialgebroid"), p);
  return comoduleAlgebraCoreFromJ(doc, std::move(b), p);
}

DKDatumB dkDatumBFromJson(const Json& doc) {
  return dkDatumCoreFromJ(doc, checkHeader(doc, "dk-datum/1"));
}

DKModule dkModuleFromJson(const Json& doc) {
  unsigned long p = checkHeader(doc, "dk-module/1");
  DKDatumB d = dkDatumCoreFromJ(key(doc, "datum"), p);
  int dM = intKey(doc, "dim");
  require(dM >= 1, "dim must be positive");
  Matrix aAction =
      pairTableFromJ(key(doc, "a_action"), dM, d.a.alg.dim, dM, p);
  Matrix coactionAmbient =
      tensorColsFromJ(key(doc, "coaction"), d.c.dimC(), dM, dM, p);
  return DKModule::makeFromAmbient(std::move(d), dM, std::move(aAction),
                                   std::move(coactionAmbient));
}

ModuleCoalgebraW moduleCoalgebraWFromJson(const Json& doc) {
  unsigned long p = checkHeader(doc, "weak-module-coalgebra/1");
  WeakHopf h = weakHopfCoreFromJ(key(doc, "weak_hopf"), p);
  return weakModuleCoalgebraCoreFromJ(doc, std::move(h), p);
}

ComoduleAlgebraW comoduleAlgebraWFromJson(const Json& doc) {
  unsigned long p = checkHeader(doc, "weak-comodule-algebra/1");
  WeakHopf h = weakHopfCoreFromJ(key(doc, "weak_hopf"), p);
  return weakComoduleAlgebraCoreFromJ(doc, std::move(h), p);
}

DKDatumW dkDatumWFromJson(const Json& doc) {
  unsigned long p = checkHeader(doc, "weak-dk-datum/1");
  WeakHopf h = weakHopfCoreFromJ(key(doc, "weak_hopf"), p);
  ComoduleAlgebraW a =
      weakComoduleAlgebraCoreFromJ(key(doc, "comodule_algebra"), h, p);
  ModuleCoalgebraW c =
      weakModuleCoalgebraCoreFromJ(key(doc, "module_coalgebra"), h, p);
  return {std::move(h), std::move(a), std::move(c)};
}

Json loadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JsonError("cannot open " + path);
  Json doc = Json::parse(in, nullptr, false);
  if (doc.is_discarded()) throw JsonError("invalid JSON in " + path);
  return doc;
}

void writeJsonFile(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw JsonError("cannot write " + path);
  out << doc.dump(2) << '\n';
}

}  // namespace qgdk
