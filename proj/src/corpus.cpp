#include "qgdk/corpus.hpp"

#include <stdexcept>

namespace qgdk {

void GroupoidPresentation::validate() const {
  int n = size();
  auto bad = [](const std::string& m) {
    throw std::invalid_argument("GroupoidPresentation: " + m);
  };
  if (int(compose.size()) != n || int(inverseOf.size()) != n ||
      int(identityAt.size()) != objects)
    bad("table sizes");
  for (const auto& a : arrows)
    if (a.source < 0 || a.source >= objects || a.target < 0 ||
        a.target >= objects)
      bad("arrow endpoints");
  for (int x = 0; x < objects; ++x) {
    int e = identityAt[x];
    if (e < 0 || e >= n || arrows[e].source != x || arrows[e].target != x)
      bad("identity arrows");
  }
  for (int i = 0; i < n; ++i) {
    if (int(compose[i].size()) != n) bad("composition table width");
    for (int j = 0; j < n; ++j) {
      int c = compose[i][j];
      bool chains = arrows[i].target == arrows[j].source;
      if ((c >= 0) != chains) bad("composition domain");
      if (c >= 0 && (arrows[c].source != arrows[i].source ||
                     arrows[c].target != arrows[j].target))
        bad("composition endpoints");
    }
    if (compose[i][identityAt[arrows[i].target]] != i ||
        compose[identityAt[arrows[i].source]][i] != i)
      bad("identity laws");
    int inv = inverseOf[i];
    if (inv < 0 || inv >= n || compose[i][inv] != identityAt[arrows[i].source])
      bad("inverses");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (compose[i][j] < 0 || compose[j][k] < 0) continue;
        if (compose[compose[i][j]][k] != compose[i][compose[j][k]])
          bad("associativity");
      }
}

GroupoidPresentation cyclicGroup(int n) {
  GroupoidPresentation g;
  g.objects = 1;
  g.identityAt = {0};
  for (int i = 0; i < n; ++i)
    g.arrows.push_back({0, 0, "g" + std::to_string(i)});
  g.compose.assign(n, std::vector<int>(n));
  g.inverseOf.resize(n);
  for (int i = 0; i < n; ++i) {
    g.inverseOf[i] = (n - i) % n;
    for (int j = 0; j < n; ++j) g.compose[i][j] = (i + j) % n;
  }
  g.validate();
  return g;
}

GroupoidPresentation pairGroupoid(int n) {
  GroupoidPresentation g;
  g.objects = n;
  auto idx = [n](int x, int y) { return x * n + y; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      g.arrows.push_back(
          {x, y, "e" + std::to_string(x + 1) + std::to_string(y + 1)});
  g.identityAt.resize(n);
  for (int x = 0; x < n; ++x) g.identityAt[x] = idx(x, x);
  int m = n * n;
  g.compose.assign(m, std::vector<int>(m, -1));
  g.inverseOf.resize(m);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      g.inverseOf[idx(x, y)] = idx(y, x);
      for (int z = 0; z < n; ++z) g.compose[idx(x, y)][idx(y, z)] = idx(x, z);
    }
  g.validate();
  return g;
}

GroupoidPresentation discreteGroupoid(int n) {
  GroupoidPresentation g;
  g.objects = n;
  g.compose.assign(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x) {
    g.arrows.push_back({x, x, "u" + std::to_string(x + 1)});
    g.identityAt.push_back(x);
    g.inverseOf.push_back(x);
    g.compose[x][x] = x;
  }
  g.validate();
  return g;
}

WeakHopf groupoidAlgebra(const GroupoidPresentation& g, unsigned long p) {
  g.validate();
  int d = g.size();
  WeakHopf h;
  h.alg.dim = d;
  h.alg.mult = Matrix(d, d * d, p);
  h.alg.unit = zeroVec(d, p);
  for (const auto& a : g.arrows) h.alg.basisNames.push_back(a.label);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (g.compose[i][j] >= 0)
        h.alg.mult.at(g.compose[i][j], i * d + j) = Scalar::one(p);
  for (int x = 0; x < g.objects; ++x)
    h.alg.unit[g.identityAt[x]] = Scalar::one(p);

  h.coa.dim = d;
  h.coa.comult = Matrix(d * d, d, p);
  h.coa.counit = Matrix(1, d, p);
  for (int i = 0; i < d; ++i) {
    h.coa.comult.at(i * d + i, i) = Scalar::one(p);
    h.coa.counit.at(0, i) = Scalar::one(p);
  }

  h.antipode = Matrix(d, d, p);
  for (int i = 0; i < d; ++i) h.antipode.at(g.inverseOf[i], i) = Scalar::one(p);
  h.antipodeInv = h.antipode;  // S is an involution on a groupoid algebra
  return h;
}

Bialgebroid reBialgebroid(const FinAlgebra& r) {
  int dR = r.dim, dH = dR * dR;
  unsigned long p = r.prime();
  ReRing re;
  re.base = r;
  re.total.dim = dH;
  re.total.mult = Matrix(dH, dH * dH, p);
  re.total.unit = kronVec(r.unit, r.unit);
  for (int i = 0; i < dR; ++i)
    for (int j = 0; j < dR; ++j)
      re.total.basisNames.push_back(r.name(i) + "(x)" + r.name(j));
  // (r (x) rbar)(s (x) sbar) = rs (x) sbar rbar.
  for (int i = 0; i < dR; ++i)
    for (int j = 0; j < dR; ++j)
      for (int k = 0; k < dR; ++k)
        for (int l = 0; l < dR; ++l)
          re.total.mult.setCol(
              (i * dR + j) * dH + (k * dR + l),
              kronVec(r.mult.col(i * dR + k), r.mult.col(l * dR + j)));
  re.source = Matrix(dH, dR, p);
  re.target = Matrix(dH, dR, p);
  for (int a = 0; a < dR; ++a) {
    re.source.setCol(a, kronVec(unitVec(dR, a, p), r.unit));
    re.target.setCol(a, kronVec(r.unit, unitVec(dR, a, p)));
  }

  // Delta(r (x) rbar) = (r (x) 1) (x)_R (1 (x) rbar), eps(r (x) rbar) = r rbar.
  Matrix comultAmbient(dH * dH, dH, p);
  Matrix counit(dR, dH, p);
  for (int i = 0; i < dR; ++i)
    for (int j = 0; j < dR; ++j) {
      comultAmbient.setCol(
          i * dR + j,
          kronVec(kronVec(unitVec(dR, i, p), r.unit),
                  kronVec(r.unit, unitVec(dR, j, p))));
      counit.setCol(i * dR + j, r.mult.col(i * dR + j));
    }
  RBimodule bim = re.coringBimodule();
  QuotientSpace t = tensorOverBase(dH, bim.right, dR, dH, bim.left);
  Matrix comult = t.projection * comultAmbient;
  return makeBialgebroid(std::move(re), std::move(comult), std::move(counit));
}

ComoduleAlgebraB tensorComoduleAlgebra(const ComoduleAlgebraB& a,
                                       const FinAlgebra& bAlg) {
  int dA = a.alg.dim, dB = bAlg.dim, dH = a.b.total().dim;
  int dT = dA * dB;
  unsigned long p = a.alg.prime();
  FinAlgebra t;
  t.dim = dT;
  t.mult = Matrix(dT, dT * dT, p);
  t.unit = kronVec(a.alg.unit, bAlg.unit);
  for (int i = 0; i < dA; ++i)
    for (int j = 0; j < dB; ++j)
      for (int k = 0; k < dA; ++k)
        for (int l = 0; l < dB; ++l)
          t.mult.setCol((i * dB + j) * dT + (k * dB + l),
                        kronVec(a.alg.mult.col(i * dA + k),
                                bAlg.mult.col(j * dB + l)));
  int dRb = a.b.base().dim;
  Matrix sT(dT, dRb, p);
  for (int rr = 0; rr < dRb; ++rr)
    sT.setCol(rr, kronVec(a.sA.col(rr), bAlg.unit));
  Matrix coact(dH * dT, dT, p);
  for (int i = 0; i < dA; ++i) {
    Vec ra = a.comod.tensorCM.section.apply(a.coaction().col(i));
    for (int j = 0; j < dB; ++j) {
      Vec col = zeroVec(dH * dT, p);
      for (int u = 0; u < dH; ++u)
        for (int v = 0; v < dA; ++v) {
          const Scalar& c = ra[u * dA + v];
          if (!c.isZero()) col[u * dT + v * dB + j] += c;
        }
      coact.setCol(i * dB + j, col);
    }
  }
  return ComoduleAlgebraB::makeFromAmbient(a.b, std::move(t), std::move(sT),
                                           std::move(coact));
}

std::vector<DKDatumB> canonicalDKData(const Bialgebroid& b, bool includeRe) {
  int dH = b.total().dim, dR = b.base().dim;
  unsigned long p = b.total().prime();

  ModuleCoalgebraB cH = ModuleCoalgebraB::make(b, dH, b.total().mult,
                                               b.coring.comult,
                                               b.coring.counit);
  // C = R with h . r = h |> r and the trivial coring structure.
  Matrix trAction(dR, dH * dR, p);
  for (int h = 0; h < dH; ++h) {
    Matrix tri = triangleActionMatrix(b, unitVec(dH, h, p));
    for (int r = 0; r < dR; ++r) trAction.setCol(h * dR + r, tri.col(r));
  }
  Matrix comultR(dR * dR, dR, p);
  for (int r = 0; r < dR; ++r)
    comultR.setCol(r, kronVec(unitVec(dR, r, p), b.base().unit));
  ModuleCoalgebraB cR = ModuleCoalgebraB::makeFromAmbient(
      b, dR, std::move(trAction), std::move(comultR), Matrix::identity(dR, p));

  ComoduleAlgebraB aH =
      ComoduleAlgebraB::make(b, b.total(), b.re.source, b.coring.comult);
  // A = R with rho(r) = s_H(r) (x)_R 1_R.
  Matrix coactR(dH * dR, dR, p);
  for (int r = 0; r < dR; ++r)
    coactR.setCol(r, kronVec(b.re.source.col(r), b.base().unit));
  ComoduleAlgebraB aR = ComoduleAlgebraB::makeFromAmbient(
      b, b.base(), Matrix::identity(dR, p), std::move(coactR));

  std::vector<DKDatumB> out;
  out.push_back({b, aH, cH});
  out.push_back({b, aH, cR});
  out.push_back({b, aR, cH});
  out.push_back({b, aR, cR});
  if (includeRe) out.push_back({b, aH, cH});
  return out;
}

DKDatumW weakRegularDatum(const WeakHopf& h) {
  ComoduleAlgebraW a{h, h.alg, h.coa.comult};
  ModuleCoalgebraW c{h, h.coa, h.alg.mult};
  return {h, std::move(a), std::move(c)};
}

std::vector<CorpusInstance> weakHopfCorpus() {
  std::vector<CorpusInstance> out;
  for (int n = 2; n <= 6; ++n)
    out.push_back({"Z" + std::to_string(n), groupoidAlgebra(cyclicGroup(n))});
  out.push_back({"P2", groupoidAlgebra(pairGroupoid(2))});
  out.push_back({"P3", groupoidAlgebra(pairGroupoid(3))});
  out.push_back({"D2", groupoidAlgebra(discreteGroupoid(2))});
  return out;
}

}  // namespace qgdk
