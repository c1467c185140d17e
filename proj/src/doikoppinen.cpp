#include "qgdk/doikoppinen.hpp"

#include <stdexcept>
#include <utility>

namespace qgdk {

namespace {

// x -> (Sum_i coeff_i b_i) . x for an action tensor of shape
// dimSpace x (dimOuter * dimSpace).
Matrix actionBy(const Matrix& act, int dimOuter, int dimSpace, const Vec& v) {
  Matrix m(dimSpace, dimSpace);
  for (int j = 0; j < dimSpace; ++j) {
    Vec c = zeroVec(dimSpace);
    for (int i = 0; i < dimOuter; ++i)
      if (!v[i].isZero())
        c = addVec(c, scaleVec(v[i], act.col(i * dimSpace + j)));
    m.setCol(j, c);
  }
  return m;
}

// Left R-module structure r . a = s_A(r) a on the total space of an R-ring.
Matrix leftModuleViaS(const FinAlgebra& a, const Matrix& sA) {
  int dA = a.dim, dR = sA.cols();
  Matrix left(dA, dR * dA);
  for (int r = 0; r < dR; ++r) {
    Matrix lm = a.leftMult(sA.col(r));
    for (int j = 0; j < dA; ++j) left.setCol(r * dA + j, lm.col(j));
  }
  return left;
}

// r . m = s_A(r) . m on an A-module.
Matrix leftModuleViaSAction(const Matrix& aAction, int dimA, int dimM,
                            const Matrix& sA) {
  int dR = sA.cols();
  Matrix left(dimM, dR * dimM);
  for (int r = 0; r < dR; ++r) {
    Matrix lm = actionBy(aAction, dimA, dimM, sA.col(r));
    for (int j = 0; j < dimM; ++j) left.setCol(r * dimM + j, lm.col(j));
  }
  return left;
}

void checkModuleLaws(Report& rep, const std::string& prefix, const Matrix& act,
                     const FinAlgebra& outer, int dimSpace) {
  int dO = outer.dim;
  checkMatrixEqual(rep, prefix + "-unital",
                   actionBy(act, dO, dimSpace, outer.unit),
                   Matrix::identity(dimSpace), {dimSpace});
  bool bad = false;
  for (int i = 0; i < dO && !bad; ++i)
    for (int j = 0; j < dO && !bad; ++j) {
      Matrix lhs = actionBy(act, dO, dimSpace, outer.mult.col(i * dO + j));
      Matrix rhs = actionBy(act, dO, dimSpace, unitVec(dO, i)) *
                   actionBy(act, dO, dimSpace, unitVec(dO, j));
      if (lhs != rhs) {
        rep.fail(prefix + "-associative",
                 Witness{{i, j}, lhs.col(0), rhs.col(0), ""});
        bad = true;
      }
    }
  if (!bad) rep.ok(prefix + "-associative");
}

}  // namespace

// ---------------------------------------------------------------------------
// Bialgebroid flavour
// ---------------------------------------------------------------------------

RBimodule inducedCoringBimodule(const Bialgebroid& b, int dimC,
                                const Matrix& hAction) {
  int dR = b.base().dim, dH = b.total().dim;
  RBimodule bim;
  bim.base = b.base();
  bim.dim = dimC;
  bim.left = Matrix(dimC, dR * dimC);
  bim.right = Matrix(dimC, dimC * dR);
  for (int r = 0; r < dR; ++r) {
    Matrix ls = actionBy(hAction, dH, dimC, b.re.source.col(r));
    Matrix lt = actionBy(hAction, dH, dimC, b.re.target.col(r));
    for (int c = 0; c < dimC; ++c) {
      bim.left.setCol(r * dimC + c, ls.col(c));
      bim.right.setCol(c * dR + r, lt.col(c));
    }
  }
  return bim;
}

Matrix ModuleCoalgebraB::actBy(const Vec& h) const {
  return actionBy(hAction, b.total().dim, dimC(), h);
}

ModuleCoalgebraB ModuleCoalgebraB::make(Bialgebroid b, int dimC,
                                        Matrix hAction, Matrix comultQuot,
                                        Matrix counit) {
  ModuleCoalgebraB m;
  RBimodule bim = inducedCoringBimodule(b, dimC, hAction);
  m.coalg =
      Coring::make(std::move(bim), std::move(comultQuot), std::move(counit));
  m.b = std::move(b);
  m.hAction = std::move(hAction);
  return m;
}

ModuleCoalgebraB ModuleCoalgebraB::makeFromAmbient(Bialgebroid b, int dimC,
                                                   Matrix hAction,
                                                   Matrix comultAmbient,
                                                   Matrix counit) {
  RBimodule bim = inducedCoringBimodule(b, dimC, hAction);
  QuotientSpace t =
      tensorOverBase(dimC, bim.right, b.base().dim, dimC, bim.left);
  Matrix comultQuot = t.projection * comultAmbient;
  return make(std::move(b), dimC, std::move(hAction), std::move(comultQuot),
              std::move(counit));
}

ComoduleAlgebraB ComoduleAlgebraB::make(Bialgebroid b, FinAlgebra alg,
                                        Matrix sA, Matrix coactionQuot) {
  ComoduleAlgebraB a;
  a.leftR = leftModuleViaS(alg, sA);
  a.comod = CoringComodule::make(b.coring, alg.dim, a.leftR,
                                 std::move(coactionQuot));
  a.takeuchi =
      takeuchiSubspace(a.comod.tensorCM, b.total(), b.re.target, alg, sA);
  a.b = std::move(b);
  a.alg = std::move(alg);
  a.sA = std::move(sA);
  return a;
}

ComoduleAlgebraB ComoduleAlgebraB::makeFromAmbient(Bialgebroid b,
                                                   FinAlgebra alg, Matrix sA,
                                                   Matrix coactionAmbient) {
  Matrix leftR = leftModuleViaS(alg, sA);
  QuotientSpace t = tensorOverBase(b.total().dim, b.coring.bim.right,
                                   b.base().dim, alg.dim, leftR);
  Matrix coactionQuot = t.projection * coactionAmbient;
  return make(std::move(b), std::move(alg), std::move(sA),
              std::move(coactionQuot));
}

Report checkModuleCoalgebraB(const ModuleCoalgebraB& m,
                             const std::string& subject) {
  Report rep(subject);
  const Bialgebroid& b = m.b;
  int dH = b.total().dim, dC = m.dimC();

  checkModuleLaws(rep, "module", m.hAction, b.total(), dC);
  rep.merge(checkCoring(m.coalg), "coring");

  // Delta_C(h.c) = h_(1).c_(1) (x)_R h_(2).c_(2).
  {
    bool bad = false;
    for (int i = 0; i < dH && !bad; ++i) {
      Vec dh = b.coring.tensorRR.section.apply(b.coring.comult.col(i));
      for (int j = 0; j < dC && !bad; ++j) {
        Vec lhs = m.coalg.comult.apply(m.hAction.col(i * dC + j));
        Vec dc = m.coalg.tensorRR.section.apply(m.coalg.comult.col(j));
        Vec acc = zeroVec(dC * dC);
        for (int h1 = 0; h1 < dH; ++h1)
          for (int h2 = 0; h2 < dH; ++h2) {
            const Scalar& ch = dh[h1 * dH + h2];
            if (ch.isZero()) continue;
            for (int c1 = 0; c1 < dC; ++c1)
              for (int c2 = 0; c2 < dC; ++c2) {
                const Scalar& cc = dc[c1 * dC + c2];
                if (cc.isZero()) continue;
                Vec u = m.hAction.col(h1 * dC + c1);
                Vec v = m.hAction.col(h2 * dC + c2);
                Scalar co = ch * cc;
                for (int p = 0; p < dC; ++p) {
                  if (u[p].isZero()) continue;
                  for (int q = 0; q < dC; ++q)
                    if (!v[q].isZero()) acc[p * dC + q] += co * u[p] * v[q];
                }
              }
          }
        Vec rhs = m.coalg.tensorRR.projection.apply(acc);
        if (lhs != rhs) {
          rep.fail("action-comult", Witness{{i, j}, lhs, rhs, ""});
          bad = true;
        }
      }
    }
    if (!bad) rep.ok("action-comult");
  }

  // eps_C(h.c) = h |> eps_C(c).
  {
    bool bad = false;
    for (int i = 0; i < dH && !bad; ++i) {
      Matrix tri = triangleActionMatrix(b, unitVec(dH, i));
      for (int j = 0; j < dC && !bad; ++j) {
        Vec lhs = m.coalg.counit.apply(m.hAction.col(i * dC + j));
        Vec rhs = tri.apply(m.coalg.counit.col(j));
        if (lhs != rhs) {
          rep.fail("action-counit", Witness{{i, j}, lhs, rhs, ""});
          bad = true;
        }
      }
    }
    if (!bad) rep.ok("action-counit");
  }
  return rep;
}

Report checkComoduleAlgebraB(const ComoduleAlgebraB& a,
                             const std::string& subject) {
  Report rep(subject);
  int dA = a.alg.dim;
  rep.merge(checkAlgebra(a.alg), "algebra");
  rep.merge(checkAlgebraMap({a.b.base(), a.alg, a.sA}), "s-map");
  rep.merge(checkCoringComodule(a.comod), "comodule");

  {
    bool bad = false;
    for (int i = 0; i < dA; ++i) {
      if (!a.takeuchi.contains(a.coaction().col(i))) {
        rep.fail("takeuchi-membership",
                 Witness{{i}, a.coaction().col(i), {}, "rho(a_i) outside H x_R A"});
        bad = true;
        break;
      }
    }
    if (!bad) rep.ok("takeuchi-membership");
  }

  {
    bool bad = false;
    for (int i = 0; i < dA && !bad; ++i)
      for (int j = 0; j < dA && !bad; ++j) {
        Vec lhs = a.coaction().apply(a.alg.mult.col(i * dA + j));
        Vec rhs = pairProductQuot(a.b.total(), a.alg, a.comod.tensorCM,
                                  a.coaction().col(i), a.coaction().col(j));
        if (lhs != rhs) {
          rep.fail("coaction-multiplicative", Witness{{i, j}, lhs, rhs, ""});
          bad = true;
        }
      }
    if (!bad) rep.ok("coaction-multiplicative");
  }

  checkVecEqual(rep, "coaction-unit", a.coaction().apply(a.alg.unit),
                a.comod.tensorCM.projection.apply(
                    kronVec(a.b.total().unit, a.alg.unit)));
  return rep;
}

Report checkDKDatumB(const DKDatumB& d, const std::string& subject) {
  Report rep(subject);
  rep.merge(checkBialgebroid(d.b), "bialgebroid");
  rep.merge(checkComoduleAlgebraB(d.a), "comodule-algebra");
  rep.merge(checkModuleCoalgebraB(d.c), "module-coalgebra");
  return rep;
}

// ---------------------------------------------------------------------------
// Weak flavour
// ---------------------------------------------------------------------------

Matrix ModuleCoalgebraW::actBy(const Vec& hv) const {
  return actionBy(hAction, h.alg.dim, coa.dim, hv);
}

Report checkComoduleAlgebraW(const ComoduleAlgebraW& a,
                             const std::string& subject) {
  Report rep(subject);
  const FinAlgebra& halg = a.h.alg;
  const FinCoalgebra& hcoa = a.h.coa;
  int dH = halg.dim, dA = a.alg.dim;
  rep.merge(checkAlgebra(a.alg), "algebra");

  // Plain comodule of the coalgebra H.
  Matrix idA = Matrix::identity(dA), idH = Matrix::identity(dH);
  checkMatrixEqual(rep, "coassociativity",
                   Matrix::kron(hcoa.comult, idA) * a.coaction,
                   Matrix::kron(idH, a.coaction) * a.coaction, {dA});
  checkMatrixEqual(rep, "counit", Matrix::kron(hcoa.counit, idA) * a.coaction,
                   idA, {dA});

  // rho(ab) = rho(a) rho(b).
  {
    bool bad = false;
    for (int i = 0; i < dA && !bad; ++i)
      for (int j = 0; j < dA && !bad; ++j) {
        Vec lhs = a.coaction.apply(a.alg.mult.col(i * dA + j));
        Vec rhs = pairProductAmbient(halg, a.alg, a.coaction.col(i),
                                     a.coaction.col(j));
        if (lhs != rhs) {
          rep.fail("coaction-multiplicative", Witness{{i, j}, lhs, rhs, ""});
          bad = true;
        }
      }
    if (!bad) rep.ok("coaction-multiplicative");
  }

  // Weak unit property and its equivalent form:
  // (H (x) rho) rho(1) = 1_(1) (x) 1_<-1> 1_(2) (x) 1_<0>
  //                    = 1_(1) (x) 1_(2) 1_<-1> (x) 1_<0>.
  {
    Vec rho1 = a.coaction.apply(a.alg.unit);
    Vec d1 = hcoa.comult.apply(halg.unit);
    Vec lhs = zeroVec(dH * dH * dA);
    for (int u = 0; u < dH; ++u)
      for (int v = 0; v < dA; ++v) {
        const Scalar& co = rho1[u * dA + v];
        if (co.isZero()) continue;
        Vec inner = a.coaction.col(v);
        for (int x = 0; x < dH; ++x)
          for (int y = 0; y < dA; ++y)
            if (!inner[x * dA + y].isZero())
              lhs[(u * dH + x) * dA + y] += co * inner[x * dA + y];
      }
    Vec rhs1 = zeroVec(dH * dH * dA);
    Vec rhs2 = zeroVec(dH * dH * dA);
    for (int x = 0; x < dH; ++x)
      for (int y = 0; y < dH; ++y) {
        const Scalar& cd = d1[x * dH + y];
        if (cd.isZero()) continue;
        for (int u = 0; u < dH; ++u)
          for (int v = 0; v < dA; ++v) {
            const Scalar& co = rho1[u * dA + v];
            if (co.isZero()) continue;
            Scalar c = cd * co;
            Vec uy = halg.mul(unitVec(dH, u), unitVec(dH, y));
            for (int w = 0; w < dH; ++w)
              if (!uy[w].isZero()) rhs1[(x * dH + w) * dA + v] += c * uy[w];
            Vec yu = halg.mul(unitVec(dH, y), unitVec(dH, u));
            for (int w = 0; w < dH; ++w)
              if (!yu[w].isZero()) rhs2[(x * dH + w) * dA + v] += c * yu[w];
          }
      }
    checkVecEqual(rep, "weak-unit", lhs, rhs1);
    checkVecEqual(rep, "weak-unit-64", lhs, rhs2);
  }
  return rep;
}

Report checkModuleCoalgebraW(const ModuleCoalgebraW& m,
                             const std::string& subject) {
  Report rep(subject);
  const FinAlgebra& halg = m.h.alg;
  const FinCoalgebra& hcoa = m.h.coa;
  int dH = halg.dim, dC = m.coa.dim;
  rep.merge(checkCoalgebra(m.coa), "coalgebra");
  checkModuleLaws(rep, "module", m.hAction, halg, dC);

  // Delta_C(h.c) = h_(1).c_(1) (x) h_(2).c_(2).
  {
    bool bad = false;
    for (int i = 0; i < dH && !bad; ++i) {
      Vec dh = hcoa.comult.col(i);
      for (int j = 0; j < dC && !bad; ++j) {
        Vec lhs = m.coa.comult.apply(m.hAction.col(i * dC + j));
        Vec dc = m.coa.comult.col(j);
        Vec rhs = zeroVec(dC * dC);
        for (int h1 = 0; h1 < dH; ++h1)
          for (int h2 = 0; h2 < dH; ++h2) {
            const Scalar& ch = dh[h1 * dH + h2];
            if (ch.isZero()) continue;
            for (int c1 = 0; c1 < dC; ++c1)
              for (int c2 = 0; c2 < dC; ++c2) {
                const Scalar& cc = dc[c1 * dC + c2];
                if (cc.isZero()) continue;
                Vec u = m.hAction.col(h1 * dC + c1);
                Vec v = m.hAction.col(h2 * dC + c2);
                Scalar co = ch * cc;
                for (int p = 0; p < dC; ++p) {
                  if (u[p].isZero()) continue;
                  for (int q = 0; q < dC; ++q)
                    if (!v[q].isZero()) rhs[p * dC + q] += co * u[p] * v[q];
                }
              }
          }
        if (lhs != rhs) {
          rep.fail("action-comult", Witness{{i, j}, lhs, rhs, ""});
          bad = true;
        }
      }
    }
    if (!bad) rep.ok("action-comult");
  }

  // eps_C(hg.c) = eps_H(h g_(2)) eps_C(g_(1).c).
  {
    bool bad = false;
    for (int i = 0; i < dH && !bad; ++i)
      for (int g = 0; g < dH && !bad; ++g) {
        Vec hg = halg.mult.col(i * dH + g);
        Matrix actHG = actionBy(m.hAction, dH, dC, hg);
        Vec dg = hcoa.comult.col(g);
        for (int j = 0; j < dC && !bad; ++j) {
          Scalar lhs = m.coa.counit.apply(actHG.col(j))[0];
          Scalar rhs = Scalar::zero();
          for (int g1 = 0; g1 < dH; ++g1)
            for (int g2 = 0; g2 < dH; ++g2) {
              const Scalar& cg = dg[g1 * dH + g2];
              if (cg.isZero()) continue;
              Scalar eH =
                  hcoa.counit.apply(halg.mul(unitVec(dH, i), unitVec(dH, g2)))[0];
              if (eH.isZero()) continue;
              Scalar eC = m.coa.counit.apply(m.hAction.col(g1 * dC + j))[0];
              rhs += cg * eH * eC;
            }
          if (lhs != rhs) {
            rep.fail("action-counit", Witness{{i, g, j}, {lhs}, {rhs}, ""});
            bad = true;
          }
        }
      }
    if (!bad) rep.ok("action-counit");
  }
  return rep;
}

Report checkDKDatumW(const DKDatumW& d, const std::string& subject) {
  Report rep(subject);
  rep.merge(checkWeakHopf(d.h), "weak-hopf");
  rep.merge(checkComoduleAlgebraW(d.a), "comodule-algebra");
  rep.merge(checkModuleCoalgebraW(d.c), "module-coalgebra");
  return rep;
}

// ---------------------------------------------------------------------------
// Translations
// ---------------------------------------------------------------------------

ComoduleAlgebraB translateCA(const ComoduleAlgebraW& x, const Bialgebroid& b) {
  const FinAlgebra& halg = x.h.alg;
  int dH = halg.dim, dA = x.alg.dim, dR = b.base().dim;
  Vec rho1 = x.coaction.apply(x.alg.unit);
  Matrix sA(dA, dR);
  for (int r = 0; r < dR; ++r) {
    Vec rj = b.re.source.col(r);  // the R-basis vector inside H
    for (int u = 0; u < dH; ++u)
      for (int v = 0; v < dA; ++v) {
        const Scalar& co = rho1[u * dA + v];
        if (co.isZero()) continue;
        Scalar e = x.h.coa.counit.apply(halg.mul(unitVec(dH, u), rj))[0];
        if (!e.isZero()) sA.at(v, r) += co * e;
      }
  }
  return ComoduleAlgebraB::makeFromAmbient(b, x.alg, std::move(sA),
                                           x.coaction);
}

ComoduleAlgebraW translateCABack(const ComoduleAlgebraB& x, const WeakHopf& h,
                                 const BaseAlgebra& base) {
  Matrix sigma =
      sectionSigma(base.idempotentE, base.dimR(), x.b.total().dim,
                   x.b.coring.bim.right, x.alg.dim, x.leftR, x.comod.tensorCM);
  ComoduleAlgebraW w;
  w.h = h;
  w.alg = x.alg;
  w.coaction = sigma * x.coaction();
  return w;
}

ModuleCoalgebraB translateMC(const ModuleCoalgebraW& x, const Bialgebroid& b,
                             const BaseAlgebra& base) {
  const FinAlgebra& halg = x.h.alg;
  int dH = halg.dim, dC = x.coa.dim, dR = base.dimR();
  Vec d1 = x.h.coa.comult.apply(halg.unit);
  Matrix counit(dR, dC);
  for (int j = 0; j < dC; ++j) {
    Vec v = zeroVec(dH);
    for (int p = 0; p < dH; ++p)
      for (int q = 0; q < dH; ++q) {
        const Scalar& cd = d1[p * dH + q];
        if (cd.isZero()) continue;
        Scalar e = x.coa.counit.apply(x.hAction.col(p * dC + j))[0];
        if (!e.isZero())
          v = addVec(v, scaleVec(cd * e, unitVec(dH, q)));
      }
    Vec inR = base.coordsR.apply(v);
    if (base.inclusion.apply(inR) != v)
      throw std::runtime_error("translateMC: counit image not in R");
    counit.setCol(j, inR);
  }
  return ModuleCoalgebraB::makeFromAmbient(b, dC, x.hAction, x.coa.comult,
                                           std::move(counit));
}

ModuleCoalgebraW translateMCBack(const ModuleCoalgebraB& x, const WeakHopf& h,
                                 const BaseAlgebra& base) {
  Matrix sigma =
      sectionSigma(base.idempotentE, base.dimR(), x.dimC(),
                   x.coalg.bim.right, x.dimC(), x.coalg.bim.left,
                   x.coalg.tensorRR);
  ModuleCoalgebraW w;
  w.h = h;
  w.coa.dim = x.dimC();
  w.coa.comult = sigma * x.coalg.comult;
  w.coa.counit = base.frobeniusPhi * x.coalg.counit;
  w.hAction = x.hAction;
  return w;
}

DKDatumB translateDatum(const DKDatumW& d, const Bialgebroid& b,
                        const BaseAlgebra& base) {
  return DKDatumB{b, translateCA(d.a, b), translateMC(d.c, b, base)};
}

DKDatumW translateDatumBack(const DKDatumB& d, const WeakHopf& h,
                            const BaseAlgebra& base) {
  return DKDatumW{h, translateCABack(d.a, h, base),
                  translateMCBack(d.c, h, base)};
}

// ---------------------------------------------------------------------------
// Doi-Koppinen modules and the coring C (x)_R A
// ---------------------------------------------------------------------------

DKModule DKModule::make(DKDatumB d, int dimM, Matrix aAction, Matrix coaction) {
  DKModule m;
  m.leftR = leftModuleViaSAction(aAction, d.a.alg.dim, dimM, d.a.sA);
  m.tensorCM = tensorOverBase(d.c.dimC(), d.c.coalg.bim.right, d.b.base().dim,
                              dimM, m.leftR);
  if (coaction.rows() != m.tensorCM.quotDim || coaction.cols() != dimM)
    throw std::invalid_argument("DKModule: coaction shape");
  m.d = std::move(d);
  m.dimM = dimM;
  m.aAction = std::move(aAction);
  m.coaction = std::move(coaction);
  return m;
}

DKModule DKModule::makeFromAmbient(DKDatumB d, int dimM, Matrix aAction,
                                   Matrix coactionAmbient) {
  Matrix leftR = leftModuleViaSAction(aAction, d.a.alg.dim, dimM, d.a.sA);
  QuotientSpace t = tensorOverBase(d.c.dimC(), d.c.coalg.bim.right,
                                   d.b.base().dim, dimM, leftR);
  Matrix coaction = t.projection * coactionAmbient;
  return make(std::move(d), dimM, std::move(aAction), std::move(coaction));
}

Report checkDKModule(const DKModule& m, const std::string& subject) {
  Report rep(subject);
  const DKDatumB& d = m.d;
  int dA = d.a.alg.dim, dC = d.c.dimC(), dM = m.dimM, dH = d.b.total().dim;

  checkModuleLaws(rep, "module", m.aAction, d.a.alg, dM);
  rep.merge(
      checkCoringComodule(CoringComodule::make(d.c.coalg, dM, m.leftR,
                                               m.coaction)),
      "comodule");

  // rho(a.m) = a_<-1>.m_<-1> (x)_R a_<0>.m_<0>.
  {
    bool bad = false;
    for (int i = 0; i < dA && !bad; ++i) {
      Vec ra = d.a.comod.tensorCM.section.apply(d.a.coaction().col(i));
      for (int j = 0; j < dM && !bad; ++j) {
        Vec lhs = m.coaction.apply(m.aAction.col(i * dM + j));
        Vec rm = m.tensorCM.section.apply(m.coaction.col(j));
        Vec acc = zeroVec(dC * dM);
        for (int u = 0; u < dH; ++u)
          for (int v = 0; v < dA; ++v) {
            const Scalar& ca = ra[u * dA + v];
            if (ca.isZero()) continue;
            for (int p = 0; p < dC; ++p)
              for (int q = 0; q < dM; ++q) {
                const Scalar& cm = rm[p * dM + q];
                if (cm.isZero()) continue;
                Vec cc = d.c.hAction.col(u * dC + p);
                Vec mm = m.aAction.col(v * dM + q);
                Scalar co = ca * cm;
                for (int s = 0; s < dC; ++s) {
                  if (cc[s].isZero()) continue;
                  for (int t = 0; t < dM; ++t)
                    if (!mm[t].isZero()) acc[s * dM + t] += co * cc[s] * mm[t];
                }
              }
          }
        Vec rhs = m.tensorCM.projection.apply(acc);
        if (lhs != rhs) {
          rep.fail("compatibility", Witness{{i, j}, lhs, rhs, ""});
          bad = true;
        }
      }
    }
    if (!bad) rep.ok("compatibility");
  }
  return rep;
}

DKCoring buildDKCoring(const DKDatumB& d) {
  int dR = d.b.base().dim, dC = d.c.dimC(), dA = d.a.alg.dim,
      dH = d.b.total().dim;
  DKCoring out;
  out.tensorCA =
      tensorOverBase(dC, d.c.coalg.bim.right, dR, dA, d.a.leftR);
  const QuotientSpace& t = out.tensorCA;
  int q = t.quotDim;

  RBimodule bim;
  bim.base = d.a.alg;
  bim.dim = q;
  bim.left = Matrix(q, dA * q);
  bim.right = Matrix(q, q * dA);
  Matrix idC = Matrix::identity(dC);
  for (int i = 0; i < dA; ++i) {
    // Right action: multiplication on the second leg.
    Matrix r =
        t.projection *
        Matrix::kron(idC, d.a.alg.rightMult(unitVec(dA, i))) * t.section;
    for (int x = 0; x < q; ++x) bim.right.setCol(x * dA + i, r.col(x));
    // Left action a.(c (x) a') = a_<-1>.c (x) a_<0> a'.
    Vec ra = d.a.comod.tensorCM.section.apply(d.a.coaction().col(i));
    Matrix lAmb(dC * dA, dC * dA);
    for (int u = 0; u < dH; ++u)
      for (int v = 0; v < dA; ++v) {
        const Scalar& ca = ra[u * dA + v];
        if (ca.isZero()) continue;
        Matrix term = Matrix::kron(d.c.actBy(unitVec(dH, u)),
                                   d.a.alg.leftMult(unitVec(dA, v)));
        for (int p = 0; p < term.rows(); ++p)
          for (int s = 0; s < term.cols(); ++s)
            if (!term.at(p, s).isZero()) lAmb.at(p, s) += ca * term.at(p, s);
      }
    Matrix l = t.projection * lAmb * t.section;
    for (int x = 0; x < q; ++x) bim.left.setCol(i * q + x, l.col(x));
  }

  // Delta: c (x)_R a  |->  (c_(1) (x)_R 1_A) (x)_A (c_(2) (x)_R a).
  QuotientSpace t2 = tensorOverBase(q, bim.right, dA, q, bim.left);
  Matrix p1(q, dC);  // c |-> class of c (x) 1_A
  for (int c = 0; c < dC; ++c)
    p1.setCol(c, t.projection.apply(kronVec(unitVec(dC, c), d.a.alg.unit)));
  Matrix comult(t2.quotDim, q);
  Matrix counit(dA, q);
  for (int x = 0; x < q; ++x) {
    Vec amb = t.section.apply(unitVec(q, x));
    Vec acc = zeroVec(q * q);
    Vec cu = zeroVec(dA);
    for (int c = 0; c < dC; ++c)
      for (int a = 0; a < dA; ++a) {
        const Scalar& co = amb[c * dA + a];
        if (co.isZero()) continue;
        Vec dc = d.c.coalg.tensorRR.section.apply(d.c.coalg.comult.col(c));
        for (int c1 = 0; c1 < dC; ++c1)
          for (int c2 = 0; c2 < dC; ++c2) {
            const Scalar& ci = dc[c1 * dC + c2];
            if (ci.isZero()) continue;
            Vec x1 = p1.col(c1);
            Vec x2 = t.projection.col(c2 * dA + a);
            Scalar cc = co * ci;
            for (int u = 0; u < q; ++u) {
              if (x1[u].isZero()) continue;
              for (int v = 0; v < q; ++v)
                if (!x2[v].isZero()) acc[u * q + v] += cc * x1[u] * x2[v];
            }
          }
        // eps: c (x)_R a |-> s_A(eps_C(c)) a.
        cu = addVec(cu, scaleVec(co, d.a.alg.mul(d.a.sA.apply(
                                          d.c.coalg.counit.col(c)),
                                      unitVec(dA, a))));
      }
    comult.setCol(x, t2.projection.apply(acc));
    counit.setCol(x, cu);
  }
  out.coring = Coring::make(std::move(bim), std::move(comult), std::move(counit));
  out.d = d;
  return out;
}

DKModule comoduleToDK(const DKCoring& dk, const CoringComodule& m) {
  const DKDatumB& d = dk.d;
  int dC = d.c.dimC(), dA = d.a.alg.dim, q = dk.tensorCA.quotDim,
      dM = m.dimM;
  // chi: (c (x)_R a) (x) m |-> c (x) a.m in the ambient C (x) M.
  Matrix chi(dC * dM, q * dM);
  for (int x = 0; x < q; ++x) {
    Vec amb = dk.tensorCA.section.apply(unitVec(q, x));
    for (int mm = 0; mm < dM; ++mm) {
      Vec col = zeroVec(dC * dM);
      for (int c = 0; c < dC; ++c)
        for (int a = 0; a < dA; ++a) {
          const Scalar& co = amb[c * dA + a];
          if (co.isZero()) continue;
          Vec am = m.leftAction.col(a * dM + mm);
          for (int t = 0; t < dM; ++t)
            if (!am[t].isZero()) col[c * dM + t] += co * am[t];
        }
      chi.setCol(x * dM + mm, col);
    }
  }
  Matrix coactionAmbient = chi * m.tensorCM.section * m.coaction;
  return DKModule::makeFromAmbient(d, dM, m.leftAction, coactionAmbient);
}

CoringComodule dkToComodule(const DKCoring& dk, const DKModule& m) {
  const DKDatumB& d = dk.d;
  int dC = d.c.dimC(), q = dk.tensorCA.quotDim, dM = m.dimM;
  // chi~: c (x) m |-> (c (x)_R 1_A) (x) m in the ambient of the coring side.
  Matrix p1(q, dC);
  for (int c = 0; c < dC; ++c)
    p1.setCol(c, dk.tensorCA.projection.apply(
                     kronVec(unitVec(dC, c), d.a.alg.unit)));
  Matrix chiT = Matrix::kron(p1, Matrix::identity(dM));
  QuotientSpace t = tensorOverBase(q, dk.coring.bim.right, d.a.alg.dim, dM,
                                   m.aAction);
  Matrix coaction = t.projection * chiT * m.tensorCM.section * m.coaction;
  return CoringComodule::make(dk.coring, dM, m.aAction, std::move(coaction));
}

// ---------------------------------------------------------------------------
// The weak coring C~ and theta
// ---------------------------------------------------------------------------

WeakCoringIso buildWeakCoringIso(const DKDatumW& w, const DKDatumB& d) {
  const FinAlgebra& halg = w.h.alg;
  int dH = halg.dim, dC = w.c.coa.dim, dA = w.a.alg.dim;
  int n = dC * dA;
  WeakCoringIso iso;
  iso.dk = buildDKCoring(d);
  int q = iso.dk.tensorCA.quotDim;

  // The projection p : c (x) a |-> 1_<-1>.c (x) 1_<0> a.
  Vec rho1 = w.a.coaction.apply(w.a.alg.unit);
  Matrix p(n, n);
  for (int u = 0; u < dH; ++u)
    for (int v = 0; v < dA; ++v) {
      const Scalar& co = rho1[u * dA + v];
      if (co.isZero()) continue;
      Matrix term = Matrix::kron(w.c.actBy(unitVec(dH, u)),
                                 w.a.alg.leftMult(unitVec(dA, v)));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (!term.at(i, j).isZero()) p.at(i, j) += co * term.at(i, j);
    }
  iso.cTilde = image(p);
  int dT = iso.cTilde.dim();
  iso.inclusion = Matrix(n, dT);
  for (int j = 0; j < dT; ++j)
    iso.inclusion.setCol(j, iso.cTilde.basisVector(j));
  iso.coordsT = Matrix(dT, n);
  for (int j = 0; j < dT; ++j)
    iso.coordsT.at(j, iso.cTilde.pivots()[j]) = Scalar::one();

  auto toT = [&](const Vec& amb) {
    Vec co = iso.coordsT.apply(amb);
    if (iso.inclusion.apply(co) != amb)
      throw std::runtime_error("buildWeakCoringIso: vector escapes C~");
    return co;
  };

  // A-bimodule structure on C~.
  RBimodule bim;
  bim.base = w.a.alg;
  bim.dim = dT;
  bim.left = Matrix(dT, dA * dT);
  bim.right = Matrix(dT, dT * dA);
  Matrix idC = Matrix::identity(dC);
  for (int i = 0; i < dA; ++i) {
    Matrix rAmb = Matrix::kron(idC, w.a.alg.rightMult(unitVec(dA, i)));
    Vec ra = w.a.coaction.col(i);
    Matrix lAmb(n, n);
    for (int u = 0; u < dH; ++u)
      for (int v = 0; v < dA; ++v) {
        const Scalar& ca = ra[u * dA + v];
        if (ca.isZero()) continue;
        Matrix term = Matrix::kron(w.c.actBy(unitVec(dH, u)),
                                   w.a.alg.leftMult(unitVec(dA, v)));
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            if (!term.at(x, y).isZero()) lAmb.at(x, y) += ca * term.at(x, y);
      }
    for (int t = 0; t < dT; ++t) {
      bim.right.setCol(t * dA + i, toT(rAmb.apply(iso.inclusion.col(t))));
      bim.left.setCol(i * dT + t, toT(lAmb.apply(iso.inclusion.col(t))));
    }
  }

  // theta and theta~.
  iso.theta = iso.coordsT * (p * iso.dk.tensorCA.section);
  iso.thetaTilde = iso.dk.tensorCA.projection * iso.inclusion;

  // Coring structure: Delta_C~ through p on each leg, eps_C~ = eps_C (x) A.
  QuotientSpace t2 = tensorOverBase(dT, bim.right, dA, dT, bim.left);
  Matrix qp = iso.coordsT * p;  // n -> C~ coordinates through the projection
  Matrix q1(dT, dC);            // c |-> p(c (x) 1_A) in C~ coordinates
  for (int c = 0; c < dC; ++c)
    q1.setCol(c, qp.apply(kronVec(unitVec(dC, c), w.a.alg.unit)));
  Matrix comult(t2.quotDim, dT);
  Matrix counit(dA, dT);
  for (int t = 0; t < dT; ++t) {
    Vec amb = iso.inclusion.col(t);
    Vec acc = zeroVec(dT * dT);
    Vec cu = zeroVec(dA);
    for (int c = 0; c < dC; ++c)
      for (int a = 0; a < dA; ++a) {
        const Scalar& co = amb[c * dA + a];
        if (co.isZero()) continue;
        Vec dc = w.c.coa.comult.col(c);
        for (int c1 = 0; c1 < dC; ++c1)
          for (int c2 = 0; c2 < dC; ++c2) {
            const Scalar& ci = dc[c1 * dC + c2];
            if (ci.isZero()) continue;
            Vec x1 = q1.col(c1);
            Vec x2 = qp.col(c2 * dA + a);
            Scalar cc = co * ci;
            for (int u = 0; u < dT; ++u) {
              if (x1[u].isZero()) continue;
              for (int v = 0; v < dT; ++v)
                if (!x2[v].isZero()) acc[u * dT + v] += cc * x1[u] * x2[v];
            }
          }
        Scalar e = w.c.coa.counit.apply(unitVec(dC, c))[0];
        if (!e.isZero()) cu[a] += co * e;
      }
    comult.setCol(t, t2.projection.apply(acc));
    counit.setCol(t, cu);
  }
  iso.tilde = Coring::make(std::move(bim), std::move(comult), std::move(counit));
  return iso;
}

Report checkWeakCoringIso(const WeakCoringIso& iso, const std::string& subject) {
  Report rep(subject);
  int q = iso.dk.tensorCA.quotDim, dT = iso.cTilde.dim();
  int dA = iso.dk.d.a.alg.dim;

  checkMatrixEqual(rep, "theta-section", iso.theta * iso.thetaTilde,
                   Matrix::identity(dT), {dT});
  checkMatrixEqual(rep, "theta-retraction", iso.thetaTilde * iso.theta,
                   Matrix::identity(q), {q});
  rep.merge(checkCoring(iso.tilde), "tilde-coring");

  // theta is an A-bimodule map.
  {
    bool bad = false;
    for (int i = 0; i < dA && !bad; ++i) {
      Vec ea = unitVec(dA, i);
      if (iso.theta * iso.dk.coring.bim.leftBy(ea) !=
          iso.tilde.bim.leftBy(ea) * iso.theta) {
        rep.fail("theta-left-linear", Witness{{i}, {}, {}, ""});
        bad = true;
      } else if (iso.theta * iso.dk.coring.bim.rightBy(ea) !=
                 iso.tilde.bim.rightBy(ea) * iso.theta) {
        rep.fail("theta-right-linear", Witness{{i}, {}, {}, ""});
        bad = true;
      }
    }
    if (!bad) {
      rep.ok("theta-left-linear");
      rep.ok("theta-right-linear");
    }
  }

  // theta is a coring map.
  checkMatrixEqual(rep, "theta-counit", iso.tilde.counit * iso.theta,
                   iso.dk.coring.counit, {q});
  {
    Matrix theta2 = iso.tilde.tensorRR.projection *
                    Matrix::kron(iso.theta, iso.theta) *
                    iso.dk.coring.tensorRR.section;
    checkMatrixEqual(rep, "theta-comult",
                     theta2 * iso.dk.coring.comult,
                     iso.tilde.comult * iso.theta, {q});
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Separability certificates
// ---------------------------------------------------------------------------

Report checkInductionSeparable(const DKCoring& dk, const Vec& eCand,
                               const std::string& subject) {
  Report rep(subject);
  int dA = dk.d.a.alg.dim;
  checkVecEqual(rep, "counit-normalization", dk.coring.counit.apply(eCand),
                dk.d.a.alg.unit);
  bool bad = false;
  for (int i = 0; i < dA; ++i) {
    Vec ea = unitVec(dA, i);
    Vec lhs = dk.coring.bim.leftBy(ea).apply(eCand);
    Vec rhs = dk.coring.bim.rightBy(ea).apply(eCand);
    if (lhs != rhs) {
      rep.fail("centrality", Witness{{i}, lhs, rhs, ""});
      bad = true;
      break;
    }
  }
  if (!bad) rep.ok("centrality");
  return rep;
}

namespace {

// Concatenated residuals of the forgetful-functor certificate conditions;
// affine in gamma.
Vec forgetfulResidual(const DKCoring& dk, const Matrix& gamma) {
  const DKDatumB& d = dk.d;
  const Coring& cc = d.c.coalg;
  int dA = d.a.alg.dim, dC = d.c.dimC(), dR = d.b.base().dim,
      dH = d.b.total().dim;
  int q2 = cc.tensorRR.quotDim;
  Vec out;

  auto push = [&](const Vec& v) { out.insert(out.end(), v.begin(), v.end()); };

  // Right R-linearity: gamma(x.r) = gamma(x) s_A(r).
  for (int r = 0; r < dR; ++r) {
    Matrix rQuot = cc.tensorRR.projection *
                   Matrix::kron(Matrix::identity(dC),
                                cc.bim.rightBy(unitVec(dR, r))) *
                   cc.tensorRR.section;
    Matrix diff = gamma * rQuot -
                  d.a.alg.rightMult(d.a.sA.col(r)) * gamma;
    for (int x = 0; x < q2; ++x) push(diff.col(x));
  }

  // gamma(c_(1) (x)_R c_(2)) = s_A(eps_C(c)).
  {
    Matrix diff = gamma * cc.comult - d.a.sA * cc.counit;
    for (int c = 0; c < dC; ++c) push(diff.col(c));
  }

  // gamma(a_<-2>.c (x)_R a_<-1>.c') a_<0> = a gamma(c (x)_R c').
  for (int i = 0; i < dA; ++i) {
    Vec ra = d.a.comod.tensorCM.section.apply(d.a.coaction().col(i));
    for (int c = 0; c < dC; ++c)
      for (int cp = 0; cp < dC; ++cp) {
        Vec lhs = zeroVec(dA);
        for (int u = 0; u < dH; ++u)
          for (int v = 0; v < dA; ++v) {
            const Scalar& ca = ra[u * dA + v];
            if (ca.isZero()) continue;
            Vec dh = d.b.coring.tensorRR.section.apply(
                d.b.coring.comult.col(u));
            for (int h1 = 0; h1 < dH; ++h1)
              for (int h2 = 0; h2 < dH; ++h2) {
                const Scalar& ch = dh[h1 * dH + h2];
                if (ch.isZero()) continue;
                Vec g = gamma.apply(cc.tensorRR.projection.apply(
                    kronVec(d.c.hAction.col(h1 * dC + c),
                            d.c.hAction.col(h2 * dC + cp))));
                lhs = addVec(
                    lhs, scaleVec(ca * ch,
                                  d.a.alg.mul(g, unitVec(dA, v))));
              }
          }
        Vec rhs = d.a.alg.mul(
            unitVec(dA, i),
            gamma.apply(cc.tensorRR.projection.apply(
                kronVec(unitVec(dC, c), unitVec(dC, cp)))));
        push(subVec(lhs, rhs));
      }
  }

  // c_(1) (x)_R gamma(c_(2) (x)_R c')
  //   = gamma(c (x)_R c'_(1))_<-1>.c'_(2) (x)_R gamma(c (x)_R c'_(1))_<0>.
  for (int c = 0; c < dC; ++c)
    for (int cp = 0; cp < dC; ++cp) {
      Vec dc = cc.tensorRR.section.apply(cc.comult.col(c));
      Vec lhsAmb = zeroVec(dC * dA);
      for (int c1 = 0; c1 < dC; ++c1)
        for (int c2 = 0; c2 < dC; ++c2) {
          const Scalar& ci = dc[c1 * dC + c2];
          if (ci.isZero()) continue;
          Vec g = gamma.apply(cc.tensorRR.projection.apply(
              kronVec(unitVec(dC, c2), unitVec(dC, cp))));
          for (int a = 0; a < dA; ++a)
            if (!g[a].isZero()) lhsAmb[c1 * dA + a] += ci * g[a];
        }
      Vec dcp = cc.tensorRR.section.apply(cc.comult.col(cp));
      Vec rhsAmb = zeroVec(dC * dA);
      for (int c1 = 0; c1 < dC; ++c1)
        for (int c2 = 0; c2 < dC; ++c2) {
          const Scalar& ci = dcp[c1 * dC + c2];
          if (ci.isZero()) continue;
          Vec g = gamma.apply(cc.tensorRR.projection.apply(
              kronVec(unitVec(dC, c), unitVec(dC, c1))));
          Vec rg = d.a.comod.tensorCM.section.apply(
              d.a.coaction().apply(g));
          for (int u = 0; u < dH; ++u)
            for (int v = 0; v < dA; ++v) {
              const Scalar& cg = rg[u * dA + v];
              if (cg.isZero()) continue;
              Vec hc = d.c.hAction.col(u * dC + c2);
              for (int s = 0; s < dC; ++s)
                if (!hc[s].isZero())
                  rhsAmb[s * dA + v] += ci * cg * hc[s];
            }
        }
      push(subVec(dk.tensorCA.projection.apply(lhsAmb),
                  dk.tensorCA.projection.apply(rhsAmb)));
    }
  return out;
}

}  // namespace

Report checkForgetfulSeparable(const DKCoring& dk, const Matrix& gamma,
                               const std::string& subject) {
  Report rep(subject);
  const Coring& cc = dk.d.c.coalg;
  int dA = dk.d.a.alg.dim, dC = dk.d.c.dimC(), dR = dk.d.b.base().dim;
  int q2 = cc.tensorRR.quotDim;
  if (gamma.rows() != dA || gamma.cols() != q2) {
    rep.fail("shape", Witness{{}, {}, {}, "gamma must be dimA x dim(C (x)_R C)"});
    return rep;
  }

  // Right R-linearity.
  {
    bool bad = false;
    for (int r = 0; r < dR && !bad; ++r) {
      Matrix rQuot = cc.tensorRR.projection *
                     Matrix::kron(Matrix::identity(dC),
                                  cc.bim.rightBy(unitVec(dR, r))) *
                     cc.tensorRR.section;
      Matrix lhs = gamma * rQuot;
      Matrix rhs = dk.d.a.alg.rightMult(dk.d.a.sA.col(r)) * gamma;
      if (lhs != rhs) {
        rep.fail("right-linear", Witness{{r}, lhs.col(0), rhs.col(0), ""});
        bad = true;
      }
    }
    if (!bad) rep.ok("right-linear");
  }

  checkMatrixEqual(rep, "counit-splitting", gamma * cc.comult,
                   dk.d.a.sA * cc.counit, {dC});

  // The remaining two conditions, decoded from the combined residual.
  Matrix zero(dA, q2);
  Vec base = forgetfulResidual(dk, gamma);
  int preLen = dR * q2 * dA + dC * dA;
  int bullet2Len = dA * dC * dC * dA;
  {
    bool bad = false;
    for (int i = preLen; i < preLen + bullet2Len; ++i)
      if (!base[i].isZero()) {
        int off = (i - preLen) / dA;
        int a = off / (dC * dC), c = (off / dC) % dC, cp = off % dC;
        rep.fail("left-compatibility", Witness{{a, c, cp}, {}, {}, ""});
        bad = true;
        break;
      }
    if (!bad) rep.ok("left-compatibility");
  }
  {
    bool bad = false;
    int q = dk.tensorCA.quotDim;
    for (size_t i = preLen + bullet2Len; i < base.size(); ++i)
      if (!base[i].isZero()) {
        int off = int(i - preLen - bullet2Len) / q;
        rep.fail("colinearity", Witness{{off / dC, off % dC}, {}, {}, ""});
        bad = true;
        break;
      }
    if (!bad) rep.ok("colinearity");
  }
  return rep;
}

std::optional<Vec> searchInductionCertificate(const DKCoring& dk) {
  int dA = dk.d.a.alg.dim, q = dk.tensorCA.quotDim;
  Matrix sys(dA + dA * q, q);
  Vec rhs = zeroVec(dA + dA * q);
  for (int i = 0; i < dA; ++i) {
    for (int x = 0; x < q; ++x) sys.at(i, x) = dk.coring.counit.at(i, x);
    rhs[i] = dk.d.a.alg.unit[i];
  }
  for (int i = 0; i < dA; ++i) {
    Matrix diff = dk.coring.bim.leftBy(unitVec(dA, i)) -
                  dk.coring.bim.rightBy(unitVec(dA, i));
    for (int r = 0; r < q; ++r)
      for (int x = 0; x < q; ++x)
        sys.at(dA + i * q + r, x) = diff.at(r, x);
  }
  return solve(sys, rhs);
}

std::optional<Matrix> searchForgetfulCertificate(const DKCoring& dk) {
  int dA = dk.d.a.alg.dim;
  int q2 = dk.d.c.coalg.tensorRR.quotDim;
  Matrix zero(dA, q2);
  Vec r0 = forgetfulResidual(dk, zero);
  int rows = int(r0.size()), cols = dA * q2;
  Matrix sys(rows, cols);
  for (int i = 0; i < dA; ++i)
    for (int j = 0; j < q2; ++j) {
      Matrix e(dA, q2);
      e.at(i, j) = Scalar::one();
      Vec col = forgetfulResidual(dk, e);
      for (int r = 0; r < rows; ++r) sys.at(r, i * q2 + j) = col[r] - r0[r];
    }
  Vec rhs = zeroVec(rows);
  for (int r = 0; r < rows; ++r) rhs[r] = -r0[r];
  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  Matrix gamma(dA, q2);
  for (int i = 0; i < dA; ++i)
    for (int j = 0; j < q2; ++j) gamma.at(i, j) = (*sol)[i * q2 + j];
  return gamma;
}

}  // namespace qgdk
