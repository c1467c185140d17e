#include "qgdk/bialgebroid.hpp"

#include <stdexcept>

namespace qgdk {

RBimodule ReRing::coringBimodule() const {
  int dH = total.dim, dR = base.dim;
  RBimodule bim;
  bim.base = base;
  bim.dim = dH;
  bim.left = Matrix(dH, dR * dH);   // r . h = s(r) h
  bim.right = Matrix(dH, dH * dR);  // h . r = t(r) h
  for (int r = 0; r < dR; ++r) {
    Matrix ls = total.leftMult(source.col(r));
    Matrix lt = total.leftMult(target.col(r));
    for (int h = 0; h < dH; ++h) {
      bim.left.setCol(r * dH + h, ls.col(h));
      bim.right.setCol(h * dR + r, lt.col(h));
    }
  }
  return bim;
}

Vec Bialgebroid::takeuchiProduct(const Vec& x, const Vec& y) const {
  return pairProductQuot(re.total, re.total, coring.tensorRR, x, y);
}

Vec Bialgebroid::unitTensor() const {
  return coring.tensorRR.projection.apply(
      kronVec(re.total.unit, re.total.unit));
}

Bialgebroid makeBialgebroid(ReRing re, Matrix comultQuot, Matrix counit) {
  Bialgebroid b;
  RBimodule bim = re.coringBimodule();
  b.coring = Coring::make(std::move(bim), std::move(comultQuot), std::move(counit));
  b.takeuchi = takeuchiSubspace(b.coring.tensorRR, re.total, re.target,
                                re.total, re.source);
  b.re = std::move(re);
  return b;
}

Report checkRRing(const RRing& r, const std::string& subject) {
  Report rep(subject);
  rep.merge(checkAlgebraMap({r.base, r.total, r.iMap}), "i-map");
  return rep;
}

Report checkReRing(const ReRing& r, const std::string& subject) {
  Report rep(subject);
  int dR = r.base.dim;
  rep.merge(checkAlgebraMap({r.base, r.total, r.source}), "source");

  // Target: unital anti-algebra map, t(ab) = t(b) t(a).
  checkVecEqual(rep, "target-unital", r.target.apply(r.base.unit),
                r.total.unit);
  {
    bool bad = false;
    for (int i = 0; i < dR && !bad; ++i)
      for (int j = 0; j < dR && !bad; ++j) {
        Vec lhs = r.target.apply(r.base.mult.col(i * dR + j));
        Vec rhs = r.total.mul(r.target.col(j), r.target.col(i));
        if (lhs != rhs) {
          rep.fail("target-anti-multiplicative", Witness{{i, j}, lhs, rhs, ""});
          bad = true;
        }
      }
    if (!bad) rep.ok("target-anti-multiplicative");
  }
  {
    bool bad = false;
    for (int i = 0; i < dR && !bad; ++i)
      for (int j = 0; j < dR && !bad; ++j) {
        Vec lhs = r.total.mul(r.source.col(i), r.target.col(j));
        Vec rhs = r.total.mul(r.target.col(j), r.source.col(i));
        if (lhs != rhs) {
          rep.fail("source-target-commute", Witness{{i, j}, lhs, rhs, ""});
          bad = true;
        }
      }
    if (!bad) rep.ok("source-target-commute");
  }
  return rep;
}

Report checkBialgebroid(const Bialgebroid& b, const std::string& subject) {
  Report rep(subject);
  rep.merge(checkReRing(b.re), "re-ring");
  rep.merge(checkCoring(b.coring), "coring");

  const FinAlgebra& h = b.total();
  int dH = h.dim, dR = b.base().dim;

  // Im Delta lies in the Takeuchi product.
  {
    bool bad = false;
    for (int i = 0; i < dH; ++i) {
      if (!b.takeuchi.contains(b.coring.comult.col(i))) {
        rep.fail("takeuchi-membership",
                 Witness{{i}, b.coring.comult.col(i), {}, "Delta(b_i) outside H x_R H"});
        bad = true;
        break;
      }
    }
    if (!bad) rep.ok("takeuchi-membership");
  }

  // Corestricted coproduct is an algebra map.
  checkVecEqual(rep, "comult-unital", b.coring.comult.apply(h.unit),
                b.unitTensor());
  {
    bool bad = false;
    for (int i = 0; i < dH && !bad; ++i)
      for (int j = 0; j < dH && !bad; ++j) {
        Vec lhs = b.coring.comult.apply(h.mult.col(i * dH + j));
        Vec rhs =
            b.takeuchiProduct(b.coring.comult.col(i), b.coring.comult.col(j));
        if (lhs != rhs) {
          rep.fail("comult-multiplicative", Witness{{i, j}, lhs, rhs, ""});
          bad = true;
        }
      }
    if (!bad) rep.ok("comult-multiplicative");
  }

  // eps(1_H) = 1_R.
  checkVecEqual(rep, "counit-unital", b.coring.counit.apply(h.unit),
                b.base().unit);

  // eps(gh) = eps(g s(eps(h))) = eps(g t(eps(h))).
  {
    bool bad = false;
    for (int i = 0; i < dH && !bad; ++i)
      for (int j = 0; j < dH && !bad; ++j) {
        Vec full = b.coring.counit.apply(h.mult.col(i * dH + j));
        Vec viaS = b.coring.counit.apply(
            h.mul(unitVec(dH, i), b.re.source.apply(b.coring.counit.col(j))));
        Vec viaT = b.coring.counit.apply(
            h.mul(unitVec(dH, i), b.re.target.apply(b.coring.counit.col(j))));
        if (full != viaS || full != viaT) {
          rep.fail("counit-projection", Witness{{i, j}, full, viaS, "eq. (25)"});
          bad = true;
        }
      }
    if (!bad) rep.ok("counit-projection");
  }
  (void)dR;
  return rep;
}

Bialgebroid fromWeakHopf(const WeakHopf& h, const BaseAlgebra& base) {
  ReRing re;
  re.base = base.rAlg;
  re.total = h.alg;
  re.source = base.inclusion;
  re.target = h.antipodeInv * base.inclusion;
  RBimodule bim = re.coringBimodule();
  QuotientSpace t = tensorOverBase(bim.dim, bim.right, re.base.dim, bim.dim,
                                   bim.left);
  Matrix comult = t.projection * h.coa.comult;
  Matrix counit = base.coordsR * base.piL;
  return makeBialgebroid(std::move(re), std::move(comult), std::move(counit));
}

WeakBialgebra toWeakBialgebra(const Bialgebroid& b, const Vec& eRR,
                              const Matrix& phi) {
  Report sep = checkSeparabilityIdempotent(b.base(), eRR, phi);
  if (!sep.pass())
    throw std::runtime_error("toWeakBialgebra: invalid (e, phi) pair");
  const RBimodule& bim = b.coring.bim;
  Matrix sigma = sectionSigma(eRR, b.base().dim, bim.dim, bim.right, bim.dim,
                              bim.left, b.coring.tensorRR);
  WeakBialgebra w;
  w.alg = b.total();
  w.coa.dim = b.total().dim;
  w.coa.comult = sigma * b.coring.comult;
  w.coa.counit = phi * b.coring.counit;
  return w;
}

Matrix triangleActionMatrix(const Bialgebroid& b, const Vec& h) {
  int dR = b.base().dim;
  Matrix m(dR, dR);
  Matrix lh = b.total().leftMult(h);
  for (int a = 0; a < dR; ++a) {
    Vec viaS = b.coring.counit.apply(lh.apply(b.re.source.col(a)));
    Vec viaT = b.coring.counit.apply(lh.apply(b.re.target.col(a)));
    if (viaS != viaT)
      throw std::runtime_error(
          "triangleAction: eps(h s(a)) != eps(h t(a)); not a bialgebroid");
    m.setCol(a, viaS);
  }
  return m;
}

Vec triangleAction(const Bialgebroid& b, const Vec& h, const Vec& aR) {
  return triangleActionMatrix(b, h).apply(aR);
}

}  // namespace qgdk
