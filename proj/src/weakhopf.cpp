#include "qgdk/weakhopf.hpp"

#include <stdexcept>

namespace qgdk {

namespace {

// Entry-wise product on a tensor power of the same algebra.
Vec tensorPowerProduct(const FinAlgebra& a, int legs, const Vec& x,
                       const Vec& y) {
  int d = a.dim;
  int total = 1;
  for (int i = 0; i < legs; ++i) total *= d;
  Vec out = zeroVec(total);
  auto digits = [&](int idx) {
    std::vector<int> dg(legs);
    for (int i = legs - 1; i >= 0; --i) {
      dg[i] = idx % d;
      idx /= d;
    }
    return dg;
  };
  for (int ix = 0; ix < total; ++ix) {
    if (x[ix].isZero()) continue;
    auto dx = digits(ix);
    for (int iy = 0; iy < total; ++iy) {
      if (y[iy].isZero()) continue;
      auto dy = digits(iy);
      Scalar co = x[ix] * y[iy];
      // Accumulate the product leg by leg.
      std::vector<std::pair<int, Scalar>> acc = {{0, co}};
      for (int l = 0; l < legs; ++l) {
        Vec prod = a.mult.col(dx[l] * d + dy[l]);
        std::vector<std::pair<int, Scalar>> next;
        for (const auto& [idx, c] : acc)
          for (int u = 0; u < d; ++u)
            if (!prod[u].isZero()) next.push_back({idx * d + u, c * prod[u]});
        acc = std::move(next);
        if (acc.empty()) break;
      }
      for (const auto& [idx, c] : acc) out[idx] += c;
    }
  }
  return out;
}

}  // namespace

Matrix piLMatrix(const FinAlgebra& alg, const FinCoalgebra& coa) {
  int d = alg.dim;
  Vec d1 = coa.comult.apply(alg.unit);
  Matrix pi(d, d);
  for (int u = 0; u < d; ++u)
    for (int v = 0; v < d; ++v) {
      const Scalar& t = d1[u * d + v];
      if (t.isZero()) continue;
      for (int g = 0; g < d; ++g) {
        Scalar e = coa.counit.apply(alg.mult.col(u * d + g))[0];
        if (!e.isZero()) pi.at(v, g) += t * e;
      }
    }
  return pi;
}

Matrix piRMatrix(const FinAlgebra& alg, const FinCoalgebra& coa) {
  int d = alg.dim;
  Vec d1 = coa.comult.apply(alg.unit);
  Matrix pi(d, d);
  for (int u = 0; u < d; ++u)
    for (int v = 0; v < d; ++v) {
      const Scalar& t = d1[u * d + v];
      if (t.isZero()) continue;
      for (int g = 0; g < d; ++g) {
        Scalar e = coa.counit.apply(alg.mult.col(g * d + v))[0];
        if (!e.isZero()) pi.at(u, g) += t * e;
      }
    }
  return pi;
}

Report checkWeakBialgebra(const WeakBialgebra& h, const std::string& subject) {
  Report rep(subject);
  const FinAlgebra& alg = h.alg;
  const FinCoalgebra& coa = h.coa;
  int d = alg.dim;
  if (coa.dim != d) {
    rep.fail("dimensions", Witness{{}, {}, {}, "algebra/coalgebra dim"});
    return rep;
  }
  rep.merge(checkAlgebra(alg), "algebra");
  rep.merge(checkCoalgebra(coa), "coalgebra");

  // Delta(xy) = Delta(x) Delta(y).
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Vec lhs = coa.comult.apply(alg.mult.col(i * d + j));
      Vec rhs = tensorPowerProduct(alg, 2, coa.comult.col(i), coa.comult.col(j));
      if (lhs != rhs) {
        rep.fail("comult-multiplicative", Witness{{i, j}, lhs, rhs, ""});
        goto after_mult;
      }
    }
  }
  rep.ok("comult-multiplicative");
after_mult:

  // eps(xyz) = eps(x y1) eps(y2 z) = eps(x y2) eps(y1 z).
  {
    Matrix epsMul = coa.counit * alg.mult;  // 1 x d^2
    bool done = false;
    for (int x = 0; x < d && !done; ++x)
      for (int y = 0; y < d && !done; ++y)
        for (int z = 0; z < d && !done; ++z) {
          Scalar full =
              coa.counit.apply(alg.mult.apply(kronVec(
                  unitVec(d, x), alg.mult.col(y * d + z))))[0];
          Vec dy = coa.comult.col(y);
          Scalar s1 = Scalar::zero(), s2 = Scalar::zero();
          for (int y1 = 0; y1 < d; ++y1)
            for (int y2 = 0; y2 < d; ++y2) {
              const Scalar& c = dy[y1 * d + y2];
              if (c.isZero()) continue;
              s1 += c * epsMul.at(0, x * d + y1) * epsMul.at(0, y2 * d + z);
              s2 += c * epsMul.at(0, x * d + y2) * epsMul.at(0, y1 * d + z);
            }
          if (full != s1 || full != s2) {
            rep.fail("weak-counit",
                     Witness{{x, y, z}, {full}, {s1, s2}, ""});
            done = true;
          }
        }
    if (!done) rep.ok("weak-counit");
  }

  // (Delta (x) H) Delta(1) = (Delta(1) (x) 1)(1 (x) Delta(1)) and swapped.
  {
    Vec d1 = coa.comult.apply(alg.unit);
    Vec lhs = Matrix::kron(coa.comult, Matrix::identity(d)).apply(d1);
    Vec a = kronVec(d1, alg.unit);
    Vec b = kronVec(alg.unit, d1);
    Vec rhs1 = tensorPowerProduct(alg, 3, a, b);
    Vec rhs2 = tensorPowerProduct(alg, 3, b, a);
    checkVecEqual(rep, "weak-unit", lhs, rhs1);
    checkVecEqual(rep, "weak-unit-swapped", lhs, rhs2);
  }
  return rep;
}

Report checkWeakHopf(const WeakHopf& h, const std::string& subject) {
  Report rep = checkWeakBialgebra(h.bialgebra(), subject);
  const FinAlgebra& alg = h.alg;
  const FinCoalgebra& coa = h.coa;
  int d = alg.dim;
  if (!rep.pass()) return rep;

  Matrix id = Matrix::identity(d);
  Matrix piL = piLMatrix(alg, coa);
  Matrix piR = piRMatrix(alg, coa);
  checkMatrixEqual(rep, "antipode-left",
                   alg.mult * Matrix::kron(id, h.antipode) * coa.comult, piL,
                   {d});
  checkMatrixEqual(rep, "antipode-right",
                   alg.mult * Matrix::kron(h.antipode, id) * coa.comult, piR,
                   {d});
  {
    Matrix delta2 = Matrix::kron(coa.comult, id) * coa.comult;  // d^3 x d
    Matrix mid = Matrix::kron(h.antipode, Matrix::kron(id, h.antipode));
    Matrix lhs = alg.mult * Matrix::kron(alg.mult, id) * mid * delta2;
    checkMatrixEqual(rep, "antipode-triple", lhs, h.antipode, {d});
  }
  checkMatrixEqual(rep, "antipode-invertible", h.antipodeInv * h.antipode, id,
                   {d});
  checkMatrixEqual(rep, "antipode-invertible-r", h.antipode * h.antipodeInv,
                   id, {d});
  return rep;
}

Report checkSeparabilityIdempotent(const FinAlgebra& r, const Vec& e,
                                   const Matrix& phi,
                                   const std::string& subject) {
  Report rep(subject);
  int d = r.dim;
  checkVecEqual(rep, "mult-collapse", r.mult.apply(e), r.unit);
  Matrix id = Matrix::identity(d);
  for (int i = 0; i < d; ++i) {
    Vec er = unitVec(d, i);
    Vec lhs = Matrix::kron(r.leftMult(er), id).apply(e);
    Vec rhs = Matrix::kron(id, r.rightMult(er)).apply(e);
    if (lhs != rhs) {
      rep.fail("centrality", Witness{{i}, lhs, rhs, ""});
      break;
    }
    if (i == d - 1) rep.ok("centrality");
  }
  checkVecEqual(rep, "frobenius-left", Matrix::kron(phi, id).apply(e), r.unit);
  checkVecEqual(rep, "frobenius-right", Matrix::kron(id, phi).apply(e), r.unit);
  return rep;
}

BaseAlgebra extractBase(const WeakHopf& h) {
  const FinAlgebra& alg = h.alg;
  const FinCoalgebra& coa = h.coa;
  int d = alg.dim;
  BaseAlgebra base;
  base.piL = piLMatrix(alg, coa);
  base.piR = piRMatrix(alg, coa);
  base.rSpan = image(base.piL);
  int dR = base.rSpan.dim();

  base.inclusion = Matrix(d, dR);
  for (int j = 0; j < dR; ++j) base.inclusion.setCol(j, base.rSpan.basisVector(j));
  // On an echelon basis the coordinates are read off at the pivot columns.
  base.coordsR = Matrix(dR, d);
  for (int j = 0; j < dR; ++j)
    base.coordsR.at(j, base.rSpan.pivots()[j]) = Scalar::one();

  // Structure constants of R; closure of the subalgebra is verified here.
  FinAlgebra r;
  r.dim = dR;
  r.mult = Matrix(dR, dR * dR);
  for (int i = 0; i < dR; ++i)
    for (int j = 0; j < dR; ++j) {
      Vec prod = alg.mul(base.rSpan.basisVector(i), base.rSpan.basisVector(j));
      auto co = base.rSpan.coords(prod);
      if (!co)
        throw std::runtime_error("extractBase: Im Pi^L not closed under product");
      r.mult.setCol(i * dR + j, *co);
    }
  auto unitCo = base.rSpan.coords(alg.unit);
  if (!unitCo) throw std::runtime_error("extractBase: 1_H not in Im Pi^L");
  r.unit = *unitCo;
  base.rAlg = std::move(r);

  // e = S(1_(1)) (x) 1_(2), expressed in R (x) R coordinates.
  Vec d1 = coa.comult.apply(alg.unit);
  Vec eH = Matrix::kron(h.antipode, Matrix::identity(d)).apply(d1);
  Vec eRR = Matrix::kron(base.coordsR, base.coordsR).apply(eH);
  if (Matrix::kron(base.inclusion, base.inclusion).apply(eRR) != eH)
    throw std::runtime_error("extractBase: e does not lie in R (x) R");
  base.idempotentE = std::move(eRR);
  base.frobeniusPhi = coa.counit * base.inclusion;

  Report sep =
      checkSeparabilityIdempotent(base.rAlg, base.idempotentE, base.frobeniusPhi);
  if (!sep.pass())
    throw std::runtime_error(
        "extractBase: separability/Frobenius verification failed");
  return base;
}

Matrix sectionSigma(const Vec& eRR, int dimR, int dimM, const Matrix& rightM,
                    int dimN, const Matrix& leftN, const QuotientSpace& t) {
  Matrix sig(dimM * dimN, dimM * dimN);
  for (int s = 0; s < dimR; ++s)
    for (int u = 0; u < dimR; ++u) {
      const Scalar& c = eRR[s * dimR + u];
      if (c.isZero()) continue;
      Matrix rm(dimM, dimM);  // m -> m . r_s
      for (int m = 0; m < dimM; ++m) rm.setCol(m, rightM.col(m * dimR + s));
      Matrix ln(dimN, dimN);  // n -> r_u . n
      for (int n = 0; n < dimN; ++n) ln.setCol(n, leftN.col(u * dimN + n));
      Matrix term = Matrix::kron(rm, ln);
      for (int i = 0; i < term.rows(); ++i)
        for (int j = 0; j < term.cols(); ++j)
          if (!term.at(i, j).isZero()) sig.at(i, j) += c * term.at(i, j);
    }
  Matrix sigma = sig * t.section;
  if (t.projection * sigma != Matrix::identity(t.quotDim))
    throw std::runtime_error("sectionSigma: proj . sigma != id");
  return sigma;
}

}  // namespace qgdk
