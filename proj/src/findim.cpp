#include "qgdk/findim.hpp"

#include <stdexcept>

namespace qgdk {

Matrix FinAlgebra::leftMult(const Vec& a) const {
  Matrix m(dim, dim, prime());
  for (int j = 0; j < dim; ++j) {
    Vec c = zeroVec(dim, prime());
    for (int i = 0; i < dim; ++i)
      if (!a[i].isZero()) c = addVec(c, scaleVec(a[i], mult.col(i * dim + j)));
    m.setCol(j, c);
  }
  return m;
}

Matrix FinAlgebra::rightMult(const Vec& a) const {
  Matrix m(dim, dim, prime());
  for (int j = 0; j < dim; ++j) {
    Vec c = zeroVec(dim, prime());
    for (int i = 0; i < dim; ++i)
      if (!a[i].isZero()) c = addVec(c, scaleVec(a[i], mult.col(j * dim + i)));
    m.setCol(j, c);
  }
  return m;
}

std::string FinAlgebra::name(int i) const {
  if (i >= 0 && i < int(basisNames.size())) return basisNames[i];
  return "b" + std::to_string(i);
}

Matrix RBimodule::leftBy(const Vec& r) const {
  Matrix m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    Vec c = zeroVec(dim);
    for (int i = 0; i < base.dim; ++i)
      if (!r[i].isZero()) c = addVec(c, scaleVec(r[i], left.col(i * dim + j)));
    m.setCol(j, c);
  }
  return m;
}

Matrix RBimodule::rightBy(const Vec& r) const {
  Matrix m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    Vec c = zeroVec(dim);
    for (int i = 0; i < base.dim; ++i)
      if (!r[i].isZero())
        c = addVec(c, scaleVec(r[i], right.col(j * base.dim + i)));
    m.setCol(j, c);
  }
  return m;
}

RBimodule regularBimodule(const FinAlgebra& r) {
  // With the (i,j) -> i*dim+j convention the multiplication matrix serves
  // as both action tensors.
  return RBimodule{r, r.dim, r.mult, r.mult};
}

QuotientSpace tensorOverBase(int dimM, const Matrix& rightM, int dimR,
                             int dimN, const Matrix& leftN) {
  std::vector<Vec> rels;
  rels.reserve(size_t(dimM) * dimR * dimN);
  for (int m = 0; m < dimM; ++m)
    for (int r = 0; r < dimR; ++r) {
      Vec mr = rightM.col(m * dimR + r);
      for (int n = 0; n < dimN; ++n) {
        Vec rn = leftN.col(r * dimN + n);
        Vec rel = zeroVec(dimM * dimN);
        for (int i = 0; i < dimM; ++i)
          if (!mr[i].isZero()) rel[i * dimN + n] += mr[i];
        for (int j = 0; j < dimN; ++j)
          if (!rn[j].isZero()) rel[m * dimN + j] -= rn[j];
        if (!isZeroVec(rel)) rels.push_back(std::move(rel));
      }
    }
  return QuotientSpace::make(dimM * dimN,
                             Subspace::fromVectors(dimM * dimN, rels));
}

QuotientSpace tripleTensorOverBase(int d1, const Matrix& right1, int dimR,
                                   int d2, const Matrix& left2,
                                   const Matrix& right2, int d3,
                                   const Matrix& left3) {
  int amb = d1 * d2 * d3;
  std::vector<Vec> rels;
  // Balancing between legs 1 and 2, with leg 3 free.
  for (int m = 0; m < d1; ++m)
    for (int r = 0; r < dimR; ++r) {
      Vec mr = right1.col(m * dimR + r);
      for (int n = 0; n < d2; ++n) {
        Vec rn = left2.col(r * d2 + n);
        for (int q = 0; q < d3; ++q) {
          Vec rel = zeroVec(amb);
          for (int i = 0; i < d1; ++i)
            if (!mr[i].isZero()) rel[(i * d2 + n) * d3 + q] += mr[i];
          for (int j = 0; j < d2; ++j)
            if (!rn[j].isZero()) rel[(m * d2 + j) * d3 + q] -= rn[j];
          if (!isZeroVec(rel)) rels.push_back(std::move(rel));
        }
      }
    }
  // Balancing between legs 2 and 3, with leg 1 free.
  for (int n = 0; n < d2; ++n)
    for (int r = 0; r < dimR; ++r) {
      Vec nr = right2.col(n * dimR + r);
      for (int q = 0; q < d3; ++q) {
        Vec rq = left3.col(r * d3 + q);
        for (int m = 0; m < d1; ++m) {
          Vec rel = zeroVec(amb);
          for (int j = 0; j < d2; ++j)
            if (!nr[j].isZero()) rel[(m * d2 + j) * d3 + q] += nr[j];
          for (int l = 0; l < d3; ++l)
            if (!rq[l].isZero()) rel[(m * d2 + n) * d3 + l] -= rq[l];
          if (!isZeroVec(rel)) rels.push_back(std::move(rel));
        }
      }
    }
  return QuotientSpace::make(amb, Subspace::fromVectors(amb, rels));
}

Coring Coring::make(RBimodule bim, Matrix comult, Matrix counit) {
  Coring c;
  c.base = bim.base;
  c.tensorRR =
      tensorOverBase(bim.dim, bim.right, bim.base.dim, bim.dim, bim.left);
  c.bim = std::move(bim);
  c.comult = std::move(comult);
  c.counit = std::move(counit);
  if (c.comult.rows() != c.tensorRR.quotDim || c.comult.cols() != c.bim.dim)
    throw std::invalid_argument("Coring: comult shape");
  if (c.counit.rows() != c.base.dim || c.counit.cols() != c.bim.dim)
    throw std::invalid_argument("Coring: counit shape");
  return c;
}

CoringComodule CoringComodule::make(Coring coring, int dimM, Matrix leftAction,
                                    Matrix coaction) {
  CoringComodule m;
  m.tensorCM = tensorOverBase(coring.dim(), coring.bim.right, coring.base.dim,
                              dimM, leftAction);
  m.coring = std::move(coring);
  m.dimM = dimM;
  m.leftAction = std::move(leftAction);
  m.coaction = std::move(coaction);
  if (m.coaction.rows() != m.tensorCM.quotDim || m.coaction.cols() != dimM)
    throw std::invalid_argument("CoringComodule: coaction shape");
  return m;
}

Report checkAlgebra(const FinAlgebra& a, const std::string& subject) {
  Report rep(subject);
  int d = a.dim;
  unsigned long p = a.prime();
  Matrix id = Matrix::identity(d, p);
  checkMatrixEqual(rep, "associativity",
                   a.mult * Matrix::kron(a.mult, id),
                   a.mult * Matrix::kron(id, a.mult), {d, d, d});
  checkMatrixEqual(rep, "left-unit", a.leftMult(a.unit), id, {d});
  checkMatrixEqual(rep, "right-unit", a.rightMult(a.unit), id, {d});
  return rep;
}

Report checkCoalgebra(const FinCoalgebra& c, const std::string& subject) {
  Report rep(subject);
  int d = c.dim;
  Matrix id = Matrix::identity(d);
  checkMatrixEqual(rep, "coassociativity",
                   Matrix::kron(c.comult, id) * c.comult,
                   Matrix::kron(id, c.comult) * c.comult, {d});
  checkMatrixEqual(rep, "left-counit", Matrix::kron(c.counit, id) * c.comult,
                   id, {d});
  checkMatrixEqual(rep, "right-counit", Matrix::kron(id, c.counit) * c.comult,
                   id, {d});
  return rep;
}

Report checkAlgebraMap(const AlgebraMap& f, const std::string& subject) {
  Report rep(subject);
  int ds = f.source.dim;
  checkMatrixEqual(rep, "multiplicative", f.matrix * f.source.mult,
                   f.target.mult * Matrix::kron(f.matrix, f.matrix), {ds, ds});
  checkVecEqual(rep, "unital", f.matrix.apply(f.source.unit), f.target.unit);
  return rep;
}

Report checkBimodule(const RBimodule& m, const std::string& subject) {
  Report rep(subject);
  int dR = m.base.dim, dM = m.dim;
  Matrix iR = Matrix::identity(dR), iM = Matrix::identity(dM);
  checkMatrixEqual(rep, "left-unital", m.leftBy(m.base.unit), iM, {dM});
  checkMatrixEqual(rep, "right-unital", m.rightBy(m.base.unit), iM, {dM});
  checkMatrixEqual(rep, "left-associative",
                   m.left * Matrix::kron(m.base.mult, iM),
                   m.left * Matrix::kron(iR, m.left), {dR, dR, dM});
  checkMatrixEqual(rep, "right-associative",
                   m.right * Matrix::kron(iM, m.base.mult),
                   m.right * Matrix::kron(m.right, iR), {dM, dR, dR});
  checkMatrixEqual(rep, "actions-commute",
                   m.right * Matrix::kron(m.left, iR),
                   m.left * Matrix::kron(iR, m.right), {dR, dM, dR});
  return rep;
}

namespace {

// (Delta (x)_R id) resp. (id (x)_R Delta) of a quotient-coordinate element,
// landing in the triple-tensor quotient.
Vec expandLeg(const Coring& c, const QuotientSpace& t3, const Vec& quotElt,
              bool firstLeg) {
  int d = c.dim();
  Vec amb = c.tensorRR.section.apply(quotElt);
  Vec acc = zeroVec(t3.ambient);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Scalar& co = amb[i * d + j];
      if (co.isZero()) continue;
      int leg = firstLeg ? i : j;
      Vec inner = c.tensorRR.section.apply(c.comult.col(leg));
      for (int u = 0; u < d; ++u)
        for (int v = 0; v < d; ++v) {
          const Scalar& ci = inner[u * d + v];
          if (ci.isZero()) continue;
          int idx = firstLeg ? (u * d + v) * d + j : (i * d + u) * d + v;
          acc[idx] += co * ci;
        }
    }
  return t3.projection.apply(acc);
}

}  // namespace

Report checkCoring(const Coring& c, const std::string& subject) {
  Report rep(subject);
  int dR = c.base.dim, dC = c.dim();
  rep.merge(checkBimodule(c.bim), "bimodule");

  // R-bilinearity of the coproduct and counit.
  for (int r = 0; r < dR && rep.pass(); ++r) {
    Vec er = unitVec(dR, r);
    Matrix lQuot = c.tensorRR.projection *
                   Matrix::kron(c.bim.leftBy(er), Matrix::identity(dC)) *
                   c.tensorRR.section;
    Matrix rQuot = c.tensorRR.projection *
                   Matrix::kron(Matrix::identity(dC), c.bim.rightBy(er)) *
                   c.tensorRR.section;
    for (int i = 0; i < dC; ++i) {
      checkVecEqual(rep, "comult-left-linear",
                    c.comult.apply(c.bim.leftBy(er).col(i)),
                    lQuot.apply(c.comult.col(i)), {r, i});
      if (!rep.pass()) break;
      checkVecEqual(rep, "comult-right-linear",
                    c.comult.apply(c.bim.rightBy(er).col(i)),
                    rQuot.apply(c.comult.col(i)), {r, i});
      if (!rep.pass()) break;
      checkVecEqual(rep, "counit-left-linear",
                    c.counit.apply(c.bim.leftBy(er).col(i)),
                    c.base.leftMult(er).apply(c.counit.col(i)), {r, i});
      if (!rep.pass()) break;
      checkVecEqual(rep, "counit-right-linear",
                    c.counit.apply(c.bim.rightBy(er).col(i)),
                    c.base.rightMult(er).apply(c.counit.col(i)), {r, i});
      if (!rep.pass()) break;
    }
  }

  // Coassociativity in the triple-tensor quotient.
  QuotientSpace t3 =
      tripleTensorOverBase(dC, c.bim.right, dR, dC, c.bim.left, c.bim.right,
                           dC, c.bim.left);
  for (int i = 0; i < dC; ++i) {
    Vec lhs = expandLeg(c, t3, c.comult.col(i), true);
    Vec rhs = expandLeg(c, t3, c.comult.col(i), false);
    checkVecEqual(rep, "coassociativity", lhs, rhs, {i});
    if (!rep.pass()) break;
  }

  // Counit laws: eps(c1).c2 = c = c1.eps(c2).
  for (int i = 0; i < dC; ++i) {
    Vec amb = c.tensorRR.section.apply(c.comult.col(i));
    Vec lhs = zeroVec(dC), rhs = zeroVec(dC);
    for (int u = 0; u < dC; ++u)
      for (int v = 0; v < dC; ++v) {
        const Scalar& co = amb[u * dC + v];
        if (co.isZero()) continue;
        lhs = addVec(lhs, scaleVec(co, c.bim.left.apply(kronVec(
                                           c.counit.col(u), unitVec(dC, v)))));
        rhs = addVec(rhs, scaleVec(co, c.bim.right.apply(kronVec(
                                           unitVec(dC, u), c.counit.col(v)))));
      }
    checkVecEqual(rep, "left-counit", lhs, unitVec(dC, i), {i});
    checkVecEqual(rep, "right-counit", rhs, unitVec(dC, i), {i});
    if (!rep.pass()) break;
  }
  return rep;
}

Report checkCoringComodule(const CoringComodule& m, const std::string& subject) {
  Report rep(subject);
  const Coring& c = m.coring;
  int dR = c.base.dim, dC = c.dim(), dM = m.dimM;

  // Left R-module laws on M.
  RBimodule trivial{c.base, dM, m.leftAction, Matrix(dM, dM * dR)};
  {
    Report sub("module");
    Matrix iM = Matrix::identity(dM), iR = Matrix::identity(dR);
    checkMatrixEqual(sub, "unital", trivial.leftBy(c.base.unit), iM, {dM});
    checkMatrixEqual(sub, "associative",
                     m.leftAction * Matrix::kron(c.base.mult, iM),
                     m.leftAction * Matrix::kron(iR, m.leftAction),
                     {dR, dR, dM});
    rep.merge(sub, "module");
  }

  // Left R-linearity of the coaction.
  for (int r = 0; r < dR && rep.pass(); ++r) {
    Vec er = unitVec(dR, r);
    Matrix lQuot = m.tensorCM.projection *
                   Matrix::kron(c.bim.leftBy(er), Matrix::identity(dM)) *
                   m.tensorCM.section;
    for (int i = 0; i < dM; ++i) {
      checkVecEqual(rep, "coaction-left-linear",
                    m.coaction.apply(trivial.leftBy(er).col(i)),
                    lQuot.apply(m.coaction.col(i)), {r, i});
      if (!rep.pass()) break;
    }
  }

  // Coassociativity square in C (x)_R C (x)_R M.
  QuotientSpace t3 = tripleTensorOverBase(dC, c.bim.right, dR, dC, c.bim.left,
                                          c.bim.right, dM, m.leftAction);
  for (int i = 0; i < dM; ++i) {
    Vec amb = m.tensorCM.section.apply(m.coaction.col(i));
    Vec lhs = zeroVec(t3.ambient), rhs = zeroVec(t3.ambient);
    for (int u = 0; u < dC; ++u)
      for (int v = 0; v < dM; ++v) {
        const Scalar& co = amb[u * dM + v];
        if (co.isZero()) continue;
        Vec dc = c.tensorRR.section.apply(c.comult.col(u));
        for (int x = 0; x < dC; ++x)
          for (int y = 0; y < dC; ++y) {
            const Scalar& ci = dc[x * dC + y];
            if (!ci.isZero()) lhs[(x * dC + y) * dM + v] += co * ci;
          }
        Vec rm = m.tensorCM.section.apply(m.coaction.col(v));
        for (int x = 0; x < dC; ++x)
          for (int y = 0; y < dM; ++y) {
            const Scalar& ci = rm[x * dM + y];
            if (!ci.isZero()) rhs[(u * dC + x) * dM + y] += co * ci;
          }
      }
    checkVecEqual(rep, "coassociativity", t3.projection.apply(lhs),
                  t3.projection.apply(rhs), {i});
    if (!rep.pass()) break;
  }

  // Counit law: eps(m_{-1}) . m_0 = m.
  for (int i = 0; i < dM; ++i) {
    Vec amb = m.tensorCM.section.apply(m.coaction.col(i));
    Vec acc = zeroVec(dM);
    for (int u = 0; u < dC; ++u)
      for (int v = 0; v < dM; ++v) {
        const Scalar& co = amb[u * dM + v];
        if (co.isZero()) continue;
        acc = addVec(acc, scaleVec(co, m.leftAction.apply(kronVec(
                                           c.counit.col(u), unitVec(dM, v)))));
      }
    checkVecEqual(rep, "counit", acc, unitVec(dM, i), {i});
    if (!rep.pass()) break;
  }
  return rep;
}

Subspace takeuchiSubspace(const QuotientSpace& tensorHA, const FinAlgebra& h,
                          const Matrix& tH, const FinAlgebra& a,
                          const Matrix& sA) {
  int dR = tH.cols();
  int q = tensorHA.quotDim;
  Matrix stacked(dR * q, q);
  for (int r = 0; r < dR; ++r) {
    Matrix cond =
        tensorHA.projection *
        (Matrix::kron(h.rightMult(tH.col(r)), Matrix::identity(a.dim)) -
         Matrix::kron(Matrix::identity(h.dim), a.rightMult(sA.col(r)))) *
        tensorHA.section;
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j) stacked.at(r * q + i, j) = cond.at(i, j);
  }
  return kernel(stacked);
}

Vec pairProductAmbient(const FinAlgebra& h, const FinAlgebra& a, const Vec& x,
                       const Vec& y) {
  int dH = h.dim, dA = a.dim;
  Vec out = zeroVec(dH * dA);
  for (int h1 = 0; h1 < dH; ++h1)
    for (int a1 = 0; a1 < dA; ++a1) {
      const Scalar& cx = x[h1 * dA + a1];
      if (cx.isZero()) continue;
      for (int h2 = 0; h2 < dH; ++h2)
        for (int a2 = 0; a2 < dA; ++a2) {
          const Scalar& cy = y[h2 * dA + a2];
          if (cy.isZero()) continue;
          Scalar co = cx * cy;
          Vec hp = h.mult.col(h1 * dH + h2);
          Vec ap = a.mult.col(a1 * dA + a2);
          for (int u = 0; u < dH; ++u) {
            if (hp[u].isZero()) continue;
            for (int v = 0; v < dA; ++v)
              if (!ap[v].isZero()) out[u * dA + v] += co * hp[u] * ap[v];
          }
        }
    }
  return out;
}

Vec pairProductQuot(const FinAlgebra& h, const FinAlgebra& a,
                    const QuotientSpace& tensorHA, const Vec& x, const Vec& y) {
  return tensorHA.projection.apply(pairProductAmbient(
      h, a, tensorHA.section.apply(x), tensorHA.section.apply(y)));
}

}  // namespace qgdk
