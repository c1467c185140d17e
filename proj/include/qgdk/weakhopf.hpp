#pragma once

#include "qgdk/findim.hpp"

namespace qgdk {

// Weak bialgebra: algebra + coalgebra on the same space, multiplicative
// coproduct, weakened counit and unit laws.
struct WeakBialgebra {
  FinAlgebra alg;
  FinCoalgebra coa;
};

struct WeakHopf {
  FinAlgebra alg;
  FinCoalgebra coa;
  Matrix antipode;
  Matrix antipodeInv;

  WeakBialgebra bialgebra() const { return {alg, coa}; }
};

// Pi^L(g) = eps(1_(1) g) 1_(2) and Pi^R(g) = eps(g 1_(2)) 1_(1).
Matrix piLMatrix(const FinAlgebra& alg, const FinCoalgebra& coa);
Matrix piRMatrix(const FinAlgebra& alg, const FinCoalgebra& coa);

Report checkWeakBialgebra(const WeakBialgebra& h,
                          const std::string& subject = "weak-bialgebra");
Report checkWeakHopf(const WeakHopf& h, const std::string& subject = "weak-hopf");

// The base algebra R = Im Pi^L with its canonical data: echelon basis,
// inclusion/coordinate maps, separability idempotent e = S(1_(1)) (x) 1_(2)
// in R (x) R coordinates and the Frobenius functional phi = eps|_R.
struct BaseAlgebra {
  Subspace rSpan;       // inside H
  Matrix inclusion;     // dimH x dimR, columns = r-basis vectors
  Matrix coordsR;       // dimR x dimH, left inverse of `inclusion` on R
  FinAlgebra rAlg;
  Vec idempotentE;      // in k^{dimR^2}
  Matrix frobeniusPhi;  // 1 x dimR
  Matrix piL;
  Matrix piR;

  int dimR() const { return rAlg.dim; }
};

// Fails with an exception when the image of Pi^L is not closed under the
// product or the separability/Frobenius identities do not hold; for a
// valid weak Hopf algebra this cannot happen.
BaseAlgebra extractBase(const WeakHopf& h);

// Verifies that e (in R (x) R coordinates) is a separability idempotent
// and (e, phi) a Frobenius pair for R.
Report checkSeparabilityIdempotent(const FinAlgebra& r, const Vec& e,
                                   const Matrix& phi,
                                   const std::string& subject = "idempotent");

// The section sigma(m (x)_R n) = m.e1 (x) e2.n of the canonical projection,
// as an (ambient x quotDim) matrix.  Throws if proj . sigma != id.
Matrix sectionSigma(const Vec& eRR, int dimR, int dimM, const Matrix& rightM,
                    int dimN, const Matrix& leftN, const QuotientSpace& t);

}  // namespace qgdk
