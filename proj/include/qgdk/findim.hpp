#pragma once

#include <string>
#include <vector>

#include "qgdk/linalg.hpp"
#include "qgdk/report.hpp"

namespace qgdk {

// Finite-dimensional unital algebra given by structure constants.
// `mult` is the dim x dim^2 matrix of the multiplication map, so column
// i*dim+j holds the coordinates of b_i * b_j.
struct FinAlgebra {
  int dim = 0;
  std::vector<std::string> basisNames;
  Matrix mult;
  Vec unit;

  unsigned long prime() const { return unit.empty() ? 0 : unit[0].prime(); }
  Vec mul(const Vec& a, const Vec& b) const { return mult.apply(kronVec(a, b)); }
  Matrix leftMult(const Vec& a) const;   // x -> a x
  Matrix rightMult(const Vec& a) const;  // x -> x a
  std::string name(int i) const;
};

// Counital coalgebra: `comult` is dim^2 x dim (column i = Delta(b_i)),
// `counit` is 1 x dim.
struct FinCoalgebra {
  int dim = 0;
  Matrix comult;
  Matrix counit;
};

struct AlgebraMap {
  FinAlgebra source, target;
  Matrix matrix;  // target.dim x source.dim
};

// R-bimodule on k^dim: left action column (r*dim + m) = b_r . m_m,
// right action column (m*dimR + r) = m_m . b_r.
struct RBimodule {
  FinAlgebra base;
  int dim = 0;
  Matrix left;
  Matrix right;

  Matrix leftBy(const Vec& r) const;   // m -> r . m
  Matrix rightBy(const Vec& r) const;  // m -> m . r
};

// Regular bimodule of R over itself.
RBimodule regularBimodule(const FinAlgebra& r);

// M (x)_R N for a right R-module M and left R-module N: the quotient of
// k^{dimM*dimN} by the span of (m.r)(x)n - m(x)(r.n) over all basis triples.
QuotientSpace tensorOverBase(int dimM, const Matrix& rightM, int dimR,
                             int dimN, const Matrix& leftN);

// Quotient of k^{d1 d2 d3} by balancing relations in both adjacent pairs;
// this is (M (x)_R N) (x)_R P and literally equals M (x)_R (N (x)_R P).
QuotientSpace tripleTensorOverBase(int d1, const Matrix& right1, int dimR,
                                   int d2, const Matrix& left2,
                                   const Matrix& right2, int d3,
                                   const Matrix& left3);

// Coring over R: comodule structure in R-bimodules.  `comult` maps into the
// coordinates of the precomputed C (x)_R C quotient; `counit` is dimR x dimC.
struct Coring {
  FinAlgebra base;
  RBimodule bim;
  QuotientSpace tensorRR;
  Matrix comult;
  Matrix counit;

  int dim() const { return bim.dim; }
  static Coring make(RBimodule bim, Matrix comult, Matrix counit);
};

// Left comodule of a coring: a left R-module with coaction into the
// C (x)_R M quotient coordinates.
struct CoringComodule {
  Coring coring;
  int dimM = 0;
  Matrix leftAction;  // dimM x (dimR*dimM)
  QuotientSpace tensorCM;
  Matrix coaction;  // tensorCM.quotDim x dimM

  static CoringComodule make(Coring coring, int dimM, Matrix leftAction,
                             Matrix coaction);
};

Report checkAlgebra(const FinAlgebra& a, const std::string& subject = "algebra");
Report checkCoalgebra(const FinCoalgebra& c,
                      const std::string& subject = "coalgebra");
Report checkAlgebraMap(const AlgebraMap& f,
                       const std::string& subject = "algebra-map");
Report checkBimodule(const RBimodule& m,
                     const std::string& subject = "bimodule");
Report checkCoring(const Coring& c, const std::string& subject = "coring");
Report checkCoringComodule(const CoringComodule& m,
                           const std::string& subject = "coring-comodule");

// Takeuchi product H x_R A inside the quotient H (x)_R A: the subspace on
// which right multiplication by t_H(r) on the first leg agrees with right
// multiplication by s_A(r) on the second, for every basis r.
Subspace takeuchiSubspace(const QuotientSpace& tensorHA, const FinAlgebra& h,
                          const Matrix& tH, const FinAlgebra& a,
                          const Matrix& sA);

// Leg-wise product of x, y in the ambient H (x) A coordinates.
Vec pairProductAmbient(const FinAlgebra& h, const FinAlgebra& a, const Vec& x,
                       const Vec& y);

// Product of quotient-coordinate elements of H (x)_R A via section
// representatives; well defined on the Takeuchi subspace.
Vec pairProductQuot(const FinAlgebra& h, const FinAlgebra& a,
                    const QuotientSpace& tensorHA, const Vec& x, const Vec& y);

}  // namespace qgdk
