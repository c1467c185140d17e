#pragma once

#include "qgdk/findim.hpp"
#include "qgdk/weakhopf.hpp"

namespace qgdk {

struct RRing {
  FinAlgebra base;   // R
  FinAlgebra total;  // A
  Matrix iMap;       // s_A : R -> A, total.dim x base.dim
};

// R^e-ring: total algebra with commuting source and target maps; the
// target is an algebra map from R^op, stored as a plain matrix.
struct ReRing {
  FinAlgebra base;   // R
  FinAlgebra total;  // H
  Matrix source;     // dimH x dimR
  Matrix target;     // dimH x dimR

  // Bimodule r.h.r' = s(r) t(r') h.
  RBimodule coringBimodule() const;
};

struct Bialgebroid {
  ReRing re;
  Coring coring;      // over R, on the total space
  Subspace takeuchi;  // H x_R H inside coring.tensorRR

  const FinAlgebra& total() const { return re.total; }
  const FinAlgebra& base() const { return re.base; }
  // Product of Takeuchi-subspace elements in quotient coordinates.
  Vec takeuchiProduct(const Vec& x, const Vec& y) const;
  Vec unitTensor() const;  // 1 (x)_R 1 in quotient coordinates
};

Bialgebroid makeBialgebroid(ReRing re, Matrix comultQuot, Matrix counit);

Report checkReRing(const ReRing& r, const std::string& subject = "re-ring");
Report checkRRing(const RRing& r, const std::string& subject = "r-ring");
Report checkBialgebroid(const Bialgebroid& b,
                        const std::string& subject = "bialgebroid");

// The bialgebroid of a weak Hopf algebra: s = inclusion of R = Im Pi^L,
// t = S^{-1} on R, coproduct can . Delta, counit Pi^L in R coordinates.
Bialgebroid fromWeakHopf(const WeakHopf& h, const BaseAlgebra& base);

// Partial converse: a weak bialgebra structure on the total space from a
// separability idempotent / Frobenius pair (e, phi) for R.
WeakBialgebra toWeakBialgebra(const Bialgebroid& b, const Vec& eRR,
                              const Matrix& phi);

// h |> a = eps(h s(a)); verifies the t-form agrees and throws otherwise.
Vec triangleAction(const Bialgebroid& b, const Vec& h, const Vec& aR);
// Matrix of |> as a map R -> R for a fixed h.
Matrix triangleActionMatrix(const Bialgebroid& b, const Vec& h);

}  // namespace qgdk
