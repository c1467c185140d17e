#pragma once

#include <optional>

#include "qgdk/bialgebroid.hpp"

namespace qgdk {

// ---------------------------------------------------------------------------
// Bialgebroid flavour
// ---------------------------------------------------------------------------

// Left H-module coalgebra over a bialgebroid: an R-coring C whose bimodule
// structure r.c.r' = s_H(r) t_H(r') . c is induced from a left H-action.
struct ModuleCoalgebraB {
  Bialgebroid b;
  Matrix hAction;  // dimC x (dimH * dimC), column (h*dimC + c) = b_h . c
  Coring coalg;    // C as an R-coring

  int dimC() const { return coalg.dim(); }
  Matrix actBy(const Vec& h) const;

  // comultQuot maps into the C (x)_R C quotient coordinates.
  static ModuleCoalgebraB make(Bialgebroid b, int dimC, Matrix hAction,
                               Matrix comultQuot, Matrix counit);
  // Same, but with the coproduct given in the ambient C (x) C coordinates.
  static ModuleCoalgebraB makeFromAmbient(Bialgebroid b, int dimC,
                                          Matrix hAction, Matrix comultAmbient,
                                          Matrix counit);
};

// The bimodule r.c.r' = s_H(r) t_H(r') . c on k^dimC.
RBimodule inducedCoringBimodule(const Bialgebroid& b, int dimC,
                                const Matrix& hAction);

// Left H-comodule algebra over a bialgebroid: an R-ring (A, s_A) with a
// coaction into H (x)_R A landing in the Takeuchi product H x_R A.
struct ComoduleAlgebraB {
  Bialgebroid b;
  FinAlgebra alg;        // A
  Matrix sA;             // dimA x dimR
  Matrix leftR;          // dimA x (dimR*dimA): r . a = s_A(r) a
  CoringComodule comod;  // comodule of the R-coring H; tensorCM = H (x)_R A
  Subspace takeuchi;     // H x_R A inside comod.tensorCM

  const Matrix& coaction() const { return comod.coaction; }

  static ComoduleAlgebraB make(Bialgebroid b, FinAlgebra alg, Matrix sA,
                               Matrix coactionQuot);
  static ComoduleAlgebraB makeFromAmbient(Bialgebroid b, FinAlgebra alg,
                                          Matrix sA, Matrix coactionAmbient);
};

struct DKDatumB {
  Bialgebroid b;
  ComoduleAlgebraB a;
  ModuleCoalgebraB c;
};

Report checkModuleCoalgebraB(const ModuleCoalgebraB& m,
                             const std::string& subject = "module-coalgebra");
Report checkComoduleAlgebraB(const ComoduleAlgebraB& a,
                             const std::string& subject = "comodule-algebra");
Report checkDKDatumB(const DKDatumB& d, const std::string& subject = "dk-datum");

// ---------------------------------------------------------------------------
// Weak flavour
// ---------------------------------------------------------------------------

struct ModuleCoalgebraW {
  WeakHopf h;
  FinCoalgebra coa;  // plain k-coalgebra C
  Matrix hAction;    // dimC x (dimH * dimC)

  Matrix actBy(const Vec& hv) const;
};

struct ComoduleAlgebraW {
  WeakHopf h;
  FinAlgebra alg;   // A
  Matrix coaction;  // (dimH * dimA) x dimA, into the ambient H (x) A
};

struct DKDatumW {
  WeakHopf h;
  ComoduleAlgebraW a;
  ModuleCoalgebraW c;
};

Report checkModuleCoalgebraW(
    const ModuleCoalgebraW& m,
    const std::string& subject = "weak-module-coalgebra");
Report checkComoduleAlgebraW(
    const ComoduleAlgebraW& a,
    const std::string& subject = "weak-comodule-algebra");
Report checkDKDatumW(const DKDatumW& d,
                     const std::string& subject = "weak-dk-datum");

// ---------------------------------------------------------------------------
// Translations weak <-> bialgebroid
// ---------------------------------------------------------------------------

// Forward: s_A(r) = eps(1_{<-1>} r) 1_{<0>} and rho~ = can . rho.
ComoduleAlgebraB translateCA(const ComoduleAlgebraW& x, const Bialgebroid& b);
// Backward: rho = sigma . rho~ with the separability section of the base.
ComoduleAlgebraW translateCABack(const ComoduleAlgebraB& x, const WeakHopf& h,
                                 const BaseAlgebra& base);
// Forward: Delta~ = can . Delta_C, eps~(c) = eps_C(1_(1).c) 1_(2) in R.
ModuleCoalgebraB translateMC(const ModuleCoalgebraW& x, const Bialgebroid& b,
                             const BaseAlgebra& base);
// Backward: Delta = sigma . Delta~, eps = phi . eps~.
ModuleCoalgebraW translateMCBack(const ModuleCoalgebraB& x, const WeakHopf& h,
                                 const BaseAlgebra& base);

DKDatumB translateDatum(const DKDatumW& d, const Bialgebroid& b,
                        const BaseAlgebra& base);
DKDatumW translateDatumBack(const DKDatumB& d, const WeakHopf& h,
                            const BaseAlgebra& base);

// ---------------------------------------------------------------------------
// Doi-Koppinen modules and the coring C (x)_R A
// ---------------------------------------------------------------------------

struct DKModule {
  DKDatumB d;
  int dimM = 0;
  Matrix aAction;         // dimM x (dimA * dimM)
  Matrix leftR;           // dimM x (dimR * dimM): r . m = s_A(r) . m
  QuotientSpace tensorCM;  // C (x)_R M
  Matrix coaction;        // tensorCM.quotDim x dimM

  static DKModule make(DKDatumB d, int dimM, Matrix aAction, Matrix coaction);
  static DKModule makeFromAmbient(DKDatumB d, int dimM, Matrix aAction,
                                  Matrix coactionAmbient);
};

Report checkDKModule(const DKModule& m,
                     const std::string& subject = "dk-module");

struct DKCoring {
  DKDatumB d;
  QuotientSpace tensorCA;  // C (x)_R A
  Coring coring;           // over A on the quotient coordinates
};

DKCoring buildDKCoring(const DKDatumB& d);

// The category dictionary of the coring proposition: comodules of the
// A-coring C (x)_R A versus Doi-Koppinen modules, via C (x)_R A (x)_A M
// identified with C (x)_R M.
DKModule comoduleToDK(const DKCoring& dk, const CoringComodule& m);
CoringComodule dkToComodule(const DKCoring& dk, const DKModule& m);

// ---------------------------------------------------------------------------
// The weak coring C~ and the isomorphism theta
// ---------------------------------------------------------------------------

struct WeakCoringIso {
  DKCoring dk;        // quotient side, built from the translated datum
  Subspace cTilde;    // image of c (x) a -> 1_{<-1>}.c (x) 1_{<0>}a
  Matrix inclusion;   // (dimC*dimA) x dimT
  Matrix coordsT;     // dimT x (dimC*dimA)
  Coring tilde;       // C~ as an A-coring in C~ coordinates
  Matrix theta;       // quot(C (x)_R A) -> C~
  Matrix thetaTilde;  // C~ -> quot(C (x)_R A)
};

WeakCoringIso buildWeakCoringIso(const DKDatumW& w, const DKDatumB& d);
Report checkWeakCoringIso(const WeakCoringIso& iso,
                          const std::string& subject = "weak-coring-iso");

// ---------------------------------------------------------------------------
// Separability certificates (section-4 corollary)
// ---------------------------------------------------------------------------

// Certificate for separability of the induction functor C (x)_R - :
// eCand in quotient coordinates of C (x)_R A.
Report checkInductionSeparable(const DKCoring& dk, const Vec& eCand,
                               const std::string& subject = "induction-sep");
// Certificate for separability of the forgetful functor: gamma is a
// dimA x dim(C (x)_R C) matrix in quotient coordinates.
Report checkForgetfulSeparable(const DKCoring& dk, const Matrix& gamma,
                               const std::string& subject = "forgetful-sep");

// The certificate conditions are linear, so existence is a solvable linear
// system; returns a certificate when one exists.
std::optional<Vec> searchInductionCertificate(const DKCoring& dk);
std::optional<Matrix> searchForgetfulCertificate(const DKCoring& dk);

}  // namespace qgdk
