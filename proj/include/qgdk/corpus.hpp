#pragma once

#include <string>
#include <vector>

#include "qgdk/doikoppinen.hpp"

namespace qgdk {

// Small groupoid given by generators-free presentation: a list of arrows
// with a partial composition table.  Arrows compose like paths, so
// compose[i][j] is the index of "first i, then j" when target(i) equals
// source(j), and -1 otherwise.
struct GroupoidPresentation {
  struct Arrow {
    int source = 0;
    int target = 0;
    std::string label;
  };

  int objects = 0;
  std::vector<Arrow> arrows;
  std::vector<std::vector<int>> compose;
  std::vector<int> identityAt;  // arrow index of id_x per object
  std::vector<int> inverseOf;

  int size() const { return int(arrows.size()); }
  // Throws std::invalid_argument when the tables do not describe a groupoid.
  void validate() const;
};

GroupoidPresentation cyclicGroup(int n);
GroupoidPresentation pairGroupoid(int n);
GroupoidPresentation discreteGroupoid(int n);

// Groupoid algebra as a weak Hopf algebra: basis = arrows, product =
// composition or zero, every basis vector group-like, S(f) = f^{-1}.
WeakHopf groupoidAlgebra(const GroupoidPresentation& g, unsigned long p = 0);

// The enveloping algebra R (x) R^op with s(a) = a (x) 1, t(b) = 1 (x) b,
// Delta(r (x) rbar) = (r (x) 1) (x)_R (1 (x) rbar), eps(r (x) rbar) = r rbar.
Bialgebroid reBialgebroid(const FinAlgebra& r);

// A (x) B with the comodule-algebra structure carried entirely by the A leg.
ComoduleAlgebraB tensorComoduleAlgebra(const ComoduleAlgebraB& a,
                                       const FinAlgebra& bAlg);

// The four canonical data (A, C) in {H, R} x {H, R} with the regular and
// trivial structures; when includeRe is set a fifth copy of the regular
// datum is appended for enveloping-algebra instances.
std::vector<DKDatumB> canonicalDKData(const Bialgebroid& b,
                                      bool includeRe = false);

// The regular weak datum (H, H, H): coaction = Delta, action = mult.
DKDatumW weakRegularDatum(const WeakHopf& h);

// Named corpus instances over Q, used throughout the test suite.
struct CorpusInstance {
  std::string name;
  WeakHopf hopf;
};
std::vector<CorpusInstance> weakHopfCorpus();

}  // namespace qgdk
