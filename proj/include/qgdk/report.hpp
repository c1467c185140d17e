#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgdk/linalg.hpp"

namespace qgdk {

// A failed law carries the basis tuple it failed on plus both evaluated
// sides, so a caller can print a concrete counterexample.
struct Witness {
  std::vector<int> indices;
  Vec lhs, rhs;
  std::string note;
};

struct LawResult {
  std::string law;
  bool pass = true;
  std::optional<Witness> witness;
};

struct Report {
  std::string subject;
  std::vector<LawResult> laws;

  explicit Report(std::string subj = "") : subject(std::move(subj)) {}

  bool pass() const {
    for (const auto& l : laws)
      if (!l.pass) return false;
    return true;
  }

  void ok(const std::string& law) { laws.push_back({law, true, std::nullopt}); }

  void fail(const std::string& law, Witness w) {
    laws.push_back({law, false, std::move(w)});
  }

  void check(const std::string& law, bool cond, Witness w = {}) {
    if (cond)
      ok(law);
    else
      fail(law, std::move(w));
  }

  const LawResult* find(const std::string& law) const {
    for (const auto& l : laws)
      if (l.law == law) return &l;
    return nullptr;
  }

  void merge(const Report& other, const std::string& prefix = "") {
    for (auto l : other.laws) {
      l.law = prefix.empty() ? l.law : prefix + "." + l.law;
      laws.push_back(std::move(l));
    }
  }
};

// Compares two matrices column by column; on mismatch records the failing
// column decoded as a tuple of basis indices with the given leg dimensions.
void checkMatrixEqual(Report& rep, const std::string& law, const Matrix& lhs,
                      const Matrix& rhs, const std::vector<int>& legDims = {});

// Same for a single pair of vectors attached to an index tuple.
void checkVecEqual(Report& rep, const std::string& law, const Vec& lhs,
                   const Vec& rhs, std::vector<int> indices = {});

}  // namespace qgdk
