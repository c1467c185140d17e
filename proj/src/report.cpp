#include "qgdk/report.hpp"

namespace qgdk {

void checkMatrixEqual(Report& rep, const std::string& law, const Matrix& lhs,
                      const Matrix& rhs, const std::vector<int>& legDims) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    rep.fail(law, Witness{{}, {}, {}, "shape mismatch"});
    return;
  }
  for (int j = 0; j < lhs.cols(); ++j) {
    Vec a = lhs.col(j), b = rhs.col(j);
    if (a == b) continue;
    std::vector<int> idx;
    if (legDims.empty()) {
      idx.push_back(j);
    } else {
      int rem = j;
      std::vector<int> rev;
      for (auto it = legDims.rbegin(); it != legDims.rend(); ++it) {
        rev.push_back(rem % *it);
        rem /= *it;
      }
      idx.assign(rev.rbegin(), rev.rend());
    }
    rep.fail(law, Witness{idx, std::move(a), std::move(b), ""});
    return;
  }
  rep.ok(law);
}

void checkVecEqual(Report& rep, const std::string& law, const Vec& lhs,
                   const Vec& rhs, std::vector<int> indices) {
  if (lhs == rhs) {
    rep.ok(law);
    return;
  }
  rep.fail(law, Witness{std::move(indices), lhs, rhs, ""});
}

}  // namespace qgdk
