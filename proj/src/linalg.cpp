#include "qgdk/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qgdk {

Vec zeroVec(int n, unsigned long p) { return Vec(n, Scalar::zero(p)); }

Vec unitVec(int n, int i, unsigned long p) {
  Vec v = zeroVec(n, p);
  v[i] = Scalar::one(p);
  return v;
}

bool isZeroVec(const Vec& v) {
  for (const auto& x : v)
    if (!x.isZero()) return false;
  return true;
}

Vec addVec(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("addVec: size");
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec subVec(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("subVec: size");
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scaleVec(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

Vec kronVec(const Vec& x, const Vec& y) {
  Vec r(x.size() * y.size());
  size_t k = 0;
  for (const auto& a : x)
    for (const auto& b : y) r[k++] = a * b;
  return r;
}

Matrix Matrix::identity(int n, unsigned long p) {
  Matrix m(n, n, p);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(p);
  return m;
}

Matrix Matrix::fromRows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(int(rows.size()), int(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (rows[i].size() != rows[0].size())
      throw std::invalid_argument("fromRows: ragged rows");
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).isZero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          m.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return m;
}

Matrix Matrix::swap(int d1, int d2, unsigned long p) {
  Matrix m(d1 * d2, d1 * d2, p);
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d2; ++j) m.at(j * d1 + i, i * d2 + j) = Scalar::one(p);
  return m;
}

Vec Matrix::apply(const Vec& x) const {
  if (int(x.size()) != cols_) throw std::invalid_argument("apply: size");
  Vec r = zeroVec(rows_);
  for (int j = 0; j < cols_; ++j) {
    if (x[j].isZero()) continue;
    for (int i = 0; i < rows_; ++i) {
      const Scalar& m = at(i, j);
      if (!m.isZero()) r[i] += m * x[j];
    }
  }
  return r;
}

Vec Matrix::row(int i) const {
  Vec r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

Vec Matrix::col(int j) const {
  Vec r(rows_);
  for (int i = 0; i < rows_; ++i) r[i] = at(i, j);
  return r;
}

void Matrix::setCol(int j, const Vec& v) {
  if (int(v.size()) != rows_) throw std::invalid_argument("setCol: size");
  for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Matrix::*: shape");
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& m = at(i, k);
      if (m.isZero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& n = o.at(k, j);
        if (!n.isZero()) r.at(i, j) += m * n;
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Matrix::+: shape");
  Matrix r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Matrix::-: shape");
  Matrix r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::isZero() const {
  for (const auto& x : a_)
    if (!x.isZero()) return false;
  return true;
}

Matrix Matrix::modp(unsigned long p) const {
  Matrix r = *this;
  for (auto& x : r.a_) x = x.modp(p);
  return r;
}

int rref(Matrix& m, std::vector<int>* pivots) {
  if (pivots) pivots->clear();
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int piv = -1;
    for (int i = rank; i < m.rows(); ++i)
      if (!m.at(i, col).isZero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(rank, j));
    Scalar inv = m.at(rank, col).inverse();
    for (int j = col; j < m.cols(); ++j) m.at(rank, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == rank) continue;
      Scalar f = m.at(i, col);
      if (f.isZero()) continue;
      for (int j = col; j < m.cols(); ++j)
        m.at(i, j) -= f * m.at(rank, j);
    }
    if (pivots) pivots->push_back(col);
    ++rank;
  }
  return rank;
}

int rank(Matrix m) { return rref(m); }

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (int(b.size()) != a.rows()) throw std::invalid_argument("solve: size");
  Matrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<int> pivots;
  int r = rref(aug, &pivots);
  Vec x = zeroVec(a.cols());
  for (int i = 0; i < r; ++i) {
    if (pivots[i] == a.cols()) return std::nullopt;  // inconsistent
    x[pivots[i]] = aug.at(i, a.cols());
  }
  return x;
}

std::optional<Matrix> inverseMatrix(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar::one();
  }
  std::vector<int> pivots;
  int r = rref(aug, &pivots);
  if (r != n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

Subspace Subspace::zero(int ambient, unsigned long p) {
  (void)p;
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(0, ambient);
  return s;
}

Subspace Subspace::full(int ambient, unsigned long p) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix::identity(ambient, p);
  for (int i = 0; i < ambient; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::fromVectors(int ambient, const std::vector<Vec>& gens) {
  // Incremental reduced-echelon insertion; rowOf[c] is the index of the
  // basis row pivoted at column c, or -1.  Much faster than batch RREF on
  // the sparse relation families produced by balanced tensor products.
  std::vector<Vec> rows;
  std::vector<int> rowPivot;
  std::vector<int> rowOf(ambient, -1);
  for (const auto& g : gens) {
    if (int(g.size()) != ambient)
      throw std::invalid_argument("Subspace: ambient mismatch");
    Vec v = g;
    int lead = -1;
    for (int c = 0; c < ambient; ++c) {
      if (v[c].isZero()) continue;
      if (rowOf[c] >= 0) {
        // Clear every existing pivot coordinate, so the stored rows stay
        // in fully reduced form.
        const Vec& row = rows[rowOf[c]];
        Scalar f = v[c];
        for (int j = c; j < ambient; ++j)
          if (!row[j].isZero()) v[j] -= f * row[j];
      } else if (lead < 0) {
        lead = c;
      }
    }
    if (lead < 0) continue;
    Scalar inv = v[lead].inverse();
    for (int j = lead; j < ambient; ++j)
      if (!v[j].isZero()) v[j] *= inv;
    // Back-eliminate the new pivot column from existing rows.
    for (size_t r = 0; r < rows.size(); ++r) {
      Scalar f = rows[r][lead];
      if (f.isZero()) continue;
      for (int j = lead; j < ambient; ++j)
        if (!v[j].isZero()) rows[r][j] -= f * v[j];
    }
    rowOf[lead] = int(rows.size());
    rows.push_back(std::move(v));
    rowPivot.push_back(lead);
  }
  // Emit rows sorted by pivot column for the canonical RREF form.
  std::vector<int> order(rows.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = int(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return rowPivot[a] < rowPivot[b]; });
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(int(rows.size()), ambient);
  for (size_t i = 0; i < order.size(); ++i) {
    for (int j = 0; j < ambient; ++j) s.basis_.at(int(i), j) = rows[order[i]][j];
    s.pivots_.push_back(rowPivot[order[i]]);
  }
  return s;
}

std::optional<Vec> Subspace::coords(const Vec& v) const {
  if (int(v.size()) != ambient_) throw std::invalid_argument("coords: size");
  // RREF basis: the coefficient of row i is just v at its pivot column.
  Vec c(dim());
  Vec rem = v;
  for (int i = 0; i < dim(); ++i) {
    c[i] = rem[pivots_[i]];
    if (!c[i].isZero()) rem = subVec(rem, scaleVec(c[i], basis_.row(i)));
  }
  if (!isZeroVec(rem)) return std::nullopt;
  return c;
}

bool Subspace::contains(const Vec& v) const { return coords(v).has_value(); }

Subspace Subspace::sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_)
    throw std::invalid_argument("Subspace::sum: ambient mismatch");
  std::vector<Vec> gens;
  for (int i = 0; i < a.dim(); ++i) gens.push_back(a.basisVector(i));
  for (int i = 0; i < b.dim(); ++i) gens.push_back(b.basisVector(i));
  return fromVectors(a.ambient_, gens);
}

Subspace Subspace::intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_)
    throw std::invalid_argument("Subspace::intersect: ambient mismatch");
  // x in A cap B iff x = Ba^T u = Bb^T w; solve [Ba^T | -Bb^T] (u,w) = 0.
  int n = a.ambient_;
  Matrix m(n, a.dim() + b.dim());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < a.dim(); ++j) m.at(i, j) = a.basis_.at(j, i);
    for (int j = 0; j < b.dim(); ++j)
      m.at(i, a.dim() + j) = -b.basis_.at(j, i);
  }
  Subspace null = kernel(m);
  std::vector<Vec> gens;
  for (int i = 0; i < null.dim(); ++i) {
    Vec uw = null.basisVector(i);
    Vec x = zeroVec(n);
    for (int j = 0; j < a.dim(); ++j)
      if (!uw[j].isZero()) x = addVec(x, scaleVec(uw[j], a.basisVector(j)));
    gens.push_back(x);
  }
  return fromVectors(n, gens);
}

Subspace kernel(const Matrix& m) {
  Matrix r = m;
  std::vector<int> pivots;
  rref(r, &pivots);
  std::vector<bool> isPivot(m.cols(), false);
  for (int p : pivots) isPivot[p] = true;
  std::vector<Vec> gens;
  for (int j = 0; j < m.cols(); ++j) {
    if (isPivot[j]) continue;
    Vec v = zeroVec(m.cols());
    v[j] = Scalar::one();
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(int(i), j);
    gens.push_back(v);
  }
  return Subspace::fromVectors(m.cols(), gens);
}

Subspace image(const Matrix& m) {
  std::vector<Vec> gens;
  for (int j = 0; j < m.cols(); ++j) gens.push_back(m.col(j));
  return Subspace::fromVectors(m.rows(), gens);
}

QuotientSpace QuotientSpace::make(int ambient, Subspace relations) {
  if (relations.ambient() != ambient)
    throw std::invalid_argument("QuotientSpace: ambient mismatch");
  QuotientSpace q;
  q.ambient = ambient;
  q.relations = std::move(relations);
  q.quotDim = ambient - q.relations.dim();

  std::vector<bool> isPivot(ambient, false);
  for (int p : q.relations.pivots()) isPivot[p] = true;
  std::vector<int> free;
  for (int j = 0; j < ambient; ++j)
    if (!isPivot[j]) free.push_back(j);

  q.section = Matrix(ambient, q.quotDim);
  for (int j = 0; j < q.quotDim; ++j) q.section.at(free[j], j) = Scalar::one();

  q.projection = Matrix(q.quotDim, ambient);
  for (int j = 0; j < q.quotDim; ++j) q.projection.at(j, free[j]) = Scalar::one();
  // A pivot coordinate maps to minus the free part of its relation row.
  const auto& piv = q.relations.pivots();
  for (size_t r = 0; r < piv.size(); ++r)
    for (int j = 0; j < q.quotDim; ++j)
      q.projection.at(j, piv[r]) = -q.relations.basis().at(int(r), free[j]);
  return q;
}

}  // namespace qgdk
