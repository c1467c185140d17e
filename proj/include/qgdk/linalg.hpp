#pragma once

#include <optional>
#include <vector>

#include "qgdk/scalar.hpp"

namespace qgdk {

using Vec = std::vector<Scalar>;

Vec zeroVec(int n, unsigned long p = 0);
Vec unitVec(int n, int i, unsigned long p = 0);
bool isZeroVec(const Vec& v);
Vec addVec(const Vec& a, const Vec& b);
Vec subVec(const Vec& a, const Vec& b);
Vec scaleVec(const Scalar& c, const Vec& v);
// Tensor coordinates: (i, j) of x (x) y maps to i * dim(y) + j.
Vec kronVec(const Vec& x, const Vec& y);

// Dense matrix over the scalar field, acting on column vectors:
// an r x c matrix is a linear map k^c -> k^r.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols, unsigned long p = 0)
      : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Scalar::zero(p)) {}

  static Matrix identity(int n, unsigned long p = 0);
  static Matrix fromRows(const std::vector<Vec>& rows);
  // Tensor product of maps, with the (i, j) -> i*d2+j index convention.
  static Matrix kron(const Matrix& a, const Matrix& b);
  // The flip x (x) y -> y (x) x on k^{d1} (x) k^{d2}.
  static Matrix swap(int d1, int d2, unsigned long p = 0);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  Vec apply(const Vec& x) const;
  Vec row(int i) const;
  Vec col(int j) const;
  void setCol(int j, const Vec& v);

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const;
  bool isZero() const;

  // Entry-wise reduction mod p (fails if p divides any denominator).
  Matrix modp(unsigned long p) const;

 private:
  int rows_, cols_;
  std::vector<Scalar> a_;
};

// In-place reduced row echelon form; returns the rank and fills `pivots`
// with the pivot column of each nonzero row.
int rref(Matrix& m, std::vector<int>* pivots = nullptr);

std::optional<Vec> solve(const Matrix& a, const Vec& b);
std::optional<Matrix> inverseMatrix(const Matrix& m);
int rank(Matrix m);

// A subspace of k^n held as its reduced-row-echelon basis, so equal
// subspaces have identical representations.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  static Subspace zero(int ambient, unsigned long p = 0);
  static Subspace full(int ambient, unsigned long p = 0);
  static Subspace fromVectors(int ambient, const std::vector<Vec>& gens);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basisVector(int i) const { return basis_.row(i); }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  // Coordinates of v in the echelon basis; nullopt if v is outside.
  std::optional<Vec> coords(const Vec& v) const;

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  static Subspace sum(const Subspace& a, const Subspace& b);
  static Subspace intersect(const Subspace& a, const Subspace& b);

 private:
  int ambient_;
  Matrix basis_;
  std::vector<int> pivots_;
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);

// k^n modulo a subspace of relations.  The projection kills exactly the
// relations; coordinates on the quotient are the non-pivot coordinates of
// the relation echelon basis, and the section re-embeds them there.
struct QuotientSpace {
  int ambient = 0;
  Subspace relations;
  int quotDim = 0;
  Matrix projection;  // quotDim x ambient
  Matrix section;     // ambient x quotDim

  static QuotientSpace make(int ambient, Subspace relations);
};

}  // namespace qgdk
