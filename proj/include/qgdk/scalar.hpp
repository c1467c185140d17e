#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qgdk {

// Exact field element: a rational number, or an element of F_p when a
// prime modulus is attached.  Values are kept in canonical form at all
// times (reduced fraction with positive denominator, or an integer in
// [0, p)), so equality is plain value equality.
class Scalar {
 public:
  Scalar() : v_(0), p_(0) {}
  Scalar(long n) : v_(n), p_(0) {}
  Scalar(long num, long den, unsigned long p = 0) : v_(num, den), p_(p) {
    if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
    v_.canonicalize();
    normalize();
  }
  explicit Scalar(mpq_class v, unsigned long p = 0) : v_(std::move(v)), p_(p) {
    v_.canonicalize();
    normalize();
  }

  static Scalar zero(unsigned long p = 0) { return Scalar(mpq_class(0), p); }
  static Scalar one(unsigned long p = 0) { return Scalar(mpq_class(1), p); }

  // Parses "n", "-n" or "n/d".  The modulus, if nonzero, reduces the value.
  static Scalar parse(const std::string& s, unsigned long p = 0);

  unsigned long prime() const { return p_; }
  const mpq_class& value() const { return v_; }
  bool isZero() const { return v_ == 0; }
  bool isOne() const { return v_ == 1; }

  Scalar operator-() const { return Scalar(-v_, p_); }
  Scalar operator+(const Scalar& o) const {
    return Scalar(v_ + o.v_, joinPrime(o));
  }
  Scalar operator-(const Scalar& o) const {
    return Scalar(v_ - o.v_, joinPrime(o));
  }
  Scalar operator*(const Scalar& o) const {
    return Scalar(v_ * o.v_, joinPrime(o));
  }
  Scalar operator/(const Scalar& o) const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  // Values are canonical, so equality is value equality; the modulus tag
  // only separates elements of genuinely different fields (untagged values
  // appear as intermediate zeros of matrix arithmetic).
  bool operator==(const Scalar& o) const {
    return v_ == o.v_ && (p_ == o.p_ || p_ == 0 || o.p_ == 0);
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar inverse() const;

  // Canonical string form: "n" or "n/d" over Q, decimal residue over F_p.
  std::string str() const;

  // Reduction Q -> F_p; fails if p divides the denominator.
  Scalar modp(unsigned long p) const;

 private:
  unsigned long joinPrime(const Scalar& o) const {
    if (p_ != 0 && o.p_ != 0 && p_ != o.p_)
      throw std::invalid_argument("Scalar: mixed moduli");
    return p_ != 0 ? p_ : o.p_;
  }
  void normalize();

  mpq_class v_;
  unsigned long p_;
};

}  // namespace qgdk
