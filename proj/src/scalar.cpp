#include "qgdk/scalar.hpp"

namespace qgdk {

namespace {

mpz_class modInverse(const mpz_class& a, unsigned long p) {
  mpz_class inv, m(p);
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("Scalar: value not invertible mod p");
  return inv;
}

}  // namespace

void Scalar::normalize() {
  if (p_ == 0) return;
  mpz_class m(p_);
  mpz_class num = v_.get_num() % m;
  if (num < 0) num += m;
  mpz_class den = v_.get_den() % m;
  if (den != 1) num = (num * modInverse(den, p_)) % m;
  v_ = mpq_class(num);
}

Scalar Scalar::parse(const std::string& s, unsigned long p) {
  mpq_class v;
  if (v.set_str(s, 10) != 0)
    throw std::invalid_argument("Scalar: cannot parse '" + s + "'");
  if (v.get_den() == 0)
    throw std::invalid_argument("Scalar: zero denominator in '" + s + "'");
  return Scalar(v, p);
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.isZero()) throw std::domain_error("Scalar: division by zero");
  unsigned long p = joinPrime(o);
  if (p == 0) return Scalar(v_ / o.v_, 0);
  return *this * o.inverse();
}

Scalar Scalar::inverse() const {
  if (isZero()) throw std::domain_error("Scalar: inverse of zero");
  if (p_ == 0) return Scalar(1 / v_, 0);
  return Scalar(mpq_class(modInverse(v_.get_num(), p_)), p_);
}

std::string Scalar::str() const {
  if (p_ != 0 || v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_str();
}

Scalar Scalar::modp(unsigned long p) const {
  if (p_ != 0) {
    if (p_ != p) throw std::invalid_argument("Scalar: modulus mismatch");
    return *this;
  }
  return Scalar(v_, p);
}

}  // namespace qgdk
