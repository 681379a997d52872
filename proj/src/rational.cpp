#include "twocat/rational.hpp"

#include <stdexcept>

namespace twocat {

Rat::Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.isZero()) throw std::domain_error("Rat: zero denominator");
  normalize();
}

void Rat::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.isZero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (g != BigInt(1)) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rat Rat::fromString(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(BigInt::fromString(s));
  return Rat(BigInt::fromString(s.substr(0, slash)), BigInt::fromString(s.substr(slash + 1)));
}

Rat operator+(const Rat& a, const Rat& b) { return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_); }
Rat operator-(const Rat& a, const Rat& b) { return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_); }
Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num_ * b.num_, a.den_ * b.den_); }

Rat operator/(const Rat& a, const Rat& b) {
  if (b.isZero()) throw std::domain_error("Rat: division by zero");
  return Rat(a.num_ * b.den_, a.den_ * b.num_);
}

Rat Rat::operator-() const {
  Rat r = *this;
  r.num_ = -r.num_;
  return r;
}

Rat Rat::inverse() const {
  if (isZero()) throw std::domain_error("Rat: inverse of zero");
  return Rat(den_, num_);
}

bool operator<(const Rat& a, const Rat& b) { return (a - b).sign() < 0; }

std::string Rat::toString() const {
  if (den_ == BigInt(1)) return num_.toString();
  return num_.toString() + "/" + den_.toString();
}

}  // namespace twocat
