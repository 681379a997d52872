#pragma once

#include <string>

#include "twocat/bigint.hpp"

namespace twocat {

// Exact rational: gcd(|num|, den) = 1, den > 0, zero is 0/1.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rat(BigInt n) : num_(std::move(n)), den_(1) {}
  Rat(BigInt n, BigInt d);
  static Rat fromString(const std::string& s);  // "p", "p/q"

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool isZero() const { return num_.isZero(); }
  int sign() const { return num_.sign(); }

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat operator-() const;
  Rat inverse() const;

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b);
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }

  std::string toString() const;  // "p" or "p/q"
  size_t hash() const { return num_.hash() * 31 + den_.hash(); }

 private:
  BigInt num_, den_;
  void normalize();
};

}  // namespace twocat
