#pragma once

#include <map>
#include <string>

namespace twocat {

// Integer-coefficient Laurent polynomial in q.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly one() { return monomial(0, 1); }
  static LaurentPoly monomial(int exp, long long coeff);

  long long coeff(int exp) const;
  void set(int exp, long long coeff);
  const std::map<int, long long>& terms() const { return c_; }
  bool isZero() const { return c_.empty(); }
  int minExp() const;
  int maxExp() const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly shiftExp(int d) const;       // multiply by q^d
  LaurentPoly substituteQSquared() const;  // q -> q^2
  LaurentPoly reverse() const;             // q -> q^{-1}
  long long evalAtOne() const;
  bool palindromicWithCenter(int twiceCenter) const;  // q^{2c} p(1/q) == p(q), 2c given
  bool nonNegative() const;

  std::string toString() const;  // deterministic, ascending exponents

 private:
  std::map<int, long long> c_;  // exponent -> nonzero coefficient
};

}  // namespace twocat
