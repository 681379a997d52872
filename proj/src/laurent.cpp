#include "twocat/laurent.hpp"

#include <sstream>

namespace twocat {

LaurentPoly LaurentPoly::monomial(int exp, long long coeff) {
  LaurentPoly p;
  if (coeff != 0) p.c_[exp] = coeff;
  return p;
}

long long LaurentPoly::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? 0 : it->second;
}

void LaurentPoly::set(int exp, long long coeff) {
  if (coeff == 0)
    c_.erase(exp);
  else
    c_[exp] = coeff;
}

int LaurentPoly::minExp() const { return c_.empty() ? 0 : c_.begin()->first; }
int LaurentPoly::maxExp() const { return c_.empty() ? 0 : c_.rbegin()->first; }

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (auto& [e, c] : b.c_) r.set(e, r.coeff(e) + c);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (auto& [e, c] : b.c_) r.set(e, r.coeff(e) - c);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (auto& [ea, ca] : a.c_)
    for (auto& [eb, cb] : b.c_) r.set(ea + eb, r.coeff(ea + eb) + ca * cb);
  return r;
}

LaurentPoly LaurentPoly::shiftExp(int d) const {
  LaurentPoly r;
  for (auto& [e, c] : c_) r.c_[e + d] = c;
  return r;
}

LaurentPoly LaurentPoly::substituteQSquared() const {
  LaurentPoly r;
  for (auto& [e, c] : c_) r.c_[2 * e] = c;
  return r;
}

LaurentPoly LaurentPoly::reverse() const {
  LaurentPoly r;
  for (auto& [e, c] : c_) r.c_[-e] = c;
  return r;
}

long long LaurentPoly::evalAtOne() const {
  long long s = 0;
  for (auto& [e, c] : c_) s += c;
  return s;
}

bool LaurentPoly::palindromicWithCenter(int twiceCenter) const {
  return reverse().shiftExp(twiceCenter) == *this;
}

bool LaurentPoly::nonNegative() const {
  for (auto& [e, c] : c_)
    if (c < 0) return false;
  return true;
}

std::string LaurentPoly::toString() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : c_) {
    if (!first) os << (c >= 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    long long a = c >= 0 ? c : -c;
    if (e == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

}  // namespace twocat
