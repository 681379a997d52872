#include "twocat/bigint.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace twocat {

namespace {
constexpr uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  unsigned long long m = v < 0 ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
  while (m) {
    mag_.push_back(static_cast<uint32_t>(m & 0xffffffffu));
    m >>= 32;
  }
}

BigInt BigInt::fromString(const std::string& s) {
  BigInt r;
  size_t i = 0;
  int sg = 1;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    sg = s[i] == '-' ? -1 : 1;
    ++i;
  }
  if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
    // r = r*10 + digit
    uint64_t carry = static_cast<uint64_t>(s[i] - '0');
    for (auto& limb : r.mag_) {
      uint64_t cur = static_cast<uint64_t>(limb) * 10 + carry;
      limb = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    while (carry) {
      r.mag_.push_back(static_cast<uint32_t>(carry & 0xffffffffu));
      carry >>= 32;
    }
  }
  r.sign_ = r.mag_.empty() ? 0 : sg;
  return r;
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

int BigInt::cmpMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

int BigInt::cmp(const BigInt& a, const BigInt& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
  int c = cmpMag(a.mag_, b.mag_);
  return a.sign_ >= 0 ? c : -c;
}

std::vector<uint32_t> BigInt::addMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r;
  r.reserve(std::max(a.size(), b.size()) + 1);
  uint64_t carry = 0;
  for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    uint64_t cur = carry;
    if (i < a.size()) cur += a[i];
    if (i < b.size()) cur += b[i];
    r.push_back(static_cast<uint32_t>(cur & 0xffffffffu));
    carry = cur >> 32;
  }
  if (carry) r.push_back(static_cast<uint32_t>(carry));
  return r;
}

std::vector<uint32_t> BigInt::subMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r = a;
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t cur = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? static_cast<int64_t>(b[i]) : 0);
    if (cur < 0) {
      cur += static_cast<int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r[i] = static_cast<uint32_t>(cur);
  }
  assert(borrow == 0);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<uint32_t> BigInt::mulMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      uint64_t cur = static_cast<uint64_t>(a[i]) * b[j] + r[i + j] + carry;
      r[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    size_t k = i + b.size();
    while (carry) {
      uint64_t cur = r[k] + carry;
      r[k] = static_cast<uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Knuth algorithm D.
void BigInt::divmodMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                       std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
  q.clear();
  r.clear();
  if (b.empty()) throw std::domain_error("BigInt: division by zero");
  if (cmpMag(a, b) < 0) {
    r = a;
    return;
  }
  if (b.size() == 1) {
    uint64_t d = b[0];
    uint64_t rem = 0;
    q.assign(a.size(), 0);
    for (size_t i = a.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | a[i];
      q[i] = static_cast<uint32_t>(cur / d);
      rem = cur % d;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    if (rem) r.push_back(static_cast<uint32_t>(rem));
    return;
  }

  // Normalize so the top limb of the divisor has its high bit set.
  int shift = 0;
  uint32_t top = b.back();
  while (!(top & 0x80000000u)) {
    top <<= 1;
    ++shift;
  }
  size_t n = b.size(), m = a.size() - n;
  std::vector<uint32_t> u(a.size() + 1, 0), v(n, 0);
  for (size_t i = a.size(); i-- > 0;) {
    u[i] = a[i] << shift;
    if (shift && i > 0) u[i] |= static_cast<uint32_t>(static_cast<uint64_t>(a[i - 1]) >> (32 - shift));
  }
  if (shift) u[a.size()] = static_cast<uint32_t>(static_cast<uint64_t>(a.back()) >> (32 - shift));
  for (size_t i = n; i-- > 0;) {
    v[i] = b[i] << shift;
    if (shift && i > 0) v[i] |= static_cast<uint32_t>(static_cast<uint64_t>(b[i - 1]) >> (32 - shift));
  }

  q.assign(m + 1, 0);
  for (size_t j = m + 1; j-- > 0;) {
    uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
    uint64_t qhat = num / v[n - 1];
    uint64_t rhat = num % v[n - 1];
    while (qhat >= kBase ||
           qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
      --qhat;
      rhat += v[n - 1];
      if (rhat >= kBase) break;
    }
    // u[j..j+n] -= qhat * v
    int64_t borrow = 0;
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
      uint64_t p = qhat * v[i] + carry;
      carry = p >> 32;
      int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffu) - borrow;
      if (t < 0) {
        t += static_cast<int64_t>(kBase);
        borrow = 1;
      } else {
        borrow = 0;
      }
      u[i + j] = static_cast<uint32_t>(t);
    }
    int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
    if (t < 0) {
      // qhat was one too large; add back
      t += static_cast<int64_t>(kBase);
      --qhat;
      uint64_t c2 = 0;
      for (size_t i = 0; i < n; ++i) {
        uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
        u[i + j] = static_cast<uint32_t>(s & 0xffffffffu);
        c2 = s >> 32;
      }
      t += static_cast<int64_t>(c2);
      t &= 0xffffffffll;
    }
    u[j + n] = static_cast<uint32_t>(t);
    q[j] = static_cast<uint32_t>(qhat);
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
  // Denormalize remainder.
  r.assign(n, 0);
  for (size_t i = 0; i < n; ++i) {
    r[i] = u[i] >> shift;
    if (shift && i + 1 < u.size()) r[i] |= static_cast<uint32_t>(static_cast<uint64_t>(u[i + 1]) << (32 - shift));
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.isZero()) return b;
  if (b.isZero()) return a;
  BigInt r;
  if (a.sign_ == b.sign_) {
    r.sign_ = a.sign_;
    r.mag_ = BigInt::addMag(a.mag_, b.mag_);
  } else {
    int c = BigInt::cmpMag(a.mag_, b.mag_);
    if (c == 0) return BigInt();
    if (c > 0) {
      r.sign_ = a.sign_;
      r.mag_ = BigInt::subMag(a.mag_, b.mag_);
    } else {
      r.sign_ = b.sign_;
      r.mag_ = BigInt::subMag(b.mag_, a.mag_);
    }
  }
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = -r.sign_;
  return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  BigInt r;
  if (a.isZero() || b.isZero()) return r;
  r.sign_ = a.sign_ * b.sign_;
  r.mag_ = BigInt::mulMag(a.mag_, b.mag_);
  return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  std::vector<uint32_t> qm, rm;
  divmodMag(a.mag_, b.mag_, qm, rm);
  q.mag_ = std::move(qm);
  r.mag_ = std::move(rm);
  q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
  r.sign_ = r.mag_.empty() ? 0 : a.sign_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.isZero()) {
    BigInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

bool BigInt::fitsInt64() const {
  if (mag_.size() > 2) return false;
  unsigned long long m = 0;
  if (mag_.size() >= 1) m = mag_[0];
  if (mag_.size() == 2) m |= static_cast<unsigned long long>(mag_[1]) << 32;
  if (sign_ >= 0) return m <= 0x7fffffffffffffffull;
  return m <= 0x8000000000000000ull;
}

long long BigInt::toInt64() const {
  unsigned long long m = 0;
  if (mag_.size() >= 1) m = mag_[0];
  if (mag_.size() == 2) m |= static_cast<unsigned long long>(mag_[1]) << 32;
  return sign_ >= 0 ? static_cast<long long>(m) : -static_cast<long long>(m);
}

std::string BigInt::toString() const {
  if (isZero()) return "0";
  std::vector<uint32_t> m = mag_;
  std::string digits;
  while (!m.empty()) {
    // divide by 10^9 for fewer passes
    uint64_t rem = 0;
    for (size_t i = m.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | m[i];
      m[i] = static_cast<uint32_t>(cur / 1000000000ull);
      rem = cur % 1000000000ull;
    }
    while (!m.empty() && m.back() == 0) m.pop_back();
    for (int k = 0; k < 9; ++k) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

size_t BigInt::hash() const {
  size_t h = static_cast<size_t>(sign_ + 1) * 0x9e3779b97f4a7c15ull;
  for (uint32_t limb : mag_) h = h * 0x100000001b3ull ^ limb;
  return h;
}

}  // namespace twocat
