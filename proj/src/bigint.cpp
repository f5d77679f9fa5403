#include "skewq/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewq {

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  unsigned long long m =
      v < 0 ? ~static_cast<unsigned long long>(v) + 1ull : static_cast<unsigned long long>(v);
  while (m != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(m % kBase));
    m /= kBase;
  }
}

BigInt BigInt::from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("BigInt: empty string");
  std::size_t pos = 0;
  int sign = 1;
  if (s[0] == '+' || s[0] == '-') {
    sign = s[0] == '-' ? -1 : 1;
    pos = 1;
  }
  if (pos == s.size()) throw std::invalid_argument("BigInt: no digits");
  BigInt r;
  for (; pos < s.size(); ++pos) {
    if (s[pos] < '0' || s[pos] > '9') throw std::invalid_argument("BigInt: bad digit");
    r = r * BigInt(10) + BigInt(s[pos] - '0');
  }
  if (sign < 0) r = -r;
  return r;
}

bool BigInt::is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) sign_ = 1;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r;
  r.reserve(std::max(a.size(), b.size()) + 1);
  std::uint32_t carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
    std::uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    r.push_back(static_cast<std::uint32_t>(s % kBase));
    carry = static_cast<std::uint32_t>(s / kBase);
  }
  return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r = a;
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::int64_t v = static_cast<std::int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (v < 0) {
      v += kBase;
      borrow = 1;
    } else {
      borrow = 0;
    }
    r[i] = static_cast<std::uint32_t>(v);
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  if (!r.limbs_.empty()) r.sign_ = -r.sign_;
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  r.sign_ = 1;
  return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
  BigInt r;
  if (sign() == 0) return o;
  if (o.sign() == 0) return *this;
  if (sign_ == o.sign_) {
    r.sign_ = sign_;
    r.limbs_ = add_mag(limbs_, o.limbs_);
  } else {
    int c = cmp_mag(limbs_, o.limbs_);
    if (c == 0) return BigInt();
    if (c > 0) {
      r.sign_ = sign_;
      r.limbs_ = sub_mag(limbs_, o.limbs_);
    } else {
      r.sign_ = o.sign_;
      r.limbs_ = sub_mag(o.limbs_, limbs_);
    }
  }
  r.trim();
  return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
  if (is_zero() || o.is_zero()) return BigInt();
  BigInt r;
  r.sign_ = sign_ * o.sign_;
  r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < o.limbs_.size() || carry; ++j) {
      std::uint64_t cur = r.limbs_[i + j] + carry;
      if (j < o.limbs_.size())
        cur += static_cast<std::uint64_t>(limbs_[i]) * o.limbs_[j];
      r.limbs_[i + j] = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
  }
  r.trim();
  return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
  q = BigInt();
  r = BigInt();
  if (a.is_zero()) return;
  // long division on magnitudes, one decimal-limb at a time with binary search
  std::vector<std::uint32_t> quot(a.limbs_.size(), 0);
  BigInt rem;  // nonnegative running remainder
  BigInt bm = b.abs();
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    // rem = rem * base + limb
    rem.limbs_.insert(rem.limbs_.begin(), a.limbs_[i]);
    rem.trim();
    std::uint32_t lo = 0, hi = kBase - 1, d = 0;
    while (lo <= hi) {
      std::uint32_t mid = lo + (hi - lo) / 2;
      if ((bm * BigInt(static_cast<long long>(mid))).abs() <= rem) {
        d = mid;
        lo = mid + 1;
      } else {
        if (mid == 0) break;
        hi = mid - 1;
      }
    }
    quot[i] = d;
    rem = rem - bm * BigInt(static_cast<long long>(d));
  }
  q.limbs_ = std::move(quot);
  q.sign_ = a.sign_ * b.sign_;
  q.trim();
  r = rem;
  if (!r.limbs_.empty()) r.sign_ = a.sign_;
  r.trim();
}

BigInt BigInt::operator/(const BigInt& o) const {
  BigInt q, r;
  divmod(*this, o, q, r);
  return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
  BigInt q, r;
  divmod(*this, o, q, r);
  return r;
}

bool BigInt::operator==(const BigInt& o) const {
  return sign() == o.sign() && limbs_ == o.limbs_;
}

bool BigInt::operator<(const BigInt& o) const {
  if (sign() != o.sign()) return sign() < o.sign();
  int c = cmp_mag(limbs_, o.limbs_);
  return sign() >= 0 ? c < 0 : c > 0;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::string s = sign_ < 0 ? "-" : "";
  s += std::to_string(limbs_.back());
  for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
    std::string part = std::to_string(limbs_[i]);
    s += std::string(9 - part.size(), '0') + part;
  }
  return s;
}

bool BigInt::fits_ll() const { return limbs_.size() <= 2; }

long long BigInt::to_ll() const {
  if (!fits_ll()) throw std::overflow_error("BigInt: does not fit in long long");
  long long v = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
  return sign() < 0 ? -v : v;
}

std::uint32_t BigInt::mod_u32(std::uint32_t m) const {
  if (m == 0) throw std::domain_error("BigInt: mod 0");
  std::uint64_t r = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) r = (r * kBase + limbs_[i]) % m;
  if (sign() < 0 && r != 0) r = m - r;
  return static_cast<std::uint32_t>(r);
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  num_ = num_ / g;
  den_ = den_ / g;
}

Rational Rational::from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt::from_string(s), BigInt(1));
  return Rational(BigInt::from_string(s.substr(0, slash)),
                  BigInt::from_string(s.substr(slash + 1)));
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational Rational::operator+(const Rational& o) const {
  return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(num_ * o.den_, den_ * o.num_);
}

bool Rational::operator==(const Rational& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

std::string Rational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

}  // namespace skewq
