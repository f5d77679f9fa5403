#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace skewq {

/// Arbitrary-precision signed integer, base 10^9 limbs.
/// Sizes stay tiny here (cyclotomic coefficients, rational bookkeeping);
/// schoolbook arithmetic is more than enough.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);  // NOLINT: implicit, mirrors int literals

  static BigInt from_string(const std::string& s);

  bool is_zero() const { return limbs_.empty(); }
  int sign() const { return limbs_.empty() ? 0 : sign_; }
  bool is_one() const;

  BigInt operator-() const;
  BigInt abs() const;

  BigInt operator+(const BigInt& o) const;
  BigInt operator-(const BigInt& o) const;
  BigInt operator*(const BigInt& o) const;
  BigInt operator/(const BigInt& o) const;  // truncated toward zero
  BigInt operator%(const BigInt& o) const;  // sign follows dividend

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  bool operator==(const BigInt& o) const;
  bool operator!=(const BigInt& o) const { return !(*this == o); }
  bool operator<(const BigInt& o) const;
  bool operator<=(const BigInt& o) const { return !(o < *this); }
  bool operator>(const BigInt& o) const { return o < *this; }
  bool operator>=(const BigInt& o) const { return !(*this < o); }

  std::string to_string() const;

  /// Value as long long; throws if out of range.
  long long to_ll() const;
  bool fits_ll() const;

  /// Nonnegative remainder modulo a small positive modulus.
  std::uint32_t mod_u32(std::uint32_t m) const;

  static BigInt gcd(BigInt a, BigInt b);

 private:
  static int cmp_mag(const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  void trim();
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

  static constexpr std::uint32_t kBase = 1000000000u;
  int sign_ = 1;                       // meaningful only when limbs_ nonempty
  std::vector<std::uint32_t> limbs_;   // little-endian, empty == 0
};

/// Exact rational number with BigInt numerator/denominator.
/// Always normalized: denominator > 0, gcd(num, den) = 1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}  // NOLINT
  Rational(BigInt num, BigInt den);

  static Rational from_string(const std::string& s);  // "a", "-a/b"

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_.is_one(); }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  bool operator==(const Rational& o) const;
  bool operator!=(const Rational& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void normalize();
  BigInt num_;
  BigInt den_;
};

}  // namespace skewq
