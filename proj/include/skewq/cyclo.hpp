#pragma once

#include <string>
#include <vector>

#include "skewq/bigint.hpp"

namespace skewq {

/// N-th cyclotomic polynomial as integer coefficients, index = power.
/// Computed by exact division of X^N - 1 by the polynomials at proper
/// divisors of N.
std::vector<BigInt> cyclotomic_polynomial(long n);

/// Euler totient, i.e. the degree of the N-th cyclotomic polynomial.
long euler_phi(long n);

/// Element of the cyclotomic field Q(zeta_N), stored as rational
/// coefficients on the basis {zeta^0, ..., zeta^{phi(N)-1}} in canonical
/// reduced form, so equality is coefficient equality at a common level.
class CycloNumber {
 public:
  CycloNumber() : level_(1), coeffs_(1, Rational(0)) {}
  explicit CycloNumber(Rational r, long level = 1);
  CycloNumber(long long v) : CycloNumber(Rational(v)) {}  // NOLINT

  /// zeta_level ^ power
  static CycloNumber root_of_unity(long level, long power);

  /// Parse strings like "1 - 2*z + z^2", "z^-1", "3/2", with z = zeta_level.
  static CycloNumber parse(const std::string& text, long level);

  long level() const { return level_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_rational() const;
  /// Constant coefficient; only meaningful when is_rational().
  Rational rational_part() const { return coeffs_[0]; }

  /// Rewrite on the basis of Q(zeta_m); the current level must divide m.
  CycloNumber lifted(long m) const;

  CycloNumber operator-() const;
  CycloNumber operator+(const CycloNumber& o) const;
  CycloNumber operator-(const CycloNumber& o) const;
  CycloNumber operator*(const CycloNumber& o) const;
  CycloNumber& operator+=(const CycloNumber& o) { return *this = *this + o; }
  CycloNumber& operator*=(const CycloNumber& o) { return *this = *this * o; }

  /// Equality after lifting both sides to the lcm of levels.
  bool operator==(const CycloNumber& o) const;
  bool operator!=(const CycloNumber& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  static long common_level(long a, long b);
  // reduce a raw coefficient vector (powers of zeta_level, any length)
  static std::vector<Rational> reduce(std::vector<Rational> raw, long level);

  long level_;
  std::vector<Rational> coeffs_;  // size phi(level_)
};

/// Dense matrix of cyclotomic numbers. Multiplication skips zero entries,
/// which keeps the common monomial-action case cheap.
class CycloMatrix {
 public:
  CycloMatrix() = default;
  CycloMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static CycloMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  CycloNumber& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const CycloNumber& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  CycloMatrix operator*(const CycloMatrix& o) const;
  CycloMatrix transpose() const;
  bool operator==(const CycloMatrix& o) const;
  bool operator!=(const CycloMatrix& o) const { return !(*this == o); }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<CycloNumber> a_;
};

}  // namespace skewq
