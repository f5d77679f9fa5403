#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "skewq/cyclo.hpp"

namespace skewq {

/// Arithmetic in F_p for a word-sized prime p (p < 2^31).
class PrimeField {
 public:
  PrimeField() = default;
  explicit PrimeField(std::uint32_t p) : p_(p) {}

  std::uint32_t p() const { return p_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t inv(std::uint32_t a) const;  // throws on 0
  std::uint32_t from_ll(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
  }

 private:
  std::uint32_t p_ = 0;
};

bool is_prime_u64(std::uint64_t n);

/// Dense matrix over F_p with exact Gaussian elimination.
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(int rows, int cols, std::uint32_t p)
      : rows_(rows), cols_(cols), field_(p), a_(static_cast<std::size_t>(rows) * cols, 0) {}

  static ModMatrix identity(int n, std::uint32_t p);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::uint32_t p() const { return field_.p(); }
  const PrimeField& field() const { return field_; }

  std::uint32_t& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::uint32_t at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  ModMatrix operator*(const ModMatrix& o) const;
  ModMatrix operator+(const ModMatrix& o) const;
  ModMatrix operator-(const ModMatrix& o) const;
  ModMatrix transpose() const;
  ModMatrix scaled(std::uint32_t c) const;
  bool operator==(const ModMatrix& o) const;
  bool operator!=(const ModMatrix& o) const { return !(*this == o); }
  bool is_zero() const;
  std::uint32_t trace() const;

  /// Row echelon in place; returns pivot column indices.
  std::vector<int> row_reduce();

 private:
  int rows_ = 0, cols_ = 0;
  PrimeField field_;
  std::vector<std::uint32_t> a_;
};

int rank(ModMatrix m);  // by value: elimination scratches the copy
/// Columns span the kernel {x : A x = 0}.
ModMatrix kernel_basis(const ModMatrix& m);
/// Solve A X = B; nullopt when inconsistent.
std::optional<ModMatrix> solve(const ModMatrix& a, const ModMatrix& b);
/// Throws Error(kind="SingularMatrix") when not invertible.
ModMatrix inverse(const ModMatrix& m);
/// Basis of the column span, as matrix columns (echelon-selected).
ModMatrix column_space_basis(const ModMatrix& m);

/// A split prime field for levels of roots of unity: p = 1 (mod N) with a
/// distinguished primitive N-th root omega, and p above a safety bound so
/// that every count computed downstream lifts exactly to Z.
struct PrimeEmbedding {
  PrimeField field;
  long level = 1;          // N
  std::uint32_t omega = 1; // primitive N-th root in F_p
  long long safety_bound = 1;

  std::uint32_t root_power(long k) const;  // omega^k with k reduced mod N
  /// Discrete log base omega; nullopt when x is not in <omega>.
  std::optional<long> dlog(std::uint32_t x) const;

  std::unordered_map<std::uint32_t, long> dlog_table;
};

/// Smallest prime p = 1 (mod N), p > bound, plus a primitive N-th root.
/// Deterministic; search capped at 2^31 (Error kind="SearchExhausted").
PrimeEmbedding choose_prime(long level, long long safety_bound);

/// Validate a user-supplied prime for the same contract.
PrimeEmbedding embedding_for_prime(std::uint32_t p, long level, long long safety_bound);

/// Ring homomorphism Q(zeta_N) -> F_p sending zeta_N to omega.
/// The number's level must divide the embedding level.
std::uint32_t embed(const CycloNumber& x, const PrimeEmbedding& e);

ModMatrix embed_matrix(const CycloMatrix& m, const PrimeEmbedding& e);

}  // namespace skewq
