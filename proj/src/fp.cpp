#include "skewq/fp.hpp"

#include <stdexcept>

#include "skewq/error.hpp"

namespace skewq {

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1 % p_;
  std::uint32_t base = a % p_;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw Error(ErrorCategory::kGuard, "SingularMatrix", "inverse of 0 in F_p");
  return pow(a, p_ - 2);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    if (n % p == 0) return n == p;
  }
  // deterministic Miller-Rabin for n < 3,215,031,751 with bases 2,3,5,7
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1 % n;
    a %= n;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

ModMatrix ModMatrix::identity(int n, std::uint32_t p) {
  ModMatrix m(n, n, p);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1 % p;
  return m;
}

ModMatrix ModMatrix::operator*(const ModMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("ModMatrix: shape mismatch in *");
  ModMatrix r(rows_, o.cols_, p());
  if (rows_ == 0 || cols_ == 0 || o.cols_ == 0) return r;
  const std::uint64_t pp = p();
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      std::uint64_t v = at(i, k);
      if (v == 0) continue;
      const std::uint32_t* orow = o.a_.data() + static_cast<std::size_t>(k) * o.cols_;
      std::uint32_t* rrow = r.a_.data() + static_cast<std::size_t>(i) * o.cols_;
      for (int j = 0; j < o.cols_; ++j) {
        rrow[j] = static_cast<std::uint32_t>((rrow[j] + v * orow[j]) % pp);
      }
    }
  }
  return r;
}

ModMatrix ModMatrix::operator+(const ModMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("ModMatrix: shape mismatch in +");
  ModMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.add(a_[i], o.a_[i]);
  return r;
}

ModMatrix ModMatrix::operator-(const ModMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("ModMatrix: shape mismatch in -");
  ModMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.sub(a_[i], o.a_[i]);
  return r;
}

ModMatrix ModMatrix::transpose() const {
  ModMatrix r(cols_, rows_, p());
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

ModMatrix ModMatrix::scaled(std::uint32_t c) const {
  ModMatrix r = *this;
  for (std::uint32_t& v : r.a_) v = field_.mul(v, c);
  return r;
}

bool ModMatrix::operator==(const ModMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && p() == o.p() && a_ == o.a_;
}

bool ModMatrix::is_zero() const {
  for (std::uint32_t v : a_)
    if (v != 0) return false;
  return true;
}

std::uint32_t ModMatrix::trace() const {
  std::uint32_t t = 0;
  for (int i = 0; i < rows_ && i < cols_; ++i) t = field_.add(t, at(i, i));
  return t;
}

std::vector<int> ModMatrix::row_reduce() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int pivot = -1;
    for (int r = row; r < rows_; ++r) {
      if (at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int c = 0; c < cols_; ++c) std::swap(at(pivot, c), at(row, c));
    }
    const std::uint32_t iv = field_.inv(at(row, col));
    for (int c = col; c < cols_; ++c) at(row, c) = field_.mul(at(row, c), iv);
    for (int r = 0; r < rows_; ++r) {
      if (r == row || at(r, col) == 0) continue;
      const std::uint32_t f = at(r, col);
      for (int c = col; c < cols_; ++c)
        at(r, c) = field_.sub(at(r, c), field_.mul(f, at(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(ModMatrix m) { return static_cast<int>(m.row_reduce().size()); }

ModMatrix kernel_basis(const ModMatrix& m) {
  ModMatrix r = m;
  std::vector<int> pivots = r.row_reduce();
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  const int k = m.cols() - static_cast<int>(pivots.size());
  ModMatrix kern(m.cols(), k, m.p());
  int out = 0;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    kern.at(free, out) = 1;
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
      kern.at(pivots[pi], out) = r.field().neg(r.at(static_cast<int>(pi), free));
    ++out;
  }
  return kern;
}

std::optional<ModMatrix> solve(const ModMatrix& a, const ModMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
  ModMatrix aug(a.rows(), a.cols() + b.cols(), a.p());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
  }
  std::vector<int> pivots = aug.row_reduce();
  for (int c : pivots)
    if (c >= a.cols()) return std::nullopt;  // inconsistent
  ModMatrix x(a.cols(), b.cols(), a.p());
  for (std::size_t pi = 0; pi < pivots.size(); ++pi)
    for (int j = 0; j < b.cols(); ++j)
      x.at(pivots[pi], j) = aug.at(static_cast<int>(pi), a.cols() + j);
  return x;
}

ModMatrix inverse(const ModMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  auto x = solve(m, ModMatrix::identity(m.rows(), m.p()));
  if (!x || rank(m) != m.rows())
    throw Error(ErrorCategory::kGuard, "SingularMatrix", "matrix is not invertible");
  return *x;
}

ModMatrix column_space_basis(const ModMatrix& m) {
  ModMatrix r = m;
  std::vector<int> pivots = r.row_reduce();
  ModMatrix basis(m.rows(), static_cast<int>(pivots.size()), m.p());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (int i = 0; i < m.rows(); ++i) basis.at(i, static_cast<int>(k)) = m.at(i, pivots[k]);
  return basis;
}

std::uint32_t PrimeEmbedding::root_power(long k) const {
  long r = k % level;
  if (r < 0) r += level;
  return field.pow(omega, static_cast<std::uint64_t>(r));
}

std::optional<long> PrimeEmbedding::dlog(std::uint32_t x) const {
  auto it = dlog_table.find(x);
  if (it == dlog_table.end()) return std::nullopt;
  return it->second;
}

namespace {

PrimeEmbedding finish_embedding(std::uint32_t p, long level, long long bound) {
  PrimeEmbedding e;
  e.field = PrimeField(p);
  e.level = level;
  e.safety_bound = bound;
  // primitive N-th root: power up candidates until the order is exactly N
  std::vector<long> prime_divs;
  long m = level;
  for (long q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      prime_divs.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) prime_divs.push_back(m);
  for (std::uint32_t cand = 2;; ++cand) {
    if (level == 1) {
      e.omega = 1;
      break;
    }
    std::uint32_t w = e.field.pow(cand % p, (p - 1) / static_cast<std::uint32_t>(level));
    bool primitive = w != 0;
    for (long q : prime_divs) {
      if (e.field.pow(w, static_cast<std::uint64_t>(level / q)) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      e.omega = w;
      break;
    }
    if (cand > p) fail_guard("SplitFailure", "no primitive root found (p not prime?)");
  }
  std::uint32_t x = 1;
  for (long k = 0; k < level; ++k) {
    e.dlog_table.emplace(x, k);
    x = e.field.mul(x, e.omega);
  }
  return e;
}

}  // namespace

PrimeEmbedding choose_prime(long level, long long safety_bound) {
  if (level < 1 || safety_bound < 1)
    fail_input("PrimeSearch", "level and safety bound must be >= 1");
  const long long cap = (1ll << 31);
  // smallest p > bound with p = 1 (mod level)
  long long start = safety_bound + 1;
  start += (((1 - start) % level) + level) % level;
  for (long long p = start; p < cap; p += level) {
    if (p > safety_bound && is_prime_u64(static_cast<std::uint64_t>(p)))
      return finish_embedding(static_cast<std::uint32_t>(p), level, safety_bound);
  }
  throw Error(ErrorCategory::kInput, "SearchExhausted",
              "no prime = 1 mod " + std::to_string(level) + " below 2^31");
}

PrimeEmbedding embedding_for_prime(std::uint32_t p, long level, long long safety_bound) {
  if (!is_prime_u64(p)) fail_input("PrimeOverride", std::to_string(p) + " is not prime");
  if (static_cast<long long>(p) <= safety_bound)
    fail_input("PrimeOverride", "prime " + std::to_string(p) + " does not exceed safety bound " +
                                    std::to_string(safety_bound));
  if ((p - 1) % static_cast<std::uint32_t>(level) != 0)
    fail_input("PrimeOverride",
               "prime " + std::to_string(p) + " is not 1 mod " + std::to_string(level));
  return finish_embedding(p, level, safety_bound);
}

std::uint32_t embed(const CycloNumber& x, const PrimeEmbedding& e) {
  if (e.level % x.level() != 0)
    fail_input("EmbedLevel", "cyclotomic level " + std::to_string(x.level()) +
                                 " does not divide embedding level " + std::to_string(e.level));
  const long stride = e.level / x.level();
  std::uint32_t acc = 0;
  const std::uint32_t p = e.field.p();
  for (std::size_t k = 0; k < x.coeffs().size(); ++k) {
    const Rational& c = x.coeffs()[k];
    if (c.is_zero()) continue;
    std::uint32_t den = c.den().mod_u32(p);
    if (den == 0)
      fail_input("DenominatorNotInvertible",
                 "denominator " + c.den().to_string() + " vanishes mod " + std::to_string(p));
    std::uint32_t v = e.field.mul(c.num().mod_u32(p), e.field.inv(den));
    acc = e.field.add(acc, e.field.mul(v, e.root_power(static_cast<long>(k) * stride)));
  }
  return acc;
}

ModMatrix embed_matrix(const CycloMatrix& m, const PrimeEmbedding& e) {
  ModMatrix r(m.rows(), m.cols(), e.field.p());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = embed(m.at(i, j), e);
  return r;
}

}  // namespace skewq
