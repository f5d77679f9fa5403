#include "skewq/cyclo.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "skewq/error.hpp"

namespace skewq {

namespace {

// exact division of integer polynomials, remainder must vanish
std::vector<BigInt> poly_div_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  if (den.empty() || den.back().is_zero())
    throw std::invalid_argument("poly_div_exact: bad divisor");
  std::vector<BigInt> quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, BigInt(0));
  for (std::size_t i = num.size(); i-- >= den.size() && i + 1 >= den.size();) {
    if (i + 1 < den.size()) break;
    BigInt c = num[i] / den.back();
    if (!(c * den.back() == num[i]))
      throw std::logic_error("poly_div_exact: leading term not divisible");
    quot[i - den.size() + 1] = c;
    for (std::size_t k = 0; k < den.size(); ++k)
      num[i - den.size() + 1 + k] -= c * den[k];
    if (i == 0) break;
  }
  for (const BigInt& c : num)
    if (!c.is_zero()) throw std::logic_error("poly_div_exact: nonzero remainder");
  return quot;
}

std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace

long euler_phi(long n) {
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<BigInt> cyclotomic_polynomial(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n >= 1 required");
  static std::map<long, std::vector<BigInt>> cache;
  static std::mutex cache_mutex;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // X^n - 1
  std::vector<BigInt> num(static_cast<std::size_t>(n) + 1, BigInt(0));
  num[0] = BigInt(-1);
  num[static_cast<std::size_t>(n)] = BigInt(1);
  std::vector<BigInt> den{BigInt(1)};
  for (long d = 1; d < n; ++d)
    if (n % d == 0) den = poly_mul(den, cyclotomic_polynomial(d));
  std::vector<BigInt> result = poly_div_exact(std::move(num), den);
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(n, result);
  return result;
}

CycloNumber::CycloNumber(Rational r, long level) : level_(level) {
  if (level < 1) throw std::invalid_argument("CycloNumber: level >= 1 required");
  coeffs_.assign(static_cast<std::size_t>(euler_phi(level)), Rational(0));
  std::vector<Rational> raw(1, std::move(r));
  coeffs_ = reduce(std::move(raw), level);
}

std::vector<Rational> CycloNumber::reduce(std::vector<Rational> raw, long level) {
  const std::vector<BigInt> phi = cyclotomic_polynomial(level);
  const std::size_t d = phi.size() - 1;  // = euler_phi(level)
  if (raw.size() < d) raw.resize(d, Rational(0));
  for (std::size_t i = raw.size(); i-- > d;) {
    if (raw[i].is_zero()) continue;
    Rational c = raw[i];
    // subtract c * X^{i-d} * phi
    for (std::size_t k = 0; k + 1 < phi.size(); ++k)
      raw[i - d + k] -= c * Rational(phi[k], BigInt(1));
    raw[i] = Rational(0);
  }
  raw.resize(d);
  return raw;
}

CycloNumber CycloNumber::root_of_unity(long level, long power) {
  if (level < 1) throw std::invalid_argument("root_of_unity: level >= 1 required");
  power %= level;
  if (power < 0) power += level;
  CycloNumber r;
  r.level_ = level;
  std::vector<Rational> raw(static_cast<std::size_t>(power) + 1, Rational(0));
  raw[static_cast<std::size_t>(power)] = Rational(1);
  r.coeffs_ = reduce(std::move(raw), level);
  return r;
}

bool CycloNumber::is_zero() const {
  for (const Rational& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool CycloNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

long CycloNumber::common_level(long a, long b) { return std::lcm(a, b); }

CycloNumber CycloNumber::lifted(long m) const {
  if (m == level_) return *this;
  if (m % level_ != 0) throw std::invalid_argument("CycloNumber::lifted: level must divide target");
  const long stride = m / level_;
  std::vector<Rational> raw(static_cast<std::size_t>(level_) * stride, Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    raw[k * static_cast<std::size_t>(stride)] = coeffs_[k];
  CycloNumber r;
  r.level_ = m;
  r.coeffs_ = reduce(std::move(raw), m);
  return r;
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber r = *this;
  for (Rational& c : r.coeffs_) c = -c;
  return r;
}

CycloNumber CycloNumber::operator+(const CycloNumber& o) const {
  const long m = common_level(level_, o.level_);
  CycloNumber a = lifted(m), b = o.lifted(m);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
  return a;
}

CycloNumber CycloNumber::operator-(const CycloNumber& o) const { return *this + (-o); }

CycloNumber CycloNumber::operator*(const CycloNumber& o) const {
  const long m = common_level(level_, o.level_);
  CycloNumber a = lifted(m), b = o.lifted(m);
  std::vector<Rational> raw(a.coeffs_.size() + b.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  CycloNumber r;
  r.level_ = m;
  r.coeffs_ = reduce(std::move(raw), m);
  return r;
}

bool CycloNumber::operator==(const CycloNumber& o) const {
  const long m = common_level(level_, o.level_);
  return lifted(m).coeffs_ == o.lifted(m).coeffs_;
}

namespace {

struct Term {
  Rational coeff;
  long power = 0;  // power of z, 0 for plain rationals
};

// one term: [rational][*][z[^exp]]
Term parse_term(const std::string& t, long level) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
  };
  skip_ws();
  Term term{Rational(1), 0};
  bool saw_coeff = false;
  if (pos < t.size() && (std::isdigit(static_cast<unsigned char>(t[pos])))) {
    std::size_t start = pos;
    while (pos < t.size() &&
           (std::isdigit(static_cast<unsigned char>(t[pos])) || t[pos] == '/'))
      ++pos;
    term.coeff = Rational::from_string(t.substr(start, pos - start));
    saw_coeff = true;
  }
  skip_ws();
  if (pos < t.size() && t[pos] == '*') {
    ++pos;
    skip_ws();
  }
  if (pos < t.size() && (t[pos] == 'z' || t[pos] == 'Z')) {
    ++pos;
    long power = 1;
    skip_ws();
    if (pos < t.size() && t[pos] == '^') {
      ++pos;
      skip_ws();
      std::size_t start = pos;
      if (pos < t.size() && (t[pos] == '-' || t[pos] == '+')) ++pos;
      while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
      if (start == pos) fail_input("CycloParse", "missing exponent after '^' in \"" + t + "\"");
      power = std::stol(t.substr(start, pos - start));
    }
    power %= level;
    if (power < 0) power += level;
    term.power = power;
  } else if (!saw_coeff) {
    fail_input("CycloParse", "cannot parse term \"" + t + "\"");
  }
  skip_ws();
  if (pos != t.size()) fail_input("CycloParse", "trailing characters in term \"" + t + "\"");
  return term;
}

}  // namespace

CycloNumber CycloNumber::parse(const std::string& text, long level) {
  if (level < 1) fail_input("CycloParse", "level must be >= 1");
  // split into signed terms at top level
  std::vector<std::pair<int, std::string>> parts;
  int sign = 1;
  std::string cur;
  bool any_content = false;
  for (char ch : text) {
    if (ch == '+' || ch == '-') {
      // '-' directly after '^' belongs to an exponent
      std::string trimmed = cur;
      while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
        trimmed.pop_back();
      if (!trimmed.empty() && trimmed.back() == '^') {
        cur += ch;
        continue;
      }
      if (any_content) parts.emplace_back(sign, cur);
      cur.clear();
      sign = ch == '-' ? -1 : 1;
      any_content = true;
      continue;
    }
    if (!std::isspace(static_cast<unsigned char>(ch))) any_content = true;
    cur += ch;
  }
  parts.emplace_back(sign, cur);

  CycloNumber result{Rational(0), level};
  for (auto& [s, p] : parts) {
    bool blank = true;
    for (char ch : p)
      if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    if (blank) {
      if (parts.size() == 1) fail_input("CycloParse", "empty cyclotomic literal");
      fail_input("CycloParse", "empty term in \"" + text + "\"");
    }
    Term t = parse_term(p, level);
    Rational c = s < 0 ? -t.coeff : t.coeff;
    result += CycloNumber(c, 1) * root_of_unity(level, t.power);
  }
  return result;
}

std::string CycloNumber::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    Rational mag = c;
    bool neg = c.num().sign() < 0;
    if (neg) mag = -mag;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string cs = mag.to_string();
    if (k == 0) {
      out += cs;
    } else {
      if (cs != "1") out += cs + "*";
      out += "z";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

CycloMatrix CycloMatrix::identity(int n) {
  CycloMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = CycloNumber(1);
  return m;
}

CycloMatrix CycloMatrix::operator*(const CycloMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("CycloMatrix: shape mismatch");
  CycloMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const CycloNumber& v = at(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += v * o.at(k, j);
      }
    }
  }
  return r;
}

CycloMatrix CycloMatrix::transpose() const {
  CycloMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool CycloMatrix::operator==(const CycloMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != o.at(i, j)) return false;
  return true;
}

}  // namespace skewq
