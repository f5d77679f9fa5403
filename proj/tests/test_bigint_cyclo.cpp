#include "doctest.h"
#include "helpers.hpp"
#include "skewq/cyclo.hpp"
#include "skewq/error.hpp"
#include "skewq/group.hpp"

using namespace skewq;

namespace {

// naive integer polynomial arithmetic, the independent route for the
// cyclotomic division checks
using IPoly = std::vector<long long>;

IPoly imul(const IPoly& a, const IPoly& b) {
  IPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

IPoly idiv_exact(IPoly num, const IPoly& den) {
  IPoly q(num.size() - den.size() + 1, 0);
  for (std::size_t i = num.size(); i-- + 1 >= den.size() && i + 1 >= den.size();) {
    long long c = num[i] / den.back();
    REQUIRE(c * den.back() == num[i]);
    q[i - den.size() + 1] = c;
    for (std::size_t k = 0; k < den.size(); ++k) num[i - den.size() + 1 + k] -= c * den[k];
    if (i + 1 == den.size()) break;
  }
  for (long long c : num) REQUIRE(c == 0);
  return q;
}

std::vector<long long> as_ll(const std::vector<BigInt>& p) {
  std::vector<long long> r;
  for (const BigInt& c : p) r.push_back(c.to_ll());
  return r;
}

}  // namespace

TEST_CASE("bigint arithmetic basics") {
  BigInt a = BigInt::from_string("123456789012345678901234567890");
  BigInt b = BigInt::from_string("-98765432109876543210");
  CHECK((a + b - a) == b);
  // reference product computed independently
  CHECK((a * b).to_string() == "-12193263113702179522496570642237463801111263526900");
  CHECK((a / BigInt(1000000007)) * BigInt(1000000007) + a % BigInt(1000000007) == a);
  CHECK(BigInt::gcd(BigInt(252), BigInt(105)) == BigInt(21));
  CHECK(BigInt(-17).mod_u32(5) == 3);
  Rational r(BigInt(6), BigInt(-8));
  CHECK(r.to_string() == "-3/4");
  CHECK((r + Rational(BigInt(3), BigInt(4))).is_zero());
  CHECK(Rational::from_string("10/15") == Rational(BigInt(2), BigInt(3)));
}

TEST_CASE("cyclotomic polynomials: small cases and the degree identity") {
  CHECK(as_ll(cyclotomic_polynomial(1)) == std::vector<long long>{-1, 1});
  // X^2 - X + 1 at level 6: certified by multiplying out the divisors of
  // X^6 - 1 independently
  CHECK(as_ll(cyclotomic_polynomial(6)) == std::vector<long long>{1, -1, 1});
  {
    IPoly prod{1};
    for (long d : {1, 2, 3, 6})
      prod = imul(prod, as_ll(cyclotomic_polynomial(d)));
    IPoly x6{-1, 0, 0, 0, 0, 0, 1};
    CHECK(prod == x6);
  }
  // level 12 via independent division of X^12 - 1 by phi_1..phi_6
  {
    IPoly prod{1};
    for (long d : {1, 2, 3, 4, 6}) prod = imul(prod, as_ll(cyclotomic_polynomial(d)));
    IPoly x12(13, 0);
    x12[0] = -1;
    x12[12] = 1;
    IPoly expected = idiv_exact(x12, prod);
    CHECK(expected == std::vector<long long>{1, 0, -1, 0, 1});
    CHECK(as_ll(cyclotomic_polynomial(12)) == expected);
  }
  for (long n = 1; n <= 40; ++n)
    CHECK(static_cast<long>(cyclotomic_polynomial(n).size()) - 1 == test::totient_oracle(n));
}

TEST_CASE("cyclotomic numbers: arithmetic, lifting, canonical equality") {
  const CycloNumber z6 = CycloNumber::root_of_unity(6, 1);
  CHECK(z6 * z6 * z6 == CycloNumber(-1));                 // zeta^3 = -1
  CHECK(z6 + CycloNumber::root_of_unity(6, 5) == CycloNumber(1));  // zeta + zeta^-1 = 1
  // lifting to the lcm level keeps values: zeta_6 = zeta_12^2
  CHECK(z6 == CycloNumber::root_of_unity(12, 2));
  CHECK((z6 * CycloNumber::root_of_unity(4, 1)) == CycloNumber::root_of_unity(12, 5));
  // powers cycle
  CycloNumber acc(1);
  for (int k = 0; k < 6; ++k) acc = acc * z6;
  CHECK(acc == CycloNumber(1));
}

TEST_CASE("cyclotomic parsing round-trips") {
  for (const char* text : {"0", "1", "-1", "3/2", "z", "-z", "z^2", "1 - z", "2*z^3 - 1/2",
                           "z^-1", "1/2 + 1/2*z^2"}) {
    CycloNumber x = CycloNumber::parse(text, 12);
    CHECK(CycloNumber::parse(x.to_string(), 12) == x);
  }
  CHECK(CycloNumber::parse("z^-1", 6) == CycloNumber::root_of_unity(6, 5));
  CHECK(CycloNumber::parse("1 - z + z^2", 6) ==
        CycloNumber(1) - CycloNumber::root_of_unity(6, 1) + CycloNumber::root_of_unity(6, 2));
  CHECK_THROWS_AS(CycloNumber::parse("w + 1", 6), Error);
  CHECK_THROWS_AS(CycloNumber::parse("z^", 6), Error);
}

TEST_CASE("cyclotomic arithmetic properties on random pairs") {
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    const long level = 1 + static_cast<long>(rng.below(12));
    auto random_cyclo = [&] {
      CycloNumber x(0, level);
      for (int k = 0; k < 3; ++k) {
        long long c = static_cast<long long>(rng.below(7)) - 3;
        x += CycloNumber(c) * CycloNumber::root_of_unity(level, static_cast<long>(rng.below(level)));
      }
      return x;
    };
    CycloNumber a = random_cyclo(), b = random_cyclo(), c = random_cyclo();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
}
