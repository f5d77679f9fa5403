#include "doctest.h"
#include "helpers.hpp"
#include "skewq/error.hpp"
#include "skewq/fp.hpp"

using namespace skewq;

TEST_CASE("prime search: smallest split prime above the bound") {
  CHECK(choose_prime(1, 10).field.p() == 11);
  // independent upward scans
  {
    long long expect = 101;
    while (!(test::is_prime_oracle(expect) && expect % 6 == 1)) ++expect;
    CHECK(expect == 103);
    CHECK(choose_prime(6, 100).field.p() == 103);
  }
  {
    long long expect = 1001;
    while (!(test::is_prime_oracle(expect) && expect % 12 == 1)) ++expect;
    CHECK(expect == 1009);
    CHECK(choose_prime(12, 1000).field.p() == 1009);
  }
  const PrimeEmbedding e = choose_prime(6, 100);
  // omega has exact order 6
  CHECK(e.field.pow(e.omega, 6) == 1);
  for (int m = 1; m < 6; ++m) CHECK(e.field.pow(e.omega, m) != 1);
  CHECK(e.dlog(e.field.pow(e.omega, 4)) == 4);
  CHECK(!e.dlog(0).has_value());
  CHECK_THROWS_AS(embedding_for_prime(100, 6, 10), Error);      // not prime
  CHECK_THROWS_AS(embedding_for_prime(103, 6, 1000), Error);    // below bound
  CHECK_THROWS_AS(embedding_for_prime(101, 6, 10), Error);      // not 1 mod 6
}

TEST_CASE("embedding is a ring homomorphism") {
  const PrimeEmbedding e = choose_prime(12, 1000);
  CHECK(embed(CycloNumber(1), e) == 1);
  const std::uint32_t z6 = embed(CycloNumber::root_of_unity(6, 1), e);
  // image of the level-6 polynomial relation: z^2 - z + 1 = 0
  CHECK(e.field.add(e.field.sub(e.field.mul(z6, z6), z6), 1) == 0);
  CHECK(embed(CycloNumber::root_of_unity(6, 1) + CycloNumber::root_of_unity(6, 5), e) == 1);
  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    auto random_cyclo = [&] {
      CycloNumber x(0, 12);
      for (int k = 0; k < 3; ++k)
        x += CycloNumber(static_cast<long long>(rng.below(9)) - 4) *
             CycloNumber::root_of_unity(12, static_cast<long>(rng.below(12)));
      return x;
    };
    CycloNumber a = random_cyclo(), b = random_cyclo();
    CHECK(embed(a + b, e) == e.field.add(embed(a, e), embed(b, e)));
    CHECK(embed(a * b, e) == e.field.mul(embed(a, e), embed(b, e)));
  }
  CHECK_THROWS_AS(embed(CycloNumber::root_of_unity(5, 1), e), Error);  // 5 does not divide 12
}

TEST_CASE("rank, kernel, solve, inverse") {
  const std::uint32_t p = 1009;
  CHECK(rank(ModMatrix::identity(5, p)) == 5);
  CHECK(rank(ModMatrix(4, 7, p)) == 0);
  {
    // the order-4 generator of the 2-dimensional representation in the
    // worked example: rows (0, -1), (1, 0)
    ModMatrix b(2, 2, p);
    b.at(0, 1) = p - 1;
    b.at(1, 0) = 1;
    CHECK(rank(b) == 2);
    ModMatrix b4 = b * b * b * b;
    CHECK(b4 == ModMatrix::identity(2, p));
    CHECK(inverse(b) * b == ModMatrix::identity(2, p));
  }
  {
    ModMatrix singular(2, 2, p);
    singular.at(0, 0) = 1;
    singular.at(1, 0) = 1;
    CHECK_THROWS_AS(inverse(singular), Error);
  }
  Rng rng(23);
  for (int t = 0; t < 60; ++t) {
    const int r = 1 + static_cast<int>(rng.below(6));
    const int c = 1 + static_cast<int>(rng.below(6));
    ModMatrix m(r, c, p);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = static_cast<std::uint32_t>(rng.below(p));
    ModMatrix ker = kernel_basis(m);
    CHECK(rank(m) + ker.cols() == c);  // rank-nullity
    CHECK((m * ker).is_zero());
    ModMatrix basis = column_space_basis(m);
    CHECK(basis.cols() == rank(m));
    auto sol = solve(m, m);  // A X = A is always consistent
    REQUIRE(sol.has_value());
    CHECK(m * *sol == m);
  }
}
