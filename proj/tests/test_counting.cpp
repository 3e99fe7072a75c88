#include <doctest.h>

#include <numeric>

#include "addcollatz/counting.hpp"
#include "addcollatz/errors.hpp"
#include "addcollatz/orbits.hpp"

using namespace addcollatz;

TEST_CASE("xi_formula examples") {
  CHECK(xi_formula(3, 2).total == 2);
  CHECK(xi_formula(7, 1).total == 7);
  const auto xi = xi_formula(8, 3);
  CHECK(xi.total == 5);
  CHECK(xi.terms == std::vector<XiTerm>{{1, 1, 1, 1}, {2, 1, 1, 1}, {4, 2, 2, 1}, {8, 4, 2, 2}});
  CHECK_THROWS_AS(xi_formula(6, 4), DomainError);
}

TEST_CASE("xi breakdown invariants") {
  for (u64 a = 1; a <= 80; ++a) {
    for (u64 d = 1; d <= 30; ++d) {
      if (std::gcd(a, d) != 1) continue;
      const auto xi = xi_formula(a, d);
      REQUIRE(xi.terms.size() == divisors(a).size());
      u64 sum = 0;
      for (const auto& t : xi.terms) {
        REQUIRE(a % t.divisor == 0);
        REQUIRE(t.phi % t.order == 0);
        REQUIRE(carmichael_lambda(t.divisor) % t.order == 0);
        REQUIRE(t.term * t.order == t.phi);
        sum += t.term;
      }
      REQUIRE(sum == xi.total);
    }
  }
}

TEST_CASE("xi_formula equals Burnside and the orbit walk") {
  for (u64 a = 1; a <= 60; ++a) {
    for (u64 d = 1; d <= 60; ++d) {
      if (std::gcd(a, d) != 1) continue;
      const u64 xi = xi_formula(a, d).total;
      REQUIRE(xi == burnside_count(a, d));
      REQUIRE(xi == permutation_cycles(a, d).orbits.size());
    }
  }
}

TEST_CASE("xi_lower_bound examples") {
  CHECK(xi_lower_bound(1) == 1);
  CHECK(xi_lower_bound(8) == 5);
  CHECK(xi_lower_bound(15) == 5);
}

TEST_CASE("bound sandwich") {
  for (u64 a = 1; a <= 100; ++a) {
    const u64 lower = xi_lower_bound(a);
    CHECK(xi_formula(a, 1).total == a);
    for (u64 d = 1; d <= a; ++d) {
      if (std::gcd(a, d) != 1) continue;
      const u64 xi = xi_formula(a, d).total;
      REQUIRE(lower <= xi);
      REQUIRE(xi <= a);
    }
  }
}

TEST_CASE("xi_pq examples") {
  CHECK(xi_pq(3, 5, 2) == 5);
  CHECK(xi_pq(3, 5, 1) == 15);
  CHECK(xi_pq(3, 7, 2) == 6);
  CHECK(xi_formula(21, 2).total == 6);
  CHECK_THROWS_AS(xi_pq(3, 3, 2), DomainError);
  CHECK_THROWS_AS(xi_pq(4, 5, 3), DomainError);
  CHECK_THROWS_AS(xi_pq(3, 5, 6), DomainError);
}

TEST_CASE("two-prime closed form matches the divisor sum") {
  const std::vector<u64> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      const u64 p = primes[i], q = primes[j];
      for (u64 d = 1; d <= 50; ++d) {
        if (std::gcd(d, p * q) != 1) continue;
        REQUIRE(xi_pq(p, q, d) == xi_formula(p * q, d).total);
        REQUIRE(xi_pq(q, p, d) == xi_pq(p, q, d));
      }
    }
  }
}

TEST_CASE("strong_bound_witness examples") {
  CHECK(strong_bound_witness(1) == 1);
  CHECK(strong_bound_witness(8) == 3);
  CHECK(strong_bound_witness(15) == 2);
}

TEST_CASE("strong_bound_witness agrees with a search over totals") {
  for (u64 a = 1; a <= 150; ++a) {
    const u64 lower = xi_lower_bound(a);
    std::optional<u64> expect;
    for (u64 d = 1; d < std::max<u64>(a, 2); ++d) {
      if (std::gcd(a, d) == 1 && xi_formula(a, d).total == lower) {
        expect = d;
        break;
      }
    }
    REQUIRE(expect.has_value());
    REQUIRE(strong_bound_witness(a) == expect);
  }
}
