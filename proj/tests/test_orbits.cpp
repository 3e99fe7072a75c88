#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "addcollatz/errors.hpp"
#include "addcollatz/orbits.hpp"

using namespace addcollatz;

using Orbits = std::vector<std::vector<u64>>;

TEST_CASE("permutation_cycles examples") {
  CHECK(permutation_cycles(3, 2).orbits == Orbits{{0}, {1, 2}});
  CHECK(permutation_cycles(5, 2).orbits == Orbits{{0}, {1, 2, 3, 4}});
  CHECK(permutation_cycles(8, 3).orbits == Orbits{{0}, {1, 3}, {2, 6}, {4}, {5, 7}});
  CHECK(permutation_cycles(6, 1).orbits == Orbits{{0}, {1}, {2}, {3}, {4}, {5}});
  CHECK(permutation_cycles(1, 1).orbits == Orbits{{0}});
  CHECK_THROWS_AS(permutation_cycles(6, 4), DomainError);
}

TEST_CASE("orbit partition invariants, including closure under d^-1") {
  for (u64 a = 1; a <= 60; ++a) {
    for (u64 d = 1; d <= 60; ++d) {
      if (std::gcd(a, d) != 1) continue;
      const auto part = permutation_cycles(a, d);
      REQUIRE(part.orbits.front() == std::vector<u64>{0});
      const u64 d_inv = mod_inverse(d % a, a);
      std::map<u64, std::size_t> owner;
      for (std::size_t i = 0; i < part.orbits.size(); ++i) {
        const auto& o = part.orbits[i];
        REQUIRE(std::is_sorted(o.begin(), o.end()));
        for (u64 x : o) REQUIRE(owner.emplace(x, i).second);
      }
      REQUIRE(owner.size() == a);
      for (const auto& [x, i] : owner) {
        REQUIRE(owner.at(mul_mod(x, d, a)) == i);
        REQUIRE(owner.at(mul_mod(x, d_inv, a)) == i);
      }
    }
  }
}

TEST_CASE("stabilizer_size examples") {
  CHECK(stabilizer_size(3, 2, 0) == 2);
  CHECK(stabilizer_size(3, 2, 1) == 1);
  CHECK(stabilizer_size(8, 3, 2) == 1);
  CHECK_THROWS_AS(stabilizer_size(3, 2, 3), DomainError);
  CHECK_THROWS_AS(stabilizer_size(4, 2, 1), DomainError);
}

TEST_CASE("stabilizer formula matches the direct count") {
  for (u64 a = 1; a <= 40; ++a) {
    for (u64 d = 1; d <= 40; ++d) {
      if (std::gcd(a, d) != 1) continue;
      for (u64 x = 0; x < a; ++x) {
        REQUIRE(stabilizer_size(a, d, x) == stabilizer_size(a, d, x, StabilizerMode::BruteForce));
      }
    }
  }
}

TEST_CASE("burnside_count examples and agreement with the orbit walk") {
  CHECK(burnside_count(3, 2) == 2);
  CHECK(burnside_count(5, 2) == 2);
  CHECK(burnside_count(8, 3) == 5);
  for (u64 a = 1; a <= 60; ++a) {
    for (u64 d = 1; d <= 60; ++d) {
      if (std::gcd(a, d) != 1) continue;
      REQUIRE(burnside_count(a, d) == permutation_cycles(a, d).orbits.size());
    }
  }
}

TEST_CASE("group order equals the multiplicative order") {
  for (u64 a = 2; a <= 60; ++a) {
    for (u64 d = 1; d < a; ++d) {
      if (std::gcd(a, d) != 1) continue;
      // Zero is fixed by every element, so its stabilizer is all of H.
      REQUIRE(stabilizer_size(a, d, 0) == multiplicative_order(d, a));
      u64 size = 0;
      u64 v = 1;
      do {
        v = mul_mod(v, d, a);
        ++size;
      } while (v != 1);
      REQUIRE(size == multiplicative_order(d, a));
    }
  }
}

TEST_CASE("loop_for_residue examples") {
  const Params p(3, 2);
  CHECK(loop_for_residue(p, 0) == std::vector<u64>{3, 6});
  CHECK(loop_for_residue(p, 1) == std::vector<u64>{1, 4, 2});
  CHECK(loop_for_residue(p, 2) == std::vector<u64>{1, 4, 2});
  CHECK_THROWS_AS(loop_for_residue(Params(4, 2), 1), DomainError);
  CHECK_THROWS_AS(loop_for_residue(Params(3, 1), 1), DomainError);
}

TEST_CASE("orbits correspond one-to-one with trajectory loops") {
  for (u64 a = 1; a <= 40; ++a) {
    for (u64 d = 2; d <= 40; ++d) {
      if (std::gcd(a, d) != 1) continue;
      const Params p(a, d);
      const auto part = permutation_cycles(a, d);
      std::set<std::vector<u64>> distinct;
      for (const auto& orbit : part.orbits) {
        const auto cycle = loop_for_residue(p, orbit.front());
        for (u64 r : orbit) REQUIRE(loop_for_residue(p, r) == cycle);
        REQUIRE(distinct.insert(cycle).second);
      }
      REQUIRE(loop_inventory(p).size() == part.orbits.size());
    }
  }
}
