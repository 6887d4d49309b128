// Copyright 2026 The divperiod Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <vector>

#include "doctest.h"
#include "divper/error.hpp"
#include "divper/primes.hpp"
#include "oracles.hpp"

using namespace divper;

TEST_CASE("build_table small limits") {
  const PrimeTable ten = build_table(10);
  CHECK(std::vector<u64>(ten.primes().begin(), ten.primes().end()) == std::vector<u64>{2, 3, 5, 7});
  const PrimeTable two = build_table(2);
  REQUIRE(two.primes().size() == 1);
  CHECK(two.primes()[0] == 2);
  CHECK_THROWS_AS(build_table(1), InvalidArgument);
  CHECK_THROWS_AS(build_table(0), InvalidArgument);
  CHECK_THROWS_AS(build_table(kMaxTableLimit + 1), ResourceError);
}

TEST_CASE("table invariants hold up to 10^5") {
  const PrimeTable t = build_table(100'000);
  u64 previous = 0;
  for (u64 p : t.primes()) {
    CHECK(p > previous);
    CHECK(is_prime(p));
    previous = p;
  }
  for (u64 i = 2; i <= t.limit(); ++i) {
    const u64 f = t.smallest_factor(i);
    REQUIRE(i % f == 0);
    REQUIRE((f == i) == oracle::is_prime_trial(i));
  }
}

TEST_CASE("table to 5e6 agrees with Miller-Rabin on a sample") {
  const PrimeTable t = build_table(5'000'000);
  // pi(5 * 10^6)
  CHECK(t.primes().size() == 348'513);
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<u64> pick(2, t.limit());
  int table_count = 0, mr_count = 0;
  for (int i = 0; i < 20'000; ++i) {
    const u64 n = pick(rng);
    table_count += t.is_prime(n);
    mr_count += is_prime(n);
  }
  CHECK(table_count == mr_count);
  CHECK(table_count > 0);
}

TEST_CASE("deterministic primality on 64-bit edge cases") {
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK(is_prime(9973));
  CHECK(is_prime((u64{1} << 61) - 1));
  CHECK(is_prime(18446744073709551557ull));  // largest 64-bit prime
  CHECK_FALSE(is_prime(3215031751ull));       // strong pseudoprime to bases 2, 3, 5, 7
  CHECK_FALSE(is_prime(3825123056546413051ull));
  for (u64 n = 0; n < 20'000; ++n) REQUIRE(is_prime(n) == oracle::is_prime_trial(n));
}

TEST_CASE("nth_prime") {
  CHECK(nth_prime(1) == 2);
  CHECK(nth_prime(2) == 3);
  CHECK(nth_prime(8) == 19);
  CHECK_THROWS_AS(nth_prime(0), InvalidArgument);

  u64 prev = nth_prime(1);
  for (std::size_t i = 1; i <= 10'000; ++i) {
    const u64 next = nth_prime(i + 1);
    REQUIRE(prev < next);
    if (i < 64) REQUIRE(prev <= (u64{1} << i));
    prev = next;
  }
  CHECK(nth_prime(10'000) == 104'729);
}

TEST_CASE("PrimeSource grows without invalidating snapshots") {
  PrimeSource source(16);
  auto before = source.snapshot();
  CHECK(before->primes().size() == 6);
  CHECK(source.nth(1000) == 7919);
  CHECK(before->limit() == 16);
  CHECK(before->primes().back() == 13);
  CHECK(source.snapshot()->primes().size() >= 1000);
  CHECK(source.with_limit(100'000)->limit() >= 100'000);
}

TEST_CASE("factorize") {
  CHECK(factorize(5040) == FactoredInt({{2, 4}, {3, 2}, {5, 1}, {7, 1}}));
  CHECK(factorize(1).is_one());
  CHECK(factorize(9973) == FactoredInt({{9973, 1}}));
  CHECK_THROWS_AS(factorize(0), InvalidArgument);

  const PrimeTable small = build_table(1000);
  CHECK(factorize(1'000'003ull * 1'000'033ull, small) == FactoredInt({{1'000'003, 1}, {1'000'033, 1}}));
  CHECK(factorize(UINT64_MAX) ==
        FactoredInt({{3, 1}, {5, 1}, {17, 1}, {257, 1}, {641, 1}, {65537, 1}, {6700417, 1}}));
  CHECK(factorize(u64{1} << 63) == FactoredInt({{2, 63}}));
}

TEST_CASE("factorize round-trips over [2, 10^5]") {
  for (u64 n = 2; n <= 100'000; ++n) {
    u64 product = 1;
    const FactoredInt f = factorize(n);
    for (const auto& [p, e] : f.factors()) {
      for (u64 i = 0; i < e; ++i) product *= p;
    }
    REQUIRE(product == n);
  }
}

TEST_CASE("least-factor factorization agrees with trial division") {
  const PrimeTable t = build_table(1'000'000);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<u64> pick(2, t.limit());
  for (int i = 0; i < 1000; ++i) {
    const u64 n = pick(rng);
    const FactoredInt f = factorize(n, t);
    const auto expected = oracle::trial_factor(n);
    REQUIRE(f.size() == expected.size());
    for (std::size_t j = 0; j < expected.size(); ++j) {
      CHECK(f.factors()[j].prime == expected[j].first);
      CHECK(f.factors()[j].exponent == expected[j].second);
    }
  }
}
