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

#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "divper/error.hpp"
#include "divper/factored.hpp"
#include "divper/primes.hpp"
#include "oracles.hpp"

using namespace divper;

namespace {

const FactoredInt k5040({{2, 4}, {3, 2}, {5, 1}, {7, 1}});
const FactoredInt kL({{2, 6}, {3, 4}, {5, 2}, {7, 2}, {11, 1}, {13, 1}, {17, 1}, {19, 1}});

std::vector<std::pair<u64, u64>> as_pairs(const FactoredInt& f) {
  std::vector<std::pair<u64, u64>> out;
  for (const auto& [p, e] : f.factors()) out.emplace_back(p, e);
  return out;
}

FactoredInt random_factored(std::mt19937_64& rng) {
  static const u64 kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  std::uniform_int_distribution<int> exp(0, 6);
  std::vector<PrimePower> f;
  for (u64 p : kPrimes) {
    if (int e = exp(rng) - 2; e > 0) f.push_back({p, static_cast<u64>(e)});
  }
  return FactoredInt(std::move(f));
}

}  // namespace

TEST_CASE("construction validates invariants") {
  CHECK_THROWS_AS(FactoredInt({{4, 1}}), InvalidArgument);
  CHECK_THROWS_AS(FactoredInt({{3, 1}, {2, 1}}), InvalidArgument);
  CHECK_THROWS_AS(FactoredInt({{2, 1}, {2, 1}}), InvalidArgument);
  CHECK_THROWS_AS(FactoredInt({{2, 0}}), InvalidArgument);
  CHECK_THROWS_AS(FactoredInt({{1, 1}}), InvalidArgument);
  CHECK(FactoredInt().is_one());
  CHECK(k5040.exponent_of(3) == 2);
  CHECK(k5040.exponent_of(11) == 0);
}

TEST_CASE("multiply") {
  CHECK(multiply(FactoredInt({{2, 1}}), FactoredInt({{3, 1}})) == FactoredInt({{2, 1}, {3, 1}}));
  CHECK(multiply(FactoredInt({{2, 2}}), FactoredInt({{2, 3}})) == FactoredInt({{2, 5}}));
  CHECK(multiply(k5040, FactoredInt()) == k5040);
  CHECK_THROWS_AS(multiply(FactoredInt({{2, UINT64_MAX}}), FactoredInt({{2, 1}})), TooLarge);
}

TEST_CASE("compare") {
  CHECK(compare(k5040, kL) == std::strong_ordering::less);
  CHECK(compare(kL, kL) == std::strong_ordering::equal);
  CHECK(compare(FactoredInt({{2, 1}, {3, 1}, {5, 1}, {7, 1}}), FactoredInt({{2, 3}, {3, 1}, {5, 1}})) ==
        std::strong_ordering::greater);
  // Consecutive integers differ by far less than the log screen.
  const FactoredInt a = factorize(u64{1} << 40);
  const FactoredInt b = factorize((u64{1} << 40) + 1);
  CHECK(compare(a, b) == std::strong_ordering::less);
  CHECK(compare(b, a) == std::strong_ordering::greater);
  // Beyond 64 bits: 2^64 against 2^64 + 1.
  const FactoredInt two64({{2, 64}});
  const FactoredInt two64_plus_1({{274177, 1}, {67280421310721ull, 1}});
  CHECK(compare(two64, two64_plus_1) == std::strong_ordering::less);
}

TEST_CASE("log10_value") {
  CHECK(log10_value(FactoredInt()) == 0.0);
  CHECK(std::abs(log10_value(FactoredInt({{2, 1}})) - std::log10(2.0)) < 1e-9);
  CHECK(std::abs(log10_value(FactoredInt({{2, 1}})) - 0.30103) < 1e-5);
  CHECK(std::abs(log10_value(kL) - 11.467) < 1e-3);
}

TEST_CASE("to_decimal") {
  CHECK(to_decimal(k5040) == "5040");
  CHECK(to_decimal(FactoredInt()) == "1");
  CHECK(to_decimal(kL) == oracle::power_product_decimal(as_pairs(kL)));
  CHECK(to_decimal(kL) == "293318625600");
  CHECK(to_decimal(kL).size() == 12);
  CHECK(to_decimal(FactoredInt({{2, 64}})) == "18446744073709551616");
  CHECK_THROWS_AS(to_decimal(FactoredInt({{2, 40'000}})), TooLarge);
  CHECK(to_decimal(FactoredInt({{2, 40'000}}), 20'000).size() == 12'042);
  try {
    (void)to_decimal(FactoredInt({{2, 40'000}}), 100);
    FAIL("expected TooLarge");
  } catch (const TooLarge& e) {
    CHECK(std::string(e.what()).find("100") != std::string::npos);
  }
}

TEST_CASE("divisor_count and distinct_prime_count") {
  CHECK(divisor_count(kL) == 5040);
  CHECK(divisor_count(FactoredInt()) == 1);
  CHECK(divisor_count(k5040) == 60);
  CHECK(divisor_count(FactoredInt({{2, UINT64_MAX}})).get_str() == "18446744073709551616");
  CHECK(distinct_prime_count(k5040) == 4);
  CHECK(distinct_prime_count(FactoredInt()) == 0);
  CHECK(distinct_prime_count(FactoredInt({{2, 2}, {3, 1}, {5, 1}})) == 3);
}

TEST_CASE("canonical text form") {
  CHECK(to_string(kL) == "2^6*3^4*5^2*7^2*11*13*17*19");
  CHECK(to_string(FactoredInt()) == "1");
  CHECK(parse_factored("2^6*3^4*5^2*7^2*11*13*17*19") == kL);
  CHECK(parse_factored(" 2^4 * 3^2 *5 * 7 ") == k5040);
  CHECK(parse_factored("1").is_one());
  CHECK(parse_factored("3*2^2*2^2") == FactoredInt({{2, 4}, {3, 1}}));
  for (const char* bad : {"", "4^2", "2^0", "2**3", "abc", "2^", "*2", "1*2", "2^-1", "99999999999999999999"})
    CHECK_THROWS_AS(parse_factored(bad), InvalidArgument);
}

TEST_CASE("text form round-trips on random values") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const FactoredInt f = random_factored(rng);
    REQUIRE(parse_factored(to_string(f)) == f);
  }
}

TEST_CASE("d is multiplicative on coprime pairs") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<u64> pick(1, 1'000'000);
  int tested = 0;
  while (tested < 2000) {
    const u64 a = pick(rng), b = pick(rng);
    if (std::gcd(a, b) != 1) continue;
    ++tested;
    const FactoredInt fa = factorize(a), fb = factorize(b);
    REQUIRE(divisor_count(multiply(fa, fb)) == divisor_count(fa) * divisor_count(fb));
    REQUIRE(divisor_count(fa) == oracle::count_divisors(a));
  }
}

TEST_CASE("d is odd exactly on perfect squares up to 10^5") {
  for (u64 n = 1; n <= 100'000; ++n) {
    const FactoredInt f = factorize(n);
    bool all_even = true;
    for (const auto& [p, e] : f.factors()) all_even = all_even && e % 2 == 0;
    const bool odd = mpz_odd_p(divisor_count(f).get_mpz_t());
    REQUIRE(odd == all_even);
  }
}

TEST_CASE("compare agrees with decimal ordering; digit count matches log10") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const FactoredInt a = random_factored(rng), b = random_factored(rng);
    const std::string da = oracle::power_product_decimal(as_pairs(a));
    const std::string db = oracle::power_product_decimal(as_pairs(b));
    const int expected = oracle::compare_decimal(da, db);
    const auto got = compare(a, b);
    REQUIRE((got < 0 ? -1 : (got > 0 ? 1 : 0)) == expected);
    REQUIRE(to_decimal(a) == da);
    const double lg = log10_value(a);
    if (std::abs(lg - std::round(lg)) >= 1e-6) REQUIRE(da.size() == static_cast<std::size_t>(std::floor(lg)) + 1);
  }
}

TEST_CASE("to_u64") {
  CHECK(to_u64(k5040) == 5040u);
  CHECK(to_u64(FactoredInt()) == 1u);
  CHECK(to_u64(FactoredInt({{2, 63}})) == (u64{1} << 63));
  CHECK_FALSE(to_u64(FactoredInt({{2, 64}})).has_value());
}
