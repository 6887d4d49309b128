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

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace divper {

using u64 = std::uint64_t;

// Unbounded natural used wherever values may leave the 64-bit range.
using BigNat = mpz_class;

struct PrimePower {
  u64 prime = 0;
  u64 exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// An integer held as its prime factorization.
///
/// Factors are kept sorted by strictly increasing prime, every prime is
/// verified prime on construction and every exponent is at least one. The
/// empty factorization is the integer 1. Values built this way can be far
/// beyond machine range (a single factor 2^(2^40) is fine).
class FactoredInt {
 public:
  FactoredInt() = default;

  // Validates the invariants; throws InvalidArgument on violation.
  explicit FactoredInt(std::vector<PrimePower> factors);

  std::span<const PrimePower> factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::size_t size() const { return factors_.size(); }

  // Exponent of p in this value (0 when p does not divide it).
  u64 exponent_of(u64 p) const;

  friend bool operator==(const FactoredInt&, const FactoredInt&) = default;

 private:
  struct Trusted {};
  FactoredInt(Trusted, std::vector<PrimePower> factors) : factors_(std::move(factors)) {}
  friend FactoredInt multiply(const FactoredInt&, const FactoredInt&);
  friend FactoredInt prime_power(u64, u64);

  std::vector<PrimePower> factors_;
};

FactoredInt prime_power(u64 prime, u64 exponent);

FactoredInt multiply(const FactoredInt& a, const FactoredInt& b);

// Exact ordering of the represented values. Screens by log10 and falls back
// to exact arithmetic after cancelling common prime powers.
std::strong_ordering compare(const FactoredInt& a, const FactoredInt& b);

double log10_value(const FactoredInt& a);
double ln_value(const FactoredInt& a);

inline constexpr std::size_t kDefaultDigitCeiling = 10'000;

// Exact base-10 rendering. Throws TooLarge when log10_value exceeds max_digits.
std::string to_decimal(const FactoredInt& a, std::size_t max_digits = kDefaultDigitCeiling);

// Exact value; same ceiling semantics as to_decimal.
BigNat to_bignat(const FactoredInt& a, std::size_t max_digits = kDefaultDigitCeiling);

// The value when it fits in 64 bits.
std::optional<u64> to_u64(const FactoredInt& a);

// Number of divisors, prod (e_i + 1).
BigNat divisor_count(const FactoredInt& a);

std::size_t distinct_prime_count(const FactoredInt& a);

// Canonical text form, e.g. "2^6*3^4*5^2*7^2*11*13*17*19"; "1" for the empty product.
std::string to_string(const FactoredInt& a);

// Parses the canonical text form. Whitespace is ignored, bases must be prime,
// repeated bases are merged. Throws InvalidArgument on malformed input.
FactoredInt parse_factored(std::string_view text);

}  // namespace divper
