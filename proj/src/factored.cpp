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

#include "divper/factored.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>

#include "divper/error.hpp"
#include "divper/primes.hpp"

namespace divper {

namespace {

// Exact fallback in compare() refuses to materialize anything larger.
constexpr std::size_t kCompareDigitCeiling = 50'000'000;

constexpr double kLogScreen = 1e-6;

u64 parse_u64(std::string_view digits, std::string_view whole) {
  u64 value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
    throw InvalidArgument("malformed factored form '" + std::string(whole) + "': bad number '" +
                          std::string(digits) + "'");
  return value;
}

}  // namespace

FactoredInt::FactoredInt(std::vector<PrimePower> factors) : factors_(std::move(factors)) {
  u64 previous = 0;
  for (const auto& [p, e] : factors_) {
    if (p <= previous) throw InvalidArgument("factored integer primes must be strictly increasing");
    if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
    if (e == 0) throw InvalidArgument("factored integer exponents must be at least 1");
    previous = p;
  }
}

u64 FactoredInt::exponent_of(u64 p) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), p,
                             [](const PrimePower& pp, u64 q) { return pp.prime < q; });
  return (it != factors_.end() && it->prime == p) ? it->exponent : 0;
}

FactoredInt prime_power(u64 prime, u64 exponent) {
  if (exponent == 0) return {};
  if (!is_prime(prime)) throw InvalidArgument(std::to_string(prime) + " is not prime");
  return FactoredInt(FactoredInt::Trusted{}, {{prime, exponent}});
}

FactoredInt multiply(const FactoredInt& a, const FactoredInt& b) {
  std::vector<PrimePower> out;
  out.reserve(a.size() + b.size());
  auto ia = a.factors().begin(), ea = a.factors().end();
  auto ib = b.factors().begin(), eb = b.factors().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->prime < ib->prime)) {
      out.push_back(*ia++);
    } else if (ia == ea || ib->prime < ia->prime) {
      out.push_back(*ib++);
    } else {
      if (ia->exponent > UINT64_MAX - ib->exponent)
        throw TooLarge("exponent of " + std::to_string(ia->prime) + " overflows 64 bits");
      out.push_back({ia->prime, ia->exponent + ib->exponent});
      ++ia;
      ++ib;
    }
  }
  return FactoredInt(FactoredInt::Trusted{}, std::move(out));
}

double log10_value(const FactoredInt& a) {
  long double sum = 0;
  for (const auto& [p, e] : a.factors()) sum += static_cast<long double>(e) * std::log10(static_cast<long double>(p));
  return static_cast<double>(sum);
}

double ln_value(const FactoredInt& a) {
  long double sum = 0;
  for (const auto& [p, e] : a.factors()) sum += static_cast<long double>(e) * std::log(static_cast<long double>(p));
  return static_cast<double>(sum);
}

std::strong_ordering compare(const FactoredInt& a, const FactoredInt& b) {
  if (a == b) return std::strong_ordering::equal;
  const double la = log10_value(a);
  const double lb = log10_value(b);
  // The relative term only matters for values with more than ~10^6 digits.
  const double tolerance = kLogScreen + 1e-13 * (std::abs(la) + std::abs(lb));
  if (la - lb > tolerance) return std::strong_ordering::greater;
  if (lb - la > tolerance) return std::strong_ordering::less;

  std::vector<PrimePower> ra, rb;
  auto ia = a.factors().begin(), ea = a.factors().end();
  auto ib = b.factors().begin(), eb = b.factors().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->prime < ib->prime)) {
      ra.push_back(*ia++);
    } else if (ia == ea || ib->prime < ia->prime) {
      rb.push_back(*ib++);
    } else {
      if (ia->exponent > ib->exponent) ra.push_back({ia->prime, ia->exponent - ib->exponent});
      if (ib->exponent > ia->exponent) rb.push_back({ib->prime, ib->exponent - ia->exponent});
      ++ia;
      ++ib;
    }
  }
  const BigNat va = to_bignat(FactoredInt(std::move(ra)), kCompareDigitCeiling);
  const BigNat vb = to_bignat(FactoredInt(std::move(rb)), kCompareDigitCeiling);
  const int c = cmp(va, vb);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigNat to_bignat(const FactoredInt& a, std::size_t max_digits) {
  const double digits = log10_value(a);
  if (digits > static_cast<double>(max_digits))
    throw TooLarge("value has about " + std::to_string(static_cast<u64>(digits) + 1) +
                   " digits, above the ceiling of " + std::to_string(max_digits) + " digits");
  BigNat result = 1;
  BigNat power;
  for (const auto& [p, e] : a.factors()) {
    mpz_ui_pow_ui(power.get_mpz_t(), p, e);
    result *= power;
  }
  return result;
}

std::string to_decimal(const FactoredInt& a, std::size_t max_digits) {
  return to_bignat(a, max_digits).get_str(10);
}

std::optional<u64> to_u64(const FactoredInt& a) {
  u64 value = 1;
  for (const auto& [p, e] : a.factors()) {
    for (u64 i = 0; i < e; ++i) {
      if (value > UINT64_MAX / p) return std::nullopt;
      value *= p;
    }
  }
  return value;
}

BigNat divisor_count(const FactoredInt& a) {
  BigNat count = 1;
  BigNat term;
  for (const auto& [p, e] : a.factors()) {
    mpz_set_ui(term.get_mpz_t(), e);
    term += 1;
    count *= term;
  }
  return count;
}

std::size_t distinct_prime_count(const FactoredInt& a) { return a.size(); }

std::string to_string(const FactoredInt& a) {
  if (a.is_one()) return "1";
  std::string out;
  for (const auto& [p, e] : a.factors()) {
    if (!out.empty()) out += '*';
    out += std::to_string(p);
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

FactoredInt parse_factored(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    compact += c;
  }
  if (compact.empty()) throw InvalidArgument("empty factored form");
  if (compact == "1") return {};

  std::map<u64, u64> merged;
  std::string_view rest = compact;
  while (true) {
    const auto star = rest.find('*');
    const std::string_view term = rest.substr(0, star);
    const auto caret = term.find('^');
    const u64 base = parse_u64(term.substr(0, caret), text);
    const u64 exponent = caret == std::string_view::npos ? 1 : parse_u64(term.substr(caret + 1), text);
    if (!is_prime(base)) throw InvalidArgument("malformed factored form: base " + std::to_string(base) + " is not prime");
    if (exponent == 0) throw InvalidArgument("malformed factored form: exponent 0 on " + std::to_string(base));
    u64& slot = merged[base];
    if (slot > UINT64_MAX - exponent) throw TooLarge("exponent of " + std::to_string(base) + " overflows 64 bits");
    slot += exponent;
    if (star == std::string_view::npos) break;
    rest.remove_prefix(star + 1);
  }
  std::vector<PrimePower> factors;
  for (const auto& [p, e] : merged) factors.push_back({p, e});
  return FactoredInt(std::move(factors));
}

}  // namespace divper
