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

#include "divper/construct.hpp"

#include <algorithm>
#include <cmath>
#include <ranges>

#include "divper/error.hpp"
#include "divper/primes.hpp"

namespace divper {

namespace {

// Enough primes for any 64-bit divisor-count target: Omega(target) <= 63.
constexpr std::size_t kSearchPrimes = 64;

std::vector<u64> divisors_of(u64 n) {
  std::vector<u64> divs{1};
  const FactoredInt f = factorize(n);
  for (const auto& [p, e] : f.factors()) {
    const std::size_t base = divs.size();
    u64 pk = 1;
    for (u64 i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

double log_tolerance(double magnitude) { return 1e-9 + 1e-12 * std::abs(magnitude); }

/// Depth-first search for the least value with a given divisor count.
///
/// Exponents e_1 >= e_2 >= ... sit on consecutive primes and (e_i + 1) runs
/// over divisors of what is left of the target. A branch is cut once its
/// log10 (plus the cheapest possible completion) exceeds the incumbent;
/// near-ties are settled with exact comparison.
class MinDivisorSearch {
 public:
  MinDivisorSearch(u64 target, std::span<const u64> primes, const FactoredInt* cutoff)
      : divisors_(divisors_of(target)), primes_(primes), target_(target) {
    for (u64 p : primes_.first(kSearchPrimes)) log_primes_.push_back(std::log10(static_cast<double>(p)));
    if (cutoff != nullptr) {
      best_ = *cutoff;
      best_log_ = log10_value(*cutoff);
    }
  }

  std::optional<FactoredInt> run() {
    descend(0, target_, target_ - 1, 0.0L);
    if (!found_) return std::nullopt;
    return best_;
  }

 private:
  u64 smallest_nontrivial_divisor(u64 n) const {
    for (u64 f : divisors_) {
      if (f > 1 && n % f == 0) return f;
    }
    return n;
  }

  bool beats_incumbent(long double log_value, const std::vector<u64>& exps) const {
    if (!best_) return true;
    const double tol = log_tolerance(best_log_);
    if (log_value < best_log_ - tol) return true;
    if (log_value > best_log_ + tol) return false;
    return compare(build(exps), *best_) == std::strong_ordering::less;
  }

  FactoredInt build(const std::vector<u64>& exps) const {
    std::vector<PrimePower> factors;
    for (std::size_t i = 0; i < exps.size(); ++i) factors.push_back({primes_[i], exps[i]});
    return FactoredInt(std::move(factors));
  }

  void descend(std::size_t idx, u64 remaining, u64 max_exponent, long double log_so_far) {
    if (remaining == 1) {
      if (beats_incumbent(log_so_far, exps_)) {
        best_ = build(exps_);
        best_log_ = static_cast<double>(log_so_far);
        found_ = true;
      }
      return;
    }
    for (u64 f : divisors_) {
      if (f < 2) continue;
      if (f > remaining || f - 1 > max_exponent) break;
      if (remaining % f != 0) continue;
      const u64 e = f - 1;
      const long double log_here = log_so_far + static_cast<long double>(e) * log_primes_[idx];
      if (best_ && log_here > best_log_ + log_tolerance(best_log_)) break;
      const u64 rest = remaining / f;
      if (rest > 1) {
        const u64 next_e = smallest_nontrivial_divisor(rest) - 1;
        if (next_e > e) continue;
        const long double floor_log = log_here + static_cast<long double>(next_e) * log_primes_[idx + 1];
        if (best_ && floor_log > best_log_ + log_tolerance(best_log_)) continue;
      }
      exps_.push_back(e);
      descend(idx + 1, rest, e, log_here);
      exps_.pop_back();
    }
  }

  std::vector<u64> divisors_;
  std::span<const u64> primes_;
  std::vector<double> log_primes_;
  u64 target_;
  std::vector<u64> exps_;
  std::optional<FactoredInt> best_;
  double best_log_ = 0.0;
  bool found_ = false;
};

std::span<const u64> search_primes(std::shared_ptr<const PrimeTable>& holder) {
  holder = default_primes().with_count(kSearchPrimes);
  return holder->primes();
}

// exact_min_with_divisors restricted to values strictly below `cutoff`.
std::optional<FactoredInt> min_with_divisors_below(u64 target, std::span<const u64> primes,
                                                   const FactoredInt* cutoff) {
  if (target == 1) {
    if (cutoff != nullptr && cutoff->is_one()) return std::nullopt;
    return FactoredInt{};
  }
  return MinDivisorSearch(target, primes, cutoff).run();
}

u64 checked_pow_minus_one(u64 p, u64 a) {
  u64 value = 1;
  for (u64 i = 0; i < a; ++i) {
    if (value > UINT64_MAX / p)
      throw TooLarge("exponent " + std::to_string(p) + "^" + std::to_string(a) + " - 1 overflows 64 bits");
    value *= p;
  }
  return value - 1;
}

}  // namespace

FactoredInt canonical_preimage(const FactoredInt& n) {
  if (n.is_one()) throw InvalidArgument("no preimage construction for 1: only d(1) = 1");
  u64 needed = 0;
  for (const auto& [p, a] : n.factors()) needed += a;
  if (needed > kMaxTableLimit) throw ResourceError("canonical preimage needs " + std::to_string(needed) + " primes");
  const auto table = default_primes().with_count(static_cast<std::size_t>(needed));
  const auto primes = table->primes();

  std::vector<PrimePower> out;
  out.reserve(needed);
  std::size_t cursor = 0;
  for (const auto& [p, a] : std::views::reverse(n.factors())) {
    for (u64 i = 0; i < a; ++i) out.push_back({primes[cursor++], p - 1});
  }
  return FactoredInt(std::move(out));
}

FactoredInt naive_preimage(const FactoredInt& n) {
  if (n.is_one()) throw InvalidArgument("no preimage construction for 1: only d(1) = 1");
  const auto table = default_primes().with_count(n.size());
  std::vector<PrimePower> out;
  std::size_t i = 0;
  for (const auto& [p, a] : n.factors()) out.push_back({table->primes()[i++], checked_pow_minus_one(p, a)});
  return FactoredInt(std::move(out));
}

FactoredInt exact_min_with_divisors(u64 target) {
  if (target == 0) throw InvalidArgument("no integer has 0 divisors");
  std::shared_ptr<const PrimeTable> holder;
  return *min_with_divisors_below(target, search_primes(holder), nullptr);
}

std::string verification_label(const ChainRecord& record) {
  switch (record.verification) {
    case Verification::kSieveVerified:
      return "sieve-verified";
    case Verification::kOracleVerifiedUpToBound:
      return "oracle-verified-up-to-bound(" + std::to_string(record.bound) + ")";
    case Verification::kConstructionOnly:
      return "construction-only";
  }
  return "unknown";
}

ChainRecord make_chain_record(unsigned period, FactoredInt value, Verification verification, u64 bound) {
  ChainRecord r;
  r.period = period;
  const double lg = log10_value(value);
  if (lg <= static_cast<double>(kDefaultDigitCeiling)) {
    r.decimal = to_decimal(value);
    r.digit_count = r.decimal.size();
  } else {
    r.digit_count = static_cast<std::size_t>(std::floor(lg)) + 1;
  }
  r.value = std::move(value);
  r.verification = verification;
  r.bound = bound;
  return r;
}

std::optional<ChainRecord> min_with_period(unsigned k, const PeriodTable& table) {
  if (k == 0) throw InvalidArgument("periods start at 1");
  const auto first = first_occurrences(table);
  if (auto it = first.find(k); it != first.end())
    return make_chain_record(k, factorize(it->second), Verification::kSieveVerified);

  std::shared_ptr<const PrimeTable> holder;
  const auto primes = search_primes(holder);
  std::optional<FactoredInt> best;
  // n' = 2 is skipped: its least preimage is 2 itself, which has period 1.
  for (u64 n = 3; n <= table.limit(); ++n) {
    if (table.period_of(n) != k - 1) continue;
    if (auto found = min_with_divisors_below(n, primes, best ? &*best : nullptr)) best = std::move(found);
  }
  if (!best) return std::nullopt;
  return make_chain_record(k, std::move(*best), Verification::kOracleVerifiedUpToBound, table.limit());
}

std::optional<ChainRecord> min_with_period(unsigned k, u64 candidate_bound) {
  return min_with_period(k, period_table(std::max<u64>(candidate_bound, 2)));
}

std::vector<ChainRecord> chain(unsigned max_k, const PeriodTable& table) {
  if (max_k == 0) throw InvalidArgument("chain needs max_k >= 1");
  std::vector<ChainRecord> records;
  records.push_back(make_chain_record(1, prime_power(2, 1), Verification::kSieveVerified));
  if (max_k >= 2) records.push_back(make_chain_record(2, prime_power(2, 2), Verification::kSieveVerified));
  for (unsigned k = 3; k <= max_k; ++k) {
    FactoredInt canonical = canonical_preimage(records.back().value);
    std::optional<ChainRecord> found = min_with_period(k, table);
    ChainRecord record = found ? std::move(*found) : make_chain_record(k, canonical, Verification::kConstructionOnly);
    record.canonical = std::move(canonical);
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<ChainRecord> chain(unsigned max_k, u64 candidate_bound) {
  return chain(max_k, period_table(std::max<u64>(candidate_bound, 2)));
}

}  // namespace divper
