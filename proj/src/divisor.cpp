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

#include "divper/divisor.hpp"

#include <algorithm>
#include <new>
#include <ostream>
#include <string>
#include <thread>

#include "divper/error.hpp"
#include "divper/primes.hpp"

namespace divper {

namespace {

void require_period_defined(bool ok) {
  if (!ok) throw UndefinedPeriod("the period of 1 is undefined: d(1) = 1 never reaches 2");
}

void count_divisors_in_range(std::vector<std::uint32_t>& divisor_of, u64 lo, u64 hi) {
  for (u64 dv = 1; dv <= hi; ++dv) {
    for (u64 m = (lo + dv - 1) / dv * dv; m <= hi; m += dv) ++divisor_of[m];
  }
}

}  // namespace

u64 divisor_count_int(u64 n) {
  if (n == 0) throw InvalidArgument("d(0) is undefined");
  u64 count = 1;
  const FactoredInt f = factorize(n);
  for (const auto& [p, e] : f.factors()) count *= e + 1;
  return count;
}

FactoredInt divisor_count_factored(const FactoredInt& n) {
  FactoredInt result;
  for (const auto& [p, e] : n.factors()) {
    if (e == UINT64_MAX) throw TooLarge("exponent of " + std::to_string(p) + " is too large to take d");
    result = multiply(result, factorize(e + 1));
  }
  return result;
}

unsigned period(u64 n) {
  require_period_defined(n >= 2);
  unsigned k = 0;
  do {
    n = divisor_count_int(n);
    ++k;
  } while (n != 2);
  return k;
}

unsigned period(const FactoredInt& n) {
  if (auto small = to_u64(n)) return period(*small);
  return 1 + period(divisor_count_factored(n));
}

Trajectory trajectory(u64 n) {
  require_period_defined(n >= 2);
  Trajectory t{n, {n}};
  do {
    n = divisor_count_int(n);
    t.steps.push_back(n);
  } while (n != 2);
  return t;
}

std::vector<FactoredInt> trajectory(const FactoredInt& n) {
  require_period_defined(!n.is_one());
  const FactoredInt two = prime_power(2, 1);
  std::vector<FactoredInt> steps{n};
  FactoredInt cur = n;
  do {
    cur = divisor_count_factored(cur);
    steps.push_back(cur);
  } while (cur != two);
  return steps;
}

PeriodTable period_table(u64 limit, unsigned threads) {
  if (limit < 2) throw InvalidArgument("period table limit must be at least 2, got " + std::to_string(limit));
  if (limit > kMaxTableLimit)
    throw ResourceError("period table limit " + std::to_string(limit) + " exceeds the supported ceiling " +
                        std::to_string(kMaxTableLimit));
  try {
    std::vector<std::uint32_t> divisor_of(limit + 1, 0);
    threads = std::clamp<unsigned>(threads, 1, 64);
    if (threads == 1) {
      count_divisors_in_range(divisor_of, 1, limit);
    } else {
      // Disjoint output ranges, so workers never touch the same entry.
      std::vector<std::jthread> workers;
      const u64 chunk = (limit + threads - 1) / threads;
      for (u64 lo = 1; lo <= limit; lo += chunk) {
        const u64 hi = std::min(limit, lo + chunk - 1);
        workers.emplace_back([&divisor_of, lo, hi] { count_divisors_in_range(divisor_of, lo, hi); });
      }
    }

    std::vector<std::uint8_t> period_of(limit + 1, 0);
    period_of[2] = 1;
    for (u64 n = 3; n <= limit; ++n) {
      const std::uint32_t d = divisor_of[n];
      period_of[n] = d == 2 ? 1 : static_cast<std::uint8_t>(1 + period_of[d]);
    }
    return PeriodTable(limit, std::move(divisor_of), std::move(period_of));
  } catch (const std::bad_alloc&) {
    throw ResourceError("not enough memory for a period table of limit " + std::to_string(limit));
  }
}

std::map<unsigned, u64> first_occurrences(const PeriodTable& table) {
  std::map<unsigned, u64> first;
  for (u64 n = 2; n <= table.limit(); ++n) first.try_emplace(table.period_of(n), n);
  return first;
}

void write_table_csv(std::ostream& out, const PeriodTable& table) {
  out << "n,d,k\n";
  for (u64 n = 2; n <= table.limit(); ++n)
    out << n << ',' << table.divisor_of(n) << ',' << table.period_of(n) << '\n';
}

unsigned PeriodMemo::period(u64 n) {
  require_period_defined(n >= 2);
  if (table_ != nullptr && n <= table_->limit()) return table_->period_of(n);
  if (n == 2) return 1;
  if (auto it = cache_.find(n); it != cache_.end()) return it->second;
  const u64 d = divisor_count_int(n);
  const unsigned k = d == 2 ? 1 : 1 + period(d);
  cache_.emplace(n, k);
  return k;
}

}  // namespace divper
