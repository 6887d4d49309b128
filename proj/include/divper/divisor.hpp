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

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <unordered_map>
#include <vector>

#include "divper/factored.hpp"

namespace divper {

// d(n) for 1 <= n < 2^64. Throws InvalidArgument for 0.
u64 divisor_count_int(u64 n);

// d of an arbitrarily large value, returned in factored form so that the
// iteration can continue past the 64-bit range.
FactoredInt divisor_count_factored(const FactoredInt& n);

// The period k(n) = min { k >= 1 : d^k(n) = 2 }. Throws UndefinedPeriod for n < 2.
unsigned period(u64 n);
unsigned period(const FactoredInt& n);

struct Trajectory {
  u64 start = 0;
  // n, d(n), d(d(n)), ..., 2; holds period(n) + 1 entries.
  std::vector<u64> steps;
};

Trajectory trajectory(u64 n);

// Same walk for values given in factored form.
std::vector<FactoredInt> trajectory(const FactoredInt& n);

/// d(n) for 1 <= n <= limit and k(n) for 2 <= n <= limit, computed in bulk.
class PeriodTable {
 public:
  PeriodTable(u64 limit, std::vector<std::uint32_t> divisor_of, std::vector<std::uint8_t> period_of)
      : limit_(limit), divisor_of_(std::move(divisor_of)), period_of_(std::move(period_of)) {}

  u64 limit() const { return limit_; }
  std::uint32_t divisor_of(u64 n) const { return divisor_of_[n]; }
  // Valid for 2 <= n <= limit.
  unsigned period_of(u64 n) const { return period_of_[n]; }

  // Indexed by n; entries 0 (and 1 for periods) are unused.
  std::span<const std::uint32_t> divisors() const { return divisor_of_; }
  std::span<const std::uint8_t> periods() const { return period_of_; }

 private:
  u64 limit_;
  std::vector<std::uint32_t> divisor_of_;
  std::vector<std::uint8_t> period_of_;
};

// Increment sieve for d, then one forward pass for k (d(n) < n once n >= 3).
// `threads` splits the sieve by output range; the result does not depend on it.
PeriodTable period_table(u64 limit, unsigned threads = 1);

// Least n attaining each period present in the table, keyed by period.
std::map<unsigned, u64> first_occurrences(const PeriodTable& table);

// CSV with header `n,d,k`, one row per n in [2, limit].
void write_table_csv(std::ostream& out, const PeriodTable& table);

/// Point period queries with a cache on trajectory values. Values at or
/// below the attached table's limit are answered from the table.
/// Not synchronized; use one per thread.
class PeriodMemo {
 public:
  PeriodMemo() = default;
  explicit PeriodMemo(const PeriodTable* table) : table_(table) {}

  unsigned period(u64 n);
  std::size_t cache_size() const { return cache_.size(); }

 private:
  const PeriodTable* table_ = nullptr;
  std::unordered_map<u64, unsigned> cache_;
};

}  // namespace divper
