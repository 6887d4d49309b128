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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "divper/factored.hpp"

namespace divper {

// Tables above this many entries are refused with ResourceError. At 10^8 the
// least-factor array alone is 400 MB.
inline constexpr u64 kMaxTableLimit = 100'000'000;

/// Primes up to `limit` together with the least prime factor of every
/// integer in [2, limit]. Immutable once built.
class PrimeTable {
 public:
  explicit PrimeTable(u64 limit);

  u64 limit() const { return limit_; }
  std::span<const u64> primes() const { return primes_; }

  // Least prime factor of i, for 2 <= i <= limit.
  u64 smallest_factor(u64 i) const { return least_factor_[i]; }

  bool is_prime(u64 i) const { return i >= 2 && i <= limit_ && least_factor_[i] == i; }

 private:
  u64 limit_;
  std::vector<u64> primes_;
  std::vector<std::uint32_t> least_factor_;
};

PrimeTable build_table(u64 limit);

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);

/// Thread-safe handle on a growing prime table.
///
/// Growth never mutates a published table: a larger table is built and the
/// handle swapped, so snapshots taken earlier stay valid.
class PrimeSource {
 public:
  explicit PrimeSource(u64 initial_limit = 1u << 16);

  std::shared_ptr<const PrimeTable> snapshot() const;

  // A table holding at least `count` primes (doubles the limit as needed).
  std::shared_ptr<const PrimeTable> with_count(std::size_t count);

  // A table whose limit is at least `limit`.
  std::shared_ptr<const PrimeTable> with_limit(u64 limit);

  // The i-th prime, 1-indexed.
  u64 nth(std::size_t i);

 private:
  mutable std::mutex mu_;
  std::shared_ptr<const PrimeTable> table_;
};

// Process-wide source shared by the free functions below.
PrimeSource& default_primes();

// The i-th prime, 1-indexed: nth_prime(1) == 2. Throws InvalidArgument for 0.
u64 nth_prime(std::size_t i);

// Least-factor lookup within the table, trial division by sieved primes
// (and odd candidates past the table) beyond it. Throws InvalidArgument for 0.
FactoredInt factorize(u64 n, const PrimeTable& table);
FactoredInt factorize(u64 n);

}  // namespace divper
