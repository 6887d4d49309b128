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

#include "divper/primes.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "divper/error.hpp"

namespace divper {

namespace {

using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_strong_probable_prime(u64 n, u64 d, int s, u64 a) {
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

PrimeTable::PrimeTable(u64 limit) : limit_(limit) {
  if (limit < 2) throw InvalidArgument("prime table limit must be at least 2, got " + std::to_string(limit));
  if (limit > kMaxTableLimit)
    throw ResourceError("prime table limit " + std::to_string(limit) + " exceeds the supported ceiling " +
                        std::to_string(kMaxTableLimit));

  // Linear sieve: every composite is struck exactly once, by its least factor.
  least_factor_.assign(limit + 1, 0);
  for (u64 i = 2; i <= limit; ++i) {
    if (least_factor_[i] == 0) {
      least_factor_[i] = static_cast<std::uint32_t>(i);
      primes_.push_back(i);
    }
    const u64 lf = least_factor_[i];
    for (u64 p : primes_) {
      if (p > lf || p * i > limit) break;
      least_factor_[p * i] = static_cast<std::uint32_t>(p);
    }
  }
}

PrimeTable build_table(u64 limit) { return PrimeTable(limit); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kBases) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kBases) {
    if (!is_strong_probable_prime(n, d, s, a)) return false;
  }
  return true;
}

PrimeSource::PrimeSource(u64 initial_limit) : table_(std::make_shared<const PrimeTable>(initial_limit)) {}

std::shared_ptr<const PrimeTable> PrimeSource::snapshot() const {
  std::lock_guard lock(mu_);
  return table_;
}

std::shared_ptr<const PrimeTable> PrimeSource::with_count(std::size_t count) {
  std::lock_guard lock(mu_);
  u64 limit = table_->limit();
  while (table_->primes().size() < count) {
    limit *= 2;
    table_ = std::make_shared<const PrimeTable>(limit);
  }
  return table_;
}

std::shared_ptr<const PrimeTable> PrimeSource::with_limit(u64 limit) {
  std::lock_guard lock(mu_);
  if (table_->limit() < limit) {
    u64 grown = table_->limit();
    while (grown < limit) grown *= 2;
    table_ = std::make_shared<const PrimeTable>(std::max(limit, std::min(grown, kMaxTableLimit)));
  }
  return table_;
}

u64 PrimeSource::nth(std::size_t i) {
  if (i == 0) throw InvalidArgument("prime index is 1-based; 0 is not a valid index");
  return with_count(i)->primes()[i - 1];
}

PrimeSource& default_primes() {
  static PrimeSource source;
  return source;
}

u64 nth_prime(std::size_t i) { return default_primes().nth(i); }

FactoredInt factorize(u64 n, const PrimeTable& table) {
  if (n == 0) throw InvalidArgument("cannot factorize 0");
  std::vector<PrimePower> out;
  auto take = [&](u64 p) {
    u64 e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  auto finish_in_table = [&] {
    while (n > 1) take(table.smallest_factor(n));
  };

  if (n <= table.limit()) {
    finish_in_table();
    return FactoredInt(std::move(out));
  }

  for (u64 p : table.primes()) {
    if (static_cast<u128>(p) * p > n) break;
    take(p);
    if (n <= table.limit()) {
      finish_in_table();
      return FactoredInt(std::move(out));
    }
    if (is_prime(n)) break;
  }

  // Past the table: odd trial divisors. Only reached for cofactors with two
  // or more prime factors above the table limit.
  if (n > 1 && !is_prime(n)) {
    u64 q = table.primes().back() + 2;
    while (static_cast<u128>(q) * q <= n) {
      take(q);
      if (n > 1 && is_prime(n)) break;
      q += 2;
    }
  }
  if (n > 1) out.push_back({n, 1});
  return FactoredInt(std::move(out));
}

FactoredInt factorize(u64 n) { return factorize(n, *default_primes().snapshot()); }

}  // namespace divper
