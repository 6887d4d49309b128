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

#include "divper/hcn.hpp"

#include <algorithm>
#include <cmath>

#include "divper/error.hpp"
#include "divper/primes.hpp"

namespace divper {

namespace {

struct Candidate {
  std::vector<u64> exponents;
  double log10 = 0;
};

// Values of the form 2^e1 3^e2 5^e3 ... with e1 >= e2 >= ... >= 1.
void gather(std::span<const u64> primes, double limit, std::size_t idx, u64 max_exponent, double log_so_far,
            std::vector<u64>& exps, std::vector<Candidate>& out) {
  out.push_back({exps, log_so_far});
  if (idx >= primes.size()) return;
  const double lp = std::log10(static_cast<double>(primes[idx]));
  for (u64 e = 1; e <= max_exponent; ++e) {
    const double lg = log_so_far + static_cast<double>(e) * lp;
    if (lg > limit + 1e-12) break;
    exps.push_back(e);
    gather(primes, limit, idx + 1, e, lg, exps, out);
    exps.pop_back();
  }
}

FactoredInt from_exponents(std::span<const u64> primes, const std::vector<u64>& exps) {
  std::vector<PrimePower> f;
  for (std::size_t i = 0; i < exps.size(); ++i) f.push_back({primes[i], exps[i]});
  return FactoredInt(std::move(f));
}

}  // namespace

bool has_hcn_shape(const FactoredInt& n) {
  u64 previous = UINT64_MAX;
  std::size_t i = 1;
  for (const auto& [p, e] : n.factors()) {
    if (p != nth_prime(i++) || e > previous) return false;
    previous = e;
  }
  return true;
}

std::vector<HcnRecord> enumerate_hcn(double log10_limit) {
  if (!(log10_limit > 0)) throw InvalidArgument("log10 limit must be positive");
  // Primorial growth bounds how many primes a candidate can use.
  std::size_t prime_count = 0;
  double primorial_log = 0;
  while (true) {
    const double lp = std::log10(static_cast<double>(nth_prime(prime_count + 1)));
    if (primorial_log + lp > log10_limit + 1e-12) break;
    primorial_log += lp;
    ++prime_count;
  }
  const auto table = default_primes().with_count(prime_count + 1);
  const auto primes = table->primes().first(prime_count);
  const u64 max_exponent = static_cast<u64>(log10_limit / std::log10(2.0)) + 1;

  std::vector<Candidate> candidates;
  std::vector<u64> exps;
  gather(primes, log10_limit, 0, max_exponent, 0.0, exps, candidates);

  std::vector<std::pair<FactoredInt, double>> values;
  values.reserve(candidates.size());
  for (auto& c : candidates) values.emplace_back(from_exponents(primes, c.exponents), c.log10);
  std::sort(values.begin(), values.end(), [](const auto& a, const auto& b) {
    const double tol = 1e-9;
    if (a.second < b.second - tol) return true;
    if (a.second > b.second + tol) return false;
    return compare(a.first, b.first) == std::strong_ordering::less;
  });

  std::vector<HcnRecord> out;
  BigNat record = 0;
  for (auto& [value, lg] : values) {
    BigNat d = divisor_count(value);
    if (d > record) {
      record = d;
      std::string decimal = to_decimal(value);
      out.push_back({std::move(value), std::move(d), std::move(decimal)});
    }
  }
  return out;
}

bool is_highly_composite(const FactoredInt& n, double log10_ceiling) {
  if (n.is_one()) return true;
  const double lg = log10_value(n);
  if (lg > log10_ceiling)
    throw ResourceError("HCN check needs enumeration to 10^" + std::to_string(lg) + ", above the ceiling 10^" +
                        std::to_string(log10_ceiling));
  if (!has_hcn_shape(n)) return false;
  for (const auto& r : enumerate_hcn(lg + 1e-9)) {
    if (r.value == n) return true;
  }
  return false;
}

std::vector<ConjectureRow> conjecture_report(std::span<const ChainRecord> chain, double log10_ceiling) {
  if (chain.size() < 2) throw InvalidArgument("conjecture report needs at least two chain records");
  std::vector<ConjectureRow> rows;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    ConjectureRow row;
    row.k = chain[i].period;
    row.previous = chain[i - 1].value;
    row.value = chain[i].value;
    row.decimal = chain[i].decimal;
    row.ln_previous = ln_value(row.previous);
    row.ln_value = ln_value(row.value);
    const double lnln = std::log(row.ln_value);
    row.ratio = row.ln_previous / (std::log(2.0) * row.ln_value / lnln);
    row.degenerate = lnln < 1.0;
    if (log10_value(row.value) <= log10_ceiling) row.is_hcn = is_highly_composite(row.value, log10_ceiling);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace divper
