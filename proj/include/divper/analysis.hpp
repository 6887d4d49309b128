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
#include <map>
#include <utility>
#include <vector>

#include "divper/divisor.hpp"
#include "divper/factored.hpp"

namespace divper {

struct Histogram {
  u64 lo = 0;
  u64 hi = 0;
  std::map<unsigned, u64> counts;

  u64 total() const;
  u64 count(unsigned k) const;
};

// Period frequencies over [lo, hi]. Throws InvalidArgument unless
// 2 <= lo <= hi <= table.limit().
Histogram histogram(const PeriodTable& table, u64 lo, u64 hi);

struct BoundParams {
  double epsilon = 0.1;
  u64 threshold_n0 = 10'000;
  double growth_constant_c = 1.0;

  // Throws InvalidArgument unless every field is strictly positive.
  void validate() const;

  // Least N with ln ln N >= ln 2 (1 + epsilon)(1 + c).
  double growth_threshold_n1() const;
};

// ln d(n) * ln ln n / ln n
double wigert_ratio(u64 n, u64 d);

struct WigertPoint {
  u64 n = 0;
  u64 d = 0;
  double ratio = 0;
};

struct WigertReport {
  u64 lo = 0;
  u64 hi = 0;
  BoundParams params;
  double threshold_ratio = 0;  // ln 2 * (1 + epsilon)
  WigertPoint max;
  // Running-maximum records in increasing n.
  std::vector<WigertPoint> records;
  // n >= threshold_n0 with ratio above threshold_ratio.
  std::vector<WigertPoint> violations;
  // Same condition for n < threshold_n0; informational.
  u64 small_n_exceedances = 0;
};

// Scans [lo, hi]; needs 3 <= lo <= hi <= table.limit().
WigertReport wigert_scan(const PeriodTable& table, const BoundParams& params, u64 lo, u64 hi);

inline constexpr double kIncrementConstant = 0.545;

struct IncrementReport {
  FactoredInt n;
  FactoredInt preimage;
  double delta_log10 = 0;
  double bound = 0;
  // At least two distinct primes with exponent >= 2.
  bool hypothesis_holds = false;
  bool bound_holds = false;
};

// Growth of log10 under the canonical preimage against 0.545 * nu(n).
IncrementReport theorem2_increment(const FactoredInt& n);

// (n, k) for every n in [lo, hi].
std::vector<std::pair<u64, unsigned>> plot_data(const PeriodTable& table, u64 lo, u64 hi);

}  // namespace divper
