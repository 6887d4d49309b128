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

#include "divper/analysis.hpp"

#include <cmath>
#include <string>

#include "divper/construct.hpp"
#include "divper/error.hpp"

namespace divper {

namespace {

void require_range(const PeriodTable& table, u64 lo, u64 hi, u64 min_lo) {
  if (lo < min_lo || lo > hi || hi > table.limit())
    throw InvalidArgument("range [" + std::to_string(lo) + ", " + std::to_string(hi) + "] must satisfy " +
                          std::to_string(min_lo) + " <= from <= to <= " + std::to_string(table.limit()));
}

}  // namespace

u64 Histogram::total() const {
  u64 sum = 0;
  for (const auto& [k, c] : counts) sum += c;
  return sum;
}

u64 Histogram::count(unsigned k) const {
  auto it = counts.find(k);
  return it == counts.end() ? 0 : it->second;
}

Histogram histogram(const PeriodTable& table, u64 lo, u64 hi) {
  require_range(table, lo, hi, 2);
  Histogram h{lo, hi, {}};
  std::vector<u64> dense(256, 0);
  for (u64 n = lo; n <= hi; ++n) ++dense[table.period_of(n)];
  for (unsigned k = 0; k < dense.size(); ++k) {
    if (dense[k] != 0) h.counts.emplace(k, dense[k]);
  }
  return h;
}

void BoundParams::validate() const {
  if (!(epsilon > 0) || threshold_n0 == 0 || !(growth_constant_c > 0))
    throw InvalidArgument("bound parameters epsilon, n0 and c must all be positive");
}

double BoundParams::growth_threshold_n1() const {
  return std::ceil(std::exp(std::exp(std::log(2.0) * (1 + epsilon) * (1 + growth_constant_c))));
}

double wigert_ratio(u64 n, u64 d) {
  const double ln_n = std::log(static_cast<double>(n));
  return std::log(static_cast<double>(d)) * std::log(ln_n) / ln_n;
}

WigertReport wigert_scan(const PeriodTable& table, const BoundParams& params, u64 lo, u64 hi) {
  params.validate();
  require_range(table, lo, hi, 3);
  WigertReport report;
  report.lo = lo;
  report.hi = hi;
  report.params = params;
  report.threshold_ratio = std::log(2.0) * (1 + params.epsilon);
  report.max.ratio = -1;
  for (u64 n = lo; n <= hi; ++n) {
    const u64 d = table.divisor_of(n);
    const WigertPoint pt{n, d, wigert_ratio(n, d)};
    if (pt.ratio > report.max.ratio) {
      report.max = pt;
      report.records.push_back(pt);
    }
    if (pt.ratio > report.threshold_ratio) {
      if (n >= params.threshold_n0) {
        report.violations.push_back(pt);
      } else {
        ++report.small_n_exceedances;
      }
    }
  }
  return report;
}

IncrementReport theorem2_increment(const FactoredInt& n) {
  if (auto small = to_u64(n); small && *small < 3)
    throw InvalidArgument("increment check needs n >= 3");
  IncrementReport r;
  r.n = n;
  r.preimage = canonical_preimage(n);
  r.delta_log10 = log10_value(r.preimage) - log10_value(n);
  r.bound = kIncrementConstant * static_cast<double>(distinct_prime_count(n));
  std::size_t squared = 0;
  for (const auto& [p, e] : n.factors()) squared += e >= 2 ? 1 : 0;
  r.hypothesis_holds = squared >= 2;
  r.bound_holds = r.delta_log10 >= r.bound;
  return r;
}

std::vector<std::pair<u64, unsigned>> plot_data(const PeriodTable& table, u64 lo, u64 hi) {
  require_range(table, lo, hi, 2);
  std::vector<std::pair<u64, unsigned>> rows;
  rows.reserve(hi - lo + 1);
  for (u64 n = lo; n <= hi; ++n) rows.emplace_back(n, table.period_of(n));
  return rows;
}

}  // namespace divper
