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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "divper/construct.hpp"
#include "divper/factored.hpp"

namespace divper {

struct HcnRecord {
  FactoredInt value;
  BigNat divisor_count;
  std::string decimal;
};

// Every highly composite number n (d(m) < d(n) for all m < n) with
// log10(n) <= log10_limit, ascending.
std::vector<HcnRecord> enumerate_hcn(double log10_limit);

inline constexpr double kHcnLog10Ceiling = 15.0;

// Throws ResourceError when log10(n) exceeds `log10_ceiling`.
bool is_highly_composite(const FactoredInt& n, double log10_ceiling = kHcnLog10Ceiling);

// True when the exponents are non-increasing on 2, 3, 5, ... with no gaps.
bool has_hcn_shape(const FactoredInt& n);

struct ConjectureRow {
  unsigned k = 0;  // period of `value`
  FactoredInt previous;
  FactoredInt value;
  std::string decimal;
  double ln_previous = 0;
  double ln_value = 0;
  // ln n_{k-1} / (ln 2 * ln n_k / ln ln n_k)
  double ratio = 0;
  // ln ln n_k < 1: the ratio is dominated by the small-n distortion.
  bool degenerate = false;
  // Absent when n_k is beyond the enumeration ceiling.
  std::optional<bool> is_hcn;
};

// One row per adjacent pair of chain records. Descriptive only.
std::vector<ConjectureRow> conjecture_report(std::span<const ChainRecord> chain,
                                             double log10_ceiling = kHcnLog10Ceiling);

}  // namespace divper
