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
#include <string>
#include <vector>

#include "divper/divisor.hpp"
#include "divper/factored.hpp"

namespace divper {

/// Greedy minimal-preimage construction. Prime powers p^a of n are taken in
/// decreasing order of p; each one hands exponent p - 1 to the next `a`
/// unused primes, starting from 2. d(result) = n and the exponents are
/// non-increasing along consecutive primes.
///
/// Throws InvalidArgument when n is 1.
FactoredInt canonical_preimage(const FactoredInt& n);

// One prime per prime power: the i-th prime raised to p_i^{a_i} - 1, with the
// factors of n taken in increasing prime order. Throws TooLarge if an
// exponent overflows 64 bits, InvalidArgument when n is 1.
FactoredInt naive_preimage(const FactoredInt& n);

// The smallest integer with exactly `target` divisors, by branch-and-bound
// over non-increasing exponent sequences on 2, 3, 5, ...
FactoredInt exact_min_with_divisors(u64 target);

enum class Verification {
  kSieveVerified,
  kOracleVerifiedUpToBound,
  kConstructionOnly,
};

struct ChainRecord {
  unsigned period = 0;
  FactoredInt value;
  // Empty when the value is above the decimal rendering ceiling.
  std::string decimal;
  std::size_t digit_count = 0;
  Verification verification = Verification::kConstructionOnly;
  // Candidate bound for kOracleVerifiedUpToBound.
  u64 bound = 0;
  // canonical_preimage of the previous chain entry, when one was computed.
  std::optional<FactoredInt> canonical;

  bool canonical_agrees() const { return !canonical || *canonical == value; }
};

// "sieve-verified", "oracle-verified-up-to-bound(B)" or "construction-only".
std::string verification_label(const ChainRecord& record);

ChainRecord make_chain_record(unsigned period, FactoredInt value, Verification verification, u64 bound = 0);

inline constexpr u64 kDefaultCandidateBound = 5'000'000;

/// Least integer of period k. Answered from the sieve when k occurs within
/// the table; otherwise the minimum of exact_min_with_divisors(n') over
/// every n' <= table.limit() of period k - 1, labelled with that bound.
/// std::nullopt when neither route finds anything.
std::optional<ChainRecord> min_with_period(unsigned k, const PeriodTable& table);
std::optional<ChainRecord> min_with_period(unsigned k, u64 candidate_bound = kDefaultCandidateBound);

// Records for k = 1..max_k. Entries 1 and 2 are the fixed base cases 2 and 4;
// later entries come from min_with_period, falling back to the canonical
// construction (construction-only) when no candidate lies within the bound.
std::vector<ChainRecord> chain(unsigned max_k, u64 candidate_bound = kDefaultCandidateBound);
std::vector<ChainRecord> chain(unsigned max_k, const PeriodTable& table);

}  // namespace divper
