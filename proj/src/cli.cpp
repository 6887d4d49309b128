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

#include "divper/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <new>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "divper/analysis.hpp"
#include "divper/construct.hpp"
#include "divper/divisor.hpp"
#include "divper/error.hpp"
#include "divper/factored.hpp"
#include "divper/hcn.hpp"
#include "divper/primes.hpp"

namespace divper::cli {

namespace {

using nlohmann::json;

enum class Format { kText, kCsv, kJson };

struct OutputSpec {
  Format format = Format::kText;
  std::string path;  // empty: standard output
  unsigned threads = 1;
};

std::string fmt_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

// Decimal when it fits in 64 bits, canonical factored text otherwise.
std::string display(const FactoredInt& v) {
  if (auto small = to_u64(v)) return std::to_string(*small);
  return to_string(v);
}

FactoredInt parse_value(const std::string& text) {
  const bool decimal = !text.empty() && text.find_first_not_of("0123456789") == std::string::npos;
  if (!decimal) return parse_factored(text);
  u64 n = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec == std::errc::result_out_of_range)
    throw InvalidArgument("decimal input " + text +
                          " exceeds 64 bits; pass large values in factored form, e.g. 2^6*3^4*5^2");
  if (ec != std::errc() || ptr != text.data() + text.size()) throw InvalidArgument("malformed number '" + text + "'");
  if (n == 0) throw InvalidArgument("0 is outside the domain (inputs must be >= 1)");
  return factorize(n);
}

u64 parse_u64_arg(const std::string& text) {
  const FactoredInt v = parse_value(text);
  auto small = to_u64(v);
  if (!small) throw InvalidArgument("value " + text + " must fit in 64 bits here");
  return *small;
}

json value_json(const FactoredInt& v) {
  json j;
  j["factored"] = to_string(v);
  if (log10_value(v) <= static_cast<double>(kDefaultDigitCeiling)) {
    const std::string dec = to_decimal(v);
    j["decimal"] = dec;
    j["digits"] = dec.size();
  } else {
    j["decimal"] = nullptr;
    j["digits"] = static_cast<u64>(log10_value(v)) + 1;
  }
  return j;
}

json chain_record_json(const ChainRecord& r) {
  json j;
  j["k"] = r.period;
  j["factored"] = to_string(r.value);
  j["decimal"] = r.decimal.empty() ? json(nullptr) : json(r.decimal);
  j["digits"] = r.digit_count;
  j["verification"] = verification_label(r);
  j["canonical"] = r.canonical ? json(to_string(*r.canonical)) : json(nullptr);
  j["canonical_agrees"] = r.canonical_agrees();
  return j;
}

class Command {
 public:
  virtual ~Command() = default;
  virtual void execute(std::ostream& out) = 0;
  OutputSpec output;
};

void add_output_flags(CLI::App* sub, OutputSpec& spec, Format default_format) {
  spec.format = default_format;
  static const std::map<std::string, Format> kFormats = {
      {"text", Format::kText}, {"csv", Format::kCsv}, {"json", Format::kJson}};
  sub->add_option("--format", spec.format, "Output format: text, csv or json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case).description(""))
      ->option_text("text|csv|json");
  sub->add_option("--out", spec.path, "Write output to this file instead of stdout");
  sub->add_option("--threads", spec.threads, "Worker threads (does not change output)")
      ->check(CLI::Range(1u, 64u));
}

// ---- subcommands -----------------------------------------------------------

struct PeriodCmd : Command {
  std::string n;
  void execute(std::ostream& out) override {
    const FactoredInt value = parse_value(n);
    const auto steps = trajectory(value);
    const unsigned k = static_cast<unsigned>(steps.size() - 1);
    switch (output.format) {
      case Format::kJson: {
        json traj = json::array();
        for (const auto& s : steps) traj.push_back(display(s));
        out << json{{"n", display(value)}, {"k", k}, {"trajectory", traj}}.dump(2) << '\n';
        break;
      }
      case Format::kCsv: {
        out << "n,k,trajectory\n" << display(value) << ',' << k << ',';
        for (std::size_t i = 0; i < steps.size(); ++i) out << (i ? ";" : "") << display(steps[i]);
        out << '\n';
        break;
      }
      case Format::kText: {
        out << "n = " << display(value) << "\nk = " << k << "\ntrajectory: ";
        for (std::size_t i = 0; i < steps.size(); ++i) out << (i ? " -> " : "") << display(steps[i]);
        out << '\n';
        break;
      }
    }
  }
};

struct TableCmd : Command {
  u64 limit = 0;
  void execute(std::ostream& out) override {
    const PeriodTable table = period_table(limit, output.threads);
    if (output.format == Format::kJson) {
      json rows = json::array();
      for (u64 n = 2; n <= limit; ++n)
        rows.push_back({{"n", n}, {"d", table.divisor_of(n)}, {"k", table.period_of(n)}});
      out << json{{"limit", limit}, {"rows", rows}}.dump() << '\n';
    } else {
      write_table_csv(out, table);
    }
  }
};

struct FirstCmd : Command {
  u64 limit = 0;
  void execute(std::ostream& out) override {
    const auto first = first_occurrences(period_table(limit, output.threads));
    switch (output.format) {
      case Format::kJson: {
        json rows = json::array();
        for (const auto& [k, n] : first) rows.push_back({{"k", k}, {"n", n}});
        out << json{{"limit", limit}, {"first", rows}}.dump(2) << '\n';
        break;
      }
      case Format::kCsv:
        out << "k,n\n";
        for (const auto& [k, n] : first) out << k << ',' << n << '\n';
        break;
      case Format::kText:
        out << "first occurrence of each period for n <= " << limit << '\n';
        for (const auto& [k, n] : first) out << "k = " << k << ": n = " << n << '\n';
        break;
    }
  }
};

struct HistCmd : Command {
  u64 from = 2, to = 0;
  void execute(std::ostream& out) override {
    const Histogram h = histogram(period_table(std::max<u64>(to, 2), output.threads), from, to);
    switch (output.format) {
      case Format::kJson: {
        json rows = json::array();
        for (const auto& [k, c] : h.counts) rows.push_back({{"k", k}, {"count", c}});
        out << json{{"from", h.lo}, {"to", h.hi}, {"total", h.total()}, {"counts", rows}}.dump(2) << '\n';
        break;
      }
      case Format::kCsv:
        out << "k,count\n";
        for (const auto& [k, c] : h.counts) out << k << ',' << c << '\n';
        break;
      case Format::kText:
        out << "period frequencies over [" << h.lo << ", " << h.hi << "]\n";
        for (const auto& [k, c] : h.counts) out << "k = " << k << ": " << c << '\n';
        break;
    }
  }
};

// Shared output for construct / naive / min-divisors.
void write_preimage(std::ostream& out, Format format, const std::string& input, const FactoredInt& result,
                    const BigNat& expected_d) {
  json j = value_json(result);
  const BigNat d = divisor_count(result);
  switch (format) {
    case Format::kJson:
      j["input"] = input;
      j["divisor_count"] = d.get_str();
      j["divisor_count_verified"] = d == expected_d;
      out << j.dump(2) << '\n';
      break;
    case Format::kCsv:
      out << "factored,decimal,digits,divisor_count\n"
          << j["factored"].get<std::string>() << ','
          << (j["decimal"].is_null() ? "" : j["decimal"].get<std::string>()) << ',' << j["digits"].get<u64>()
          << ',' << d.get_str() << '\n';
      break;
    case Format::kText:
      out << "input:    " << input << '\n'
          << "factored: " << j["factored"].get<std::string>() << '\n'
          << "decimal:  " << (j["decimal"].is_null() ? "(above rendering ceiling)" : j["decimal"].get<std::string>())
          << '\n'
          << "digits:   " << j["digits"].get<u64>() << '\n'
          << "d:        " << d.get_str() << (d == expected_d ? " (verified)" : " (MISMATCH)") << '\n';
      break;
  }
}

struct ConstructCmd : Command {
  std::string n;
  bool naive = false;
  void execute(std::ostream& out) override {
    const FactoredInt value = parse_value(n);
    const FactoredInt result = naive ? naive_preimage(value) : canonical_preimage(value);
    write_preimage(out, output.format, display(value), result, to_bignat(value));
  }
};

struct MinDivisorsCmd : Command {
  std::string target;
  void execute(std::ostream& out) override {
    const u64 t = parse_u64_arg(target);
    write_preimage(out, output.format, std::to_string(t), exact_min_with_divisors(t), BigNat(std::to_string(t)));
  }
};

struct ChainCmd : Command {
  unsigned max_k = 0;
  u64 bound = kDefaultCandidateBound;
  void execute(std::ostream& out) override {
    const auto records = chain(max_k, period_table(std::max<u64>(bound, 2), output.threads));
    switch (output.format) {
      case Format::kJson: {
        json rows = json::array();
        for (const auto& r : records) rows.push_back(chain_record_json(r));
        out << rows.dump(2) << '\n';
        break;
      }
      case Format::kCsv:
        out << "k,factored,decimal,digits,verification\n";
        for (const auto& r : records)
          out << r.period << ',' << to_string(r.value) << ',' << r.decimal << ',' << r.digit_count << ','
              << verification_label(r) << '\n';
        break;
      case Format::kText:
        for (const auto& r : records) {
          out << "k = " << r.period << ": " << to_string(r.value) << " = "
              << (r.decimal.empty() ? "(above rendering ceiling)" : r.decimal) << " (" << r.digit_count
              << " digits, " << verification_label(r) << ")\n";
          if (!r.canonical_agrees())
            out << "  canonical construction from previous entry gives " << to_string(*r.canonical) << '\n';
        }
        break;
    }
  }
};

struct VerifyTheorem1Cmd : Command {
  u64 limit = 0;
  u64 sieve_limit = 10'000'000;
  void execute(std::ostream& out) override {
    if (limit < 2) throw InvalidArgument("--limit must be at least 2");
    const PeriodTable table = period_table(std::max<u64>(sieve_limit, 2), output.threads);
    std::vector<u64> sieve_min(limit + 1, 0);
    for (u64 n = 1; n <= table.limit(); ++n) {
      const u64 d = table.divisor_of(n);
      if (d <= limit && sieve_min[d] == 0) sieve_min[d] = n;
    }
    struct Row {
      u64 t;
      FactoredInt canonical, oracle;
      u64 sieve;
      std::string status;
    };
    std::vector<Row> disagreements;
    u64 canonical_gaps = 0, sieve_mismatches = 0;
    for (u64 t = 2; t <= limit; ++t) {
      FactoredInt c = canonical_preimage(factorize(t));
      FactoredInt o = exact_min_with_divisors(t);
      const u64 s = sieve_min[t];
      auto o_small = to_u64(o);
      const bool sieve_ok = s != 0 ? (o_small && *o_small == s) : (!o_small || *o_small > table.limit());
      std::string status;
      if (!sieve_ok) {
        status = "oracle-sieve-mismatch";
        ++sieve_mismatches;
      } else if (c != o) {
        status = "canonical-not-minimal";
        ++canonical_gaps;
      } else {
        continue;
      }
      disagreements.push_back({t, std::move(c), std::move(o), s, status});
    }
    switch (output.format) {
      case Format::kJson: {
        json rows = json::array();
        for (const auto& r : disagreements)
          rows.push_back({{"t", r.t},
                          {"canonical", to_string(r.canonical)},
                          {"oracle", to_string(r.oracle)},
                          {"sieve", r.sieve ? json(r.sieve) : json(nullptr)},
                          {"status", r.status}});
        out << json{{"limit", limit},
                    {"sieve_limit", table.limit()},
                    {"checked", limit - 1},
                    {"canonical_not_minimal", canonical_gaps},
                    {"oracle_sieve_mismatches", sieve_mismatches},
                    {"disagreements", rows}}
                   .dump(2)
            << '\n';
        break;
      }
      case Format::kCsv:
        out << "t,canonical,oracle,sieve,status\n";
        for (const auto& r : disagreements)
          out << r.t << ',' << to_string(r.canonical) << ',' << to_string(r.oracle) << ','
              << (r.sieve ? std::to_string(r.sieve) : "") << ',' << r.status << '\n';
        break;
      case Format::kText:
        out << "checked targets 2.." << limit << " (sieve to " << table.limit() << ")\n"
            << "canonical construction not minimal: " << canonical_gaps << '\n'
            << "oracle/sieve mismatches: " << sieve_mismatches << '\n';
        for (const auto& r : disagreements)
          out << "  t = " << r.t << ": canonical " << display(r.canonical) << ", oracle " << display(r.oracle)
              << ", sieve " << (r.sieve ? std::to_string(r.sieve) : "-") << " [" << r.status << "]\n";
        break;
    }
  }
};

struct HcnCmd : Command {
  double log10_limit = 0;
  std::string check;
  void execute(std::ostream& out) override {
    if (!check.empty()) {
      const FactoredInt v = parse_value(check);
      const bool verdict = is_highly_composite(v);
      switch (output.format) {
        case Format::kJson: {
          json j = value_json(v);
          j["is_hcn"] = verdict;
          out << j.dump(2) << '\n';
          break;
        }
        case Format::kCsv:
          out << "factored,is_hcn\n" << to_string(v) << ',' << (verdict ? "true" : "false") << '\n';
          break;
        case Format::kText:
          out << display(v) << (verdict ? " is" : " is not") << " highly composite\n";
          break;
      }
      return;
    }
    const auto list = enumerate_hcn(log10_limit);
    switch (output.format) {
      case Format::kJson: {
        json rows = json::array();
        for (const auto& r : list)
          rows.push_back({{"n", r.decimal}, {"factored", to_string(r.value)}, {"d", r.divisor_count.get_str()}});
        out << rows.dump(2) << '\n';
        break;
      }
      case Format::kCsv:
        out << "n_decimal,factored,d\n";
        for (const auto& r : list) out << r.decimal << ',' << to_string(r.value) << ',' << r.divisor_count.get_str() << '\n';
        break;
      case Format::kText:
        for (const auto& r : list)
          out << r.decimal << " = " << to_string(r.value) << "  d = " << r.divisor_count.get_str() << '\n';
        break;
    }
  }
};

struct ConjectureCmd : Command {
  unsigned max_k = 7;
  u64 bound = kDefaultCandidateBound;
  void execute(std::ostream& out) override {
    const auto records = chain(std::max(max_k, 2u), period_table(std::max<u64>(bound, 2), output.threads));
    const auto rows = conjecture_report(records);
    auto verdict = [](const ConjectureRow& r) -> std::string {
      return r.is_hcn ? (*r.is_hcn ? "true" : "false") : "unknown";
    };
    switch (output.format) {
      case Format::kJson: {
        json arr = json::array();
        for (const auto& r : rows)
          arr.push_back({{"k", r.k},
                         {"n_decimal", r.decimal},
                         {"ln_n", r.ln_value},
                         {"ratio", r.ratio},
                         {"degenerate", r.degenerate},
                         {"is_hcn", r.is_hcn ? json(*r.is_hcn) : json(nullptr)}});
        out << arr.dump(2) << '\n';
        break;
      }
      case Format::kCsv:
        out << "k,n_decimal,ln_n,ratio,is_hcn\n";
        for (const auto& r : rows)
          out << r.k << ',' << r.decimal << ',' << fmt_double(r.ln_value) << ',' << fmt_double(r.ratio) << ','
              << verdict(r) << '\n';
        break;
      case Format::kText:
        for (const auto& r : rows)
          out << "k = " << r.k << "  n = " << r.decimal << "  ln n = " << fmt_double(r.ln_value)
              << "  ratio = " << fmt_double(r.ratio) << (r.degenerate ? " (degenerate)" : "")
              << "  highly composite: " << verdict(r) << '\n';
        break;
    }
  }
};

struct WigertCmd : Command {
  u64 from = 3, to = 0;
  BoundParams params;
  std::string rows = "records";
  void execute(std::ostream& out) override {
    const PeriodTable table = period_table(std::max<u64>(to, 2), output.threads);
    const WigertReport rep = wigert_scan(table, params, from, to);
    auto point = [](const WigertPoint& p) { return json{{"n", p.n}, {"d", p.d}, {"ratio", p.ratio}}; };
    switch (output.format) {
      case Format::kJson: {
        json recs = json::array(), viol = json::array();
        for (const auto& p : rep.records) recs.push_back(point(p));
        for (const auto& p : rep.violations) viol.push_back(point(p));
        out << json{{"from", rep.lo},
                    {"to", rep.hi},
                    {"epsilon", params.epsilon},
                    {"n0", params.threshold_n0},
                    {"c", params.growth_constant_c},
                    {"n1", params.growth_threshold_n1()},
                    {"threshold_ratio", rep.threshold_ratio},
                    {"max", point(rep.max)},
                    {"records", recs},
                    {"violations", viol},
                    {"small_n_exceedances", rep.small_n_exceedances}}
                   .dump(2)
            << '\n';
        break;
      }
      case Format::kCsv: {
        out << "n,d,ratio\n";
        auto emit = [&](const WigertPoint& p) { out << p.n << ',' << p.d << ',' << fmt_double(p.ratio) << '\n'; };
        if (rows == "all") {
          for (u64 n = from; n <= to; ++n) emit({n, table.divisor_of(n), wigert_ratio(n, table.divisor_of(n))});
        } else {
          for (const auto& p : rows == "violations" ? rep.violations : rep.records) emit(p);
        }
        break;
      }
      case Format::kText:
        out << "scan [" << rep.lo << ", " << rep.hi << "], threshold ln2*(1+eps) = " << fmt_double(rep.threshold_ratio)
            << '\n'
            << "max ratio " << fmt_double(rep.max.ratio) << " at n = " << rep.max.n << " (d = " << rep.max.d << ")\n"
            << "violations with n >= " << params.threshold_n0 << ": " << rep.violations.size() << '\n'
            << "exceedances below n0 (informational): " << rep.small_n_exceedances << '\n';
        break;
    }
  }
};

struct IncrementCmd : Command {
  std::string n;
  void execute(std::ostream& out) override {
    const IncrementReport r = theorem2_increment(parse_value(n));
    switch (output.format) {
      case Format::kJson:
        out << json{{"n", display(r.n)},
                    {"factored", to_string(r.n)},
                    {"preimage", to_string(r.preimage)},
                    {"delta_log10", r.delta_log10},
                    {"bound", r.bound},
                    {"hypothesis_holds", r.hypothesis_holds},
                    {"bound_holds", r.bound_holds}}
                   .dump(2)
            << '\n';
        break;
      case Format::kCsv:
        out << "n,delta_log10,bound,hypothesis_holds,bound_holds\n"
            << display(r.n) << ',' << fmt_double(r.delta_log10) << ',' << fmt_double(r.bound) << ','
            << (r.hypothesis_holds ? "true" : "false") << ',' << (r.bound_holds ? "true" : "false") << '\n';
        break;
      case Format::kText:
        out << "n = " << display(r.n) << ", canonical preimage " << to_string(r.preimage) << '\n'
            << "delta log10 = " << fmt_double(r.delta_log10) << ", bound 0.545*nu = " << fmt_double(r.bound) << '\n'
            << "bound " << (r.bound_holds ? "holds" : "fails") << "; hypothesis (two exponents >= 2) "
            << (r.hypothesis_holds ? "holds" : "fails") << '\n';
        break;
    }
  }
};

struct PlotCmd : Command {
  u64 from = 2, to = 0;
  void execute(std::ostream& out) override {
    const auto rows = plot_data(period_table(std::max<u64>(to, 2), output.threads), from, to);
    if (output.format == Format::kJson) {
      json arr = json::array();
      for (const auto& [n, k] : rows) arr.push_back({{"n", n}, {"k", k}});
      out << arr.dump() << '\n';
      return;
    }
    out << "n,k\n";
    for (const auto& [n, k] : rows) out << n << ',' << k << '\n';
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Iterated divisor function: periods, minimal preimages, highly composite numbers"};
  app.name(args.empty() ? "divperiod" : args.front());
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  auto period = std::make_shared<PeriodCmd>();
  {
    auto* s = app.add_subcommand("period", "Period k and trajectory of n");
    s->add_option("n", period->n, "Integer (decimal up to 64 bits or factored form)")->required();
    add_output_flags(s, period->output, Format::kText);
  }
  auto table = std::make_shared<TableCmd>();
  {
    auto* s = app.add_subcommand("table", "Sieve d(n) and k(n) for 2 <= n <= limit");
    s->add_option("--limit", table->limit)->required();
    add_output_flags(s, table->output, Format::kCsv);
  }
  auto first = std::make_shared<FirstCmd>();
  {
    auto* s = app.add_subcommand("first", "Least n attaining each period");
    s->add_option("--limit", first->limit)->required();
    add_output_flags(s, first->output, Format::kText);
  }
  auto hist = std::make_shared<HistCmd>();
  {
    auto* s = app.add_subcommand("hist", "Period frequencies over an interval");
    s->add_option("--from", hist->from)->required();
    s->add_option("--to", hist->to)->required();
    add_output_flags(s, hist->output, Format::kText);
  }
  auto construct = std::make_shared<ConstructCmd>();
  {
    auto* s = app.add_subcommand("construct", "Canonical greedy preimage L with d(L) = n");
    s->add_option("n", construct->n, "Integer or factored form")->required();
    add_output_flags(s, construct->output, Format::kText);
  }
  auto naive = std::make_shared<ConstructCmd>();
  naive->naive = true;
  {
    auto* s = app.add_subcommand("naive", "One-prime-per-prime-power preimage");
    s->add_option("n", naive->n, "Integer or factored form")->required();
    add_output_flags(s, naive->output, Format::kText);
  }
  auto mind = std::make_shared<MinDivisorsCmd>();
  {
    auto* s = app.add_subcommand("min-divisors", "Smallest integer with exactly t divisors");
    s->add_option("t", mind->target)->required();
    add_output_flags(s, mind->output, Format::kText);
  }
  auto chn = std::make_shared<ChainCmd>();
  {
    auto* s = app.add_subcommand("chain", "Least integer of each period k = 1..K");
    s->add_option("--max-k", chn->max_k)->required()->check(CLI::Range(1u, 64u));
    s->add_option("--bound", chn->bound, "Candidate bound for the oracle route");
    add_output_flags(s, chn->output, Format::kText);
  }
  auto verify = std::make_shared<VerifyTheorem1Cmd>();
  {
    auto* s = app.add_subcommand("verify-theorem1", "Canonical construction vs exact oracle vs sieve");
    s->add_option("--limit", verify->limit)->required();
    s->add_option("--sieve-limit", verify->sieve_limit);
    add_output_flags(s, verify->output, Format::kText);
  }
  auto hcn = std::make_shared<HcnCmd>();
  {
    auto* s = app.add_subcommand("hcn", "Enumerate or check highly composite numbers");
    auto* mode = s->add_option_group("mode");
    mode->add_option("--log10-limit", hcn->log10_limit, "Enumerate up to 10^X");
    mode->add_option("--check", hcn->check, "Integer or factored form");
    mode->require_option(1);
    add_output_flags(s, hcn->output, Format::kText);
  }
  auto conj = std::make_shared<ConjectureCmd>();
  {
    auto* s = app.add_subcommand("conjecture", "Chain values against the highly composite conjecture");
    s->add_option("--max-k", conj->max_k)->check(CLI::Range(2u, 64u));
    s->add_option("--bound", conj->bound);
    add_output_flags(s, conj->output, Format::kText);
  }
  auto wig = std::make_shared<WigertCmd>();
  {
    auto* s = app.add_subcommand("wigert", "Scan ln d(n) ln ln n / ln n");
    s->add_option("--from", wig->from)->required();
    s->add_option("--to", wig->to)->required();
    s->add_option("--epsilon", wig->params.epsilon);
    s->add_option("--n0", wig->params.threshold_n0);
    s->add_option("--c", wig->params.growth_constant_c);
    s->add_option("--rows", wig->rows, "CSV rows: records, violations or all")
        ->check(CLI::IsMember({"records", "violations", "all"}));
    add_output_flags(s, wig->output, Format::kText);
  }
  auto inc = std::make_shared<IncrementCmd>();
  {
    auto* s = app.add_subcommand("increment", "log10 growth under the canonical preimage vs 0.545*nu(n)");
    s->add_option("n", inc->n, "Integer or factored form")->required();
    add_output_flags(s, inc->output, Format::kText);
  }
  auto plot = std::make_shared<PlotCmd>();
  {
    auto* s = app.add_subcommand("plot", "(n, k) rows for external plotting");
    s->add_option("--from", plot->from)->required();
    s->add_option("--to", plot->to)->required();
    add_output_flags(s, plot->output, Format::kCsv);
  }
  const std::map<std::string, Command*> by_name = {
      {"period", period.get()},   {"table", table.get()},       {"first", first.get()},
      {"hist", hist.get()},       {"construct", construct.get()}, {"naive", naive.get()},
      {"min-divisors", mind.get()}, {"chain", chn.get()},       {"verify-theorem1", verify.get()},
      {"hcn", hcn.get()},         {"conjecture", conj.get()},   {"wigert", wig.get()},
      {"increment", inc.get()},   {"plot", plot.get()}};

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Command* cmd = by_name.at(app.get_subcommands().front()->get_name());
  try {
    if (cmd->output.path.empty()) {
      cmd->execute(out);
    } else {
      std::ostringstream buffer;
      cmd->execute(buffer);
      std::ofstream file(cmd->output.path, std::ios::binary);
      if (!file) throw Error("cannot open output file " + cmd->output.path);
      file << buffer.str();
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace divper::cli
