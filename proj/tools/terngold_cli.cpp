// terngold: command-line front end for the verification toolkit.
//
// Every subcommand resolves its full configuration (flags beat config-file
// keys), runs one campaign, and emits a single self-describing report
// record.  Exit codes: 0 = everything asserted held, 1 = a mathematical
// assertion failed (the witness is in the report), 2 = usage or
// precondition error.  Thread count follows OMP_NUM_THREADS.

#include <array>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "terngold/counting.hpp"
#include "terngold/density.hpp"
#include "terngold/modulus.hpp"
#include "terngold/rational.hpp"
#include "terngold/report.hpp"
#include "terngold/residue_set.hpp"
#include "terngold/search.hpp"
#include "terngold/sequences.hpp"
#include "terngold/serialization.hpp"
#include "terngold/sieve.hpp"
#include "terngold/spectrum.hpp"
#include "terngold/subset_spec.hpp"
#include "terngold/unit_function.hpp"
#include "terngold/wtrick.hpp"

namespace tg = terngold;
using nlohmann::json;
using tg::report::Format;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertionFailed = 1;
constexpr int kExitUsage = 2;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    const auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

struct CommonOpts {
  std::string output;  // empty = stdout
  std::string format = "human";
  std::string config;
};

void add_common(CLI::App* sub, CommonOpts& c) {
  sub->add_option("--output", c.output,
                  "write the report to this file instead of stdout");
  sub->add_option("--format", c.format, "report format")
      ->check(CLI::IsMember({"jsonl", "csv", "human"}))
      ->capture_default_str();
  sub->add_option("--config", c.config,
                  "key=value file mirroring the flags (flags win)");
}

std::string trimmed(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// key=value lines mirroring the long flags of `sub` (no leading dashes);
// '#' comments and blank lines skipped; unknown keys rejected; keys whose
// flag was given on the command line are ignored (flags win).
void apply_config(CLI::App* sub, const std::string& path) {
  if (path.empty()) return;
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string text = trimmed(line);
    if (text.empty() || text[0] == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": expected key=value");
    }
    const std::string key = trimmed(text.substr(0, eq));
    const std::string value = trimmed(text.substr(eq + 1));
    CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (opt == nullptr) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": unknown config key '" + key + "'");
    }
    if (opt->count() > 0) continue;  // flags win
    opt->add_result(value);
    opt->run_callback();
  }
}

tg::report::Sink open_sink(const CommonOpts& c, bool csv_ok = false) {
  const Format f = tg::report::parse_format(c.format);
  if (f == Format::Csv && !csv_ok) {
    throw std::invalid_argument(
        "csv format is only defined for goldbach-count tables; use jsonl or "
        "human here");
  }
  return tg::report::Sink(c.output, f);
}

tg::seq::ScanBackend backend_from(const std::string& s) {
  if (s == "auto") return tg::seq::ScanBackend::Auto;
  if (s == "exact") return tg::seq::ScanBackend::Exact;
  return tg::seq::ScanBackend::Int128;
}

// Set members as "{1,4,7}", "1,4,7", or "" (the empty set).
tg::mod::ResidueSet member_set(std::int64_t m, const std::string& text) {
  std::string cleaned;
  for (char ch : text) {
    if (ch == '{' || ch == '}' || std::isspace(static_cast<unsigned char>(ch)))
      continue;
    cleaned.push_back(ch);
  }
  std::vector<std::int64_t> vals;
  std::stringstream ss(cleaned);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    const std::int64_t v = std::stoll(tok, &used);
    if (used != tok.size()) {
      throw std::invalid_argument("bad set member '" + tok + "'");
    }
    vals.push_back(v);
  }
  return tg::mod::ResidueSet::from_members(m, vals);
}

json set_json(const tg::mod::ResidueSet& s) {
  return json{{"m", s.modulus()},
              {"size", s.cardinality()},
              {"members", s.members()}};
}

json rationals_json(const std::vector<tg::Rat>& v) {
  json arr = json::array();
  for (const auto& q : v) arr.push_back(tg::report::rat_json(q));
  return arr;
}

json sequences_json(const tg::seq::TripleSequences& s) {
  return json{{"n", s.n},
              {"a", rationals_json(s.a)},
              {"b", rationals_json(s.b)},
              {"c", rationals_json(s.c)}};
}

json density_witness_json(const tg::dens::WitnessReport& rep) {
  json w;
  w["status"] = tg::dens::to_string(rep.status);
  if (!rep.detail.empty()) w["detail"] = rep.detail;
  if (rep.status == tg::dens::WitnessStatus::Ok) {
    const auto& t = rep.witness;
    w["a"] = t.a;
    w["b"] = t.b;
    w["c"] = t.c;
    w["fa"] = tg::report::rat_json(t.fa);
    w["fb"] = tg::report::rat_json(t.fb);
    w["fc"] = tg::report::rat_json(t.fc);
    w["margin"] = tg::report::rat_json(t.margin);
    w["sum"] = tg::report::rat_json(t.sum);
    w["product"] = tg::report::rat_json(t.product);
  }
  return w;
}

int exit_for_witness(tg::dens::WitnessStatus s) {
  switch (s) {
    case tg::dens::WitnessStatus::Ok:
      return kExitOk;
    case tg::dens::WitnessStatus::PreconditionFails:
      return kExitUsage;
    case tg::dens::WitnessStatus::CertificateFail:
      return kExitAssertionFailed;
  }
  return kExitUsage;
}

std::array<tg::unitfn::UnitFunction, 3> load_three(const std::string& p1,
                                                   const std::string& p2,
                                                   const std::string& p3) {
  return {tg::io::load_unit_function_file(p1),
          tg::io::load_unit_function_file(p2),
          tg::io::load_unit_function_file(p3)};
}

// ---- seq-check --------------------------------------------------------------

struct SeqCheckOpts {
  std::string file;
  std::string backend = "auto";
  CommonOpts common;
};

int run_seq_check(const SeqCheckOpts& o) {
  auto sink = open_sink(o.common);
  Timer timer;
  const auto s = tg::io::load_triple_sequences_file(o.file);
  tg::seq::ScanOptions scan;
  scan.backend = backend_from(o.backend);
  const auto verdict = tg::seq::classify_instance(s, scan);

  auto rec = tg::report::make_record("seq-check");
  rec["params"] = {{"file", o.file}, {"backend", o.backend}, {"n", s.n}};
  rec["status"] = tg::seq::to_string(verdict.status);
  rec["scanned"] = verdict.hypothesis.scanned;
  rec["margin"] = tg::report::rat_json(verdict.average.margin);
  json w;
  w["in_claimed_range"] = verdict.in_claimed_range;
  w["averages"] = json{{"a", tg::report::rat_json(verdict.average.avg_a)},
                       {"b", tg::report::rat_json(verdict.average.avg_b)},
                       {"c", tg::report::rat_json(verdict.average.avg_c)}};
  if (verdict.hypothesis.first_violation) {
    const auto& v = *verdict.hypothesis.first_violation;
    w["first_violation"] = json{{"i", v.i},
                                {"j", v.j},
                                {"k", v.k},
                                {"lhs", tg::report::rat_json(v.lhs)},
                                {"rhs", tg::report::rat_json(v.rhs)}};
  }
  rec["witness"] = w;
  rec["elapsed_ms"] = timer.ms();
  sink.record(rec);
  return verdict.status == tg::seq::InstanceStatus::Counterexample
             ? kExitAssertionFailed
             : kExitOk;
}

// ---- seq-search -------------------------------------------------------------

struct SeqSearchOpts {
  int n = 6;
  std::uint64_t steps = 0;
  std::uint64_t seed = 0;
  int restarts = 1;
  std::string step_scale = "1/8";
  CommonOpts common;
};

int run_seq_search(const SeqSearchOpts& o) {
  auto sink = open_sink(o.common);
  Timer timer;
  tg::seq::SearchConfig cfg;
  cfg.n = o.n;
  cfg.steps = o.steps;
  cfg.seed = o.seed;
  cfg.restarts = o.restarts;
  cfg.step_scale = tg::parse_rational_or_decimal(o.step_scale);
  const auto res = tg::seq::search_counterexample(cfg);

  auto rec = tg::report::make_record("seq-search");
  rec["params"] = {{"n", o.n},
                   {"steps", o.steps},
                   {"seed", o.seed},
                   {"restarts", o.restarts},
                   {"step_scale", o.step_scale}};
  rec["seed"] = o.seed;
  rec["status"] = res.counterexample ? "COUNTEREXAMPLE" : "NO_COUNTEREXAMPLE";
  rec["margin"] = tg::report::rat_json(res.best_margin);
  rec["scanned"] = static_cast<std::int64_t>(res.steps_run);
  rec["witness"] = json{{"best_margin", tg::report::rat_json(res.best_margin)},
                        {"accepted", res.accepted},
                        {"best_restart", res.best_restart},
                        {"best", sequences_json(res.best)}};
  rec["elapsed_ms"] = timer.ms();
  sink.record(rec);
  return res.counterexample ? kExitAssertionFailed : kExitOk;
}

// ---- seq-certificate --------------------------------------------------------

struct SeqCertOpts {
  std::string file;
  std::string backend = "auto";
  CommonOpts common;
};

int run_seq_certificate(const SeqCertOpts& o) {
  auto sink = open_sink(o.common);
  Timer timer;
  const auto s = tg::io::load_triple_sequences_file(o.file);
  const auto t = tg::seq::transform_to_xyz(s);
  tg::seq::ScanOptions scan;
  scan.backend = backend_from(o.backend);
  const auto cert = tg::seq::certificate_ledger(t, false, scan);

  auto rec = tg::report::make_record("seq-certificate");
  rec["params"] = {{"file", o.file}, {"backend", o.backend}, {"n", s.n}};
  json entries = json::array();
  for (const auto& e : cert.entries) {
    entries.push_back(json{{"name", e.name},
                           {"applicable", e.applicable},
                           {"holds", e.holds},
                           {"lhs", tg::report::rat_json(e.lhs)},
                           {"rhs", tg::report::rat_json(e.rhs)}});
  }
  rec["witness"] = json{{"hypothesis_ok", cert.hypothesis_ok},
                        {"entries", entries}};
  if (!cert.hypothesis_ok) {
    rec["status"] = "HYPOTHESIS_FAILS";
  } else {
    rec["status"] = cert.all_applicable_hold ? "OK" : "LEDGER_VIOLATION";
  }
  rec["elapsed_ms"] = timer.ms();
  sink.record(rec);
  if (cert.hypothesis_ok && !cert.all_applicable_hold) {
    return kExitAssertionFailed;
  }
  return kExitOk;
}

// ---- sumset -----------------------------------------------------------------

struct SumsetOpts {
  std::int64_t m = 0;
  std::string a, b, c;
  bool brute = false;
  CommonOpts common;
};

int run_sumset(const SumsetOpts& o) {
  auto sink = open_sink(o.common);
  Timer timer;
  const auto a = member_set(o.m, o.a);
  const auto b = member_set(o.m, o.b);
  const auto c = member_set(o.m, o.c);
  const auto s = o.brute ? tg::mod::sumset3_brute(a, b, c)
                         : tg::mod::sumset3(a, b, c);
  const auto missing = tg::mod::complement(s);

  auto rec = tg::report::make_record("sumset");
  rec["params"] = {{"m", o.m},
                   {"a", o.a},
                   {"b", o.b},
                   {"c", o.c},
                   {"brute", o.brute}};
  rec["status"] = "OK";
  rec["witness"] = json{{"sumset", set_json(s)},
                        {"missing", missing.members()},
                        {"covers", missing.empty()}};
  rec["elapsed_ms"] = timer.ms();
  sink.record(rec);
  return kExitOk;
}

// ---- corollary14 ------------------------------------------------------------

struct CoverOpts {
  std::int64_t m = 0;
  std::string mode;
  std::string a1, a2, a3;
  std::uint64_t seed = 0;
  std::int64_t trials = 0;
  std::int64_t budget = 0;
  bool diagnostic = false;
  CommonOpts common;
};

int run_corollary14(const CoverOpts& o, bool trials_given, bool budget_given,
                    bool sets_given) {
  auto sink = open_sink(o.common);
  Timer timer;
  tg::mod::CoverConfig cfg;
  cfg.seed = o.seed;
  cfg.diagnostic = o.diagnostic;
  std::optional<std::array<tg::mod::ResidueSet, 3>> sets;
  if (o.mode == "single") {
    if (!sets_given) {
      throw std::invalid_argument("single mode needs --a1, --a2, --a3");
    }
    cfg.mode = tg::mod::CoverMode::Single;
    sets = {member_set(o.m, o.a1), member_set(o.m, o.a2),
            member_set(o.m, o.a3)};
  } else if (o.mode == "exhaustive") {
    cfg.mode = tg::mod::CoverMode::Exhaustive;
  } else if (o.mode == "random") {
    if (!trials_given) {
      throw std::invalid_argument("random mode needs an explicit --trials");
    }
    cfg.mode = tg::mod::CoverMode::Random;
    cfg.trials = o.trials;
  } else {
    if (!budget_given) {
      throw std::invalid_argument("adversarial mode needs an explicit --budget");
    }
    cfg.mode = tg::mod::CoverMode::Adversarial;
    cfg.budget = o.budget;
  }
  const auto modulus = tg::mod::analyze_modulus(o.m);
  const auto rep = tg::mod::verify_unit_cover(modulus, sets, cfg);

  auto rec = tg::report::make_record("corollary14");
  rec["params"] = {{"m", o.m},       {"mode", o.mode},
                   {"seed", o.seed}, {"trials", o.trials},
                   {"budget", o.budget}, {"diagnostic", o.diagnostic}};
  rec["seed"] = o.seed;
  rec["scanned"] = rep.checked;
  json w;
  w["failures"] = rep.failures;
  w["all_cover"] = rep.all_cover;
  if (rep.worst_cover_size >= 0) w["worst_cover_size"] = rep.worst_cover_size;
  if (!rep.precondition_detail.empty())
    w["precondition_detail"] = rep.precondition_detail;
  if (rep.witness) {
    w["witness"] = json{{"a1", set_json(rep.witness->a1)},
                        {"a2", set_json(rep.witness->a2)},
                        {"a3", set_json(rep.witness->a3)},
                        {"missing", rep.witness->missing}};
  }
  rec["witness"] = w;
  if (!rep.precondition_ok) {
    rec["status"] = "PRECONDITION_FAILS";
  } else {
    rec["status"] = rep.all_cover ? "OK" : "COVER_FAILURE";
  }
  rec["elapsed_ms"] = timer.ms();
  sink.record(rec);
  if (!rep.precondition_ok) return kExitUsage;
  return rep.all_cover ? kExitOk : kExitAssertionFailed;
}

// ---- counterexample15 -------------------------------------------------------

int run_counterexample15(const CommonOpts& c) {
  auto sink = open_sink(c);
  Timer timer;
  const auto res = tg::mod::mod15_counterexample();
  const bool expected = res.missing.cardinality() == 1 && res.missing.test(2) &&
                        res.density == tg::Rat(5, 8);

  auto rec = tg::report::make_record("counterexample15");
  rec["params"] = json::object();
  rec["status"] = expected ? "OK" : "MISMATCH";
  rec["witness"] = json{{"s", set_json(res.s)},
                        {"missing", res.missing.members()},
                        {"density", tg::report::rat_json(res.density)}};
  rec["elapsed_ms"] = timer.ms();
  sink.record(rec);
  return expected ? kExitOk : kExitAssertionFailed;
}

// ---- lemma31 / lemma32 / theorem13 ------------------------------------------

struct WitnessCliOpts {
  std::string f1, f2, f3;
  std::string delta, eta;
  std::int64_t x = 0;
  std::string mode = "constructive";
  std::int64_t min_base_prime = 7;
  CommonOpts common;
};

json witness_params(const WitnessCliOpts& o, const char* target_key) {
  return json{{"f1", o.f1},
              {"f2", o.f2},
              {"f3", o.f3},
              {"delta", o.delta},
              {"eta", o.eta},
              {target_key, o.x},
              {"mode", o.mode},
              {"min_base_prime", o.min_base_prime}};
}

int emit_witness_report(tg::report::Sink& sink, const char* op, json params,
                        const tg::dens::WitnessReport& rep, double ms) {
  auto rec = tg::report::make_record(op);
  rec["params"] = std::move(params);
  rec["status"] = tg::dens::to_string(rep.status);
  rec["scanned"] = static_cast<std::int64_t>(rep.scanned);
  if (rep.status == tg::dens::WitnessStatus::Ok) {
    rec["margin"] = tg::report::rat_json(rep.witness.margin);
  }
  rec["witness"] = density_witness_json(rep);
  rec["elapsed_ms"] = ms;
  sink.record(rec);
  return exit_for_witness(rep.status);
}

int run_lemma31(const WitnessCliOpts& o) {
  auto sink = open_sink(o.common);
  Timer timer;
  const auto f = load_three(o.f1, o.f2, o.f3);
  const auto params =
      tg::dens::ThresholdParams::create(tg::parse_rational_or_decimal(o.delta),
                                        tg::parse_rational_or_decimal(o.eta));
  tg::dens::WitnessOptions opt;
  opt.min_base_prime = o.min_base_prime;
  const auto mode = o.mode == "brute" ? tg::dens::WitnessMode::Brute
                                      : tg::dens::WitnessMode::Constructive;
  const auto rep =
      tg::dens::find_margin_witness(f[0], f[1], f[2], params, o.x, mode, opt);
  return emit_witness_report(sink, "lemma31", witness_params(o, "x"), rep,
                             timer.ms());
}

struct Lemma32Opts {
  std::string f1, f2, f3;
  std::int64_t v = 0;
  CommonOpts common;
};

int run_lemma32(const Lemma32Opts& o) {
  auto sink = open_sink(o.common);
  Timer timer;
  const auto f = load_three(o.f1, o.f2, o.f3);
  const auto rep =
      tg::dens::find_support_witness_mod15(f[0], f[1], f[2], o.v);
  json params{{"f1", o.f1}, {"f2", o.f2}, {"f3", o.f3}, {"v", o.v}};
  return emit_witness_report(sink, "lemma32", std::move(params), rep,
                             timer.ms());
}

int run_theorem13(const WitnessCliOpts& o) {
  auto sink = open_sink(o.common);
  Timer timer;
  const auto f = load_three(o.f1, o.f2, o.f3);
  const auto params =
      tg::dens::ThresholdParams::create(tg::parse_rational_or_decimal(o.delta),
                                        tg::parse_rational_or_decimal(o.eta));
  tg::dens::WitnessOptions opt;
  opt.min_base_prime = o.min_base_prime;
  const auto mode = o.mode == "brute" ? tg::dens::WitnessMode::Brute
                                      : tg::dens::WitnessMode::Constructive;
  const auto rep =
      tg::dens::find_support_witness(f[0], f[1], f[2], params, o.x, mode, opt);
  return emit_witness_report(sink, "theorem13", witness_params(o, "x"), rep,
                             timer.ms());
}

// ---- goldbach-count ---------------------------------------------------------

struct CountOpts {
  std::int64_t n = 0;
  std::int64_t n0 = 0, n1 = 0;
  std::string p1 = "all", p2 = "all", p3 = "all";
  std::string method = "conv";
  CommonOpts common;
};

tg::count::CountMethod method_from(const std::string& s) {
  if (s == "brute") return tg::count::CountMethod::Brute;
  if (s == "conv" || s == "convolution") return tg::count::CountMethod::Convolution;
  throw std::invalid_argument("unknown method '" + s +
                              "' (expected conv or brute)");
}

int run_goldbach_count(const CountOpts& o, bool single_given,
                       bool range_given) {
  if (single_given == range_given) {
    throw std::invalid_argument("give exactly one of --n or --n0/--n1");
  }
  const Format fmt = tg::report::parse_format(o.common.format);
  tg::report::Sink sink(o.common.output, fmt);
  Timer timer;
  const std::array<tg::primes::PrimeSubsetSpec, 3> specs = {
      tg::primes::PrimeSubsetSpec::parse(o.p1),
      tg::primes::PrimeSubsetSpec::parse(o.p2),
      tg::primes::PrimeSubsetSpec::parse(o.p3)};
  const auto method = method_from(o.method);
  const std::int64_t top = single_given ? o.n : o.n1;
  const auto table = tg::primes::sieve(std::max<std::int64_t>(top, 3));

  json params{{"p1", o.p1},
              {"p2", o.p2},
              {"p3", o.p3},
              {"method", tg::count::to_string(method)}};

  if (single_given) {
    const auto one =
        tg::count::count_representations(o.n, specs, table, method);
    params["n"] = o.n;
    if (fmt == Format::Csv) {
      tg::report::write_counts_csv_header(sink.stream());
      tg::report::write_count_csv(sink.stream(), one);
      return kExitOk;
    }
    auto rec = tg::report::make_record("goldbach-count");
    rec["params"] = params;
    rec["status"] = "OK";
    rec["witness"] = json{{"n", one.n},
                          {"count", one.count},
                          {"method", tg::count::to_string(one.method)}};
    rec["elapsed_ms"] = timer.ms();
    sink.record(rec);
    return kExitOk;
  }

  const auto rep = tg::count::scan_odd_range(o.n0, o.n1, specs, table, method);
  params["n0"] = o.n0;
  params["n1"] = o.n1;
  auto rec = tg::report::make_record("goldbach-count");
  rec["params"] = params;
  rec["status"] = "OK";
  json w;
  w["values"] = rep.counts.size();
  w["failures"] = rep.failures.size();
  if (!rep.failures.empty()) {
    json head = json::array();
    const std::size_t keep = std::min<std::size_t>(rep.failures.size(), 32);
    for (std::size_t i = 0; i < keep; ++i) head.push_back(rep.failures[i]);
    w["failures_head"] = head;
  }
  rec["witness"] = w;
  rec["elapsed_ms"] = timer.ms();
  if (fmt == Format::Csv) {
    tg::report::write_counts_csv_header(sink.stream());
    tg::report::write_counts_csv(sink.stream(), rep);
    if (!o.common.output.empty()) {
      // table went to the file; the summary line still lands on stdout
      std::cout << tg::report::to_jsonl(rec);
    }
    return kExitOk;
  }
  sink.record(rec);
  return kExitOk;
}

// ---- wtrick -----------------------------------------------------------------

struct WTrickCliOpts {
  std::int64_t z = 0;
  std::int64_t n = 0;
  std::string p1 = "all", p2 = "all", p3 = "all";
  std::string delta, eta;
  std::int64_t w_bound = 1'000'000;
  std::int64_t brute_bound = 10'000;
  bool skip_witness = false;
  CommonOpts common;
};

json mean_json(const tg::wtrick::MeanCondition& m) {
  return json{{"total", tg::report::rat_json(m.total)},
              {"threshold", tg::report::rat_json(m.threshold)},
              {"holds", m.holds},
              {"marginal", m.marginal},
              {"error_bound", m.error_bound}};
}

int run_wtrick(const WTrickCliOpts& o) {
  auto sink = open_sink(o.common);
  Timer timer;
  const std::array<tg::primes::PrimeSubsetSpec, 3> specs = {
      tg::primes::PrimeSubsetSpec::parse(o.p1),
      tg::primes::PrimeSubsetSpec::parse(o.p2),
      tg::primes::PrimeSubsetSpec::parse(o.p3)};
  tg::wtrick::WTrickOptions opt;
  opt.w_bound = o.w_bound;
  opt.brute_bound = o.brute_bound;
  const auto table = tg::primes::sieve(std::max<std::int64_t>(o.n, 3));
  const auto profile = tg::wtrick::w_trick_weights(
      o.z, o.n, specs, tg::parse_rational_or_decimal(o.delta),
      tg::parse_rational_or_decimal(o.eta), table, opt);

  auto rec = tg::report::make_record("wtrick");
  rec["params"] = {{"z", o.z},         {"n", o.n},
                   {"p1", o.p1},       {"p2", o.p2},
                   {"p3", o.p3},       {"delta", o.delta},
                   {"eta", o.eta},     {"w_bound", o.w_bound},
                   {"brute_bound", o.brute_bound}};
  json w;
  w["w"] = profile.w;
  w["phi_w"] = profile.weights[0].size();
  w["means"] = json{{"f1", mean_json(profile.means[0])},
                    {"f2", mean_json(profile.means[1])},
                    {"f3", mean_json(profile.means[2])}};
  w["all_means_hold"] = profile.all_means_hold;
  w["effective_delta"] = tg::report::rat_json(profile.effective_delta);
  w["effective_eta"] = tg::report::rat_json(profile.effective_eta);

  int rc = kExitOk;
  if (!profile.all_means_hold) {
    rec["status"] = "MEANS_FAIL";
  } else if (o.skip_witness) {
    rec["status"] = "OK";
  } else {
    const auto cw = tg::wtrick::find_congruence_witness(profile, opt);
    json cwj;
    cwj["status"] = tg::dens::to_string(cw.status);
    if (!cw.detail.empty()) cwj["detail"] = cw.detail;
    if (cw.direct_ran) cwj["direct"] = density_witness_json(cw.direct);
    if (cw.odd_part_ran) {
      cwj["odd_modulus"] = cw.odd_modulus;
      cwj["odd_part"] = density_witness_json(cw.odd_part);
      cwj["joined"] = json{cw.joined[0], cw.joined[1], cw.joined[2]};
    }
    w["congruence_witness"] = cwj;
    rec["status"] = tg::dens::to_string(cw.status);
    rc = exit_for_witness(cw.status);
  }
  rec["witness"] = w;
  rec["elapsed_ms"] = timer.ms();
  sink.record(rec);
  return rc;
}

// ---- spectrum ---------------------------------------------------------------

struct SpectrumOpts {
  std::string file;
  double q = 2.5;
  bool direct = false;
  bool dump_values = false;
  CommonOpts common;
};

int run_spectrum(const SpectrumOpts& o) {
  auto sink = open_sink(o.common);
  Timer timer;
  const auto f = tg::io::load_real_vector_file(o.file);
  const auto rep = tg::fourier::fourier_transform(f, !o.direct);

  // normalized diagnostics: treat f as a density, i.e. divide by its mass
  double mass = 0;
  for (double v : f) mass += v;
  double eta = 0;
  double lq = 0;
  if (mass > 0) {
    for (std::size_t r = 0; r < rep.values.size(); ++r) {
      const double mag = std::abs(rep.values[r]) / mass;
      const double dist = r == 0 ? std::abs(mag - 1.0) : mag;
      eta = std::max(eta, dist);
      lq += std::pow(mag, o.q);
    }
    lq = std::pow(lq, 1.0 / o.q);
  }

  auto rec = tg::report::make_record("spectrum");
  rec["params"] = {{"file", o.file},
                   {"q", o.q},
                   {"fast", !o.direct},
                   {"n", rep.n}};
  rec["status"] = "OK";
  json w;
  w["parseval_lhs"] = rep.parseval_lhs;
  w["parseval_rhs"] = rep.parseval_rhs;
  w["parseval_rel_err"] = rep.parseval_rel_err;
  w["mass"] = mass;
  w["eta_observed"] = eta;
  w["lq_norm_normalized"] = lq;
  if (o.dump_values) {
    json vals = json::array();
    for (const auto& z : rep.values) {
      vals.push_back(json{z.real(), z.imag()});
    }
    w["values"] = vals;
  }
  rec["witness"] = w;
  rec["elapsed_ms"] = timer.ms();
  sink.record(rec);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "terngold: exact verification and search toolkit for three-sequence "
      "averaging inequalities, residue-class sumset covering, density-"
      "function witnesses, and prime representation counting"};
  app.require_subcommand(1);
  int rc = kExitOk;

  // seq-check
  SeqCheckOpts seq_check;
  {
    auto* sub = app.add_subcommand(
        "seq-check",
        "classify a three-sequence instance: pointwise hypothesis, averaged "
        "bound, verdict");
    sub->add_option("--file", seq_check.file, "instance file")->required();
    sub->add_option("--backend", seq_check.backend, "scan backend")
        ->check(CLI::IsMember({"auto", "exact", "int128"}))
        ->capture_default_str();
    add_common(sub, seq_check.common);
    sub->callback([&, sub] {
      apply_config(sub, seq_check.common.config);
      rc = run_seq_check(seq_check);
    });
  }

  // seq-search
  SeqSearchOpts seq_search;
  {
    auto* sub = app.add_subcommand(
        "seq-search",
        "seeded local search for averaged-bound violations among pointwise-"
        "feasible instances");
    sub->add_option("--n", seq_search.n, "sequence length (even)")
        ->capture_default_str();
    sub->add_option("--steps", seq_search.steps, "proposal budget per restart")
        ->required();
    sub->add_option("--seed", seq_search.seed, "base seed")
        ->capture_default_str();
    sub->add_option("--restarts", seq_search.restarts, "independent restarts")
        ->capture_default_str();
    sub->add_option("--step-scale", seq_search.step_scale,
                    "proposal amplitude in (0,1]")
        ->capture_default_str();
    add_common(sub, seq_search.common);
    sub->callback([&, sub] {
      apply_config(sub, seq_search.common.config);
      rc = run_seq_search(seq_search);
    });
  }

  // seq-certificate
  SeqCertOpts seq_cert;
  {
    auto* sub = app.add_subcommand(
        "seq-certificate",
        "evaluate the gated inequality ledger behind the averaged bound");
    sub->add_option("--file", seq_cert.file, "instance file")->required();
    sub->add_option("--backend", seq_cert.backend, "scan backend")
        ->check(CLI::IsMember({"auto", "exact", "int128"}))
        ->capture_default_str();
    add_common(sub, seq_cert.common);
    sub->callback([&, sub] {
      apply_config(sub, seq_cert.common.config);
      rc = run_seq_certificate(seq_cert);
    });
  }

  // sumset
  SumsetOpts sumset;
  {
    auto* sub = app.add_subcommand(
        "sumset", "triple sumset A+B+C over Z_m with coverage report");
    sub->add_option("--m", sumset.m, "modulus")->required();
    sub->add_option("--a", sumset.a, "members of A, e.g. {1,4,7}")->required();
    sub->add_option("--b", sumset.b, "members of B")->required();
    sub->add_option("--c", sumset.c, "members of C")->required();
    sub->add_flag("--brute", sumset.brute, "use the cubic reference loop");
    add_common(sub, sumset.common);
    sub->callback([&, sub] {
      apply_config(sub, sumset.common.config);
      rc = run_sumset(sumset);
    });
  }

  // corollary14
  CoverOpts cover;
  {
    auto* sub = app.add_subcommand(
        "corollary14",
        "unit-subset covering: A1+A2+A3 = Z_m under the 5/8 cardinality "
        "thresholds");
    sub->add_option("--m", cover.m, "square-free odd modulus")->required();
    sub->add_option("--mode", cover.mode, "campaign mode")
        ->check(CLI::IsMember({"single", "exhaustive", "random", "adversarial"}))
        ->required();
    sub->add_option("--a1", cover.a1, "members of A1 (single mode)");
    sub->add_option("--a2", cover.a2, "members of A2 (single mode)");
    sub->add_option("--a3", cover.a3, "members of A3 (single mode)");
    sub->add_option("--seed", cover.seed, "seed (random/adversarial)")
        ->capture_default_str();
    sub->add_option("--trials", cover.trials, "random-mode trial budget");
    sub->add_option("--budget", cover.budget, "adversarial swap budget");
    sub->add_flag("--diagnostic", cover.diagnostic,
                  "single mode: report coverage even when the cardinality "
                  "preconditions fail");
    add_common(sub, cover.common);
    sub->callback([&, sub] {
      apply_config(sub, cover.common.config);
      rc = run_corollary14(cover, sub->count("--trials") > 0,
                           sub->count("--budget") > 0,
                           sub->count("--a1") > 0 && sub->count("--a2") > 0 &&
                               sub->count("--a3") > 0);
    });
  }

  // counterexample15
  CommonOpts cex15;
  {
    auto* sub = app.add_subcommand(
        "counterexample15",
        "the sharp mod-15 construction: density 5/8, triple sumset misses 2");
    add_common(sub, cex15);
    sub->callback([&, sub] {
      apply_config(sub, cex15.config);
      rc = run_counterexample15(cex15);
    });
  }

  // lemma31
  WitnessCliOpts lemma31;
  {
    auto* sub = app.add_subcommand(
        "lemma31",
        "positive-margin witness for three unit functions, modulus coprime "
        "to 30");
    sub->add_option("--f1", lemma31.f1, "unit-function file")->required();
    sub->add_option("--f2", lemma31.f2, "unit-function file")->required();
    sub->add_option("--f3", lemma31.f3, "unit-function file")->required();
    sub->add_option("--delta", lemma31.delta, "mean surplus, in (0, 5/32)")
        ->required();
    sub->add_option("--eta", lemma31.eta, "mean slack, in (0, 2*delta/5)")
        ->required();
    sub->add_option("--x", lemma31.x, "target residue")->required();
    sub->add_option("--mode", lemma31.mode, "witness mode")
        ->check(CLI::IsMember({"brute", "constructive"}))
        ->capture_default_str();
    sub->add_option("--min-base-prime", lemma31.min_base_prime,
                    "smallest accepted prime factor (7 or the stricter 11)")
        ->capture_default_str();
    add_common(sub, lemma31.common);
    sub->callback([&, sub] {
      apply_config(sub, lemma31.common.config);
      rc = run_lemma31(lemma31);
    });
  }

  // lemma32
  Lemma32Opts lemma32;
  {
    auto* sub = app.add_subcommand(
        "lemma32",
        "support witness over Z_15 under the exact total-sum hypothesis");
    sub->add_option("--f1", lemma32.f1, "unit-function file (m=15)")
        ->required();
    sub->add_option("--f2", lemma32.f2, "unit-function file (m=15)")
        ->required();
    sub->add_option("--f3", lemma32.f3, "unit-function file (m=15)")
        ->required();
    sub->add_option("--v", lemma32.v, "target residue in Z_15")->required();
    add_common(sub, lemma32.common);
    sub->callback([&, sub] {
      apply_config(sub, lemma32.common.config);
      rc = run_lemma32(lemma32);
    });
  }

  // theorem13
  WitnessCliOpts theorem13;
  {
    auto* sub = app.add_subcommand(
        "theorem13",
        "support witness for any square-free odd modulus (constructive) or "
        "any square-free modulus (brute)");
    sub->add_option("--f1", theorem13.f1, "unit-function file")->required();
    sub->add_option("--f2", theorem13.f2, "unit-function file")->required();
    sub->add_option("--f3", theorem13.f3, "unit-function file")->required();
    sub->add_option("--delta", theorem13.delta, "mean surplus, in (0, 5/32)")
        ->required();
    sub->add_option("--eta", theorem13.eta, "mean slack, in (0, 2*delta/5)")
        ->required();
    sub->add_option("--x", theorem13.x, "target residue")->required();
    sub->add_option("--mode", theorem13.mode, "witness mode")
        ->check(CLI::IsMember({"brute", "constructive"}))
        ->capture_default_str();
    sub->add_option("--min-base-prime", theorem13.min_base_prime,
                    "smallest accepted prime factor in the margin recursion")
        ->capture_default_str();
    add_common(sub, theorem13.common);
    sub->callback([&, sub] {
      apply_config(sub, theorem13.common.config);
      rc = run_theorem13(theorem13);
    });
  }

  // goldbach-count
  CountOpts gcount;
  {
    auto* sub = app.add_subcommand(
        "goldbach-count",
        "exact representation counts r(n) = #{(p1,p2,p3) in P1 x P2 x P3 : "
        "p1+p2+p3 = n}");
    auto* n_opt = sub->add_option("--n", gcount.n, "single target");
    auto* n0_opt = sub->add_option("--n0", gcount.n0, "odd range start");
    auto* n1_opt = sub->add_option("--n1", gcount.n1, "odd range end");
    n0_opt->needs(n1_opt);
    n1_opt->needs(n0_opt);
    n_opt->excludes(n0_opt);
    sub->add_option("--p1", gcount.p1, "subset spec for P1")
        ->capture_default_str();
    sub->add_option("--p2", gcount.p2, "subset spec for P2")
        ->capture_default_str();
    sub->add_option("--p3", gcount.p3, "subset spec for P3")
        ->capture_default_str();
    sub->add_option("--method", gcount.method, "conv | brute")
        ->capture_default_str();
    add_common(sub, gcount.common);
    sub->callback([&, sub] {
      apply_config(sub, gcount.common.config);
      rc = run_goldbach_count(gcount, sub->count("--n") > 0,
                              sub->count("--n0") > 0);
    });
  }

  // wtrick
  WTrickCliOpts wtrick;
  {
    auto* sub = app.add_subcommand(
        "wtrick",
        "congruence-class log weights mod W = prod(p < z), mean-condition "
        "checks, and the congruence witness");
    sub->add_option("--z", wtrick.z, "small-prime cutoff (W = prod p < z)")
        ->required();
    sub->add_option("--n", wtrick.n, "odd target")->required();
    sub->add_option("--p1", wtrick.p1, "subset spec for P1")
        ->capture_default_str();
    sub->add_option("--p2", wtrick.p2, "subset spec for P2")
        ->capture_default_str();
    sub->add_option("--p3", wtrick.p3, "subset spec for P3")
        ->capture_default_str();
    sub->add_option("--delta", wtrick.delta, "window (0, 5/12)")->required();
    sub->add_option("--eta", wtrick.eta, "window (0, delta/50)")->required();
    sub->add_option("--w-bound", wtrick.w_bound, "refuse larger W")
        ->capture_default_str();
    sub->add_option("--brute-bound", wtrick.brute_bound,
                    "direct unit-scan cap on W")
        ->capture_default_str();
    sub->add_flag("--skip-witness", wtrick.skip_witness,
                  "stop after the mean conditions");
    add_common(sub, wtrick.common);
    sub->callback([&, sub] {
      apply_config(sub, wtrick.common.config);
      rc = run_wtrick(wtrick);
    });
  }

  // spectrum
  SpectrumOpts spectrum;
  {
    auto* sub = app.add_subcommand(
        "spectrum",
        "prime-length Fourier transform with Parseval check and normalized "
        "spectral diagnostics");
    sub->add_option("--file", spectrum.file,
                    "whitespace-separated nonnegative reals, prime length")
        ->required();
    sub->add_option("--q", spectrum.q, "moment exponent in (2, 3)")
        ->capture_default_str();
    sub->add_flag("--direct", spectrum.direct,
                  "force the quadratic direct evaluation");
    sub->add_flag("--dump-values", spectrum.dump_values,
                  "include the full transform in the report");
    add_common(sub, spectrum.common);
    sub->callback([&, sub] {
      apply_config(sub, spectrum.common.config);
      rc = run_spectrum(spectrum);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return rc;
}
