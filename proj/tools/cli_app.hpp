#pragma once

// Command-line front end. Exit codes: 0 = every asserted check passed,
// 1 = at least one violation, 2 = usage error.

#include "cyclopadic/cyclopadic.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace cyclopadic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

inline std::vector<std::uint64_t> parse_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad list entry '" + item + "'");
    }
    out.push_back(std::stoull(item));
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

/// "lo:hi" or a single "r".
inline std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    const auto v = parse_list(text);
    if (v.size() != 1) throw std::invalid_argument("bad range '" + text + "'");
    return {v[0], v[0]};
  }
  const auto lo = parse_list(text.substr(0, colon));
  const auto hi = parse_list(text.substr(colon + 1));
  if (lo.size() != 1 || hi.size() != 1) throw std::invalid_argument("bad range '" + text + "'");
  return {lo[0], hi[0]};
}

/// "e1,e2,...:delta"; delta may be negative.
inline Mutation parse_mutation(const std::string& text) {
  const auto colon = text.rfind(':');
  if (colon == std::string::npos) throw std::invalid_argument("mutation must look like e1,e2,...:delta");
  Mutation m;
  for (auto e : parse_list(text.substr(0, colon))) m.at.push_back(static_cast<std::uint32_t>(e));
  m.delta = integer_from_decimal(text.substr(colon + 1));
  return m;
}

/// Flag, then CYCLOPADIC_THREADS, then the number of logical cores.
inline unsigned resolve_threads(std::optional<unsigned> flag) {
  if (flag) return std::max(1u, *flag);
  if (const char* env = std::getenv("CYCLOPADIC_THREADS")) {
    try {
      const auto v = parse_list(env);
      if (v.size() == 1 && v[0] >= 1) return static_cast<unsigned>(v[0]);
    } catch (const std::invalid_argument&) {
    }
    throw std::invalid_argument(std::string("CYCLOPADIC_THREADS must be a positive integer, got '") + env + "'");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

struct ComputeArgs {
  std::string object;
  std::size_t n = 0;
  std::string cycle_type;
  std::string format = "json";
};

inline int run_compute(const ComputeArgs& a, std::ostream& out) {
  const bool json = a.format == "json";
  if (a.object == "cycle-index") {
    const MultiPoly c = cycle_indicator(a.n);
    if (json) {
      out << to_json(c).dump() << "\n";
    } else {
      out << c << "\n";
    }
  } else if (a.object == "coeff") {
    if (a.cycle_type.empty()) throw std::invalid_argument("coeff needs a cycle type, e.g. 1,1,0");
    if (a.n < 1) throw std::invalid_argument("coeff needs n >= 1");
    out << to_decimal(coefficient(CycleType::parse(a.n, a.cycle_type))) << "\n";
  } else if (a.object == "meixner-q" || a.object == "meixner-qstar") {
    const UniPoly q = a.object == "meixner-q" ? meixner_q(a.n) : meixner_qstar(a.n);
    if (json) {
      out << to_json(q).dump() << "\n";
    } else {
      out << q << "\n";
    }
  } else {
    throw std::invalid_argument("unknown object '" + a.object + "'");
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string checker;
  std::string primes;
  std::uint64_t n_max = 1;
  std::string r_range;
  std::uint64_t degree_cap = kDefaultDegreeCap;
  std::uint64_t seed = kDefaultJunodSeed;
  std::uint64_t trials = kDefaultJunodTrials;
  std::optional<unsigned> threads;
  std::string format = "json";
  bool allow_p2 = false;
  bool timing = false;
  std::string out_path;
  std::string mutate;
};

inline SweepSpec to_spec(const VerifyArgs& a) {
  SweepSpec spec;
  spec.checkers = parse_checkers(a.checker);
  spec.primes = parse_list(a.primes);
  spec.n_max = a.n_max;
  if (!a.r_range.empty()) spec.r_range = parse_range(a.r_range);
  spec.degree_cap = a.degree_cap;
  spec.seed = a.seed;
  spec.junod_trials = a.trials;
  spec.threads = resolve_threads(a.threads);
  spec.allow_p2 = a.allow_p2;
  if (!a.mutate.empty()) spec.mutation = parse_mutation(a.mutate);
  validate(spec);
  return spec;
}

inline int run_verify(const VerifyArgs& a, std::ostream& out) {
  const SweepSpec spec = to_spec(a);
  std::unique_ptr<std::ofstream> file;
  std::ostream* sink = &out;
  if (!a.out_path.empty()) {
    file = std::make_unique<std::ofstream>(a.out_path);
    if (!*file) throw std::invalid_argument("cannot open '" + a.out_path + "' for writing");
    sink = file.get();
  }
  const bool json = a.format == "json";
  const SweepSummary summary = run_sweep(spec, [&](const CongruenceReport& rep) {
    *sink << (json ? to_json(rep, a.timing).dump() : to_text(rep, a.timing)) << "\n";
    sink->flush();
  });
  return summary.passed() ? kExitOk : kExitViolation;
}

/// Entry point shared by the executable and the tests. args[0] is the
/// program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cycle-index and Meixner polynomial congruence checker", "cyclopadic"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Print a cycle indicator, coefficient or Meixner polynomial");
  c->add_option("object", compute.object, "cycle-index | coeff | meixner-q | meixner-qstar")
      ->required()
      ->check(CLI::IsMember({"cycle-index", "coeff", "meixner-q", "meixner-qstar"}));
  c->add_option("n", compute.n, "Degree / symmetric group size")->required();
  c->add_option("cycle_type", compute.cycle_type, "m_1,...,m_n (coeff only)");
  c->add_option("--format", compute.format)->check(CLI::IsMember({"json", "text"}));

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run congruence sweeps; exit 1 on any violation");
  v->add_option("checker", verify.checker, "Checker name or 'all'")->required();
  v->add_option("--primes", verify.primes, "Comma-separated primes")->required();
  v->add_option("--n-max", verify.n_max, "Largest n (or m for the Gamma checkers)");
  v->add_option("--r-range", verify.r_range, "lo:hi, intersected with the checker's own r range");
  v->add_option("--degree-cap", verify.degree_cap, "Upper bound on r + np");
  v->add_option("--seed", verify.seed, "Seed for junod-lemma");
  v->add_option("--trials", verify.trials, "Trials for junod-lemma");
  v->add_option("--threads", verify.threads, "Worker threads (default: CYCLOPADIC_THREADS, else all cores)");
  v->add_option("--format", verify.format)->check(CLI::IsMember({"json", "text"}));
  v->add_option("--out", verify.out_path, "Write reports here instead of stdout");
  v->add_flag("--allow-p2", verify.allow_p2, "Permit p = 2 (reported, not asserted)");
  v->add_flag("--timing", verify.timing, "Record elapsed_ms (output is then not reproducible)");
  v->add_option("--mutate", verify.mutate, "Testing: add delta to the target at e1,e2,...:delta");

  std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*c) return run_compute(compute, out);
    return run_verify(verify, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace cyclopadic::cli
