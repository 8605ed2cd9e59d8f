#pragma once

// Parameter grids over the checkers, run on a small thread pool. Reports are
// handed to the sink strictly in plan order (checker, p, n, r), never in
// completion order, so the output does not depend on the thread count.

#include "cyclopadic/congruences.hpp"
#include "cyclopadic/cycle_index.hpp"
#include "cyclopadic/meixner.hpp"
#include "cyclopadic/padic.hpp"
#include "cyclopadic/report.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

namespace cyclopadic {

enum class Checker {
  CarlitzCoeff,
  CarlitzPoly,
  PropCoeff,
  PropPoly,
  Corollary1,
  Remark1,
  JunodLemma,
  GammaIdentity,
  GammaCongruence,
  BinomialLift,
  GammaRatio,
  WilsonSharpness,
  MeixnerQstarQ,
  MeixnerQp,
  Corollary2,
};

inline constexpr std::array<std::pair<Checker, std::string_view>, 15> kCheckerNames{{
    {Checker::CarlitzCoeff, "carlitz-coeff"},
    {Checker::CarlitzPoly, "carlitz-poly"},
    {Checker::PropCoeff, "prop-coeff"},
    {Checker::PropPoly, "prop-poly"},
    {Checker::Corollary1, "corollary1"},
    {Checker::Remark1, "remark1"},
    {Checker::JunodLemma, "junod-lemma"},
    {Checker::GammaIdentity, "gamma-identity"},
    {Checker::GammaCongruence, "gamma-congruence"},
    {Checker::BinomialLift, "binomial-lift"},
    {Checker::GammaRatio, "gamma-ratio"},
    {Checker::WilsonSharpness, "wilson-sharpness"},
    {Checker::MeixnerQstarQ, "meixner-qstar-q"},
    {Checker::MeixnerQp, "meixner-qp"},
    {Checker::Corollary2, "corollary2"},
}};

inline std::string_view checker_name(Checker c) {
  for (const auto& [k, name] : kCheckerNames) {
    if (k == c) return name;
  }
  return "?";
}

/// Parses one checker name, or "all" for every checker in order.
inline std::vector<Checker> parse_checkers(std::string_view name) {
  std::vector<Checker> out;
  for (const auto& [k, n] : kCheckerNames) {
    if (name == "all" || name == n) out.push_back(k);
  }
  if (out.empty()) throw std::invalid_argument("unknown checker '" + std::string(name) + "'");
  return out;
}

inline constexpr std::uint64_t kDefaultDegreeCap = 64;
inline constexpr std::uint64_t kDefaultJunodTrials = 500;

struct SweepSpec {
  std::vector<Checker> checkers;
  std::vector<std::uint64_t> primes;
  std::uint64_t n_max = 1;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> r_range;  // inclusive
  std::uint64_t degree_cap = kDefaultDegreeCap;                    // bound on r + np
  std::uint64_t seed = kDefaultJunodSeed;
  std::uint64_t junod_trials = kDefaultJunodTrials;
  unsigned threads = 1;
  bool allow_p2 = false;
  std::optional<Mutation> mutation;
};

struct SweepTask {
  Checker checker;
  std::uint64_t p = 0;
  std::uint64_t n = 0;  // m for the Gamma checkers
  std::uint64_t r = 0;

  auto key() const { return std::make_tuple(static_cast<int>(checker), p, n, r); }
};

/// Throws std::invalid_argument for primes that are not prime, or p = 2
/// without allow_p2.
inline void validate(const SweepSpec& spec) {
  if (spec.primes.empty()) throw std::invalid_argument("no primes given");
  if (spec.checkers.empty()) throw std::invalid_argument("no checker given");
  if (spec.n_max < 1) throw std::invalid_argument("n-max must be >= 1");
  for (auto p : spec.primes) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (p == 2 && !spec.allow_p2) throw std::invalid_argument("p = 2 needs --allow-p2");
  }
  if (spec.r_range && spec.r_range->first > spec.r_range->second) {
    throw std::invalid_argument("empty r range");
  }
}

/// The task list in emission order.
inline std::vector<SweepTask> plan(const SweepSpec& spec) {
  validate(spec);
  std::vector<std::uint64_t> primes = spec.primes;
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  const std::uint64_t cap = spec.degree_cap;

  std::vector<SweepTask> tasks;
  for (Checker c : spec.checkers) {
    for (std::uint64_t p : primes) {
      const bool odd = p != 2;
      auto r_bounds = [&](std::uint64_t lo_default) {
        std::uint64_t lo = lo_default;
        std::uint64_t hi = p - 1;
        if (spec.r_range) {
          lo = std::max(lo, spec.r_range->first);
          hi = std::min(hi, spec.r_range->second);
        }
        return std::make_pair(lo, hi);
      };
      switch (c) {
        case Checker::CarlitzCoeff:
        case Checker::PropCoeff:
        case Checker::BinomialLift:
        case Checker::GammaRatio:
        case Checker::GammaIdentity:
        case Checker::GammaCongruence:
          for (std::uint64_t n = 1; n <= spec.n_max && n * p <= cap; ++n) tasks.push_back({c, p, n, 0});
          break;
        case Checker::CarlitzPoly:
        case Checker::PropPoly:
        case Checker::Corollary1:
        case Checker::Remark1: {
          const bool shifted = c == Checker::Corollary1 || c == Checker::Remark1;
          const auto [lo, hi] = r_bounds(shifted ? 1 : 0);
          for (std::uint64_t n = 1; n <= spec.n_max; ++n) {
            for (std::uint64_t r = lo; r <= hi && r + n * p <= cap; ++r) tasks.push_back({c, p, n, r});
          }
          break;
        }
        case Checker::JunodLemma:
          tasks.push_back({c, p, 0, 0});
          break;
        case Checker::WilsonSharpness:
          if (!odd) break;
          for (std::uint64_t n = p; n <= spec.n_max && n * p <= cap; n += p) tasks.push_back({c, p, n, 0});
          break;
        case Checker::MeixnerQstarQ:
        case Checker::Corollary2:
          if (!odd) break;
          for (std::uint64_t n = 1; n <= spec.n_max && n * p <= cap; ++n) tasks.push_back({c, p, n, 0});
          break;
        case Checker::MeixnerQp:
          if (odd && p <= cap) tasks.push_back({c, p, 0, 0});
          break;
      }
    }
  }
  std::stable_sort(tasks.begin(), tasks.end(), [](const SweepTask& a, const SweepTask& b) { return a.key() < b.key(); });
  return tasks;
}

/// Shared read-only data for a sweep.
struct SweepTables {
  std::unique_ptr<CycleIndexTable> cycle_index;
  std::unique_ptr<MeixnerTable> meixner;
};

inline SweepTables build_tables(const std::vector<SweepTask>& tasks) {
  std::optional<std::uint64_t> poly_degree;
  std::optional<std::uint64_t> meixner_degree;
  for (const auto& t : tasks) {
    if (t.checker == Checker::CarlitzPoly || t.checker == Checker::PropPoly) {
      poly_degree = std::max(poly_degree.value_or(0), t.r + t.n * t.p);
    }
    if (t.checker == Checker::MeixnerQstarQ || t.checker == Checker::Corollary2 || t.checker == Checker::MeixnerQp) {
      meixner_degree = std::max(meixner_degree.value_or(0), std::max(t.n * t.p, t.p));
    }
  }
  SweepTables tables;
  if (poly_degree) tables.cycle_index = std::make_unique<CycleIndexTable>(*poly_degree);
  if (meixner_degree) tables.meixner = std::make_unique<MeixnerTable>(*meixner_degree);
  return tables;
}

inline CongruenceReport run_task(const SweepTask& t, const SweepSpec& spec, const SweepTables& tables) {
  const PadicContext ctx(t.p);
  const OptMutation& mut = spec.mutation;
  CongruenceReport rep;
  switch (t.checker) {
    case Checker::CarlitzCoeff: rep = check_carlitz_coeff(t.n, ctx, mut); break;
    case Checker::PropCoeff: rep = check_prop_coeff(t.n, ctx, mut); break;
    case Checker::CarlitzPoly: rep = check_carlitz_poly(t.r, t.n, *tables.cycle_index, ctx, mut); break;
    case Checker::PropPoly: rep = check_prop_poly(t.r, t.n, *tables.cycle_index, ctx, mut); break;
    case Checker::Corollary1: rep = check_corollary1(t.r, t.n, ctx, mut); break;
    case Checker::Remark1: rep = check_remark1(t.r, t.n, ctx, mut); break;
    case Checker::JunodLemma: rep = check_junod_lemma(spec.junod_trials, spec.seed, ctx, mut); break;
    case Checker::GammaIdentity: rep = report_gamma_identity(t.n, ctx, mut); break;
    case Checker::GammaCongruence: rep = report_gamma_congruence(t.n, ctx, mut); break;
    case Checker::BinomialLift: rep = report_binomial_lift(t.n, ctx, mut); break;
    case Checker::GammaRatio: rep = check_formula_gamma_ratio(t.n, ctx, mut); break;
    case Checker::WilsonSharpness: rep = check_wilson_sharpness(t.n, ctx, mut); break;
    case Checker::MeixnerQstarQ: rep = check_junod_qstar_q(t.n, *tables.meixner, ctx, mut); break;
    case Checker::MeixnerQp: rep = check_junod_qp(*tables.meixner, ctx, mut); break;
    case Checker::Corollary2: rep = check_corollary2(t.n, *tables.meixner, ctx, mut); break;
  }
  if (t.p == 2) rep.asserted = false;
  return rep;
}

struct SweepSummary {
  std::size_t reports = 0;
  std::size_t failed_reports = 0;      // asserted reports with violations
  std::size_t unasserted_failures = 0;  // p = 2 reports with violations

  bool passed() const { return failed_reports == 0; }
};

/// Runs the plan on `spec.threads` workers and calls `sink` once per report,
/// in plan order, from the calling thread.
inline SweepSummary run_sweep(const SweepSpec& spec, const std::function<void(const CongruenceReport&)>& sink) {
  const std::vector<SweepTask> tasks = plan(spec);
  const SweepTables tables = build_tables(tasks);

  std::vector<std::optional<CongruenceReport>> done(tasks.size());
  std::exception_ptr failure;
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next_task{0};
  std::atomic<bool> abort{false};

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next_task.fetch_add(1);
      if (i >= tasks.size() || abort) return;
      try {
        CongruenceReport rep = run_task(tasks[i], spec, tables);
        std::lock_guard lock(mu);
        done[i] = std::move(rep);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        abort = true;
      }
      ready.notify_all();
    }
  };

  const unsigned nthreads = std::max(1u, std::min<unsigned>(spec.threads, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (unsigned k = 0; k < nthreads; ++k) pool.emplace_back(worker);

  SweepSummary summary;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    CongruenceReport rep;
    {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return done[i].has_value() || failure != nullptr; });
      if (failure) break;
      rep = std::move(*done[i]);
      done[i].reset();
    }
    ++summary.reports;
    if (!rep.passed()) ++(rep.asserted ? summary.failed_reports : summary.unasserted_failures);
    sink(rep);
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return summary;
}

}  // namespace cyclopadic
