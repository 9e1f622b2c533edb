#pragma once

// Randomized invariance checks: walk a diagram through welded moves and
// compare invariant reports before and after, directly and after
// multiplexing both diagrams by the same weights.

#include <welded/gauss.hpp>
#include <welded/invariants.hpp>
#include <welded/moves.hpp>
#include <welded/multiplex.hpp>

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace welded {

/// Six weight vectors for an n-component diagram: all 1, all 0, all 2,
/// all -1, the cycle 0 1 2 0 1 2 ..., and the cycle 2 -1 3 2 -1 3 ....
inline std::vector<MultiplexWeights> weight_grid(std::size_t n) {
  auto cyc = [n](std::vector<int> pattern) {
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = pattern[i % pattern.size()];
    return MultiplexWeights(v);
  };
  return {cyc({1}), cyc({0}), cyc({2}), cyc({-1}), cyc({0, 1, 2}), cyc({2, -1, 3})};
}

/// Name of the first differing report field, or nullopt when equal.
inline std::optional<std::string> report_difference(const InvariantReport& a,
                                                    const InvariantReport& b) {
  if (a.delta1_single != b.delta1_single) return "delta1_single";
  if (a.delta2_single != b.delta2_single) return "delta2_single";
  if (a.delta1_multi != b.delta1_multi) return "delta1_multi";
  if (a.linking != b.linking) return "linking";
  if (a.intersection != b.intersection) return "intersection";
  if (a.hom_counts != b.hom_counts) return "hom_counts";
  return std::nullopt;
}

struct FuzzInput {
  std::string name;
  GaussDiagram diagram;
};

struct FuzzOptions {
  std::size_t steps = 50;
  std::size_t trials = 10;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  bool weight_grid = true;
  std::vector<FiniteTarget> targets = default_targets();
};

struct TrialResult {
  std::size_t index = 0;
  std::string input;
  std::uint64_t seed = 0;
  // empty when every comparison agreed; otherwise e.g. "weights 2 2: hom_counts"
  std::string mismatch;
  MoveScript script;
  std::string error;  // exception text, if the trial threw

  bool ok() const { return mismatch.empty() && error.empty(); }
};

struct FuzzSummary {
  std::vector<TrialResult> trials;  // in index order
  std::size_t failures() const {
    std::size_t f = 0;
    for (const auto& t : trials) f += t.ok() ? 0 : 1;
    return f;
  }
};

namespace detail {

struct Baseline {
  InvariantReport plain;
  std::vector<std::pair<MultiplexWeights, InvariantReport>> grid;
};

inline TrialResult run_trial(std::size_t index, const FuzzInput& in, const Baseline& base,
                             const FuzzOptions& opts) {
  TrialResult r;
  r.index = index;
  r.input = in.name;
  r.seed = opts.seed + index;
  try {
    auto [walked, script] = random_walk(in.diagram, opts.steps, r.seed);
    r.script = std::move(script);
    if (auto diff = report_difference(base.plain, full_report(walked, opts.targets))) {
      r.mismatch = *diff;
      return r;
    }
    for (const auto& [w, rep] : base.grid) {
      if (auto diff = report_difference(rep, full_report(multiplex(walked, w), opts.targets))) {
        r.mismatch = "weights " + w.to_string() + ": " + *diff;
        return r;
      }
    }
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

}  // namespace detail

/// Trial i walks inputs[i % inputs.size()] with seed opts.seed + i. Trials run
/// on opts.jobs threads; the summary does not depend on the thread count.
inline FuzzSummary run_fuzz(const std::vector<FuzzInput>& inputs, const FuzzOptions& opts) {
  if (inputs.empty()) throw Error(ErrorCode::EmptyInput, "no diagrams to fuzz");
  std::vector<detail::Baseline> bases(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const auto& d = inputs[i].diagram;
    bases[i].plain = full_report(d, opts.targets);
    if (opts.weight_grid) {
      for (const auto& w : weight_grid(d.component_count()))
        bases[i].grid.emplace_back(w, full_report(multiplex(d, w), opts.targets));
    }
  }

  FuzzSummary summary;
  summary.trials.resize(opts.trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < opts.trials; i = next++) {
      const std::size_t k = i % inputs.size();
      summary.trials[i] = detail::run_trial(i, inputs[k], bases[k], opts);
    }
  };
  const unsigned jobs = std::max(1U, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return summary;
}

}  // namespace welded
