#pragma once

#include <cstdint>
#include <vector>

#include "owm/model.hpp"
#include "owm/optimizer.hpp"
#include "owm/simulator.hpp"

namespace owm {

/// Box bounds on the contract decision variables.
struct DecisionBounds {
  double threshold_us_min = 0.50, threshold_us_max = 0.85;
  double threshold_ld_min = 0.60, threshold_ld_max = 0.95;
  double cap_fraction_min = 0.25, cap_fraction_max = 1.15;
  double technicians_min = 7, technicians_max = 46;

  Bounds to_bounds() const;
};

/// Genes in column order r_us, r_ld, lambda, q. The technician gene is
/// real-valued; the contract uses it rounded half up.
struct DecisionVector {
  double threshold_us = 0.85;
  double threshold_ld = 0.75;
  double cap_fraction = 0.35;
  double technicians = 16;

  int technicians_rounded() const;
  Genes genes() const { return {threshold_us, threshold_ld, cap_fraction, technicians}; }
  static DecisionVector from_genes(const Genes& genes);
  bool within(const DecisionBounds& bounds) const;
};

/// Base contract with the decision applied; thresholds and caps are tied.
ContractTerms apply_decision(const ContractTerms& base, const DecisionVector& decision);

/// obj1 = |scaled contractor - scaled owner| (each clamped to [0, 1]),
/// obj2 = -(mean contractor profit + mean owner profit).
ObjectivePoint objectives_of(const ScenarioStats& stats, const ScaleContext& context);

/// Min/max of both parties' mean profits over a coarse grid spanning the
/// decision bounds, `points` values per axis.
ScaleContext pre_sweep_context(const Bundle& bundle, const DecisionBounds& bounds, const ScenarioCache& cache,
                               int points, unsigned threads = 1);

struct ParetoSolution {
  DecisionVector decision;
  ObjectivePoint objectives;
  ScenarioStats stats;
};

struct OptimizeOptions {
  GAParams ga;
  DecisionBounds bounds;
  std::size_t eval_samples = 200;
  std::size_t final_samples = 2000;
  int context_points = 3;
  unsigned threads = 1;
};

struct OptimizeResult {
  std::vector<ParetoSolution> pareto;
  std::size_t compromise = 0;
  ScaleContext context;
  GAResult ga;
};

/// First sample index of the re-evaluation streams, disjoint from the
/// streams the GA sees.
inline constexpr std::uint64_t kFinalEvaluationOffset = 1'000'000'000ULL;

/// Runs the GA under common random numbers, re-evaluates the final front on
/// fresh samples and keeps its non-dominated subset.
OptimizeResult optimize_contract(const Bundle& bundle, const OptimizeOptions& options,
                                 std::vector<Genes> initial = {});

}  // namespace owm
