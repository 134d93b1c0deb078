#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace owm {

/// Two minimized objectives.
struct ObjectivePoint {
  double obj1 = 0.0;
  double obj2 = 0.0;

  bool operator==(const ObjectivePoint&) const = default;
};

/// p is no worse than q in both objectives and strictly better in one.
bool dominates(const ObjectivePoint& p, const ObjectivePoint& q);

/// Fronts of increasing rank; every index appears in exactly one front and
/// indices within a front are ascending.
std::vector<std::vector<std::size_t>> non_dominated_sort(std::span<const ObjectivePoint> points);

/// Crowding distance of each member of `front` (same order as `front`).
/// Boundary members get +infinity.
std::vector<double> crowding_distance(std::span<const ObjectivePoint> points, std::span<const std::size_t> front);

/// Area dominated by `points` and bounded by `reference` (both objectives
/// minimized). Points not strictly better than the reference in both
/// objectives contribute nothing.
double hypervolume(std::span<const ObjectivePoint> points, const ObjectivePoint& reference);

/// Index of the point closest to the ideal point after normalizing each
/// objective to [0, 1] over the set. Ties go to the smaller obj1.
std::size_t compromise_index(std::span<const ObjectivePoint> points);

struct GAParams {
  std::size_t population = 200;
  double crossover_fraction = 0.8;
  int max_generations = 800;
  int stall_generations = 100;
  double tolerance = 1e-4;
  double elite_fraction = 0.05;
  bool mutation = true;
  double crossover_eta = 15.0;
  double mutation_eta_start = 20.0;
  double mutation_eta_end = 100.0;
};

void validate(const GAParams& params);

struct Bounds {
  std::vector<double> lower;
  std::vector<double> upper;

  std::size_t size() const { return lower.size(); }
};

using Genes = std::vector<double>;

/// Evaluates a batch of candidates; must be deterministic in the genes.
using BatchEvaluator = std::function<std::vector<ObjectivePoint>(std::span<const Genes>)>;

struct Individual {
  Genes genes;
  ObjectivePoint objectives;
  std::size_t rank = 0;
  double crowding = 0.0;
};

struct GenerationLog {
  int generation = 0;
  double hypervolume = 0.0;
  std::size_t front_size = 0;
  std::size_t evaluations = 0;
};

struct GAResult {
  std::vector<Individual> front; // rank 0 of the final population, deduplicated
  std::vector<Individual> population;
  std::vector<GenerationLog> log;
  ObjectivePoint reference;
  int generations = 0;
  std::string stop_reason;
};

/// Elitist non-dominated-sorting GA over box-bounded real genes. `initial`
/// seeds the first population (padded with uniform draws when short).
GAResult run_moga(const Bounds& bounds, const BatchEvaluator& evaluate, const GAParams& params, std::uint64_t seed,
                  std::vector<Genes> initial = {});

}  // namespace owm
