#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "owm/availability.hpp"
#include "owm/economics.hpp"
#include "owm/model.hpp"
#include "owm/scheduler.hpp"
#include "owm/stochastic.hpp"

namespace owm {

/// One realization of the horizon under one contract.
struct SampleOutcome {
  SampleScenario scenario;
  DayOfRepairVector drv;
  AvailabilityMatrix matrix;
  AvailabilityReport availability;
  CashflowLedger ledger;
  double generation_mwh = 0.0;
};

/// Runs the full pipeline for `sample_index`: environment, failures,
/// schedule, availability and settlement.
SampleOutcome run_sample(const Bundle& bundle, const ContractTerms& contract, std::uint64_t sample_index);

/// Same as run_sample but on a pre-drawn scenario (common random numbers).
SampleOutcome run_sample_on(const Bundle& bundle, const ContractTerms& contract, const SampleScenario& scenario);

/// Pre-drawn scenarios for a fixed list of sample indices, shared by every
/// contract evaluated against it.
class ScenarioCache {
 public:
  ScenarioCache(const Bundle& bundle, std::vector<std::uint64_t> sample_indices, unsigned threads = 1);
  ScenarioCache(const Bundle& bundle, std::size_t samples, unsigned threads = 1);

  std::size_t size() const { return scenarios_.size(); }
  const SampleScenario& operator[](std::size_t i) const { return scenarios_[i]; }
  std::span<const SampleScenario> scenarios() const { return scenarios_; }

 private:
  std::vector<SampleScenario> scenarios_;
};

struct Summary {
  double mean = 0.0;
  double std = 0.0;        // unbiased
  double ci95 = 0.0;       // half-width, 1.96 std / sqrt(n)

  /// CI half-width relative to |mean|; infinite when the mean is zero.
  double margin_of_error() const;
};

Summary summarize(std::span<const double> values);

struct ScenarioStats {
  std::size_t samples = 0;
  Summary owner_profit;
  Summary contractor_profit;
  Summary total_profit;
  Summary farm_availability;
  Summary energy_availability;
  Summary generation_mwh;
  Summary failures;
  Summary unscheduled;
  CashflowComponents mean_components;
  double mean_owner_income = 0.0;
  double mean_owner_cost = 0.0;
  double mean_contractor_income = 0.0;
  double mean_contractor_cost = 0.0;
  std::optional<double> scaled_owner;
  std::optional<double> scaled_contractor;
};

/// Per-sample headline numbers, kept in sample order.
struct SampleRecord {
  std::uint64_t sample_index = 0;
  CashflowLedger ledger;
  double farm_availability = 0.0;
  double energy_availability = 0.0;
  double generation_mwh = 0.0;
  int failures = 0;
  int unscheduled = 0;
};

SampleRecord record_of(const SampleOutcome& outcome);
ScenarioStats aggregate(std::span<const SampleRecord> records);

std::vector<SampleRecord> run_records(const Bundle& bundle, const ContractTerms& contract, const ScenarioCache& cache,
                                      unsigned threads = 1);
ScenarioStats run_scenario(const Bundle& bundle, const ContractTerms& contract, const ScenarioCache& cache,
                           unsigned threads = 1);
/// Samples 0..samples-1 of the bundle's master seed.
ScenarioStats run_scenario(const Bundle& bundle, const ContractTerms& contract, std::size_t samples,
                           unsigned threads = 1);

/// Min/max of each party's profit over a set of scenarios.
struct ScaleContext {
  double owner_min = 0.0;
  double owner_max = 0.0;
  double contractor_min = 0.0;
  double contractor_max = 0.0;

  double scale_owner(double profit) const;
  double scale_contractor(double profit) const;
};

struct ScaledProfits {
  std::vector<double> owner;
  std::vector<double> contractor;
  ScaleContext context;
  std::vector<std::string> warnings;
};

/// Min-max scaling of each party's profits to [0, 1] over the given set.
/// A degenerate party (max == min) scales to 0 everywhere with a warning.
ScaledProfits scale_profits(std::span<const double> owner, std::span<const double> contractor);

enum class AxisKind { technicians, threshold_ld, threshold_us, cap_fraction };

struct SweepAxis {
  AxisKind kind = AxisKind::technicians;
  std::vector<double> values;

  std::string name() const;
};

/// Parses `name=start:stop:step` with name in {q, r_ld, r_us, lambda}.
SweepAxis parse_axis(const std::string& spec);
AxisKind axis_kind_from_name(const std::string& name);

/// Applies one axis value to a contract (technicians are rounded half up).
void apply_axis(ContractTerms& contract, AxisKind kind, double value);

struct SweepCell {
  std::vector<double> coordinates; // one per axis
  ContractTerms contract;
  ScenarioStats stats;
};

/// Argmax of each party's mean profit along the first axis, for one setting
/// of the remaining axes.
struct ArgmaxTrace {
  std::vector<double> coordinates; // remaining axes
  double owner_argmax = 0.0;
  double contractor_argmax = 0.0;
  double total_argmax = 0.0;
};

struct SweepResult {
  std::vector<SweepAxis> axes;
  std::vector<SweepCell> cells; // row-major, last axis fastest
  ScaleContext context;
  std::vector<ArgmaxTrace> traces;
  std::vector<std::string> warnings;
};

SweepResult sweep(const Bundle& bundle, const std::vector<SweepAxis>& axes, const ScenarioCache& cache,
                  unsigned threads = 1);
SweepResult sweep(const Bundle& bundle, const std::vector<SweepAxis>& axes, std::size_t samples, unsigned threads = 1);

}  // namespace owm
