#include "owm/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

#include "owm/parallel.hpp"

namespace owm {

SampleOutcome run_sample_on(const Bundle& bundle, const ContractTerms& contract, const SampleScenario& scenario) {
  check_invariants(contract);
  SampleOutcome out;
  out.scenario = scenario;
  RandomStream scheduler(bundle.sim.master_seed, scenario.sample_index, StreamPurpose::scheduler);
  out.drv = build_drv(scenario.failures, scenario.environment, contract.technicians, bundle, scheduler);
  out.matrix = build_availability(out.drv.tasks, bundle.farm.size(), scenario.environment.days());
  out.availability = availability_report(out.matrix, scenario.environment.wind_speed, bundle.farm.spec);
  out.ledger = settle(bundle, contract, scenario.environment, out.matrix, out.availability, out.drv.tasks);
  for (int d = 1; d <= out.matrix.days(); ++d) {
    out.generation_mwh +=
        energy_per_day(scenario.environment.wind_speed[static_cast<std::size_t>(d - 1)], bundle.farm.spec) *
        out.matrix.up_count(d);
  }
  return out;
}

SampleOutcome run_sample(const Bundle& bundle, const ContractTerms& contract, std::uint64_t sample_index) {
  return run_sample_on(bundle, contract, sample_scenario(bundle, sample_index));
}

ScenarioCache::ScenarioCache(const Bundle& bundle, std::vector<std::uint64_t> sample_indices, unsigned threads)
    : scenarios_(sample_indices.size()) {
  parallel_for(sample_indices.size(), threads,
               [&](std::size_t i) { scenarios_[i] = sample_scenario(bundle, sample_indices[i]); });
}

namespace {
std::vector<std::uint64_t> iota_indices(std::size_t n) {
  std::vector<std::uint64_t> v(n);
  std::iota(v.begin(), v.end(), std::uint64_t{0});
  return v;
}
}  // namespace

ScenarioCache::ScenarioCache(const Bundle& bundle, std::size_t samples, unsigned threads)
    : ScenarioCache(bundle, iota_indices(samples), threads) {}

double Summary::margin_of_error() const {
  if (mean == 0.0) return std::numeric_limits<double>::infinity();
  return ci95 / std::abs(mean);
}

Summary summarize(std::span<const double> values) {
  Summary s;
  const std::size_t n = values.size();
  if (n == 0) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(n);
  if (n < 2) return s;
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.std = std::sqrt(ss / static_cast<double>(n - 1));
  s.ci95 = 1.96 * s.std / std::sqrt(static_cast<double>(n));
  return s;
}

SampleRecord record_of(const SampleOutcome& o) {
  SampleRecord r;
  r.sample_index = o.scenario.sample_index;
  r.ledger = o.ledger;
  r.farm_availability = o.availability.farm;
  r.energy_availability = o.availability.energy_based;
  r.generation_mwh = o.generation_mwh;
  r.failures = static_cast<int>(o.drv.tasks.size());
  r.unscheduled = static_cast<int>(
      std::count_if(o.drv.tasks.begin(), o.drv.tasks.end(), [](const MaintenanceTask& t) { return !t.scheduled(); }));
  return r;
}

ScenarioStats aggregate(std::span<const SampleRecord> records) {
  ScenarioStats s;
  s.samples = records.size();
  const std::size_t n = records.size();
  auto column = [&](auto getter) {
    std::vector<double> v;
    v.reserve(n);
    for (const SampleRecord& r : records) v.push_back(getter(r));
    return summarize(v);
  };
  s.owner_profit = column([](const SampleRecord& r) { return r.ledger.owner_profit; });
  s.contractor_profit = column([](const SampleRecord& r) { return r.ledger.contractor_profit; });
  s.total_profit = column([](const SampleRecord& r) { return r.ledger.owner_profit + r.ledger.contractor_profit; });
  s.farm_availability = column([](const SampleRecord& r) { return r.farm_availability; });
  s.energy_availability = column([](const SampleRecord& r) { return r.energy_availability; });
  s.generation_mwh = column([](const SampleRecord& r) { return r.generation_mwh; });
  s.failures = column([](const SampleRecord& r) { return static_cast<double>(r.failures); });
  s.unscheduled = column([](const SampleRecord& r) { return static_cast<double>(r.unscheduled); });
  s.mean_owner_income = column([](const SampleRecord& r) { return r.ledger.owner_income; }).mean;
  s.mean_owner_cost = column([](const SampleRecord& r) { return r.ledger.owner_cost; }).mean;
  s.mean_contractor_income = column([](const SampleRecord& r) { return r.ledger.contractor_income; }).mean;
  s.mean_contractor_cost = column([](const SampleRecord& r) { return r.ledger.contractor_cost; }).mean;

  CashflowComponents& c = s.mean_components;
  auto mean_of = [&](double CashflowComponents::*field) {
    return column([field](const SampleRecord& r) { return r.ledger.components.*field; }).mean;
  };
  c.energy_sales = mean_of(&CashflowComponents::energy_sales);
  c.shortage = mean_of(&CashflowComponents::shortage);
  c.startup = mean_of(&CashflowComponents::startup);
  c.materials = mean_of(&CashflowComponents::materials);
  c.fixed_fee = mean_of(&CashflowComponents::fixed_fee);
  c.technician_labor = mean_of(&CashflowComponents::technician_labor);
  c.transport_distance = mean_of(&CashflowComponents::transport_distance);
  c.transport_idle = mean_of(&CashflowComponents::transport_idle);
  c.penalty_wf = mean_of(&CashflowComponents::penalty_wf);
  c.penalty_wt = mean_of(&CashflowComponents::penalty_wt);
  c.penalty_g = mean_of(&CashflowComponents::penalty_g);
  c.liquidated_damages = mean_of(&CashflowComponents::liquidated_damages);
  c.upside_sharing = mean_of(&CashflowComponents::upside_sharing);
  return s;
}

std::vector<SampleRecord> run_records(const Bundle& bundle, const ContractTerms& contract, const ScenarioCache& cache,
                                      unsigned threads) {
  std::vector<SampleRecord> records(cache.size());
  parallel_for(cache.size(), threads,
               [&](std::size_t i) { records[i] = record_of(run_sample_on(bundle, contract, cache[i])); });
  return records;
}

ScenarioStats run_scenario(const Bundle& bundle, const ContractTerms& contract, const ScenarioCache& cache,
                           unsigned threads) {
  return aggregate(run_records(bundle, contract, cache, threads));
}

ScenarioStats run_scenario(const Bundle& bundle, const ContractTerms& contract, std::size_t samples,
                           unsigned threads) {
  return run_scenario(bundle, contract, ScenarioCache(bundle, samples, threads), threads);
}

namespace {
double scale(double value, double lo, double hi) {
  if (hi <= lo) return 0.0;
  return (value - lo) / (hi - lo);
}
}  // namespace

double ScaleContext::scale_owner(double profit) const { return scale(profit, owner_min, owner_max); }
double ScaleContext::scale_contractor(double profit) const {
  return scale(profit, contractor_min, contractor_max);
}

ScaledProfits scale_profits(std::span<const double> owner, std::span<const double> contractor) {
  ScaledProfits out;
  if (owner.empty() || contractor.empty()) throw std::invalid_argument("scale_profits: empty profit set");
  auto [omin, omax] = std::minmax_element(owner.begin(), owner.end());
  auto [cmin, cmax] = std::minmax_element(contractor.begin(), contractor.end());
  out.context = {*omin, *omax, *cmin, *cmax};
  if (*omax == *omin) out.warnings.push_back("owner profits are identical across the grid; scaled values set to 0");
  if (*cmax == *cmin) {
    out.warnings.push_back("contractor profits are identical across the grid; scaled values set to 0");
  }
  for (double v : owner) out.owner.push_back(out.context.scale_owner(v));
  for (double v : contractor) out.contractor.push_back(out.context.scale_contractor(v));
  return out;
}

std::string SweepAxis::name() const {
  switch (kind) {
    case AxisKind::technicians:
      return "q";
    case AxisKind::threshold_ld:
      return "r_ld";
    case AxisKind::threshold_us:
      return "r_us";
    case AxisKind::cap_fraction:
      return "lambda";
  }
  return "?";
}

AxisKind axis_kind_from_name(const std::string& name) {
  if (name == "q") return AxisKind::technicians;
  if (name == "r_ld") return AxisKind::threshold_ld;
  if (name == "r_us") return AxisKind::threshold_us;
  if (name == "lambda") return AxisKind::cap_fraction;
  throw std::invalid_argument("unknown axis '" + name + "' (expected q, r_ld, r_us or lambda)");
}

SweepAxis parse_axis(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos) throw std::invalid_argument("axis '" + spec + "' is not name=start:stop:step");
  SweepAxis axis;
  axis.kind = axis_kind_from_name(spec.substr(0, eq));
  const std::string range = spec.substr(eq + 1);
  double parts[3];
  std::size_t pos = 0;
  for (int k = 0; k < 3; ++k) {
    const auto next = range.find(':', pos);
    if ((k < 2) == (next == std::string::npos)) throw std::invalid_argument("axis '" + spec + "' needs start:stop:step");
    const std::string token = range.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    std::size_t used = 0;
    try {
      parts[k] = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != token.size()) throw std::invalid_argument("axis '" + spec + "': bad number '" + token + "'");
    pos = next + 1;
  }
  const double start = parts[0], stop = parts[1], step = parts[2];
  if (!(step > 0) || stop < start) throw std::invalid_argument("axis '" + spec + "' needs start <= stop and step > 0");
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  for (std::size_t i = 0; i < count; ++i) axis.values.push_back(start + static_cast<double>(i) * step);
  return axis;
}

void apply_axis(ContractTerms& contract, AxisKind kind, double value) {
  switch (kind) {
    case AxisKind::technicians:
      contract.technicians = static_cast<int>(std::floor(value + 0.5));
      break;
    case AxisKind::threshold_ld:
      contract.threshold_ld = value;
      break;
    case AxisKind::threshold_us:
      contract.threshold_us = value;
      break;
    case AxisKind::cap_fraction:
      contract.cap_fraction = value;
      break;
  }
}

SweepResult sweep(const Bundle& bundle, const std::vector<SweepAxis>& axes, const ScenarioCache& cache,
                  unsigned threads) {
  if (axes.empty()) throw std::invalid_argument("sweep needs at least one axis");
  SweepResult result;
  result.axes = axes;
  std::size_t total = 1;
  for (const SweepAxis& a : axes) {
    if (a.values.empty()) throw std::invalid_argument("sweep axis '" + a.name() + "' has no values");
    total *= a.values.size();
  }
  result.cells.reserve(total);
  for (std::size_t flat = 0; flat < total; ++flat) {
    SweepCell cell;
    cell.contract = bundle.contract;
    cell.coordinates.resize(axes.size());
    std::size_t rest = flat;
    for (std::size_t k = axes.size(); k-- > 0;) {
      const std::size_t n = axes[k].values.size();
      cell.coordinates[k] = axes[k].values[rest % n];
      rest /= n;
    }
    for (std::size_t k = 0; k < axes.size(); ++k) apply_axis(cell.contract, axes[k].kind, cell.coordinates[k]);
    cell.stats = run_scenario(bundle, cell.contract, cache, threads);
    result.cells.push_back(std::move(cell));
  }

  std::vector<double> owner, contractor;
  for (const SweepCell& c : result.cells) {
    owner.push_back(c.stats.owner_profit.mean);
    contractor.push_back(c.stats.contractor_profit.mean);
  }
  ScaledProfits scaled = scale_profits(owner, contractor);
  result.context = scaled.context;
  result.warnings = scaled.warnings;
  for (std::size_t i = 0; i < result.cells.size(); ++i) {
    result.cells[i].stats.scaled_owner = scaled.owner[i];
    result.cells[i].stats.scaled_contractor = scaled.contractor[i];
  }

  // cells sharing the same non-first coordinates form one trace
  const std::size_t stride = total / axes[0].values.size();
  for (std::size_t r = 0; r < stride; ++r) {
    ArgmaxTrace trace;
    const SweepCell& first = result.cells[r];
    trace.coordinates.assign(first.coordinates.begin() + 1, first.coordinates.end());
    double best_owner = -std::numeric_limits<double>::infinity();
    double best_contractor = best_owner, best_total = best_owner;
    for (std::size_t x = 0; x < axes[0].values.size(); ++x) {
      const SweepCell& c = result.cells[x * stride + r];
      const double xv = c.coordinates[0];
      if (c.stats.owner_profit.mean > best_owner) {
        best_owner = c.stats.owner_profit.mean;
        trace.owner_argmax = xv;
      }
      if (c.stats.contractor_profit.mean > best_contractor) {
        best_contractor = c.stats.contractor_profit.mean;
        trace.contractor_argmax = xv;
      }
      if (c.stats.total_profit.mean > best_total) {
        best_total = c.stats.total_profit.mean;
        trace.total_argmax = xv;
      }
    }
    result.traces.push_back(std::move(trace));
  }
  return result;
}

SweepResult sweep(const Bundle& bundle, const std::vector<SweepAxis>& axes, std::size_t samples, unsigned threads) {
  return sweep(bundle, axes, ScenarioCache(bundle, samples, threads), threads);
}

}  // namespace owm
