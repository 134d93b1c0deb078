#pragma once

#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "owm/contract_problem.hpp"
#include "owm/simulator.hpp"

namespace owm {

/// Money with 2 decimals, fractions with 6.
std::string money(double eur);
std::string fraction(double value);

void write_environment_csv(std::ostream& out, const DailyEnvironment& environment);
void write_failures_csv(std::ostream& out, std::span<const FailureEvent> failures);
void write_drv_csv(std::ostream& out, const DayOfRepairVector& drv);
void write_availability_csv(std::ostream& out, const AvailabilityMatrix& matrix);

nlohmann::json to_json(const CashflowLedger& ledger);
nlohmann::json to_json(const Summary& summary);
nlohmann::json to_json(const ScenarioStats& stats);

/// One row per sample with every ledger component.
void write_records_csv(std::ostream& out, std::span<const SampleRecord> records);

void write_sweep_csv(std::ostream& out, const SweepResult& result);
void write_argmax_csv(std::ostream& out, const SweepResult& result);
/// Whitespace-separated columns (axes..., value) per metric; returns the
/// file names written into `dir`.
std::vector<std::string> write_plot_data(const std::filesystem::path& dir, const SweepResult& result);

void write_pareto_csv(std::ostream& out, std::span<const ParetoSolution> pareto);
void write_convergence_csv(std::ostream& out, std::span<const GenerationLog> log);

}  // namespace owm
