#pragma once

#include <span>

#include "owm/availability.hpp"
#include "owm/model.hpp"
#include "owm/scheduler.hpp"
#include "owm/stochastic.hpp"

namespace owm {

/// Named sub-totals of one settlement, all in EUR.
struct CashflowComponents {
  double energy_sales = 0.0;       // base income, sum S_t G_wt a_wt
  double shortage = 0.0;           // unmet demand valued at the daily price
  double startup = 0.0;            // restart energy valued at the daily price
  double materials = 0.0;          // scheduled repairs only
  double fixed_fee = 0.0;
  double technician_labor = 0.0;
  double transport_distance = 0.0; // round trips
  double transport_idle = 0.0;     // vessel waiting for half the repair
  double penalty_wf = 0.0;
  double penalty_wt = 0.0;
  double penalty_g = 0.0;
  double liquidated_damages = 0.0;
  double upside_sharing = 0.0;
};

struct CashflowLedger {
  double owner_income = 0.0;
  double owner_cost = 0.0;
  double owner_profit = 0.0;
  double contractor_income = 0.0;
  double contractor_cost = 0.0;
  double contractor_profit = 0.0;
  CashflowComponents components;
};

struct TaskCost {
  double distance = 0.0;
  double idle = 0.0;

  double total() const { return distance + idle; }
};

/// Contractor cost of one repair: a round trip to the turbine plus the
/// vessel's hourly rate for half the repair duration.
TaskCost task_cost_contractor(double distance_km, const TransportSpec& transport, double repair_hours);
/// Zero for unscheduled tasks.
TaskCost task_cost_contractor(const MaintenanceTask& task, const Bundle& bundle);

double base_income(const DailyEnvironment& environment, const AvailabilityMatrix& matrix, const TurbineSpec& spec);

double penalty_wf(double base_income, double farm_availability, double threshold);
double penalty_wt(double base_income, std::span<const double> turbine_availability, double threshold);
double penalty_g(double base_income, double energy_availability, double threshold);
double liquidated_damages(double penalty_wf, double penalty_wt, double penalty_g, double cap);
double upside_sharing(double base_income, double energy_availability, double threshold, double cap);

double shortage_cost(const DailyEnvironment& environment, const AvailabilityMatrix& matrix, const TurbineSpec& spec);
/// Day 0 counts as fully available, so only restarts after downtime cost.
double startup_cost(const DailyEnvironment& environment, const AvailabilityMatrix& matrix, double startup_energy);

double technician_labor(int technicians, double annual_salary, int days);

/// Full owner/contractor settlement of one sample. Penalties and incentives
/// are computed on energy-sales income with the tied thresholds and caps of
/// `contract`.
CashflowLedger settle(const Bundle& bundle, const ContractTerms& contract, const DailyEnvironment& environment,
                      const AvailabilityMatrix& matrix, const AvailabilityReport& availability,
                      std::span<const MaintenanceTask> tasks);

}  // namespace owm
