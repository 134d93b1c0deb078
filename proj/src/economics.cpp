#include "owm/economics.hpp"

#include <algorithm>

namespace owm {

TaskCost task_cost_contractor(double distance_km, const TransportSpec& transport, double repair_hours) {
  return {2.0 * distance_km * transport.per_km_cost, 0.5 * repair_hours * transport.hourly_cost};
}

TaskCost task_cost_contractor(const MaintenanceTask& task, const Bundle& bundle) {
  if (!task.scheduled()) return {};
  return task_cost_contractor(bundle.farm.turbine(task.event.turbine_id).base_distance_km,
                              bundle.transports[task.transport], bundle.mode(task.event.mode_id).repair_hours);
}

double base_income(const DailyEnvironment& env, const AvailabilityMatrix& m, const TurbineSpec& spec) {
  double income = 0.0;
  for (int d = 1; d <= m.days(); ++d) {
    const auto i = static_cast<std::size_t>(d - 1);
    income += env.price[i] * energy_per_day(env.wind_speed[i], spec) * m.up_count(d);
  }
  return income;
}

double penalty_wf(double base, double availability, double threshold) {
  return std::max(0.0, base * (threshold - availability) / threshold);
}

double penalty_wt(double base, std::span<const double> turbine_availability, double threshold) {
  const double share = base / static_cast<double>(turbine_availability.size());
  double total = 0.0;
  for (double a : turbine_availability) total += std::max(0.0, share * (threshold - a) / threshold);
  return total;
}

double penalty_g(double base, double availability, double threshold) {
  return std::max(0.0, base * (threshold - availability) / threshold);
}

double liquidated_damages(double wf, double wt, double g, double cap) { return std::min(cap, wf + wt + g); }

double upside_sharing(double base, double availability, double threshold, double cap) {
  return std::min(cap, std::max(0.0, base * (availability - threshold) / threshold));
}

double shortage_cost(const DailyEnvironment& env, const AvailabilityMatrix& m, const TurbineSpec& spec) {
  double cost = 0.0;
  for (int d = 1; d <= m.days(); ++d) {
    const auto i = static_cast<std::size_t>(d - 1);
    const double supplied = energy_per_day(env.wind_speed[i], spec) * m.up_count(d);
    cost += env.price[i] * std::max(0.0, env.demand[i] - supplied);
  }
  return cost;
}

double startup_cost(const DailyEnvironment& env, const AvailabilityMatrix& m, double startup_energy) {
  double cost = 0.0;
  for (int w = 1; w <= m.turbines(); ++w) {
    for (int d = 2; d <= m.days(); ++d) {
      if (m.at(w, d) && !m.at(w, d - 1)) cost += env.price[static_cast<std::size_t>(d - 1)] * startup_energy;
    }
  }
  return cost;
}

double technician_labor(int technicians, double annual_salary, int days) {
  return technicians * (annual_salary / 365.0) * days;
}

CashflowLedger settle(const Bundle& bundle, const ContractTerms& contract, const DailyEnvironment& env,
                      const AvailabilityMatrix& m, const AvailabilityReport& availability,
                      std::span<const MaintenanceTask> tasks) {
  const TurbineSpec& spec = bundle.farm.spec;
  CashflowLedger l;
  CashflowComponents& c = l.components;

  c.energy_sales = base_income(env, m, spec);
  c.shortage = shortage_cost(env, m, spec);
  c.startup = startup_cost(env, m, bundle.sim.startup_energy);
  for (const MaintenanceTask& task : tasks) {
    if (!task.scheduled()) continue;
    c.materials += bundle.mode(task.event.mode_id).material_cost;
    const TaskCost cost = task_cost_contractor(task, bundle);
    c.transport_distance += cost.distance;
    c.transport_idle += cost.idle;
  }
  c.fixed_fee = contract.fixed_fee;
  c.technician_labor = technician_labor(contract.technicians, contract.annual_salary, m.days());

  const double threshold = contract.threshold_ld;
  const double cap = contract.cap_eur();
  c.penalty_wf = penalty_wf(c.energy_sales, availability.farm, threshold);
  c.penalty_wt = penalty_wt(c.energy_sales, availability.per_turbine, threshold);
  c.penalty_g = penalty_g(c.energy_sales, availability.energy_based, threshold);
  c.liquidated_damages = liquidated_damages(c.penalty_wf, c.penalty_wt, c.penalty_g, cap);
  c.upside_sharing = upside_sharing(c.energy_sales, availability.energy_based, contract.threshold_us, cap);

  l.owner_income = c.energy_sales + c.liquidated_damages;
  l.owner_cost = c.fixed_fee + c.upside_sharing + c.materials + c.shortage + c.startup;
  l.owner_profit = l.owner_income - l.owner_cost;
  l.contractor_income = c.fixed_fee + c.upside_sharing;
  l.contractor_cost = c.transport_distance + c.transport_idle + c.liquidated_damages + c.technician_labor;
  l.contractor_profit = l.contractor_income - l.contractor_cost;
  return l;
}

}  // namespace owm
