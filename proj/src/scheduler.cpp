#include "owm/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include <fmt/format.h>

namespace owm {

int repair_days(double repair_hours, double hours_per_workday) {
  const double days = std::ceil(repair_hours / hours_per_workday - 1e-12);
  return std::max(1, static_cast<int>(days));
}

bool weather_window_ok(int first_day, int last_day, std::span<const double> wind, std::span<const double> wave,
                       const TransportSpec& transport) {
  for (int d = first_day; d <= last_day; ++d) {
    const auto i = static_cast<std::size_t>(d - 1);
    if (wind[i] > transport.max_wind_access || wave[i] > transport.max_wave_access) return false;
  }
  return true;
}

std::size_t assign_transport(std::span<const TransportSpec> transports, TransportPolicy policy,
                             RandomStream& stream) {
  if (policy == TransportPolicy::ctv_only || transports.size() == 1) return 0;
  const double u = stream.uniform();
  double cumulative = 0.0;
  for (std::size_t i = 0; i < transports.size(); ++i) {
    cumulative += transports[i].use_rate;
    if (u < cumulative) return i;
  }
  return transports.size() - 1;
}

DayOfRepairVector build_drv(std::span<const FailureEvent> failures, const DailyEnvironment& environment,
                            int technicians, const Bundle& bundle, RandomStream& stream) {
  const int horizon = environment.days();
  DayOfRepairVector drv;
  drv.ledger.capacity = technicians;
  drv.ledger.available.assign(static_cast<std::size_t>(horizon), technicians);
  drv.tasks.reserve(failures.size());

  // transports are drawn in failure order so the processing order cannot
  // change which vessel a task gets
  for (const FailureEvent& e : failures) {
    const FailureMode& mode = bundle.mode(e.mode_id);
    MaintenanceTask task;
    task.event = e;
    task.repair_days = repair_days(mode.repair_hours, bundle.sim.hours_per_workday);
    task.technicians_needed = mode.required_technicians;
    task.transport = assign_transport(bundle.transports, bundle.sim.transport_policy, stream);
    drv.tasks.push_back(task);
  }

  std::vector<std::size_t> order(drv.tasks.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (bundle.sim.order_policy == OrderPolicy::random_order) {
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[stream.index(i)]);
  } else {
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const FailureEvent& ea = drv.tasks[a].event;
      const FailureEvent& eb = drv.tasks[b].event;
      return std::tie(ea.day, ea.turbine_id) < std::tie(eb.day, eb.turbine_id);
    });
  }

  std::vector<int>& available = drv.ledger.available;
  for (std::size_t idx : order) {
    MaintenanceTask& task = drv.tasks[idx];
    if (task.technicians_needed > technicians) {
      drv.warnings.push_back({task.event.turbine_id, task.event.mode_id, task.event.day,
                              fmt::format("needs {} technicians but only {} are employed", task.technicians_needed,
                                          technicians)});
      continue;
    }
    const TransportSpec& transport = bundle.transports[task.transport];
    const int earliest = task.event.day + bundle.sim.mobilization_lag_days;
    const int latest = horizon - task.repair_days + 1;
    for (int d = earliest; d <= latest; ++d) {
      const int last = d + task.repair_days - 1;
      bool crew_ok = true;
      for (int k = d; k <= last && crew_ok; ++k) crew_ok = available[static_cast<std::size_t>(k - 1)] >= task.technicians_needed;
      if (!crew_ok || !weather_window_ok(d, last, environment.wind_speed, environment.wave_height, transport)) continue;
      task.available_at_start = available[static_cast<std::size_t>(d - 1)];
      for (int k = d; k <= last; ++k) available[static_cast<std::size_t>(k - 1)] -= task.technicians_needed;
      task.start_day = d;
      break;
    }
  }
  return drv;
}

}  // namespace owm
