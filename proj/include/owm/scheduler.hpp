#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "owm/model.hpp"
#include "owm/rng.hpp"
#include "owm/stochastic.hpp"

namespace owm {

/// One corrective repair. `start_day` is empty when no feasible window
/// existed inside the horizon.
struct MaintenanceTask {
  FailureEvent event;
  int repair_days = 1;
  int technicians_needed = 1;
  std::size_t transport = 0; // index into Bundle::transports
  std::optional<int> start_day;
  int available_at_start = 0; // free technicians on start_day before this task

  bool scheduled() const { return start_day.has_value(); }
  std::optional<int> completion_day() const {
    if (!start_day) return std::nullopt;
    return *start_day + repair_days - 1;
  }
  bool operator==(const MaintenanceTask&) const = default;
};

/// Technicians still free on each day (index 0 is day 1).
struct TechnicianLedger {
  int capacity = 0;
  std::vector<int> available;

  int available_on(int day) const { return available[static_cast<std::size_t>(day - 1)]; }
  bool operator==(const TechnicianLedger&) const = default;
};

struct SchedulerWarning {
  int turbine_id = 0;
  int mode_id = 0;
  int day = 0;
  std::string reason;
};

/// Day-of-repair vector: tasks are aligned index-for-index with the failures
/// passed to build_drv.
struct DayOfRepairVector {
  std::vector<MaintenanceTask> tasks;
  TechnicianLedger ledger;
  std::vector<SchedulerWarning> warnings;
};

int repair_days(double repair_hours, double hours_per_workday);

/// True when every day in [first_day, last_day] is accessible for `transport`.
/// An empty range (last_day < first_day) is accessible.
bool weather_window_ok(int first_day, int last_day, std::span<const double> wind, std::span<const double> wave,
                       const TransportSpec& transport);

std::size_t assign_transport(std::span<const TransportSpec> transports, TransportPolicy policy,
                             RandomStream& stream);

/// Greedy earliest-feasible assignment under the technician pool, weather
/// access and contiguous repair windows.
DayOfRepairVector build_drv(std::span<const FailureEvent> failures, const DailyEnvironment& environment,
                            int technicians, const Bundle& bundle, RandomStream& stream);

}  // namespace owm
