#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "owm/model.hpp"
#include "owm/power_curve.hpp"
#include "owm/scheduler.hpp"

namespace owm {

/// Binary turbine-by-day operating state; turbines and days are 1-based.
class AvailabilityMatrix {
 public:
  AvailabilityMatrix() = default;
  AvailabilityMatrix(int turbines, int days) : turbines_(turbines), days_(days), cells_(std::size_t(turbines) * days, 1) {}

  int turbines() const { return turbines_; }
  int days() const { return days_; }

  bool at(int turbine, int day) const { return cells_[offset(turbine, day)] != 0; }
  void set(int turbine, int day, bool up) { cells_[offset(turbine, day)] = up ? 1 : 0; }

  /// Operating turbines on `day`.
  int up_count(int day) const;
  /// Operating days of `turbine`.
  int up_days(int turbine) const;

  bool operator==(const AvailabilityMatrix&) const = default;

 private:
  std::size_t offset(int turbine, int day) const {
    return std::size_t(turbine - 1) * std::size_t(days_) + std::size_t(day - 1);
  }

  int turbines_ = 0;
  int days_ = 0;
  std::vector<std::uint8_t> cells_;
};

struct AvailabilityReport {
  double farm = 1.0;                // time-based, farm average
  std::vector<double> per_turbine;  // time-based, one per turbine
  double energy_based = 1.0;
};

/// Each task takes its turbine down from the failure day through the repair
/// completion day, or through the horizon when it was never scheduled.
AvailabilityMatrix build_availability(std::span<const MaintenanceTask> tasks, int turbines, int days);

double farm_availability(const AvailabilityMatrix& matrix);
double turbine_availability(const AvailabilityMatrix& matrix, int turbine);
/// Produced over producible energy; 1 when nothing was producible.
double energy_availability(const AvailabilityMatrix& matrix, std::span<const double> wind_speed,
                           const TurbineSpec& spec);

AvailabilityReport availability_report(const AvailabilityMatrix& matrix, std::span<const double> wind_speed,
                                       const TurbineSpec& spec);

}  // namespace owm
