#include "owm/availability.hpp"

#include <algorithm>

namespace owm {

double power_output_kw(double wind_speed, const TurbineSpec& spec) {
  if (wind_speed < spec.cut_in_speed || wind_speed >= spec.cut_out_speed) return 0.0;
  if (wind_speed >= spec.rated_speed) return spec.rated_power_kw;
  const double cube = [](double v) { return v * v * v; }(wind_speed);
  const double cut_in3 = spec.cut_in_speed * spec.cut_in_speed * spec.cut_in_speed;
  const double rated3 = spec.rated_speed * spec.rated_speed * spec.rated_speed;
  return spec.rated_power_kw * (cube - cut_in3) / (rated3 - cut_in3);
}

double energy_per_day(double wind_speed, const TurbineSpec& spec) {
  return power_output_kw(wind_speed, spec) * kHoursPerProductionDay / 1000.0;
}

int AvailabilityMatrix::up_count(int day) const {
  int n = 0;
  for (int w = 1; w <= turbines_; ++w) n += cells_[offset(w, day)];
  return n;
}

int AvailabilityMatrix::up_days(int turbine) const {
  const auto first = cells_.begin() + static_cast<std::ptrdiff_t>(offset(turbine, 1));
  return static_cast<int>(std::count(first, first + days_, std::uint8_t{1}));
}

AvailabilityMatrix build_availability(std::span<const MaintenanceTask> tasks, int turbines, int days) {
  AvailabilityMatrix m(turbines, days);
  for (const MaintenanceTask& task : tasks) {
    const int last = task.scheduled() ? *task.completion_day() : days;
    for (int d = task.event.day; d <= std::min(last, days); ++d) m.set(task.event.turbine_id, d, false);
  }
  return m;
}

double farm_availability(const AvailabilityMatrix& m) {
  long up = 0;
  for (int w = 1; w <= m.turbines(); ++w) up += m.up_days(w);
  return static_cast<double>(up) / (static_cast<double>(m.turbines()) * m.days());
}

double turbine_availability(const AvailabilityMatrix& m, int turbine) {
  return static_cast<double>(m.up_days(turbine)) / m.days();
}

double energy_availability(const AvailabilityMatrix& m, std::span<const double> wind_speed, const TurbineSpec& spec) {
  double produced = 0.0;
  double producible = 0.0;
  for (int d = 1; d <= m.days(); ++d) {
    const double g = energy_per_day(wind_speed[static_cast<std::size_t>(d - 1)], spec);
    produced += g * m.up_count(d);
    producible += g * m.turbines();
  }
  if (producible <= 0.0) return 1.0;
  return produced / producible;
}

AvailabilityReport availability_report(const AvailabilityMatrix& m, std::span<const double> wind_speed,
                                       const TurbineSpec& spec) {
  AvailabilityReport r;
  r.per_turbine.reserve(static_cast<std::size_t>(m.turbines()));
  for (int w = 1; w <= m.turbines(); ++w) r.per_turbine.push_back(turbine_availability(m, w));
  r.farm = farm_availability(m);
  r.energy_based = energy_availability(m, wind_speed, spec);
  return r;
}

}  // namespace owm
