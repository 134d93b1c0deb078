#pragma once

#include "owm/model.hpp"

namespace owm {

inline constexpr double kHoursPerProductionDay = 24.0;

/// Instantaneous output in kW for a wind speed in m/s: cubic ramp between
/// cut-in and rated, flat at rated power up to cut-out (exclusive).
double power_output_kw(double wind_speed, const TurbineSpec& spec);

/// Energy one available turbine produces over a 24 h day, in MWh.
double energy_per_day(double wind_speed, const TurbineSpec& spec);

}  // namespace owm
