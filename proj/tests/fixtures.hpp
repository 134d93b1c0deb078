#pragma once

#include "owm/model.hpp"
#include "owm/stochastic.hpp"

namespace owm::test {

inline TransportSpec ctv() { return {"CTV", 10.20, 81.03, 2.21, 1.0, 10.0, 1.5}; }

/// Two turbines, ten days, one 16 h / 3-technician failure mode.
inline Bundle scripted_bundle() {
  Bundle b;
  b.farm.turbines = {{1, 10.0}, {2, 12.0}};
  b.failures = {{1, "gearbox", 0.0, 16.0, 5000.0, 3}};
  b.transports = {ctv()};
  b.contract = {4, 0.85, 0.95, 0.35, 100000.0, 44000.0};
  b.sim.horizon_days = 10;
  b.sim.samples = 10;
  b.sim.price_curve.explicit_prices = {50, 52, 54, 56, 58, 60, 62, 64, 66, 68};
  return b;
}

inline DailyEnvironment scripted_environment(const Bundle& b) {
  DailyEnvironment env;
  env.wind_speed = {8, 9, 10, 11, 12, 13, 14, 7, 6, 5};
  env.wave_height = {0.5, 0.5, 2.0, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5};
  env.price = b.sim.price_curve.explicit_prices;
  env.demand = derive_demand(env.wind_speed, b.farm);
  return env;
}

}  // namespace owm::test
