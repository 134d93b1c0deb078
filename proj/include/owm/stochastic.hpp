#pragma once

#include <span>
#include <vector>

#include "owm/model.hpp"
#include "owm/rng.hpp"

namespace owm {

/// Day-indexed series for one sample; index 0 is day 1.
struct DailyEnvironment {
  std::vector<double> wind_speed;  // m/s
  std::vector<double> wave_height; // m
  std::vector<double> price;       // EUR/MWh
  std::vector<double> demand;      // MWh, farm output at full availability

  int days() const { return static_cast<int>(wind_speed.size()); }
  bool operator==(const DailyEnvironment&) const = default;
};

struct FailureEvent {
  int turbine_id = 0;
  int mode_id = 0;
  int day = 0; // 1..T

  bool operator==(const FailureEvent&) const = default;
};

struct WeatherSeries {
  std::vector<double> wind_speed;
  std::vector<double> wave_height;
};

/// Draws i.i.d. daily wind (Weibull) and wave height (Gaussian truncated at
/// zero). Wind consumes `wind_stream`, waves consume `wave_stream`.
WeatherSeries sample_weather(const WeatherModel& model, int days, RandomStream& wind_stream,
                             RandomStream& wave_stream);

/// One Bernoulli(daily_rate) trial per (turbine, day, mode). Result is
/// ordered by day, then turbine, then mode.
std::vector<FailureEvent> sample_failures(std::span<const FailureMode> catalog, const WindFarm& farm, int days,
                                          RandomStream& stream);

std::vector<double> sample_prices(const PriceCurve& curve, int days, RandomStream& stream);

std::vector<double> derive_demand(std::span<const double> wind_speed, const WindFarm& farm);

/// The contract-independent part of one Monte Carlo sample.
struct SampleScenario {
  std::uint64_t sample_index = 0;
  DailyEnvironment environment;
  std::vector<FailureEvent> failures;
};

/// Builds the environment and failure list of `sample_index` from its own
/// substreams, so the result does not depend on which other samples exist.
SampleScenario sample_scenario(const Bundle& bundle, std::uint64_t sample_index);

}  // namespace owm
