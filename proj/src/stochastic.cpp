#include "owm/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "owm/power_curve.hpp"

namespace owm {

namespace {

double truncated_wave(const WeatherModel& model, RandomStream& stream) {
  if (model.wave_std == 0.0) return std::max(0.0, model.wave_mean);
  for (int attempt = 0; attempt < 64; ++attempt) {
    double h = stream.normal(model.wave_mean, model.wave_std);
    if (h >= 0.0) return h;
  }
  return 0.0;
}

}  // namespace

WeatherSeries sample_weather(const WeatherModel& model, int days, RandomStream& wind_stream,
                             RandomStream& wave_stream) {
  WeatherSeries out;
  out.wind_speed.reserve(static_cast<std::size_t>(days));
  out.wave_height.reserve(static_cast<std::size_t>(days));
  for (int t = 0; t < days; ++t) out.wind_speed.push_back(wind_stream.weibull(model.weibull_shape, model.weibull_scale));
  for (int t = 0; t < days; ++t) out.wave_height.push_back(truncated_wave(model, wave_stream));
  return out;
}

std::vector<FailureEvent> sample_failures(std::span<const FailureMode> catalog, const WindFarm& farm, int days,
                                          RandomStream& stream) {
  const std::uint64_t turbines = static_cast<std::uint64_t>(farm.size());
  const std::uint64_t trials = turbines * static_cast<std::uint64_t>(days);
  std::vector<FailureEvent> events;
  auto record = [&](std::uint64_t k, int mode_id) {
    events.push_back({static_cast<int>(k % turbines) + 1, mode_id, static_cast<int>(k / turbines) + 1});
  };
  for (const FailureMode& mode : catalog) {
    const double p = mode.daily_rate;
    if (p < 0.0 || p > 1.0) throw ConfigError("/failures", "daily rate outside [0, 1]");
    if (p == 0.0) continue;
    if (p == 1.0) {
      for (std::uint64_t k = 0; k < trials; ++k) record(k, mode.id);
      continue;
    }
    // gaps between successes of a Bernoulli sequence are geometric
    std::uint64_t k = stream.geometric(p);
    while (k < trials) {
      record(k, mode.id);
      const std::uint64_t gap = stream.geometric(p);
      if (gap >= trials) break;
      k += gap + 1;
    }
  }
  std::sort(events.begin(), events.end(), [](const FailureEvent& a, const FailureEvent& b) {
    return std::tie(a.day, a.turbine_id, a.mode_id) < std::tie(b.day, b.turbine_id, b.mode_id);
  });
  return events;
}

std::vector<double> sample_prices(const PriceCurve& curve, int days, RandomStream& stream) {
  if (curve.is_explicit()) return curve.explicit_prices;
  const double sigma = curve.lognormal_sigma;
  std::vector<double> prices(static_cast<std::size_t>(days), curve.lognormal_mean);
  if (sigma == 0.0) return prices;
  const double mu = std::log(curve.lognormal_mean) - 0.5 * sigma * sigma;
  for (double& p : prices) p = std::exp(stream.normal(mu, sigma));
  return prices;
}

std::vector<double> derive_demand(std::span<const double> wind_speed, const WindFarm& farm) {
  std::vector<double> demand;
  demand.reserve(wind_speed.size());
  for (double w : wind_speed) demand.push_back(farm.size() * energy_per_day(w, farm.spec));
  return demand;
}

SampleScenario sample_scenario(const Bundle& bundle, std::uint64_t sample_index) {
  const std::uint64_t seed = bundle.sim.master_seed;
  const int days = bundle.sim.horizon_days;
  RandomStream wind(seed, sample_index, StreamPurpose::wind);
  RandomStream wave(seed, sample_index, StreamPurpose::wave);
  RandomStream price(seed, sample_index, StreamPurpose::price);
  RandomStream failures(seed, sample_index, StreamPurpose::failures);

  SampleScenario s;
  s.sample_index = sample_index;
  WeatherSeries weather = sample_weather(bundle.weather, days, wind, wave);
  s.environment.wind_speed = std::move(weather.wind_speed);
  s.environment.wave_height = std::move(weather.wave_height);
  s.environment.price = sample_prices(bundle.sim.price_curve, days, price);
  s.environment.demand = derive_demand(s.environment.wind_speed, bundle.farm);
  s.failures = sample_failures(bundle.failures, bundle.farm, days, failures);
  return s;
}

}  // namespace owm
