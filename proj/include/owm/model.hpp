#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace owm {

/// Power-curve parameters of the (single) turbine type installed in the farm.
struct TurbineSpec {
  double rated_power_kw = 8000.0;
  double cut_in_speed = 4.0;   // m/s
  double rated_speed = 13.0;   // m/s
  double cut_out_speed = 25.0; // m/s

  bool operator==(const TurbineSpec&) const = default;
};

struct Turbine {
  int id = 0;                    // 1-based, contiguous
  double base_distance_km = 0.0; // one-way distance from the O&M base

  bool operator==(const Turbine&) const = default;
};

struct WindFarm {
  std::vector<Turbine> turbines;
  TurbineSpec spec;

  int size() const { return static_cast<int>(turbines.size()); }
  const Turbine& turbine(int id) const { return turbines.at(static_cast<std::size_t>(id - 1)); }

  bool operator==(const WindFarm&) const = default;
};

/// One row of the corrective-maintenance catalog. Technician counts are
/// rounded up at load time.
struct FailureMode {
  int id = 0;
  std::string name;
  double daily_rate = 0.0;   // failures per turbine per day
  double repair_hours = 0.0; // H_j
  double material_cost = 0.0;
  int required_technicians = 1;

  bool operator==(const FailureMode&) const = default;
};

/// Contract decision variables. Availability thresholds for the farm,
/// per-turbine and energy-based penalties share one value (threshold_ld);
/// liquidated-damages and upside-sharing caps share cap_fraction * fixed_fee.
struct ContractTerms {
  int technicians = 16;
  double threshold_us = 0.85;
  double threshold_ld = 0.75;
  double cap_fraction = 0.35;
  double fixed_fee = 0.0; // EUR per evaluation period
  double annual_salary = 44000.0;

  double cap_eur() const { return cap_fraction * fixed_fee; }

  bool operator==(const ContractTerms&) const = default;
};

struct TransportSpec {
  std::string name;
  double speed = 0.0;       // m/s
  double hourly_cost = 0.0; // EUR/h
  double per_km_cost = 0.0; // EUR/km
  double use_rate = 0.0;
  double max_wind_access = 0.0; // m/s
  double max_wave_access = 0.0; // m

  bool operator==(const TransportSpec&) const = default;
};

struct WeatherModel {
  double weibull_shape = 2.0;
  double weibull_scale = 9.5; // m/s at hub height
  double wave_mean = 1.0;     // m
  double wave_std = 0.6;      // m

  bool operator==(const WeatherModel&) const = default;
};

/// Daily electricity price: either an explicit curve of length T or i.i.d.
/// lognormal draws with arithmetic mean `lognormal_mean` and log-space
/// standard deviation `lognormal_sigma`.
struct PriceCurve {
  std::vector<double> explicit_prices;
  double lognormal_mean = 55.0;
  double lognormal_sigma = 0.0;

  bool is_explicit() const { return !explicit_prices.empty(); }

  bool operator==(const PriceCurve&) const = default;
};

enum class TransportPolicy { ctv_only, sample_use_rate };
enum class OrderPolicy { fifo, random_order };

struct SimConfig {
  int horizon_days = 180;
  double hours_per_workday = 8.0;
  double startup_energy = 0.06; // MWh per restart
  int samples = 2000;
  std::uint64_t master_seed = 42;
  PriceCurve price_curve;
  TransportPolicy transport_policy = TransportPolicy::ctv_only;
  OrderPolicy order_policy = OrderPolicy::fifo;
  int mobilization_lag_days = 0;

  bool operator==(const SimConfig&) const = default;
};

/// Everything a run needs, validated once and then shared read-only.
struct Bundle {
  WindFarm farm;
  std::vector<FailureMode> failures;
  std::vector<TransportSpec> transports;
  ContractTerms contract;
  WeatherModel weather;
  SimConfig sim;

  const FailureMode& mode(int id) const { return failures.at(static_cast<std::size_t>(id - 1)); }

  bool operator==(const Bundle&) const = default;
};

/// Schema or invariant violation. `path()` is a JSON-pointer-like location.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& reason)
      : std::runtime_error(path.empty() ? reason : path + ": " + reason), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

Bundle validate_config(const nlohmann::json& raw);
Bundle load_config(const std::filesystem::path& path);

/// Canonical JSON form; validate_config(to_json(b)) reproduces b.
nlohmann::json to_json(const Bundle& bundle);

/// Deterministic rectangular grid of `n` turbines filling a square of
/// `area_km2`, centred `distance_to_center_km` from the base. Returns the
/// base-to-turbine distances in row-major grid order.
std::vector<double> default_layout(int n, double distance_to_center_km, double area_km2);

void check_invariants(const Bundle& bundle);
void check_invariants(const ContractTerms& contract);

const char* to_string(TransportPolicy p);
const char* to_string(OrderPolicy p);

}  // namespace owm
