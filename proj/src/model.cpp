#include "owm/model.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

#include <fmt/format.h>

namespace owm {

namespace {

using nlohmann::json;

std::string join(const std::string& base, const std::string& key) { return base + "/" + key; }

const json& require_object(const json& parent, const std::string& key, const std::string& path) {
  if (!parent.contains(key)) throw ConfigError(join(path, key), "required field missing");
  const json& v = parent.at(key);
  if (!v.is_object()) throw ConfigError(join(path, key), "expected an object");
  return v;
}

double get_number(const json& obj, const std::string& key, const std::string& path,
                  std::optional<double> fallback = std::nullopt) {
  if (!obj.contains(key)) {
    if (fallback) return *fallback;
    throw ConfigError(join(path, key), "required field missing");
  }
  const json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(join(path, key), "expected a number");
  double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(join(path, key), "must be finite");
  return x;
}

int get_int(const json& obj, const std::string& key, const std::string& path,
            std::optional<int> fallback = std::nullopt) {
  if (!obj.contains(key)) {
    if (fallback) return *fallback;
    throw ConfigError(join(path, key), "required field missing");
  }
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw ConfigError(join(path, key), "expected an integer");
  return v.get<int>();
}

std::string get_string(const json& obj, const std::string& key, const std::string& path,
                       std::optional<std::string> fallback = std::nullopt) {
  if (!obj.contains(key)) {
    if (fallback) return *fallback;
    throw ConfigError(join(path, key), "required field missing");
  }
  const json& v = obj.at(key);
  if (!v.is_string()) throw ConfigError(join(path, key), "expected a string");
  return v.get<std::string>();
}

void require(bool ok, const std::string& path, const std::string& reason) {
  if (!ok) throw ConfigError(path, reason);
}

TurbineSpec parse_turbine(const json& j) {
  const std::string p = "/turbine";
  TurbineSpec t;
  t.rated_power_kw = get_number(j, "rated_power_kw", p, t.rated_power_kw);
  t.cut_in_speed = get_number(j, "cut_in_speed", p, t.cut_in_speed);
  t.rated_speed = get_number(j, "rated_speed", p, t.rated_speed);
  t.cut_out_speed = get_number(j, "cut_out_speed", p, t.cut_out_speed);
  return t;
}

std::vector<Turbine> parse_farm(const json& j) {
  const std::string p = "/farm";
  std::vector<Turbine> turbines;
  if (j.contains("turbines")) {
    const json& list = j.at("turbines");
    require(list.is_array(), p + "/turbines", "expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string ip = fmt::format("{}/turbines/{}", p, i);
      require(list[i].is_object(), ip, "expected an object");
      Turbine t;
      t.id = get_int(list[i], "id", ip);
      t.base_distance_km = get_number(list[i], "base_distance_km", ip);
      turbines.push_back(t);
    }
    return turbines;
  }
  if (!j.contains("layout")) throw ConfigError(p, "one of 'turbines' or 'layout' is required");
  const json& layout = j.at("layout");
  require(layout.is_object(), p + "/layout", "expected an object");
  const std::string lp = p + "/layout";
  int n = get_int(layout, "count", lp);
  double d = get_number(layout, "distance_to_center_km", lp);
  double area = get_number(layout, "area_km2", lp);
  require(n >= 1, lp + "/count", "N >= 1 violated");
  require(d > 0, lp + "/distance_to_center_km", "must be > 0");
  require(area > 0, lp + "/area_km2", "must be > 0");
  auto distances = default_layout(n, d, area);
  for (int i = 0; i < n; ++i) turbines.push_back({i + 1, distances[static_cast<std::size_t>(i)]});
  return turbines;
}

std::vector<FailureMode> parse_failures(const json& list) {
  const std::string p = "/failures";
  require(list.is_array(), p, "expected an array");
  std::vector<FailureMode> modes;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string ip = fmt::format("{}/{}", p, i);
    const json& f = list[i];
    require(f.is_object(), ip, "expected an object");
    FailureMode m;
    m.id = get_int(f, "id", ip);
    m.name = get_string(f, "name", ip, fmt::format("mode {}", m.id));
    m.daily_rate = get_number(f, "daily_rate", ip);
    m.repair_hours = get_number(f, "repair_hours", ip);
    m.material_cost = get_number(f, "material_cost", ip, 0.0);
    // fractional crew sizes are averages; crews are whole people
    double techs = get_number(f, "required_technicians", ip);
    require(techs > 0, ip + "/required_technicians", "must be > 0");
    m.required_technicians = static_cast<int>(std::ceil(techs - 1e-9));
    modes.push_back(std::move(m));
  }
  return modes;
}

std::vector<TransportSpec> parse_transports(const json& list) {
  const std::string p = "/transports";
  require(list.is_array(), p, "expected an array");
  std::vector<TransportSpec> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string ip = fmt::format("{}/{}", p, i);
    const json& t = list[i];
    require(t.is_object(), ip, "expected an object");
    TransportSpec s;
    s.name = get_string(t, "name", ip);
    s.speed = get_number(t, "speed", ip, 0.0);
    s.hourly_cost = get_number(t, "hourly_cost", ip);
    s.per_km_cost = get_number(t, "per_km_cost", ip);
    s.use_rate = get_number(t, "use_rate", ip, list.size() == 1 ? 1.0 : 0.0);
    s.max_wind_access = get_number(t, "max_wind_access", ip);
    s.max_wave_access = get_number(t, "max_wave_access", ip);
    out.push_back(std::move(s));
  }
  return out;
}

ContractTerms parse_contract(const json& j) {
  const std::string p = "/contract";
  ContractTerms c;
  c.technicians = get_int(j, "technicians", p, c.technicians);
  c.threshold_us = get_number(j, "threshold_us", p, c.threshold_us);
  c.threshold_ld = get_number(j, "threshold_ld", p, c.threshold_ld);
  c.cap_fraction = get_number(j, "cap_fraction", p, c.cap_fraction);
  c.fixed_fee = get_number(j, "fixed_fee", p);
  c.annual_salary = get_number(j, "annual_salary", p, c.annual_salary);
  return c;
}

WeatherModel parse_weather(const json& j) {
  const std::string p = "/weather";
  WeatherModel w;
  w.weibull_shape = get_number(j, "weibull_shape", p);
  w.weibull_scale = get_number(j, "weibull_scale", p);
  w.wave_mean = get_number(j, "wave_mean", p);
  w.wave_std = get_number(j, "wave_std", p);
  return w;
}

TransportPolicy parse_transport_policy(const std::string& s, const std::string& path) {
  if (s == "ctv_only") return TransportPolicy::ctv_only;
  if (s == "sample_use_rate") return TransportPolicy::sample_use_rate;
  throw ConfigError(path, "unknown transport policy '" + s + "'");
}

OrderPolicy parse_order_policy(const std::string& s, const std::string& path) {
  if (s == "fifo") return OrderPolicy::fifo;
  if (s == "random_order") return OrderPolicy::random_order;
  throw ConfigError(path, "unknown order policy '" + s + "'");
}

SimConfig parse_sim(const json& j) {
  const std::string p = "/sim";
  SimConfig s;
  s.horizon_days = get_int(j, "horizon_days", p, s.horizon_days);
  s.hours_per_workday = get_number(j, "hours_per_workday", p, s.hours_per_workday);
  s.startup_energy = get_number(j, "startup_energy", p, s.startup_energy);
  s.samples = get_int(j, "samples", p, s.samples);
  if (j.contains("master_seed")) {
    const json& seed = j.at("master_seed");
    require(seed.is_number_unsigned() || (seed.is_number_integer() && seed.get<std::int64_t>() >= 0),
            p + "/master_seed", "expected a non-negative integer");
    s.master_seed = seed.get<std::uint64_t>();
  }
  s.transport_policy = parse_transport_policy(get_string(j, "transport_policy", p, "ctv_only"),
                                              p + "/transport_policy");
  s.order_policy = parse_order_policy(get_string(j, "order_policy", p, "fifo"), p + "/order_policy");
  s.mobilization_lag_days = get_int(j, "mobilization_lag_days", p, 0);

  const std::string pp = p + "/price_curve";
  if (!j.contains("price_curve")) throw ConfigError(pp, "required field missing");
  const json& price = j.at("price_curve");
  require(price.is_object(), pp, "expected an object");
  if (price.contains("prices")) {
    const json& list = price.at("prices");
    require(list.is_array(), pp + "/prices", "expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      require(list[i].is_number(), fmt::format("{}/prices/{}", pp, i), "expected a number");
      s.price_curve.explicit_prices.push_back(list[i].get<double>());
    }
    require(!s.price_curve.explicit_prices.empty(), pp + "/prices", "must not be empty");
  } else if (price.contains("lognormal")) {
    const json& ln = price.at("lognormal");
    require(ln.is_object(), pp + "/lognormal", "expected an object");
    s.price_curve.lognormal_mean = get_number(ln, "mean", pp + "/lognormal");
    s.price_curve.lognormal_sigma = get_number(ln, "sigma", pp + "/lognormal", 0.0);
  } else {
    throw ConfigError(pp, "one of 'prices' or 'lognormal' is required");
  }
  return s;
}

}  // namespace

void check_invariants(const ContractTerms& c) {
  const std::string p = "/contract";
  require(c.technicians >= 1, p + "/technicians", "Q >= 1 violated");
  require(c.threshold_us > 0 && c.threshold_us <= 1, p + "/threshold_us", "0 < R_US <= 1 violated");
  require(c.threshold_ld > 0 && c.threshold_ld <= 1, p + "/threshold_ld", "0 < R_LD <= 1 violated");
  require(c.cap_fraction >= 0, p + "/cap_fraction", "lambda >= 0 violated");
  require(c.fixed_fee >= 0, p + "/fixed_fee", "fixed fee >= 0 violated");
  require(c.annual_salary >= 0, p + "/annual_salary", "salary >= 0 violated");
}

void check_invariants(const Bundle& b) {
  const TurbineSpec& t = b.farm.spec;
  require(t.rated_power_kw > 0, "/turbine/rated_power_kw", "must be > 0");
  require(t.cut_in_speed > 0 && t.cut_in_speed < t.rated_speed && t.rated_speed < t.cut_out_speed,
          "/turbine", "0 < cut_in_speed < rated_speed < cut_out_speed violated");

  require(!b.farm.turbines.empty(), "/farm", "N >= 1 violated");
  for (std::size_t i = 0; i < b.farm.turbines.size(); ++i) {
    const Turbine& tb = b.farm.turbines[i];
    const std::string ip = fmt::format("/farm/turbines/{}", i);
    require(tb.id == static_cast<int>(i) + 1, ip + "/id", "turbine ids must be unique and contiguous from 1");
    require(tb.base_distance_km > 0, ip + "/base_distance_km", "must be > 0");
  }

  require(!b.failures.empty(), "/failures", "catalog must not be empty");
  for (std::size_t i = 0; i < b.failures.size(); ++i) {
    const FailureMode& m = b.failures[i];
    const std::string ip = fmt::format("/failures/{}", i);
    require(m.id == static_cast<int>(i) + 1, ip + "/id", "failure ids must be unique and contiguous from 1");
    require(m.daily_rate >= 0, ip + "/daily_rate", "must be >= 0");
    require(m.daily_rate <= 1, ip + "/daily_rate", "daily rate > 1 is not a probability");
    require(m.repair_hours > 0, ip + "/repair_hours", "must be > 0");
    require(m.material_cost >= 0, ip + "/material_cost", "must be >= 0");
    require(m.required_technicians >= 1, ip + "/required_technicians", "must be >= 1");
  }

  require(!b.transports.empty(), "/transports", "at least one transport is required");
  double use_sum = 0.0;
  for (std::size_t i = 0; i < b.transports.size(); ++i) {
    const TransportSpec& s = b.transports[i];
    const std::string ip = fmt::format("/transports/{}", i);
    require(s.hourly_cost >= 0 && s.per_km_cost >= 0, ip, "costs must be >= 0");
    require(s.use_rate >= 0, ip + "/use_rate", "must be >= 0");
    require(s.max_wind_access >= 0 && s.max_wave_access >= 0, ip, "access limits must be >= 0");
    use_sum += s.use_rate;
  }
  require(std::abs(use_sum - 1.0) <= 1e-9, "/transports", fmt::format("use rates sum to {} instead of 1", use_sum));

  check_invariants(b.contract);

  const WeatherModel& w = b.weather;
  require(w.weibull_shape > 0, "/weather/weibull_shape", "must be > 0");
  require(w.weibull_scale > 0, "/weather/weibull_scale", "must be > 0");
  require(w.wave_std >= 0, "/weather/wave_std", "must be >= 0");

  const SimConfig& s = b.sim;
  require(s.horizon_days >= 1, "/sim/horizon_days", "T >= 1 violated");
  require(s.hours_per_workday > 0, "/sim/hours_per_workday", "must be > 0");
  require(s.startup_energy >= 0, "/sim/startup_energy", "K_UP >= 0 violated");
  require(s.samples >= 1, "/sim/samples", "samples >= 1 violated");
  require(s.mobilization_lag_days >= 0, "/sim/mobilization_lag_days", "must be >= 0");
  if (s.price_curve.is_explicit()) {
    require(static_cast<int>(s.price_curve.explicit_prices.size()) == s.horizon_days, "/sim/price_curve/prices",
            fmt::format("price curve length mismatch ({} prices for T={})", s.price_curve.explicit_prices.size(),
                        s.horizon_days));
    for (double v : s.price_curve.explicit_prices) require(v >= 0, "/sim/price_curve/prices", "prices must be >= 0");
  } else {
    require(s.price_curve.lognormal_mean > 0, "/sim/price_curve/lognormal/mean", "must be > 0");
    require(s.price_curve.lognormal_sigma >= 0, "/sim/price_curve/lognormal/sigma", "must be >= 0");
  }
}

Bundle validate_config(const json& raw) {
  if (!raw.is_object()) throw ConfigError("", "config document must be a JSON object");
  Bundle b;
  b.farm.spec = raw.contains("turbine") ? parse_turbine(require_object(raw, "turbine", "")) : TurbineSpec{};
  b.farm.turbines = parse_farm(require_object(raw, "farm", ""));
  if (!raw.contains("failures")) throw ConfigError("/failures", "required field missing");
  b.failures = parse_failures(raw.at("failures"));
  if (!raw.contains("transports")) throw ConfigError("/transports", "required field missing");
  b.transports = parse_transports(raw.at("transports"));
  b.contract = parse_contract(require_object(raw, "contract", ""));
  b.weather = parse_weather(require_object(raw, "weather", ""));
  b.sim = parse_sim(require_object(raw, "sim", ""));
  check_invariants(b);
  return b;
}

Bundle load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open config file '" + path.string() + "'");
  json raw;
  try {
    raw = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("malformed JSON: ") + e.what());
  }
  return validate_config(raw);
}

json to_json(const Bundle& b) {
  json j;
  json turbines = json::array();
  for (const Turbine& t : b.farm.turbines) turbines.push_back({{"id", t.id}, {"base_distance_km", t.base_distance_km}});
  j["farm"] = {{"turbines", turbines}};
  const TurbineSpec& s = b.farm.spec;
  j["turbine"] = {{"rated_power_kw", s.rated_power_kw},
                  {"cut_in_speed", s.cut_in_speed},
                  {"rated_speed", s.rated_speed},
                  {"cut_out_speed", s.cut_out_speed}};
  json failures = json::array();
  for (const FailureMode& m : b.failures) {
    failures.push_back({{"id", m.id},
                        {"name", m.name},
                        {"daily_rate", m.daily_rate},
                        {"repair_hours", m.repair_hours},
                        {"material_cost", m.material_cost},
                        {"required_technicians", m.required_technicians}});
  }
  j["failures"] = failures;
  json transports = json::array();
  for (const TransportSpec& t : b.transports) {
    transports.push_back({{"name", t.name},
                          {"speed", t.speed},
                          {"hourly_cost", t.hourly_cost},
                          {"per_km_cost", t.per_km_cost},
                          {"use_rate", t.use_rate},
                          {"max_wind_access", t.max_wind_access},
                          {"max_wave_access", t.max_wave_access}});
  }
  j["transports"] = transports;
  const ContractTerms& c = b.contract;
  j["contract"] = {{"technicians", c.technicians},   {"threshold_us", c.threshold_us},
                   {"threshold_ld", c.threshold_ld}, {"cap_fraction", c.cap_fraction},
                   {"fixed_fee", c.fixed_fee},       {"annual_salary", c.annual_salary}};
  const WeatherModel& w = b.weather;
  j["weather"] = {{"weibull_shape", w.weibull_shape},
                  {"weibull_scale", w.weibull_scale},
                  {"wave_mean", w.wave_mean},
                  {"wave_std", w.wave_std}};
  const SimConfig& sim = b.sim;
  json price;
  if (sim.price_curve.is_explicit()) {
    price["prices"] = sim.price_curve.explicit_prices;
  } else {
    price["lognormal"] = {{"mean", sim.price_curve.lognormal_mean}, {"sigma", sim.price_curve.lognormal_sigma}};
  }
  j["sim"] = {{"horizon_days", sim.horizon_days},
              {"hours_per_workday", sim.hours_per_workday},
              {"startup_energy", sim.startup_energy},
              {"samples", sim.samples},
              {"master_seed", sim.master_seed},
              {"price_curve", price},
              {"transport_policy", to_string(sim.transport_policy)},
              {"order_policy", to_string(sim.order_policy)},
              {"mobilization_lag_days", sim.mobilization_lag_days}};
  return j;
}

std::vector<double> default_layout(int n, double distance_to_center_km, double area_km2) {
  const int cols = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
  const int rows = (n + cols - 1) / cols;
  const double side = std::sqrt(area_km2);
  const double dx = side / cols;
  const double dy = side / rows;
  std::vector<double> distances;
  distances.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int r = i / cols;
    const int c = i % cols;
    // the last row may be partial; centre it on its own
    const int in_row = (r == rows - 1) ? n - r * cols : cols;
    const double x = distance_to_center_km + (c - (in_row - 1) / 2.0) * dx;
    const double y = (r - (rows - 1) / 2.0) * dy;
    distances.push_back(std::hypot(x, y));
  }
  return distances;
}

const char* to_string(TransportPolicy p) {
  return p == TransportPolicy::ctv_only ? "ctv_only" : "sample_use_rate";
}

const char* to_string(OrderPolicy p) { return p == OrderPolicy::fifo ? "fifo" : "random_order"; }

}  // namespace owm
