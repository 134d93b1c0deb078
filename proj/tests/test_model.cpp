#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <fstream>

#include "owm/model.hpp"

using namespace owm;
using nlohmann::json;

namespace {
json reference_json() {
  std::ifstream in(OWM_REFERENCE_CONFIG);
  return json::parse(in);
}

template <typename Fn>
std::string config_error_of(Fn&& fn) {
  try {
    fn();
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}
}  // namespace

TEST_CASE("reference case loads") {
  const Bundle b = load_config(OWM_REFERENCE_CONFIG);
  CHECK(b.farm.size() == 62);
  CHECK(b.failures.size() == 19);
  CHECK(b.transports.size() == 3);
  CHECK(b.transports.front().name == "CTV");
  CHECK(b.contract.technicians == 16);
  CHECK(b.contract.threshold_us == doctest::Approx(0.85));
  CHECK(b.contract.threshold_ld == doctest::Approx(0.75));
  CHECK(b.contract.cap_fraction == doctest::Approx(0.35));
  CHECK(b.sim.horizon_days == 180);
  CHECK(b.sim.samples == 2000);
  CHECK(b.sim.master_seed == 42);
  // fractional crews round up
  CHECK(b.mode(1).required_technicians == 3);
  for (const FailureMode& m : b.failures) CHECK(m.required_technicians >= 1);
}

TEST_CASE("json round trip is lossless") {
  const Bundle b = load_config(OWM_REFERENCE_CONFIG);
  CHECK(validate_config(to_json(b)) == b);
}

TEST_CASE("invariant violations are reported with a path") {
  SUBCASE("zero technicians") {
    json j = reference_json();
    j["contract"]["technicians"] = 0;
    CHECK(config_error_of([&] { validate_config(j); }).find("Q >= 1") != std::string::npos);
  }
  SUBCASE("price curve length") {
    json j = reference_json();
    j["sim"]["price_curve"] = {{"prices", {50.0, 51.0}}};
    CHECK(config_error_of([&] { validate_config(j); }).find("length mismatch") != std::string::npos);
  }
  SUBCASE("use rates") {
    json j = reference_json();
    j["transports"][0]["use_rate"] = 0.5;
    CHECK(config_error_of([&] { validate_config(j); }).find("use rates sum") != std::string::npos);
  }
  SUBCASE("rate above one") {
    json j = reference_json();
    j["failures"][0]["daily_rate"] = 1.5;
    CHECK(config_error_of([&] { validate_config(j); }).find("not a probability") != std::string::npos);
  }
  SUBCASE("missing section") {
    json j = reference_json();
    j.erase("weather");
    const std::string msg = config_error_of([&] { validate_config(j); });
    CHECK(msg.find("/weather") != std::string::npos);
  }
  SUBCASE("wrong type") {
    json j = reference_json();
    j["contract"]["fixed_fee"] = "lots";
    CHECK(config_error_of([&] { validate_config(j); }).find("/contract/fixed_fee") != std::string::npos);
  }
  SUBCASE("cut speeds out of order") {
    json j = reference_json();
    j["turbine"]["rated_speed"] = 30.0;
    CHECK_FALSE(config_error_of([&] { validate_config(j); }).empty());
  }
}

TEST_CASE("missing and malformed files") {
  CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ConfigError);
  const auto path = std::filesystem::temp_directory_path() / "owm_bad_config.json";
  std::ofstream(path) << "{ not json";
  CHECK_THROWS_AS(load_config(path), ConfigError);
  std::filesystem::remove(path);
}

TEST_CASE("explicit turbine list") {
  json j = reference_json();
  j["farm"] = {{"turbines", {{{"id", 1}, {"base_distance_km", 5.0}}, {{"id", 2}, {"base_distance_km", 7.5}}}}};
  const Bundle b = validate_config(j);
  REQUIRE(b.farm.size() == 2);
  CHECK(b.farm.turbine(2).base_distance_km == 7.5);

  j["farm"]["turbines"][1]["id"] = 3;
  CHECK_THROWS_AS(validate_config(j), ConfigError);
}

TEST_CASE("default layout geometry") {
  // one turbine sits at the centre
  CHECK(default_layout(1, 12.0, 4.0).front() == doctest::Approx(12.0));

  // 2x2 grid in a 2 km square centred 10 km out: cells at (10 +- 0.5, +-0.5)
  auto d = default_layout(4, 10.0, 4.0);
  std::sort(d.begin(), d.end());
  CHECK(d[0] == doctest::Approx(std::hypot(9.5, 0.5)));
  CHECK(d[1] == doctest::Approx(std::hypot(9.5, 0.5)));
  CHECK(d[2] == doctest::Approx(std::hypot(10.5, 0.5)));
  CHECK(d[3] == doctest::Approx(std::hypot(10.5, 0.5)));

  // every position is inside the square
  const auto big = default_layout(62, 29.1, 112.0);
  const double half = std::sqrt(112.0) / 2;
  for (double x : big) {
    CHECK(x >= 29.1 - half - 1e-9);
    CHECK(x <= std::hypot(29.1 + half, half) + 1e-9);
  }
}
