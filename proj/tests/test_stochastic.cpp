#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>
#include <tuple>

#include "fixtures.hpp"
#include "owm/rng.hpp"
#include "owm/stochastic.hpp"

using namespace owm;

TEST_CASE("splitmix64 reference values") {
  // first outputs of the reference generator seeded with 0
  CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
  CHECK(derive_seed(42, 0, StreamPurpose::wind) != derive_seed(42, 0, StreamPurpose::wave));
  CHECK(derive_seed(42, 0, StreamPurpose::wind) != derive_seed(42, 1, StreamPurpose::wind));
  CHECK(derive_seed(42, 7, StreamPurpose::price) == derive_seed(42, 7, StreamPurpose::price));
}

TEST_CASE("uniform is in the open unit interval with the right moments") {
  RandomStream s(123);
  double sum = 0, sq = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = s.uniform();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
    sum += u;
    sq += u * u;
  }
  CHECK(sum / n == doctest::Approx(0.5).epsilon(0.005));
  CHECK(sq / n - (sum / n) * (sum / n) == doctest::Approx(1.0 / 12).epsilon(0.01));
}

TEST_CASE("normal and weibull moments") {
  RandomStream s(7);
  const int n = 200000;
  double sum = 0, sq = 0;
  for (int i = 0; i < n; ++i) {
    const double x = s.normal(1.0, 0.6);
    sum += x;
    sq += x * x;
  }
  const double mean = sum / n;
  CHECK(mean == doctest::Approx(1.0).epsilon(0.01));
  CHECK(std::sqrt(sq / n - mean * mean) == doctest::Approx(0.6).epsilon(0.01));

  // Weibull(k=2, c=9.5): mean c*Gamma(1.5), P(X <= 4) = 1 - exp(-(4/9.5)^2)
  sum = 0;
  int below = 0;
  for (int i = 0; i < n; ++i) {
    const double x = s.weibull(2.0, 9.5);
    sum += x;
    below += x <= 4.0;
  }
  CHECK(sum / n == doctest::Approx(9.5 * std::tgamma(1.5)).epsilon(0.01));
  CHECK(double(below) / n == doctest::Approx(1 - std::exp(-std::pow(4 / 9.5, 2))).epsilon(0.02));
}

TEST_CASE("geometric gap counts failures before the first success") {
  RandomStream s(99);
  const double p = 0.01;
  const int n = 100000;
  double sum = 0;
  for (int i = 0; i < n; ++i) sum += double(s.geometric(p));
  CHECK(sum / n == doctest::Approx((1 - p) / p).epsilon(0.02));
  CHECK(s.geometric(1.0) == 0);
}

TEST_CASE("index is unbiased") {
  RandomStream s(5);
  std::vector<int> counts(3, 0);
  for (int i = 0; i < 30000; ++i) ++counts[s.index(3)];
  for (int c : counts) CHECK(c == doctest::Approx(10000).epsilon(0.05));
}

TEST_CASE("failure sampling is a per-day Bernoulli process") {
  Bundle b = test::scripted_bundle();
  b.failures = {{1, "a", 0.01, 5, 0, 1}, {2, "b", 0.002, 5, 0, 1}};
  b.farm.turbines.clear();
  for (int i = 1; i <= 50; ++i) b.farm.turbines.push_back({i, 10.0});
  const int days = 100;
  double count1 = 0, count2 = 0;
  const int reps = 400;
  for (int r = 0; r < reps; ++r) {
    RandomStream s(1000 + r);
    const auto events = sample_failures(b.failures, b.farm, days, s);
    std::set<std::tuple<int, int, int>> seen;
    for (std::size_t i = 0; i < events.size(); ++i) {
      const FailureEvent& e = events[i];
      REQUIRE(e.day >= 1);
      REQUIRE(e.day <= days);
      REQUIRE(e.turbine_id >= 1);
      REQUIRE(e.turbine_id <= 50);
      REQUIRE(seen.insert({e.turbine_id, e.mode_id, e.day}).second);
      if (i) {
        const FailureEvent& p = events[i - 1];
        REQUIRE(std::tie(p.day, p.turbine_id, p.mode_id) < std::tie(e.day, e.turbine_id, e.mode_id));
      }
      (e.mode_id == 1 ? count1 : count2) += 1;
    }
  }
  CHECK(count1 / reps == doctest::Approx(0.01 * 50 * days).epsilon(0.03));
  CHECK(count2 / reps == doctest::Approx(0.002 * 50 * days).epsilon(0.05));

  RandomStream s(1);
  b.failures[0].daily_rate = 1.0;
  b.failures[1].daily_rate = 0.0;
  CHECK(sample_failures(b.failures, b.farm, 3, s).size() == 150);
  b.failures[0].daily_rate = 1.2;
  CHECK_THROWS_AS(sample_failures(b.failures, b.farm, 3, s), ConfigError);
}

TEST_CASE("weather series") {
  WeatherModel m;
  RandomStream wind(1), wave(2);
  const WeatherSeries w = sample_weather(m, 5000, wind, wave);
  REQUIRE(w.wind_speed.size() == 5000);
  for (double h : w.wave_height) CHECK(h >= 0.0);
  for (double v : w.wind_speed) CHECK(v >= 0.0);
}

TEST_CASE("prices") {
  PriceCurve c;
  RandomStream s(3);
  c.explicit_prices = {1, 2, 3};
  CHECK(sample_prices(c, 3, s) == std::vector<double>{1, 2, 3});

  c.explicit_prices.clear();
  c.lognormal_mean = 55;
  c.lognormal_sigma = 0;
  for (double p : sample_prices(c, 10, s)) CHECK(p == doctest::Approx(55));

  c.lognormal_sigma = 0.25;
  const auto prices = sample_prices(c, 100000, s);
  const double mean = std::accumulate(prices.begin(), prices.end(), 0.0) / prices.size();
  CHECK(mean == doctest::Approx(55).epsilon(0.01));
}

TEST_CASE("scenarios are reproducible and independent per sample") {
  const Bundle b = load_config(OWM_REFERENCE_CONFIG);
  const SampleScenario a = sample_scenario(b, 3);
  const SampleScenario a2 = sample_scenario(b, 3);
  const SampleScenario c = sample_scenario(b, 4);
  CHECK(a.environment == a2.environment);
  CHECK(a.failures == a2.failures);
  CHECK_FALSE(a.environment == c.environment);
  CHECK(a.environment.days() == 180);
  CHECK(a.environment.demand.size() == 180);
}
