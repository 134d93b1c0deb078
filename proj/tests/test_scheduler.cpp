#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "fixtures.hpp"
#include "owm/rng.hpp"
#include "owm/scheduler.hpp"

using namespace owm;

TEST_CASE("repair days round up whole workdays") {
  CHECK(repair_days(8, 8) == 1);
  CHECK(repair_days(8.0000001, 8) == 2);
  CHECK(repair_days(16, 8) == 2);
  CHECK(repair_days(0.5, 8) == 1);
  CHECK(repair_days(139, 8) == 18);
}

TEST_CASE("weather window is inclusive at the limits") {
  const TransportSpec t = test::ctv();
  const std::vector<double> wind = {10.0, 10.01, 3.0};
  const std::vector<double> wave = {1.5, 0.1, 1.51};
  CHECK(weather_window_ok(1, 1, wind, wave, t));
  CHECK_FALSE(weather_window_ok(1, 2, wind, wave, t));
  CHECK_FALSE(weather_window_ok(3, 3, wind, wave, t));
  CHECK(weather_window_ok(2, 1, wind, wave, t)); // empty range
}

TEST_CASE("scripted instance waits for weather") {
  const Bundle b = test::scripted_bundle();
  const DailyEnvironment env = test::scripted_environment(b);
  const std::vector<FailureEvent> failures = {{2, 1, 3}};
  RandomStream s(1);
  const DayOfRepairVector drv = build_drv(failures, env, 4, b, s);
  REQUIRE(drv.tasks.size() == 1);
  const MaintenanceTask& t = drv.tasks[0];
  CHECK(t.repair_days == 2);
  REQUIRE(t.scheduled());
  CHECK(*t.start_day == 8);
  CHECK(*t.completion_day() == 9);
  CHECK(t.available_at_start == 4);
  CHECK(drv.ledger.available_on(8) == 1);
  CHECK(drv.ledger.available_on(9) == 1);
  CHECK(drv.ledger.available_on(10) == 4);
}

TEST_CASE("crew larger than the workforce stays unscheduled with a warning") {
  const Bundle b = test::scripted_bundle();
  const DailyEnvironment env = test::scripted_environment(b);
  const std::vector<FailureEvent> failures = {{1, 1, 1}};
  RandomStream s(1);
  const DayOfRepairVector drv = build_drv(failures, env, 2, b, s);
  CHECK_FALSE(drv.tasks[0].scheduled());
  CHECK(drv.warnings.size() == 1);
}

TEST_CASE("window must end inside the horizon") {
  Bundle b = test::scripted_bundle();
  DailyEnvironment env = test::scripted_environment(b);
  std::fill(env.wind_speed.begin(), env.wind_speed.end(), 5.0);
  std::fill(env.wave_height.begin(), env.wave_height.end(), 0.5);
  RandomStream s(1);
  const std::vector<FailureEvent> late = {{1, 1, 10}};
  CHECK_FALSE(build_drv(late, env, 4, b, s).tasks[0].scheduled());
  const std::vector<FailureEvent> ok = {{1, 1, 9}};
  CHECK(*build_drv(ok, env, 4, b, s).tasks[0].start_day == 9);
}

TEST_CASE("mobilization lag delays the earliest start") {
  Bundle b = test::scripted_bundle();
  b.sim.mobilization_lag_days = 2;
  DailyEnvironment env = test::scripted_environment(b);
  std::fill(env.wind_speed.begin(), env.wind_speed.end(), 5.0);
  std::fill(env.wave_height.begin(), env.wave_height.end(), 0.5);
  RandomStream s(1);
  const std::vector<FailureEvent> f = {{1, 1, 2}};
  CHECK(*build_drv(f, env, 4, b, s).tasks[0].start_day == 4);
}

namespace {

/// Exhaustive search: the lexicographically smallest feasible assignment of
/// start days (unscheduled counts as +inf) in FIFO order.
std::vector<int> brute_force_starts(const std::vector<FailureEvent>& failures, const DailyEnvironment& env, int q,
                                    const Bundle& b) {
  const int T = env.days();
  const int n = static_cast<int>(failures.size());
  const int none = std::numeric_limits<int>::max();
  std::vector<int> len(n), need(n);
  for (int i = 0; i < n; ++i) {
    const FailureMode& m = b.mode(failures[i].mode_id);
    len[i] = std::max(1, int(std::ceil(m.repair_hours / b.sim.hours_per_workday - 1e-12)));
    need[i] = m.required_technicians;
  }
  std::vector<int> best(n, none), cur(n, none);
  bool found = false;

  auto feasible = [&]() {
    std::vector<int> usage(T + 1, 0);
    for (int i = 0; i < n; ++i) {
      if (cur[i] == none) continue;
      if (need[i] > q || cur[i] < failures[i].day || cur[i] + len[i] - 1 > T) return false;
      for (int d = cur[i]; d < cur[i] + len[i]; ++d) {
        if (env.wind_speed[d - 1] > b.transports[0].max_wind_access) return false;
        if (env.wave_height[d - 1] > b.transports[0].max_wave_access) return false;
        usage[d] += need[i];
        if (usage[d] > q) return false;
      }
    }
    return true;
  };

  // a task may stay unscheduled only when no start day fits
  auto maximal = [&]() {
    for (int i = 0; i < n; ++i) {
      if (cur[i] != none) continue;
      for (int d = 1; d <= T; ++d) {
        cur[i] = d;
        const bool ok = feasible();
        cur[i] = none;
        if (ok) return false;
      }
    }
    return true;
  };

  // enumerate in lexicographic order, so the first hit is the answer
  auto rec = [&](auto&& self, int i) -> void {
    if (found) return;
    if (i == n) {
      if (feasible() && maximal()) {
        best = cur;
        found = true;
      }
      return;
    }
    for (int d = 1; d <= T + 1 && !found; ++d) {
      cur[i] = d == T + 1 ? none : d;
      self(self, i + 1);
    }
    cur[i] = none;
  };
  rec(rec, 0);
  return best;
}

}  // namespace

TEST_CASE("greedy schedule equals exhaustive lexicographic optimum") {
  RandomStream gen(2024);
  int scheduled_total = 0, unscheduled_total = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Bundle b = test::scripted_bundle();
    const int T = 4 + int(gen.index(9));
    b.sim.horizon_days = T;
    b.sim.price_curve.explicit_prices.assign(T, 50.0);
    b.failures.clear();
    for (int j = 1; j <= 3; ++j) {
      b.failures.push_back({j, "m", 0.0, gen.uniform(2.0, 30.0), 0.0, 1 + int(gen.index(4))});
    }
    const int turbines = 1 + int(gen.index(3));
    b.farm.turbines.clear();
    for (int w = 1; w <= turbines; ++w) b.farm.turbines.push_back({w, 10.0});

    DailyEnvironment env;
    for (int d = 0; d < T; ++d) {
      env.wind_speed.push_back(gen.uniform() < 0.3 ? 12.0 : 6.0);
      env.wave_height.push_back(gen.uniform() < 0.2 ? 2.0 : 0.5);
      env.price.push_back(50.0);
    }
    env.demand = derive_demand(env.wind_speed, b.farm);

    std::vector<FailureEvent> failures;
    const int count = 1 + int(gen.index(4));
    for (int k = 0; k < count; ++k) {
      FailureEvent e{1 + int(gen.index(turbines)), 1 + int(gen.index(3)), 1 + int(gen.index(T))};
      if (std::find(failures.begin(), failures.end(), e) == failures.end()) failures.push_back(e);
    }
    std::sort(failures.begin(), failures.end(), [](const FailureEvent& x, const FailureEvent& y) {
      return std::tie(x.day, x.turbine_id, x.mode_id) < std::tie(y.day, y.turbine_id, y.mode_id);
    });
    const int q = 1 + int(gen.index(5));

    RandomStream s(1);
    const DayOfRepairVector drv = build_drv(failures, env, q, b, s);
    const std::vector<int> expected = brute_force_starts(failures, env, q, b);
    for (std::size_t i = 0; i < failures.size(); ++i) {
      const MaintenanceTask& t = drv.tasks[i];
      CHECK(t.event == failures[i]);
      if (expected[i] == std::numeric_limits<int>::max()) {
        CHECK_FALSE(t.scheduled());
        ++unscheduled_total;
      } else {
        REQUIRE(t.scheduled());
        CHECK(*t.start_day == expected[i]);
        ++scheduled_total;
      }
    }
    for (int d = 1; d <= T; ++d) CHECK(drv.ledger.available_on(d) >= 0);
  }
  // the generator exercises both outcomes
  CHECK(scheduled_total > 100);
  CHECK(unscheduled_total > 10);
}

TEST_CASE("random order is seeded and respects the crew ledger") {
  Bundle b = load_config(OWM_REFERENCE_CONFIG);
  b.sim.order_policy = OrderPolicy::random_order;
  const SampleScenario sc = sample_scenario(b, 0);
  RandomStream s1(5), s2(5);
  const DayOfRepairVector a = build_drv(sc.failures, sc.environment, 8, b, s1);
  const DayOfRepairVector c = build_drv(sc.failures, sc.environment, 8, b, s2);
  CHECK(a.tasks == c.tasks);
  std::vector<int> usage(181, 0);
  for (const MaintenanceTask& t : a.tasks) {
    if (!t.scheduled()) continue;
    CHECK(*t.start_day >= t.event.day);
    CHECK(*t.completion_day() <= 180);
    for (int d = *t.start_day; d <= *t.completion_day(); ++d) usage[d] += t.technicians_needed;
  }
  for (int d = 1; d <= 180; ++d) {
    CHECK(usage[d] <= 8);
    CHECK(a.ledger.available_on(d) == 8 - usage[d]);
  }
}

TEST_CASE("transport assignment follows use rates") {
  Bundle b = load_config(OWM_REFERENCE_CONFIG);
  RandomStream s(11);
  CHECK(assign_transport(b.transports, TransportPolicy::ctv_only, s) == 0);
  std::vector<int> counts(3, 0);
  const int n = 200000;
  for (int i = 0; i < n; ++i) ++counts[assign_transport(b.transports, TransportPolicy::sample_use_rate, s)];
  CHECK(double(counts[0]) / n == doctest::Approx(0.9646).epsilon(0.005));
  CHECK(double(counts[2]) / n == doctest::Approx(0.0236).epsilon(0.05));
}
