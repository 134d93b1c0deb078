#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "owm/simulator.hpp"

using namespace owm;

TEST_CASE("summary statistics") {
  const std::vector<double> v = {2, 4, 4, 4, 5, 5, 7, 9};
  const Summary s = summarize(v);
  CHECK(s.mean == doctest::Approx(5.0));
  CHECK(s.std == doctest::Approx(std::sqrt(32.0 / 7)));
  CHECK(s.ci95 == doctest::Approx(1.96 * std::sqrt(32.0 / 7) / std::sqrt(8.0)));
  CHECK(s.margin_of_error() == doctest::Approx(s.ci95 / 5.0));

  const std::vector<double> one = {3};
  CHECK(summarize(one).std == 0.0);
  CHECK(std::isinf(Summary{}.margin_of_error()));
}

TEST_CASE("min-max scaling") {
  const std::vector<double> owner = {10, 20, 30};
  const std::vector<double> con = {5, 5, 5};
  const ScaledProfits s = scale_profits(owner, con);
  CHECK(s.owner == std::vector<double>{0.0, 0.5, 1.0});
  CHECK(s.contractor == std::vector<double>{0.0, 0.0, 0.0});
  CHECK(s.warnings.size() == 1);
  CHECK(s.context.scale_owner(25) == doctest::Approx(0.75));
  CHECK_THROWS_AS(scale_profits(std::vector<double>{}, con), std::invalid_argument);
}

TEST_CASE("axis parsing") {
  const SweepAxis q = parse_axis("q=7:46:1");
  CHECK(q.kind == AxisKind::technicians);
  CHECK(q.values.size() == 40);
  CHECK(q.values.back() == 46);
  const SweepAxis l = parse_axis("lambda=0.25:1.15:0.45");
  CHECK(l.values.size() == 3);
  CHECK(l.values[2] == doctest::Approx(1.15));
  CHECK(parse_axis("r_ld=0.6:0.6:0.1").values.size() == 1);
  CHECK(parse_axis("r_us=0.5:0.85:0.05").values.size() == 8);
  for (const char* bad : {"q", "q=1:2", "x=1:2:1", "q=2:1:1", "q=1:2:0", "q=1:a:1", "q=1:2:1:3"}) {
    CHECK_THROWS_AS(parse_axis(bad), std::invalid_argument);
  }
}

TEST_CASE("apply axis rounds technicians half up") {
  ContractTerms c;
  apply_axis(c, AxisKind::technicians, 16.5);
  CHECK(c.technicians == 17);
  apply_axis(c, AxisKind::cap_fraction, 0.9);
  CHECK(c.cap_fraction == 0.9);
}

TEST_CASE("identity of the ledger") {
  const Bundle b = load_config(OWM_REFERENCE_CONFIG);
  const SampleOutcome o = run_sample(b, b.contract, 0);
  const CashflowLedger& l = o.ledger;
  CHECK(l.owner_profit == doctest::Approx(l.owner_income - l.owner_cost));
  CHECK(l.contractor_profit == doctest::Approx(l.contractor_income - l.contractor_cost));
  CHECK(o.generation_mwh > 0.0);
  CHECK(o.matrix.turbines() == 62);
  CHECK(o.availability.farm <= 1.0);
  CHECK(o.drv.tasks.size() == o.scenario.failures.size());
}

TEST_CASE("common random numbers across contracts") {
  const Bundle b = load_config(OWM_REFERENCE_CONFIG);
  ContractTerms other = b.contract;
  other.cap_fraction = 0.9;
  other.threshold_us = 0.6;
  const SampleOutcome a = run_sample(b, b.contract, 5);
  const SampleOutcome c = run_sample(b, other, 5);
  CHECK(a.scenario.environment == c.scenario.environment);
  CHECK(a.drv.tasks == c.drv.tasks);
  CHECK(a.generation_mwh == c.generation_mwh);
}

TEST_CASE("thread count does not change results") {
  const Bundle b = load_config(OWM_REFERENCE_CONFIG);
  const ScenarioStats one = run_scenario(b, b.contract, 40, 1);
  const ScenarioStats four = run_scenario(b, b.contract, 40, 4);
  CHECK(one.owner_profit.mean == four.owner_profit.mean);
  CHECK(one.contractor_profit.std == four.contractor_profit.std);
  CHECK(one.generation_mwh.mean == four.generation_mwh.mean);
}

TEST_CASE("sweep layout and argmax traces") {
  const Bundle b = load_config(OWM_REFERENCE_CONFIG);
  const std::vector<SweepAxis> axes = {parse_axis("q=7:11:2"), parse_axis("lambda=0.25:0.75:0.5")};
  const SweepResult r = sweep(b, axes, 20);
  REQUIRE(r.cells.size() == 6);
  // last axis fastest
  CHECK(r.cells[0].coordinates == std::vector<double>{7, 0.25});
  CHECK(r.cells[1].coordinates == std::vector<double>{7, 0.75});
  CHECK(r.cells[2].coordinates == std::vector<double>{9, 0.25});
  CHECK(r.cells[5].contract.technicians == 11);
  REQUIRE(r.traces.size() == 2);
  for (std::size_t t = 0; t < 2; ++t) {
    double best = -1e300, arg = 0;
    for (std::size_t x = 0; x < 3; ++x) {
      const SweepCell& c = r.cells[x * 2 + t];
      if (c.stats.contractor_profit.mean > best) {
        best = c.stats.contractor_profit.mean;
        arg = c.coordinates[0];
      }
    }
    CHECK(r.traces[t].contractor_argmax == arg);
  }
  double lo = 2, hi = -1;
  for (const SweepCell& c : r.cells) {
    lo = std::min(lo, *c.stats.scaled_owner);
    hi = std::max(hi, *c.stats.scaled_owner);
  }
  CHECK(lo == 0.0);
  CHECK(hi == 1.0);
}

TEST_CASE("scripted bundle runs end to end") {
  Bundle b = test::scripted_bundle();
  b.failures[0].daily_rate = 0.05;
  const ScenarioStats s = run_scenario(b, b.contract, 50);
  CHECK(s.samples == 50);
  CHECK(s.failures.mean > 0.0);
  CHECK(s.farm_availability.mean > 0.0);
  CHECK(s.farm_availability.mean <= 1.0);
}
