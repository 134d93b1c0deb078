#include "owm/export.hpp"

#include <fstream>

#include <fmt/format.h>

namespace owm {

using nlohmann::json;

std::string money(double eur) { return fmt::format("{:.2f}", eur); }
std::string fraction(double value) { return fmt::format("{:.6f}", value); }

namespace {
std::string number(double v) { return fmt::format("{:.6f}", v); }
}  // namespace

void write_environment_csv(std::ostream& out, const DailyEnvironment& env) {
  out << "day,wind_ms,wave_m,price_eur_mwh,demand_mwh\n";
  for (int d = 1; d <= env.days(); ++d) {
    const auto i = static_cast<std::size_t>(d - 1);
    out << fmt::format("{},{},{},{},{}\n", d, number(env.wind_speed[i]), number(env.wave_height[i]),
                       money(env.price[i]), number(env.demand[i]));
  }
}

void write_failures_csv(std::ostream& out, std::span<const FailureEvent> failures) {
  out << "turbine,mode,day\n";
  for (const FailureEvent& e : failures) out << fmt::format("{},{},{}\n", e.turbine_id, e.mode_id, e.day);
}

void write_drv_csv(std::ostream& out, const DayOfRepairVector& drv) {
  out << "turbine,mode,occurrence_day,required_technicians,repair_days,available_technicians,day_of_repair\n";
  for (const MaintenanceTask& t : drv.tasks) {
    out << fmt::format("{},{},{},{},{},{},{}\n", t.event.turbine_id, t.event.mode_id, t.event.day,
                       t.technicians_needed, t.repair_days,
                       t.scheduled() ? std::to_string(t.available_at_start) : std::string{},
                       t.scheduled() ? std::to_string(*t.start_day) : std::string{});
  }
}

void write_availability_csv(std::ostream& out, const AvailabilityMatrix& m) {
  out << "turbine";
  for (int d = 1; d <= m.days(); ++d) out << ",d" << d;
  out << '\n';
  for (int w = 1; w <= m.turbines(); ++w) {
    out << w;
    for (int d = 1; d <= m.days(); ++d) out << ',' << (m.at(w, d) ? '1' : '0');
    out << '\n';
  }
}

namespace {
json components_json(const CashflowComponents& c) {
  return {{"energy_sales", c.energy_sales},
          {"shortage", c.shortage},
          {"startup", c.startup},
          {"materials", c.materials},
          {"fixed_fee", c.fixed_fee},
          {"technician_labor", c.technician_labor},
          {"transport_distance", c.transport_distance},
          {"transport_idle", c.transport_idle},
          {"penalty_wf", c.penalty_wf},
          {"penalty_wt", c.penalty_wt},
          {"penalty_g", c.penalty_g},
          {"liquidated_damages", c.liquidated_damages},
          {"upside_sharing", c.upside_sharing}};
}

const char* kComponentColumns =
    "energy_sales,shortage,startup,materials,fixed_fee,technician_labor,transport_distance,transport_idle,"
    "penalty_wf,penalty_wt,penalty_g,liquidated_damages,upside_sharing";

std::string component_cells(const CashflowComponents& c) {
  return fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}", money(c.energy_sales), money(c.shortage),
                     money(c.startup), money(c.materials), money(c.fixed_fee), money(c.technician_labor),
                     money(c.transport_distance), money(c.transport_idle), money(c.penalty_wf), money(c.penalty_wt),
                     money(c.penalty_g), money(c.liquidated_damages), money(c.upside_sharing));
}
}  // namespace

json to_json(const CashflowLedger& l) {
  return {{"owner_income", l.owner_income},
          {"owner_cost", l.owner_cost},
          {"owner_profit", l.owner_profit},
          {"contractor_income", l.contractor_income},
          {"contractor_cost", l.contractor_cost},
          {"contractor_profit", l.contractor_profit},
          {"components", components_json(l.components)}};
}

json to_json(const Summary& s) {
  return {{"mean", s.mean}, {"std", s.std}, {"ci95", s.ci95}};
}

json to_json(const ScenarioStats& s) {
  json j = {{"samples", s.samples},
            {"owner_profit", to_json(s.owner_profit)},
            {"contractor_profit", to_json(s.contractor_profit)},
            {"total_profit", to_json(s.total_profit)},
            {"farm_availability", to_json(s.farm_availability)},
            {"energy_availability", to_json(s.energy_availability)},
            {"generation_mwh", to_json(s.generation_mwh)},
            {"failures", to_json(s.failures)},
            {"unscheduled", to_json(s.unscheduled)},
            {"mean_owner_income", s.mean_owner_income},
            {"mean_owner_cost", s.mean_owner_cost},
            {"mean_contractor_income", s.mean_contractor_income},
            {"mean_contractor_cost", s.mean_contractor_cost},
            {"mean_components", components_json(s.mean_components)}};
  if (s.scaled_owner) j["scaled_owner"] = *s.scaled_owner;
  if (s.scaled_contractor) j["scaled_contractor"] = *s.scaled_contractor;
  return j;
}

void write_records_csv(std::ostream& out, std::span<const SampleRecord> records) {
  out << "sample,owner_income,owner_cost,owner_profit,contractor_income,contractor_cost,contractor_profit,"
      << kComponentColumns << ",farm_availability,energy_availability,generation_mwh,failures,unscheduled\n";
  for (const SampleRecord& r : records) {
    const CashflowLedger& l = r.ledger;
    out << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}\n", r.sample_index, money(l.owner_income),
                       money(l.owner_cost), money(l.owner_profit), money(l.contractor_income),
                       money(l.contractor_cost), money(l.contractor_profit), component_cells(l.components),
                       fraction(r.farm_availability), fraction(r.energy_availability), number(r.generation_mwh),
                       r.failures, r.unscheduled);
  }
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
  for (const SweepAxis& a : result.axes) out << a.name() << ',';
  out << "samples,owner_mean,owner_ci95,contractor_mean,contractor_ci95,total_mean,total_ci95,"
         "farm_availability_mean,energy_availability_mean,generation_mean,generation_ci95,"
         "contractor_margin_of_error,generation_margin_of_error,scaled_owner,scaled_contractor,conflict\n";
  for (const SweepCell& c : result.cells) {
    for (double v : c.coordinates) out << fraction(v) << ',';
    const ScenarioStats& s = c.stats;
    const double so = s.scaled_owner.value_or(0.0);
    const double sc = s.scaled_contractor.value_or(0.0);
    out << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", s.samples, money(s.owner_profit.mean),
                       money(s.owner_profit.ci95), money(s.contractor_profit.mean), money(s.contractor_profit.ci95),
                       money(s.total_profit.mean), money(s.total_profit.ci95), fraction(s.farm_availability.mean),
                       fraction(s.energy_availability.mean), number(s.generation_mwh.mean),
                       number(s.generation_mwh.ci95), fraction(s.contractor_profit.margin_of_error()),
                       fraction(s.generation_mwh.margin_of_error()), fraction(so), fraction(sc),
                       fraction(std::abs(sc - so)));
  }
}

void write_argmax_csv(std::ostream& out, const SweepResult& result) {
  for (std::size_t k = 1; k < result.axes.size(); ++k) out << result.axes[k].name() << ',';
  const std::string x = result.axes.front().name();
  out << "owner_argmax_" << x << ",contractor_argmax_" << x << ",total_argmax_" << x << '\n';
  for (const ArgmaxTrace& t : result.traces) {
    for (double v : t.coordinates) out << fraction(v) << ',';
    out << fmt::format("{},{},{}\n", fraction(t.owner_argmax), fraction(t.contractor_argmax),
                       fraction(t.total_argmax));
  }
}

std::vector<std::string> write_plot_data(const std::filesystem::path& dir, const SweepResult& result) {
  struct Metric {
    const char* name;
    double (*value)(const ScenarioStats&);
  };
  static const Metric metrics[] = {
      {"owner_profit", [](const ScenarioStats& s) { return s.owner_profit.mean; }},
      {"contractor_profit", [](const ScenarioStats& s) { return s.contractor_profit.mean; }},
      {"total_profit", [](const ScenarioStats& s) { return s.total_profit.mean; }},
      {"scaled_owner", [](const ScenarioStats& s) { return s.scaled_owner.value_or(0.0); }},
      {"scaled_contractor", [](const ScenarioStats& s) { return s.scaled_contractor.value_or(0.0); }},
      {"scaled_sum", [](const ScenarioStats& s) { return s.scaled_owner.value_or(0.0) + s.scaled_contractor.value_or(0.0); }},
  };
  std::vector<std::string> files;
  for (const Metric& m : metrics) {
    const std::string name = fmt::format("plot_{}.dat", m.name);
    std::ofstream out(dir / name);
    out << '#';
    for (const SweepAxis& a : result.axes) out << ' ' << a.name();
    out << ' ' << m.name << '\n';
    for (const SweepCell& c : result.cells) {
      for (double v : c.coordinates) out << fraction(v) << ' ';
      out << fmt::format("{:.6f}\n", m.value(c.stats));
    }
    files.push_back(name);
  }
  return files;
}

void write_pareto_csv(std::ostream& out, std::span<const ParetoSolution> pareto) {
  out << "r_us,r_ld,lambda,tech,obj1,obj2,tech_rounded\n";
  for (const ParetoSolution& s : pareto) {
    out << fmt::format("{},{},{},{},{:.8e},{},{}\n", fraction(s.decision.threshold_us),
                       fraction(s.decision.threshold_ld), fraction(s.decision.cap_fraction),
                       fraction(s.decision.technicians), s.objectives.obj1, money(s.objectives.obj2),
                       s.decision.technicians_rounded());
  }
}

void write_convergence_csv(std::ostream& out, std::span<const GenerationLog> log) {
  out << "generation,hypervolume,front_size,evaluations\n";
  for (const GenerationLog& g : log) {
    out << fmt::format("{},{:.10e},{},{}\n", g.generation, g.hypervolume, g.front_size, g.evaluations);
  }
}

}  // namespace owm
