#include "owm/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "owm/export.hpp"
#include "owm/model.hpp"
#include "owm/simulator.hpp"

namespace owm::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

/// Errors that map to exit code 1 (bad inputs rather than failed runs).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << text;
}

template <typename Fn>
void write_file(const fs::path& path, Fn&& fn) {
  std::ostringstream buf;
  fn(buf);
  write_text(path, buf.str());
}

void write_manifest(const fs::path& dir, json manifest) {
  manifest["timestamp"] = utc_timestamp();
  manifest["tool_version"] = OWM_VERSION;
  const fs::path tmp = dir / "manifest.json.tmp";
  write_text(tmp, manifest.dump(2) + "\n");
  fs::rename(tmp, dir / "manifest.json");
}

Bundle load_bundle(const CommonOptions& o) {
  Bundle b = load_config(o.config);
  if (o.seed) b.sim.master_seed = *o.seed;
  if (o.samples) {
    if (*o.samples < 1) throw ConfigError("--samples", "samples >= 1 violated");
    b.sim.samples = *o.samples;
  }
  return b;
}

json base_manifest(const std::string& command, const CommonOptions& o, const Bundle& b) {
  return {{"command", command},
          {"config_path", fs::absolute(o.config).lexically_normal().string()},
          {"config_hash", file_hash(o.config)},
          {"master_seed", b.sim.master_seed},
          {"samples", b.sim.samples}};
}

void prepare_out(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory '" + dir.string() + "': " + ec.message());
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "runtime error: " << e.what() << '\n';
    return kExitRuntimeError;
  }
}

void print_stats(std::ostream& out, const ScenarioStats& s) {
  out << fmt::format("  samples                 {}\n", s.samples);
  out << fmt::format("  owner profit            {} +/- {} EUR (MoE {:.2f}%)\n", money(s.owner_profit.mean),
                     money(s.owner_profit.ci95), 100 * s.owner_profit.margin_of_error());
  out << fmt::format("  contractor profit       {} +/- {} EUR (MoE {:.2f}%)\n", money(s.contractor_profit.mean),
                     money(s.contractor_profit.ci95), 100 * s.contractor_profit.margin_of_error());
  out << fmt::format("  total profit            {} +/- {} EUR\n", money(s.total_profit.mean),
                     money(s.total_profit.ci95));
  out << fmt::format("  farm availability       {} +/- {}\n", fraction(s.farm_availability.mean),
                     fraction(s.farm_availability.ci95));
  out << fmt::format("  energy availability     {} +/- {}\n", fraction(s.energy_availability.mean),
                     fraction(s.energy_availability.ci95));
  out << fmt::format("  generation              {:.2f} +/- {:.2f} MWh (MoE {:.2f}%)\n", s.generation_mwh.mean,
                     s.generation_mwh.ci95, 100 * s.generation_mwh.margin_of_error());
  out << fmt::format("  failures / unscheduled  {:.2f} / {:.2f}\n", s.failures.mean, s.unscheduled.mean);
}

}  // namespace

std::string file_hash(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("", "cannot open config file '" + path.string() + "'");
  std::uint64_t h = 0xcbf29ce484222325ULL;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return fmt::format("{:016x}", h);
}

int cmd_simulate(const CommonOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Bundle b = load_bundle(o);
    prepare_out(o.out);
    const ScenarioCache cache(b, static_cast<std::size_t>(b.sim.samples), o.threads);
    const auto records = run_records(b, b.contract, cache, o.threads);
    const ScenarioStats stats = aggregate(records);
    const SampleOutcome first = run_sample_on(b, b.contract, cache[0]);

    std::vector<std::string> outputs = {"scenario_stats.json", "ledger.csv",          "ledger_sample0.json",
                                        "environment_sample0.csv", "failures_sample0.csv", "drv_sample0.csv",
                                        "availability_sample0.csv"};
    json stats_json = to_json(stats);
    stats_json["contract"] = {{"technicians", b.contract.technicians},
                              {"threshold_us", b.contract.threshold_us},
                              {"threshold_ld", b.contract.threshold_ld},
                              {"cap_fraction", b.contract.cap_fraction},
                              {"fixed_fee", b.contract.fixed_fee}};
    write_text(o.out / "scenario_stats.json", stats_json.dump(2) + "\n");
    write_file(o.out / "ledger.csv", [&](std::ostream& f) { write_records_csv(f, records); });
    write_text(o.out / "ledger_sample0.json", to_json(first.ledger).dump(2) + "\n");
    write_file(o.out / "environment_sample0.csv",
               [&](std::ostream& f) { write_environment_csv(f, first.scenario.environment); });
    write_file(o.out / "failures_sample0.csv", [&](std::ostream& f) { write_failures_csv(f, first.scenario.failures); });
    write_file(o.out / "drv_sample0.csv", [&](std::ostream& f) { write_drv_csv(f, first.drv); });
    write_file(o.out / "availability_sample0.csv", [&](std::ostream& f) { write_availability_csv(f, first.matrix); });

    json manifest = base_manifest("simulate", o, b);
    manifest["outputs"] = outputs;
    manifest["arguments"] = json::object();
    write_manifest(o.out, manifest);

    out << "simulate: " << o.out.string() << '\n';
    print_stats(out, stats);
    for (const SchedulerWarning& w : first.drv.warnings) {
      err << fmt::format("warning: turbine {} mode {} day {}: {}\n", w.turbine_id, w.mode_id, w.day, w.reason);
    }
    return kExitOk;
  });
}

int cmd_sweep(const CommonOptions& o, const std::vector<std::string>& axis_specs, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    if (axis_specs.empty()) throw UsageError("sweep needs at least one --axis name=start:stop:step");
    std::vector<SweepAxis> axes;
    for (const std::string& spec : axis_specs) axes.push_back(parse_axis(spec));
    const Bundle b = load_bundle(o);
    prepare_out(o.out);
    const SweepResult result = sweep(b, axes, static_cast<std::size_t>(b.sim.samples), o.threads);

    std::vector<std::string> outputs = {"sweep.csv", "argmax_trace.csv"};
    write_file(o.out / "sweep.csv", [&](std::ostream& f) { write_sweep_csv(f, result); });
    write_file(o.out / "argmax_trace.csv", [&](std::ostream& f) { write_argmax_csv(f, result); });
    for (const std::string& name : write_plot_data(o.out, result)) outputs.push_back(name);

    json manifest = base_manifest("sweep", o, b);
    manifest["outputs"] = outputs;
    manifest["arguments"] = {{"axes", axis_specs}};
    write_manifest(o.out, manifest);

    out << fmt::format("sweep: {} cells, {} samples each -> {}\n", result.cells.size(), b.sim.samples,
                       o.out.string());
    for (const std::string& w : result.warnings) err << "warning: " << w << '\n';
    return kExitOk;
  });
}

int cmd_optimize(const CommonOptions& o, const OptimizeOverrides& ov, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Bundle b = load_bundle(o);
    OptimizeOptions opts;
    opts.threads = o.threads;
    if (ov.population) opts.ga.population = *ov.population;
    if (ov.max_generations) opts.ga.max_generations = *ov.max_generations;
    if (ov.stall_generations) opts.ga.stall_generations = *ov.stall_generations;
    if (ov.tolerance) opts.ga.tolerance = *ov.tolerance;
    if (ov.crossover_fraction) opts.ga.crossover_fraction = *ov.crossover_fraction;
    if (ov.elite_fraction) opts.ga.elite_fraction = *ov.elite_fraction;
    opts.ga.mutation = !ov.no_mutation;
    if (ov.eval_samples) opts.eval_samples = *ov.eval_samples;
    opts.final_samples = ov.final_samples.value_or(static_cast<std::size_t>(b.sim.samples));
    if (ov.context_points) opts.context_points = *ov.context_points;
    validate(opts.ga);
    if (opts.eval_samples < 2 || opts.final_samples < 2) throw UsageError("sample counts must be >= 2");
    prepare_out(o.out);

    const OptimizeResult result = optimize_contract(b, opts);

    write_file(o.out / "pareto.csv", [&](std::ostream& f) { write_pareto_csv(f, result.pareto); });
    write_file(o.out / "convergence.csv", [&](std::ostream& f) { write_convergence_csv(f, result.ga.log); });
    json compromise = json::object();
    if (!result.pareto.empty()) {
      const ParetoSolution& s = result.pareto[result.compromise];
      compromise = {{"index", result.compromise},
                    {"r_us", s.decision.threshold_us},
                    {"r_ld", s.decision.threshold_ld},
                    {"lambda", s.decision.cap_fraction},
                    {"tech", s.decision.technicians},
                    {"tech_rounded", s.decision.technicians_rounded()},
                    {"obj1", s.objectives.obj1},
                    {"obj2", s.objectives.obj2},
                    {"stats", to_json(s.stats)}};
    }
    json report = {{"compromise", compromise},
                   {"pareto_size", result.pareto.size()},
                   {"generations", result.ga.generations},
                   {"stop_reason", result.ga.stop_reason},
                   {"scaling_context",
                    {{"owner_min", result.context.owner_min},
                     {"owner_max", result.context.owner_max},
                     {"contractor_min", result.context.contractor_min},
                     {"contractor_max", result.context.contractor_max}}}};
    write_text(o.out / "compromise.json", report.dump(2) + "\n");

    json manifest = base_manifest("optimize", o, b);
    manifest["samples"] = opts.final_samples;
    manifest["outputs"] = {"pareto.csv", "compromise.json", "convergence.csv"};
    manifest["arguments"] = {{"population", opts.ga.population},
                             {"max_generations", opts.ga.max_generations},
                             {"stall_generations", opts.ga.stall_generations},
                             {"tolerance", opts.ga.tolerance},
                             {"crossover_fraction", opts.ga.crossover_fraction},
                             {"elite_fraction", opts.ga.elite_fraction},
                             {"mutation", opts.ga.mutation},
                             {"eval_samples", opts.eval_samples},
                             {"final_samples", opts.final_samples},
                             {"context_points", opts.context_points}};
    write_manifest(o.out, manifest);

    out << fmt::format("optimize: {} generations ({}), {} Pareto solutions -> {}\n", result.ga.generations,
                       result.ga.stop_reason, result.pareto.size(), o.out.string());
    if (!result.pareto.empty()) {
      const ParetoSolution& s = result.pareto[result.compromise];
      out << fmt::format("  compromise: r_us {} r_ld {} lambda {} tech {} (Q={}) obj1 {} total profit {} EUR\n",
                         fraction(s.decision.threshold_us), fraction(s.decision.threshold_ld),
                         fraction(s.decision.cap_fraction), fraction(s.decision.technicians),
                         s.decision.technicians_rounded(), fraction(s.objectives.obj1), money(-s.objectives.obj2));
    }
    return kExitOk;
  });
}

namespace {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    throw UsageError("column '" + name + "' missing");
  }
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

CsvTable read_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("missing '" + path.string() + "'");
  CsvTable t;
  std::string line;
  if (!std::getline(in, line)) throw UsageError("empty '" + path.string() + "'");
  t.header = split(line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto cells = split(line);
    if (cells.size() != t.header.size()) throw UsageError("corrupt row in '" + path.string() + "'");
    t.rows.push_back(std::move(cells));
  }
  return t;
}

json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("missing '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("corrupt '" + path.string() + "': " + e.what());
  }
}

Summary summary_from(const json& j) { return {j.at("mean").get<double>(), j.at("std").get<double>(), j.at("ci95").get<double>()}; }

void report_simulate(const fs::path& dir, std::ostream& out) {
  const json stats = read_json(dir / "scenario_stats.json");
  ScenarioStats s;
  try {
    s.samples = stats.at("samples").get<std::size_t>();
    s.owner_profit = summary_from(stats.at("owner_profit"));
    s.contractor_profit = summary_from(stats.at("contractor_profit"));
    s.total_profit = summary_from(stats.at("total_profit"));
    s.farm_availability = summary_from(stats.at("farm_availability"));
    s.energy_availability = summary_from(stats.at("energy_availability"));
    s.generation_mwh = summary_from(stats.at("generation_mwh"));
    s.failures = summary_from(stats.at("failures"));
    s.unscheduled = summary_from(stats.at("unscheduled"));
  } catch (const json::exception& e) {
    throw UsageError(std::string("corrupt scenario_stats.json: ") + e.what());
  }
  out << "scenario summary (mean +/- CI95)\n";
  print_stats(out, s);
  out << "  conflict metric         n/a (needs a sweep to scale profits)\n";
}

void report_sweep(const fs::path& dir, std::ostream& out) {
  const CsvTable t = read_csv(dir / "sweep.csv");
  const std::size_t samples = t.column("samples");
  const std::size_t owner = t.column("owner_mean"), owner_ci = t.column("owner_ci95");
  const std::size_t con = t.column("contractor_mean"), con_ci = t.column("contractor_ci95");
  const std::size_t awf = t.column("farm_availability_mean"), ag = t.column("energy_availability_mean");
  const std::size_t con_moe = t.column("contractor_margin_of_error");
  const std::size_t gen_moe = t.column("generation_margin_of_error");
  const std::size_t conflict = t.column("conflict");
  std::size_t axes = 0;
  while (axes < t.header.size() && t.header[axes] != "samples") ++axes;

  std::string axis_head;
  for (std::size_t k = 0; k < axes; ++k) axis_head += fmt::format("{:>9} ", t.header[k]);
  out << fmt::format("sweep summary: {} cells, {} samples per cell\n", t.rows.size(),
                     t.rows.empty() ? "0" : t.rows.front()[samples]);
  out << axis_head
      << fmt::format("{:>16} {:>13} {:>16} {:>13} {:>9} {:>9} {:>9} {:>9} {:>9}\n", "owner_mean", "owner_ci95",
                     "contractor_mean", "contr_ci95", "A_WF", "A_G", "MoE_con%", "MoE_gen%", "conflict");
  double worst_con = 0.0, worst_gen = 0.0;
  for (const auto& r : t.rows) {
    std::string coords;
    for (std::size_t k = 0; k < axes; ++k) coords += fmt::format("{:>9} ", r[k]);
    const double mc = std::stod(r[con_moe]) * 100, mg = std::stod(r[gen_moe]) * 100;
    worst_con = std::max(worst_con, mc);
    worst_gen = std::max(worst_gen, mg);
    out << coords
        << fmt::format("{:>16} {:>13} {:>16} {:>13} {:>9} {:>9} {:>9.3f} {:>9.3f} {:>9}\n", r[owner], r[owner_ci],
                       r[con], r[con_ci], r[awf], r[ag], mc, mg, r[conflict]);
  }
  out << fmt::format("max margin of error: contractor profit {:.3f}%, generation {:.3f}%\n", worst_con, worst_gen);
}

void report_optimize(const fs::path& dir, std::ostream& out) {
  const CsvTable t = read_csv(dir / "pareto.csv");
  const json report = read_json(dir / "compromise.json");
  out << fmt::format("Pareto set: {} solutions\n", t.rows.size());
  out << fmt::format("{:>10} {:>10} {:>10} {:>10} {:>16} {:>18}\n", "r_us", "r_ld", "lambda", "tech", "obj1",
                     "total_profit");
  const std::size_t obj2 = t.column("obj2");
  for (const auto& r : t.rows) {
    out << fmt::format("{:>10} {:>10} {:>10} {:>10} {:>16} {:>18}\n", r[t.column("r_us")], r[t.column("r_ld")],
                       r[t.column("lambda")], r[t.column("tech")], r[t.column("obj1")],
                       money(-std::stod(r[obj2])));
  }
  if (report.contains("compromise") && report["compromise"].contains("index")) {
    const json& c = report["compromise"];
    out << fmt::format("compromise: solution {} (conflict metric {}, total profit {} EUR)\n",
                       c.at("index").get<std::size_t>() + 1, fraction(c.at("obj1").get<double>()),
                       money(-c.at("obj2").get<double>()));
  }
}

}  // namespace

int cmd_report(const fs::path& run_dir, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!fs::is_directory(run_dir)) throw UsageError("'" + run_dir.string() + "' is not a run directory");
    const json manifest = read_json(run_dir / "manifest.json");
    if (!manifest.contains("command") || !manifest["command"].is_string()) throw UsageError("manifest has no command");
    const std::string command = manifest["command"].get<std::string>();
    out << fmt::format("run: {} (seed {}, tool {})\n", command, manifest.value("master_seed", std::uint64_t{0}),
                       manifest.value("tool_version", std::string{"?"}));
    if (command == "simulate") {
      report_simulate(run_dir, out);
    } else if (command == "sweep") {
      report_sweep(run_dir, out);
    } else if (command == "optimize") {
      report_optimize(run_dir, out);
    } else {
      throw UsageError("unknown command '" + command + "' in manifest");
    }
    return kExitOk;
  });
}

int cmd_replay(const fs::path& manifest_path, const fs::path& out_dir, unsigned threads, std::ostream& out,
               std::ostream& err) {
  json manifest;
  const int status = guarded(err, [&] {
    manifest = read_json(manifest_path);
    return kExitOk;
  });
  if (status != kExitOk) return status;
  return guarded(err, [&] {
    CommonOptions o;
    try {
      o.config = manifest.at("config_path").get<std::string>();
      o.seed = manifest.at("master_seed").get<std::uint64_t>();
      o.out = out_dir;
      o.threads = threads;
      if (file_hash(o.config) != manifest.at("config_hash").get<std::string>()) {
        throw UsageError("config '" + o.config.string() + "' changed since the manifest was written");
      }
      const std::string command = manifest.at("command").get<std::string>();
      const json& args = manifest.at("arguments");
      if (command == "simulate") {
        o.samples = manifest.at("samples").get<int>();
        return cmd_simulate(o, out, err);
      }
      if (command == "sweep") {
        o.samples = manifest.at("samples").get<int>();
        return cmd_sweep(o, args.at("axes").get<std::vector<std::string>>(), out, err);
      }
      if (command == "optimize") {
        OptimizeOverrides ov;
        ov.population = args.at("population").get<std::size_t>();
        ov.max_generations = args.at("max_generations").get<int>();
        ov.stall_generations = args.at("stall_generations").get<int>();
        ov.tolerance = args.at("tolerance").get<double>();
        ov.crossover_fraction = args.at("crossover_fraction").get<double>();
        ov.elite_fraction = args.at("elite_fraction").get<double>();
        ov.no_mutation = !args.at("mutation").get<bool>();
        ov.eval_samples = args.at("eval_samples").get<std::size_t>();
        ov.final_samples = args.at("final_samples").get<std::size_t>();
        ov.context_points = args.at("context_points").get<int>();
        return cmd_optimize(o, ov, out, err);
      }
      throw UsageError("cannot replay command '" + command + "'");
    } catch (const json::exception& e) {
      throw UsageError(std::string("corrupt manifest: ") + e.what());
    }
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Offshore wind O&M contract simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", OWM_VERSION);

  CommonOptions common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", common.config, "JSON config file")->required();
    sub->add_option("--seed", common.seed, "master seed (overrides the config)");
    sub->add_option("--samples", common.samples, "Monte Carlo samples (overrides the config)");
    sub->add_option("--out", common.out, "output directory")->capture_default_str();
    sub->add_option("--threads", common.threads, "worker threads, 0 = all cores (results do not depend on it)")
        ->capture_default_str();
  };

  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo run of the configured contract");
  add_common(simulate);

  std::vector<std::string> axes;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "grid sweep over contract terms");
  add_common(sweep_cmd);
  sweep_cmd->add_option("--axis", axes, "name=start:stop:step, name in {q, r_ld, r_us, lambda}; repeatable")
      ->required();

  OptimizeOverrides ov;
  CLI::App* optimize = app.add_subcommand("optimize", "multi-objective search for contract terms");
  add_common(optimize);
  optimize->add_option("--ga-population", ov.population, "population size (default 200)");
  optimize->add_option("--ga-generations", ov.max_generations, "maximum generations (default 800)");
  optimize->add_option("--ga-stall", ov.stall_generations, "stall window in generations (default 100)");
  optimize->add_option("--ga-tolerance", ov.tolerance, "stall tolerance (default 1e-4)");
  optimize->add_option("--ga-crossover", ov.crossover_fraction, "crossover fraction (default 0.8)");
  optimize->add_option("--ga-elite", ov.elite_fraction, "elite fraction (default 0.05)");
  optimize->add_flag("--ga-no-mutation", ov.no_mutation, "disable mutation");
  optimize->add_option("--eval-samples", ov.eval_samples, "samples per candidate evaluation (default 200)");
  optimize->add_option("--final-samples", ov.final_samples,
                       "samples for re-evaluating the final front (default: --samples / config)");
  optimize->add_option("--context-points", ov.context_points, "grid points per axis of the scaling pre-sweep");

  fs::path run_dir;
  CLI::App* report = app.add_subcommand("report", "summarize a completed run directory");
  report->add_option("--run", run_dir, "run directory")->required();

  fs::path manifest;
  fs::path replay_out = "replay";
  unsigned replay_threads = 1;
  CLI::App* replay = app.add_subcommand("replay", "re-run the command recorded in a manifest");
  replay->add_option("--manifest", manifest, "manifest.json of a previous run")->required();
  replay->add_option("--out", replay_out, "output directory")->capture_default_str();
  replay->add_option("--threads", replay_threads, "worker threads")->capture_default_str();

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << OWM_VERSION << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitConfigError;
  }

  if (*simulate) return cmd_simulate(common, out, err);
  if (*sweep_cmd) return cmd_sweep(common, axes, out, err);
  if (*optimize) return cmd_optimize(common, ov, out, err);
  if (*report) return cmd_report(run_dir, out, err);
  if (*replay) return cmd_replay(manifest, replay_out, replay_threads, out, err);
  return kExitConfigError;
}

}  // namespace owm::cli
