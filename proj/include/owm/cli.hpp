#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "owm/contract_problem.hpp"

namespace owm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 1;
inline constexpr int kExitRuntimeError = 2;

struct CommonOptions {
  std::filesystem::path config;
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;
  std::filesystem::path out = "out";
  unsigned threads = 1;
};

struct OptimizeOverrides {
  std::optional<std::size_t> population;
  std::optional<int> max_generations;
  std::optional<int> stall_generations;
  std::optional<double> tolerance;
  std::optional<double> crossover_fraction;
  std::optional<double> elite_fraction;
  bool no_mutation = false;
  std::optional<std::size_t> eval_samples;
  std::optional<std::size_t> final_samples;
  std::optional<int> context_points;
};

int cmd_simulate(const CommonOptions& options, std::ostream& out, std::ostream& err);
int cmd_sweep(const CommonOptions& options, const std::vector<std::string>& axes, std::ostream& out,
              std::ostream& err);
int cmd_optimize(const CommonOptions& options, const OptimizeOverrides& overrides, std::ostream& out,
                 std::ostream& err);
int cmd_report(const std::filesystem::path& run_dir, std::ostream& out, std::ostream& err);
/// Re-executes the command recorded in a manifest into `out_dir`.
int cmd_replay(const std::filesystem::path& manifest, const std::filesystem::path& out_dir, unsigned threads,
               std::ostream& out, std::ostream& err);

/// Full command line entry point (argv[0] included).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a of a file's bytes, as 16 hex digits.
std::string file_hash(const std::filesystem::path& path);

}  // namespace owm::cli
