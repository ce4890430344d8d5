#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "semilab/algebra/invariance.hpp"
#include "semilab/cli/config.hpp"

namespace semilab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitViolated = 2;
inline constexpr int kExitIndeterminate = 3;
inline constexpr int kExitConfig = 64;
inline constexpr int kExitBudget = 65;
inline constexpr int kExitIo = 74;

int verdict_exit_code(Verdict verdict);

// Each command writes its result to `out` and diagnostics to `err`, and
// returns the process exit code.

int cmd_instances_list(std::ostream& out);
int cmd_instances_show(const std::string& name, std::ostream& out, std::ostream& err);

struct InvarianceArgs {
  std::string instance;
  std::string kind;
  ScanMode mode = Sampled{};
  std::optional<double> tolerance;
  std::string format = "text";
};

// 0 iff the outcome matches the catalog annotation for the kind.
int cmd_invariance(const InvarianceArgs& args, std::ostream& out, std::ostream& err);

// 0 holds, 2 violated, 3 indeterminate (worst over the reports); 64 bad
// config, 65 budget, 74 I/O. "rearrangement-ratio" prints the report-only
// record and exits 0.
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

struct SuiteArgs {
  std::uint64_t seed = 1;
  std::size_t workers = 0;
  std::optional<std::string> out;
  std::vector<int> criteria;
};

int cmd_suite(const SuiteArgs& args, std::ostream& out, std::ostream& err);

struct EmbedArgs {
  std::string instance;
  std::uint64_t seed = 0;
  std::uint64_t samples = 10'000;
  std::size_t show = 5;
};

// 0 with sampled d(e, g) = d(g, g^2) values, 2 with the blocking witness.
int cmd_embed(const EmbedArgs& args, std::ostream& out, std::ostream& err);

struct StressArgs {
  std::string instance;
  std::string checker;
  std::uint64_t seed = 0;
  std::size_t trials = 200;
  std::size_t workers = 0;
};

// 0 when no violation is found, 2 otherwise (the shrunk reports are printed).
int cmd_stress(const StressArgs& args, std::ostream& out, std::ostream& err);

Json to_json(const PropertyReport& report, const MetricSemigroup& instance);

}  // namespace semilab
