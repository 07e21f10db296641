#ifndef QATLAS_CLI_HPP
#define QATLAS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qatlas/classifier.hpp"

namespace qatlas {

enum class OutputFormat { kText, kMachine };

struct RunConfig {
  std::uint64_t seed = 1;
  int max_degree_budget = kDefaultDegreeBudget;
  int slice_retries = kDefaultSliceRetries;
  OutputFormat output = OutputFormat::kText;

  void validate() const;  // throws InputError
  ClassifyOptions classify_options() const { return {seed, max_degree_budget, slice_retries}; }
  InvariantOptions invariant_options() const { return {seed, max_degree_budget, slice_retries}; }
};

inline constexpr const char* kSeedEnvironmentVariable = "QUINTIC_ATLAS_SEED";

/// Flag value first, then the environment variable, then 1.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag, const char* env_value);

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;  // a check came out negative, or an unexpected error
inline constexpr int kInput = 2;    // malformed input or violated precondition
inline constexpr int kBudget = 3;   // degree budget exhausted
}  // namespace exit_code

std::string invariants_report(const VarietyInvariants& inv, OutputFormat format);

/// Entry point of the quintic_atlas tool. Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qatlas

#endif
