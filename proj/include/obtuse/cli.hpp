#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "obtuse/enumerate.hpp"
#include "obtuse/searchverify.hpp"

namespace obtuse::cli {

enum ExitCode : int {
  kOk = 0,
  kUnexpected = 1,
  kUsage = 2,
  kUnsatisfied = 10,
  kDiscrepancy = 11,
};

enum class OutputFormat { jsonl, csv, summary };

struct RunConfig {
  std::uint64_t n_max = 0;
  Region region = Region::strongly_obtuse;
  int workers = 1;
  OutputFormat format = OutputFormat::jsonl;
  bool failures_only = false;
  bool validate_oracle = false;
  HintMode hints = HintMode::off;
};

struct VerifyConfig {
  std::string target;  // beta | coverage | jacobsthal | reduction | geometry
  std::optional<search::Regime> regime;
  std::optional<search::Boundary> boundary;
  search::WitnessCounting counting = search::WitnessCounting::distinct_bases;
  int workers = 1;
  std::uint64_t beta_max = 10'000;
  std::uint64_t jacobsthal_limit = 100'000;
  std::uint64_t geometry_n_max = 2'012;
};

int cmd_check(std::uint64_t p, std::uint64_t q, std::uint64_t r, std::ostream& out, std::ostream& err);
int cmd_enumerate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyConfig& config, std::ostream& out, std::ostream& err);
int cmd_counterexample(std::uint64_t p, std::uint64_t x, std::ostream& out, std::ostream& err);

/// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace obtuse::cli
