#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hhquad/quadrature.hpp"

namespace hhquad::cli {

enum class OutputFormat { kText, kJson, kCsv };

/// One unit of work: an integrand, an interval, and how to run and report.
struct Job {
  std::string label = "job";
  std::string expr_text;
  double a = 0.0;
  double b = 0.0;
  QuadConfig config;
  OutputFormat output = OutputFormat::kText;
  bool compare_oracle = false;
};

// Exit codes (stable contract).
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;          // flag/job/expression errors
inline constexpr int kExitToleranceUnmet = 3; // adaptive run missed its target
inline constexpr int kExitDomain = 4;         // domain or curvature failure

/// Runs the flag-driven front-end. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs a batch of newline-delimited JSON jobs. One output record per job in
/// input order; per-job failures do not abort the batch. Returns 0 only when
/// every job succeeds, otherwise the highest per-job exit code.
int run_batch(std::istream& jobs, const Job& defaults, std::ostream& out,
              std::ostream& err);

}  // namespace hhquad::cli
