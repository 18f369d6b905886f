#pragma once

// Command implementations behind the obb executable. Everything writes to
// caller-supplied streams so tests can drive the tool in-process.

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "obb/cli/problem.hpp"
#include "obb/engine.hpp"
#include "obb/pairset.hpp"

namespace obb::cli {

/// One statistics row of a run.
struct RunReport {
  Strategy strategy = Strategy::kCkr;
  std::string ordering;
  std::size_t basis_size = 0;
  PairStats stats;
  double seconds = 0.0;
  bool degree_compatible = true;
  std::optional<MultiDegree> truncation;
};

RunReport make_report(const EngineResult& r, const EngineConfig& cfg);

/// Rows aligned under the column headers
/// strategy #(G) #(Sigma) #(Sigma'') B M23 M48 Gain #(Theta) treated time.
std::string render_table(std::span<const RunReport> rows);
/// {"runs": [...]} with the same columns as exact integers.
std::string render_json(std::span<const RunReport> rows);

/// Leading-term-only analysis: Rules 1-3 and syzygy minimalization.
struct MinPairsReport {
  std::vector<CriticalPair> sigma;
  std::vector<CriticalPair> sigma2;
  std::vector<CriticalPair> sigma3;
  SigmaBamResult bam;
};

MinPairsReport run_minpairs(const Problem& p);
std::string render_minpairs(const MinPairsReport& r, bool json, bool trace);

/// Bare integer for one grading row, comma-joined otherwise.
std::string format_degree(const MultiDegree& d);

/// Exit code for a library error: 1 usage or invalid argument, 2 parse,
/// 3 math domain, 4 resource limit.
int exit_code(const Error& e);

/// Full command line (without the program name). Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace obb::cli
