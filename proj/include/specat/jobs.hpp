#pragma once

// One CLI job: config in, schema-versioned report out. Reports are pure
// functions of the config, the input files and the seed.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "specat/io.hpp"

namespace specat {

inline constexpr std::string_view kReportSchema = "specat.report/1";
inline constexpr std::string_view kDecompositionSchema = "specat.decomposition/1";

enum class ExitStatus : int {
  pass = 0,
  verification_failed = 1,
  input_error = 2,
  precondition = 3,
  type_mismatch = 4,
  unknown_element = 5,
  internal = 7,
};

ExitStatus exit_status_for(ErrorKind kind);
std::string_view exit_status_name(ExitStatus s);

struct JobConfig {
  std::string command;  // verify | separate | equitable | laws | functor
  std::vector<std::string> inputs;
  std::string instance;  // mat-r | mat-c | mat-nn | rel | rel-l; empty: inferred
  std::string lattice;   // builtin spec or path; empty: from input or bool
  std::optional<double> tol_abs;
  std::optional<double> tol_rel;
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> seed;  // empty: SPECAT_SEED, then 0
  std::string partition;              // equitable: user partition file
  std::string hom;                    // functor / laws: hom spec or file
  std::size_t max_dim = 5;
  std::size_t max_carrier = 6;
  bool timing = false;
};

struct Report {
  io::Json body;
  ExitStatus status = ExitStatus::pass;
  std::string dot;  // empty when the job has no diagram
};

// Never throws: input and precondition errors become error reports.
Report run_job(const JobConfig& config);

// format: json | text | dot. Throws PreconditionError when dot is unavailable.
std::string render_report(const Report& report, std::string_view format);

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed);

}  // namespace specat
