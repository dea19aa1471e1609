#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace flatspec::cli {

enum class Subcommand { Validate, Torus, TorusFd, Search, ConstructG2, CmCheck, PsfCheck, Report, Ansatz };

struct RunConfig {
  Subcommand subcommand = Subcommand::Validate;
  std::string matrix_path;                   // tensor file for `ansatz`
  std::map<std::string, std::string> flags;  // subcommand-specific, keyed without dashes
  double tol = 1e-9;
  long long bound = 2;
  std::optional<unsigned> threads;           // unset: THREADS, then hardware
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitConfig = 2;

struct ParsedArgs {
  std::optional<RunConfig> config;  // empty when help was printed or parsing failed
  int exit_code = kExitOk;
};

/// Parses argv; help and usage errors are written to `out` / `err`.
ParsedArgs parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Worker count: config, then the THREADS environment variable, then the
/// hardware concurrency (at least 1).
unsigned resolve_threads(const RunConfig& config);

/// 0 success, 1 validation failure, 2 parse or configuration error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace flatspec::cli
