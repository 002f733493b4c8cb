#pragma once

// Command-line front end. Every subcommand builds a report::Report and emits
// it on `out`; diagnostics go to `err`.
//
// Exit status: 0 when every check passes, 1 when a check fails or a numerical
// routine gives up, 2 on argument errors.

#include "sp1kepler/report.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sp1kepler::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Sweep ranges for the verification targets. Unset fields fall back to the
/// defaults of each target, which are the acceptance ranges.
struct VerifySettings {
  std::vector<int> n;
  std::optional<int> kmax;
  std::optional<int> lmax;
  std::optional<int> sigma_max;
  std::optional<int> imax;
  std::optional<int> samples;
  std::optional<int> points;
  std::optional<int> grid;
  std::optional<double> tol;
  std::uint64_t seed = 7;
};

/// Names accepted by `verify`, in the order `verify all` runs them.
const std::vector<std::string>& verify_targets();

/// Runs one target (not "all"). Throws std::invalid_argument for an unknown name.
report::Report verify(const std::string& target, const VerifySettings& s);

/// Runs every target and concatenates the checks, prefixed by target name.
report::Report verify_all(const VerifySettings& s);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

} // namespace sp1kepler::cli
