#pragma once

#include <ostream>

#include "nqho/run_config.hpp"

namespace nqho {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitNonConvergence = 2;
inline constexpr int kExitConfigError = 3;
inline constexpr int kExitIoError = 4;

/// Executes config.mode and writes CSV data plus manifest.json under
/// config.output_dir.  Data files never contain timestamps; the manifest
/// does.  Returns one of the kExit* codes; progress goes to `log`.
int run(const RunConfig& config, std::ostream& log);

}  // namespace nqho
