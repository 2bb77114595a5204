#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "nqho/grid.hpp"
#include "nqho/srm.hpp"
#include "nqho/ssfm.hpp"
#include "nqho/stability.hpp"

namespace nqho {

/// File system failure; what() names the path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All writers emit a header row and serialize doubles with 17 significant
// digits, which round-trips exactly through read_csv.

/// Columns: x, re, im, abs.
void write_profile(const WaveField& field, const std::filesystem::path& path);
/// Columns: mu, power, slope, converged.
void write_curve(const PowerCurve& curve, const std::filesystem::path& path);
/// Columns: t, total_power, peak_amplitude, peak_location, windowed_power.
void write_record(const PropagationRecord& record, const std::filesystem::path& path);
/// Columns: iteration, beta.
void write_beta_history(const SrmResult& result, const std::filesystem::path& path);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Parses a numeric CSV written by the functions above.
CsvTable read_csv(const std::filesystem::path& path);

/// printf("%.17g")-style text; parses back to the identical double.
std::string format_double(double value);

}  // namespace nqho
