#include "nqho/csv_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace nqho {
namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::out | std::ios::trunc | std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

void write_row(std::ostream& out, std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) out << ',';
    out << format_double(v);
    first = false;
  }
  out << '\n';
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  (void)ec;
  return std::string(buf, end);
}

void write_profile(const WaveField& field, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  out << "x,re,im,abs\n";
  const auto x = field.grid().nodes();
  for (std::size_t i = 0; i < field.size(); ++i) {
    write_row(out, {x[i], field[i].real(), field[i].imag(), std::abs(field[i])});
  }
  finish(out, path);
}

void write_curve(const PowerCurve& curve, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  out << "mu,power,slope,converged\n";
  for (std::size_t i = 0; i < curve.mu_values.size(); ++i) {
    write_row(out, {curve.mu_values[i], curve.powers[i], curve.slopes[i],
                    curve.converged_flags[i] ? 1.0 : 0.0});
  }
  finish(out, path);
}

void write_record(const PropagationRecord& record, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  out << "t,total_power,peak_amplitude,peak_location,windowed_power\n";
  for (std::size_t i = 0; i < record.times.size(); ++i) {
    write_row(out, {record.times[i], record.total_power[i], record.peak_amplitude[i],
                    record.peak_location[i], record.windowed_power[i]});
  }
  finish(out, path);
}

void write_beta_history(const SrmResult& result, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  out << "iteration,beta\n";
  for (std::size_t i = 0; i < result.beta_history.size(); ++i) {
    write_row(out, {static_cast<double>(i + 1), result.beta_history[i]});
  }
  finish(out, path);
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  CsvTable table;
  std::string line;
  if (std::getline(in, line)) {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) table.header.push_back(cell);
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::size_t start = 0;
    while (start <= line.size()) {
      const std::size_t comma = std::min(line.find(',', start), line.size());
      const std::string_view cell(line.data() + start, comma - start);
      double value = 0.0;
      if (cell == "nan") {
        value = std::nan("");
      } else if (cell == "inf" || cell == "-inf") {
        value = cell[0] == '-' ? -INFINITY : INFINITY;
      } else {
        auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
        if (ec != std::errc() || ptr != cell.data() + cell.size()) {
          throw IoError("malformed number '" + std::string(cell) + "' in " + path.string());
        }
      }
      row.push_back(value);
      start = comma + 1;
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace nqho
