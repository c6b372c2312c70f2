#pragma once

// Byte-stable table emission (CSV and JSON) and trajectory ingestion.
// Numbers are printed with 17 significant digits so emitted files round-trip
// through double parsing and identical runs produce identical bytes.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace envwit {

// Formats with "%.17g"; -0 is normalized to 0 first.
std::string format_double(double value);

// A rectangular table of doubles with named columns. Flag columns hold 0/1.
struct DataTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_row(std::vector<double> row);
};

std::string to_csv(const DataTable& table);

// The same records as an array of objects, keys in column order.
std::string to_json(const DataTable& table);

// Thrown by the readers below; line is 1-based, 0 when not line-specific.
struct ParseError : std::runtime_error {
  ParseError(const std::string& message, int line_number);
  int line = 0;
};

// Reads an observed trajectory as (t, value) pairs. Two formats are accepted:
//   - CSV with '#' comment lines and an optional header. Headerless input
//     must have at least two columns and uses the first two. With a header,
//     the time column is named t or time and the value column is the first of
//     z_corr, z, x, value, z_obs, observed; extra columns are ignored, so
//     tables written by the envelope/example commands feed straight back in.
//   - a JSON array of objects with key t plus one of the value keys above.
// Non-finite or malformed entries raise ParseError with the offending line.
std::vector<std::pair<double, double>> read_trajectory(std::istream& in);
std::vector<std::pair<double, double>> read_trajectory_file(const std::string& path);

// Writes payload to the file at path, or to stdout when path is empty or "-".
void write_output(const std::string& payload, const std::string& path);

}  // namespace envwit
