#include "envwit/trajectory_io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace envwit {

namespace {

using ordered_json = nlohmann::ordered_json;

// Value column names accepted by the trajectory reader, in priority order.
// Covers the tables emitted by the example, envelope, and dephasing commands
// so their output can be piped straight back into the witness commands.
constexpr std::array<const char*, 7> kValueColumns = {
    "z_corr", "z", "x", "value", "z_obs", "observed", "gamma"};

std::string trim(std::string_view sv) {
  const auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!sv.empty() && is_space(sv.front())) sv.remove_prefix(1);
  while (!sv.empty() && is_space(sv.back())) sv.remove_suffix(1);
  return std::string(sv);
}

std::string to_lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

bool parse_field(const std::string& field, double& out) {
  const char* begin = field.data();
  const char* end = begin + field.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end && !field.empty();
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    const size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(trim(std::string_view(line).substr(start)));
      break;
    }
    fields.push_back(trim(std::string_view(line).substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

int line_of_byte(const std::string& text, size_t byte) {
  const size_t limit = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + limit, '\n'));
}

double require_finite(double v, int line) {
  if (!std::isfinite(v)) throw ParseError("non-finite value", line);
  return v;
}

std::vector<std::pair<double, double>> read_trajectory_json(
    const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(),
                     line_of_byte(text, e.byte));
  }
  if (!doc.is_array()) throw ParseError("expected a JSON array of objects", 1);
  std::vector<std::pair<double, double>> samples;
  samples.reserve(doc.size());
  int index = 0;
  for (const auto& item : doc) {
    ++index;
    if (!item.is_object())
      throw ParseError("array element " + std::to_string(index) +
                           " is not an object",
                       0);
    const auto time_it = item.contains("t") ? item.find("t") : item.find("time");
    if (time_it == item.end() || !time_it->is_number())
      throw ParseError("array element " + std::to_string(index) +
                           " lacks a numeric time key 't'",
                       0);
    double value = 0.0;
    bool found = false;
    for (const char* name : kValueColumns) {
      const auto it = item.find(name);
      if (it != item.end() && it->is_number()) {
        value = it->get<double>();
        found = true;
        break;
      }
    }
    if (!found)
      throw ParseError("array element " + std::to_string(index) +
                           " lacks a numeric value key (z_corr, z, x, ...)",
                       0);
    samples.emplace_back(require_finite(time_it->get<double>(), 0),
                         require_finite(value, 0));
  }
  return samples;
}

}  // namespace

std::string format_double(double value) {
  if (value == 0.0) value = 0.0;  // collapse -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void DataTable::add_row(std::vector<double> row) {
  if (row.size() != columns.size())
    throw std::invalid_argument("DataTable::add_row: width mismatch");
  rows.push_back(std::move(row));
}

std::string to_csv(const DataTable& table) {
  std::string out;
  for (size_t j = 0; j < table.columns.size(); ++j) {
    if (j) out += ',';
    out += table.columns[j];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) out += ',';
      out += format_double(row[j]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const DataTable& table) {
  ordered_json arr = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json obj = ordered_json::object();
    for (size_t j = 0; j < row.size(); ++j) obj[table.columns[j]] = row[j];
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

ParseError::ParseError(const std::string& message, int line_number)
    : std::runtime_error(line_number > 0
                             ? "line " + std::to_string(line_number) + ": " + message
                             : message),
      line(line_number) {}

std::vector<std::pair<double, double>> read_trajectory(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  const size_t first_printable = text.find_first_not_of(" \t\r\n");
  if (first_printable == std::string::npos)
    throw ParseError("empty trajectory input", 0);
  if (text[first_printable] == '[') return read_trajectory_json(text);

  std::vector<std::pair<double, double>> samples;
  std::istringstream lines(text);
  std::string line;
  int line_no = 0;
  int t_col = 0, v_col = 1;
  bool saw_data_or_header = false;
  while (std::getline(lines, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const std::vector<std::string> fields = split_csv_line(line);

    if (!saw_data_or_header) {
      saw_data_or_header = true;
      bool all_numeric = true;
      for (const auto& f : fields) {
        double unused;
        if (!parse_field(f, unused)) {
          all_numeric = false;
          break;
        }
      }
      if (!all_numeric) {
        // Header row: locate the time and value columns by name.
        t_col = v_col = -1;
        for (size_t j = 0; j < fields.size(); ++j) {
          const std::string name = to_lower(fields[j]);
          if (t_col < 0 && (name == "t" || name == "time"))
            t_col = static_cast<int>(j);
        }
        for (const char* candidate : kValueColumns) {
          for (size_t j = 0; j < fields.size(); ++j) {
            if (to_lower(fields[j]) == candidate) {
              v_col = static_cast<int>(j);
              break;
            }
          }
          if (v_col >= 0) break;
        }
        if (t_col < 0)
          throw ParseError("header names no time column ('t' or 'time')", line_no);
        if (v_col < 0)
          throw ParseError(
              "header names no value column (z_corr, z, x, value, z_obs, "
              "observed, or gamma)",
              line_no);
        continue;
      }
      if (fields.size() < 2)
        throw ParseError("expected at least two columns (t, value)", line_no);
    }

    const size_t needed = static_cast<size_t>(std::max(t_col, v_col)) + 1;
    if (fields.size() < needed)
      throw ParseError("row has " + std::to_string(fields.size()) +
                           " columns, need " + std::to_string(needed),
                       line_no);
    double t = 0.0, v = 0.0;
    if (!parse_field(fields[t_col], t))
      throw ParseError("cannot parse time field '" + fields[t_col] + "'", line_no);
    if (!parse_field(fields[v_col], v))
      throw ParseError("cannot parse value field '" + fields[v_col] + "'", line_no);
    samples.emplace_back(require_finite(t, line_no), require_finite(v, line_no));
  }
  if (samples.empty()) throw ParseError("no data rows found", 0);
  return samples;
}

std::vector<std::pair<double, double>> read_trajectory_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return read_trajectory(in);
}

void write_output(const std::string& payload, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << payload;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace envwit
