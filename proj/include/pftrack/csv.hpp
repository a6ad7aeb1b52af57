#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pftrack {

// Formats a double with 17 significant digits, enough to round-trip the
// exact binary value through text.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Minimal writer for the comma-separated outputs: '.' decimal point,
// '\n' line endings, one header row, no quoting (no field contains a comma).
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header)
      : out_(path, std::ios::binary) {
    if (!out_) throw std::runtime_error("cannot open for writing: " + path);
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) out_ << ',';
      out_ << header[i];
    }
    out_ << '\n';
  }

  void field(const std::string& v) {
    if (col_++) out_ << ',';
    out_ << v;
  }
  void field(double v) { field(format_double(v)); }
  void field(int v) { field(std::to_string(v)); }
  void field(long long v) { field(std::to_string(v)); }

  void end_row() {
    out_ << '\n';
    col_ = 0;
  }

  void close() { out_.close(); }

 private:
  std::ofstream out_;
  int col_ = 0;
};

// Reads a whole CSV file into rows of string fields. First row is the header.
inline std::vector<std::vector<std::string>> read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    rows.push_back(std::move(fields));
  }
  return rows;
}

inline double parse_double_field(const std::string& s) {
  std::size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::runtime_error("malformed numeric field: " + s);
  return v;
}

}  // namespace pftrack
