#include "fracvoigt/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include "fracvoigt/errors.hpp"

namespace fracvoigt::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_field(std::string_view field, std::size_t line) {
  field = trim(field);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (field.empty() || ec != std::errc() || end != field.data() + field.size() || !std::isfinite(v)) {
    throw IoError("line " + std::to_string(line) + ": bad number '" + std::string(field) + "'");
  }
  return v;
}

}  // namespace

void write_signal(std::ostream& out, const Signal& s, const std::vector<std::string>& trailer) {
  out << "t,value\n";
  char buf[64];
  for (int i = 0; i <= s.grid().n(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", s.grid().point(i), s[static_cast<std::size_t>(i)]);
    out << buf;
  }
  for (const auto& line : trailer) {
    out << "# " << line << '\n';
  }
  if (!out) {
    throw IoError("failed to write CSV output");
  }
}

void write_signal(const std::filesystem::path& path, const Signal& s,
                  const std::vector<std::string>& trailer) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  write_signal(out, s, trailer);
}

CsvTable read_table(std::istream& in) {
  CsvTable table;
  std::string raw;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) {
      continue;
    }
    if (line.front() == '#') {
      table.comments.emplace_back(trim(line.substr(1)));
      continue;
    }
    if (!header_seen) {
      header_seen = true;
      if (line != "t,value") {
        throw IoError("line " + std::to_string(line_no) + ": expected header 't,value'");
      }
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      throw IoError("line " + std::to_string(line_no) + ": expected two comma-separated fields");
    }
    table.t.push_back(parse_field(line.substr(0, comma), line_no));
    table.value.push_back(parse_field(line.substr(comma + 1), line_no));
  }
  if (in.bad()) {
    throw IoError("read error");
  }
  if (!header_seen) {
    throw IoError("missing header 't,value'");
  }
  return table;
}

Signal read_signal(std::istream& in) {
  CsvTable table = read_table(in);
  if (table.t.size() < 2) {
    throw IoError("a signal needs at least two rows");
  }
  if (table.t.front() != 0.0) {
    throw IoError("signal must start at t = 0");
  }
  const int n = static_cast<int>(table.t.size()) - 1;
  const double t_end = table.t.back();
  if (!(t_end > 0.0)) {
    throw IoError("signal end time must be positive");
  }
  const Grid grid(t_end, n);
  for (int i = 0; i <= n; ++i) {
    if (std::abs(table.t[static_cast<std::size_t>(i)] - grid.point(i)) > 1e-9 * t_end) {
      throw IoError("row " + std::to_string(i + 1) + ": times are not a uniform grid");
    }
  }
  return Signal(grid, std::move(table.value));
}

Signal read_signal(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "'");
  }
  return read_signal(in);
}

}  // namespace fracvoigt::io
