#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "fracvoigt/grid.hpp"

namespace fracvoigt::io {

// Two-column table `t,value` with optional `#` comment lines.
struct CsvTable {
  std::vector<double> t;
  std::vector<double> value;
  std::vector<std::string> comments;  // without the leading "# "
};

// Writes the header, one `%.17g` row per grid point, then each trailer line
// prefixed with "# ".  Output is byte-for-byte deterministic.
void write_signal(std::ostream& out, const Signal& s, const std::vector<std::string>& trailer = {});
void write_signal(const std::filesystem::path& path, const Signal& s,
                  const std::vector<std::string>& trailer = {});

// Throws IoError on unreadable or malformed input.
CsvTable read_table(std::istream& in);

// Reads a table whose t column is a uniform grid starting at 0.  Times are
// matched against the grid to 1e-9 relative; values are taken verbatim.
Signal read_signal(std::istream& in);
Signal read_signal(const std::filesystem::path& path);

}  // namespace fracvoigt::io
