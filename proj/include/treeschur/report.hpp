#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace treeschur {

// Deterministic float rendering used by every report column.
std::string format_double(double x);

// Column-oriented string table; CSV and JSON renderings are byte-stable for
// identical content.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
  void write_csv(std::ostream& os) const;
  void write_json(std::ostream& os) const;  // array of {column: value} objects
};

}  // namespace treeschur
