#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace orbistat::report {

struct CountRow {
  std::int64_t B = 0;
  std::int64_t count = 0;
  double main_term = 0.0;
  double ratio = 0.0;  // count / main_term
  double seconds = 0.0;
};

struct CountReport {
  std::string title;
  std::vector<CountRow> rows;
  std::vector<std::string> notes;
};

// Header line B,count,main_term,ratio,seconds followed by one row per entry.
void write_csv(const CountReport& r, std::ostream& os);

nlohmann::json to_json(const CountReport& r);

// path "-" writes CSV to stdout; a path ending in .json writes the JSON
// mirror, anything else CSV.
void write_report(const CountReport& r, const std::string& path);

}  // namespace orbistat::report
