#include "orbistat/report.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "orbistat/errors.hpp"

namespace orbistat::report {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(8);
  os << v;
  return os.str();
}

}  // namespace

void write_csv(const CountReport& r, std::ostream& os) {
  os << "B,count,main_term,ratio,seconds\n";
  for (const CountRow& row : r.rows)
    os << row.B << "," << row.count << "," << fmt(row.main_term) << ","
       << fmt(row.ratio) << "," << fmt(row.seconds) << "\n";
}

nlohmann::json to_json(const CountReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const CountRow& row : r.rows)
    rows.push_back({{"B", row.B},
                    {"count", row.count},
                    {"main_term", row.main_term},
                    {"ratio", row.ratio},
                    {"seconds", row.seconds}});
  return {{"title", r.title}, {"rows", rows}, {"notes", r.notes}};
}

void write_report(const CountReport& r, const std::string& path) {
  if (path == "-") {
    write_csv(r, std::cout);
    return;
  }
  std::ofstream os(path);
  if (!os) throw validation_error("cannot open output file " + path);
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
    os << to_json(r).dump(2) << "\n";
  else
    write_csv(r, os);
}

}  // namespace orbistat::report
