#include "gup1d/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gup1d::report {

std::string format_value(double v) {
  if (v == 0.0) return "0";
  char buf[40];
  const double a = std::abs(v);
  if (a >= 1e-3 && a < 1e6) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
  } else {
    std::snprintf(buf, sizeof(buf), "%.16e", v);
  }
  return buf;
}

std::string to_csv(const Table& t) {
  std::ostringstream out;
  for (const std::string& note : t.notes) out << "# " << note << "\n";
  for (size_t c = 0; c < t.columns.size(); ++c) {
    if (c) out << ",";
    out << t.columns[c].name;
  }
  out << "\n";
  for (const auto& row : t.rows) {
    if (row.size() != t.columns.size()) {
      throw std::invalid_argument("to_csv: row width mismatch");
    }
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) out << ",";
      if (t.columns[c].integer) {
        out << static_cast<long long>(row[c]);
      } else {
        out << format_value(row[c]);
      }
    }
    out << "\n";
  }
  return out.str();
}

Table parse_csv(const std::string& text) {
  Table t;
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const size_t at = line.find_first_not_of("# ");
      t.notes.push_back(at == std::string::npos ? "" : line.substr(at));
      continue;
    }
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!have_header) {
      for (const std::string& name : cells) t.columns.push_back({name, false});
      have_header = true;
      continue;
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const std::string& c : cells) {
      char* end = nullptr;
      const double v = std::strtod(c.c_str(), &end);
      if (end == c.c_str()) throw std::invalid_argument("parse_csv: bad number: " + c);
      row.push_back(v);
    }
    if (row.size() != t.columns.size()) {
      throw std::invalid_argument("parse_csv: row width mismatch");
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string to_json(const std::string& command, const ParamList& params,
                    const Table& rows, const std::vector<CheckRow>& checks) {
  nlohmann::ordered_json j;
  j["command"] = command;
  nlohmann::ordered_json jp = nlohmann::ordered_json::object();
  for (const auto& [key, value] : params) jp[key] = value;
  j["params"] = jp;
  nlohmann::ordered_json jrows = nlohmann::ordered_json::array();
  for (const auto& row : rows.rows) {
    nlohmann::ordered_json jr = nlohmann::ordered_json::object();
    for (size_t c = 0; c < rows.columns.size(); ++c) {
      if (rows.columns[c].integer) {
        jr[rows.columns[c].name] = static_cast<long long>(row[c]);
      } else {
        jr[rows.columns[c].name] = row[c];
      }
    }
    jrows.push_back(jr);
  }
  j["rows"] = jrows;
  nlohmann::ordered_json jchecks = nlohmann::ordered_json::array();
  for (const CheckRow& c : checks) {
    nlohmann::ordered_json jc = nlohmann::ordered_json::object();
    jc["name"] = c.name;
    jc["measured"] = c.measured;
    jc["tolerance"] = c.tolerance;
    jc["pass"] = c.pass;
    jchecks.push_back(jc);
  }
  j["checks"] = jchecks;
  j["notes"] = rows.notes;
  return j.dump(2) + "\n";
}

}  // namespace gup1d::report
