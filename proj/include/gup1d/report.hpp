#ifndef GUP1D_REPORT_HPP
#define GUP1D_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace gup1d::report {

struct Column {
  std::string name;
  bool integer = false;
};

/// Numeric result table; notes become '#' comment lines in CSV and a
/// "notes" array in JSON.
struct Table {
  std::vector<Column> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> notes;
};

/// One verification check, pass iff measured <= tolerance.
struct CheckRow {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// 17-significant-digit formatting: plain decimal inside [1e-3, 1e6),
/// scientific outside; round-trips exactly through parse_csv.
std::string format_value(double v);

std::string to_csv(const Table& t);

/// Parses CSV produced by to_csv ('#' lines ignored); header row required.
Table parse_csv(const std::string& text);

using ParamList = std::vector<std::pair<std::string, double>>;

/// Stable JSON envelope {command, params, rows, checks} shared by every
/// subcommand; rows/checks may be empty.
std::string to_json(const std::string& command, const ParamList& params,
                    const Table& rows, const std::vector<CheckRow>& checks);

}  // namespace gup1d::report

#endif
