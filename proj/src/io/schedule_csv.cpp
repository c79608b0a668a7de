#include "fuzzopt/io/schedule_csv.hpp"

#include <charconv>
#include <sstream>

namespace fuzzopt::io {

namespace {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw Error("invalid number '" + s + "' in schedule");
  return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::string schedule_to_csv(const shift::Schedule& s) {
  std::ostringstream out;
  out << "day";
  for (int g = 0; g < shift::kSubgroups; ++g) out << ',' << shift::Schedule::subgroup_name(g);
  out << '\n';
  for (int d = 0; d < shift::kCycleDays; ++d) {
    out << shift::day_label(d);
    for (int g = 0; g < shift::kSubgroups; ++g) {
      out << ',';
      if (const auto& a = s.at(d, g)) {
        out << to_string(a->shift) << ':' << format_double(a->duration);
      }
    }
    out << '\n';
  }
  return out.str();
}

shift::Schedule schedule_from_csv(const std::string& text) {
  shift::Schedule s;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw Error("empty schedule file");
  const auto header = split(line, ',');
  if (header.size() != shift::kSubgroups + 1 || header[0] != "day")
    throw Error("schedule header must be day,A1,A2,B1,B2,C1,C2");
  std::vector<int> columns;
  for (std::size_t i = 1; i < header.size(); ++i) {
    const int g = shift::Schedule::subgroup_index(header[i]);
    if (g < 0) throw Error("unknown subgroup '" + header[i] + "' in schedule header");
    columns.push_back(g);
  }
  int day = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (day >= shift::kCycleDays) throw Error("schedule has more than 21 day rows");
    const auto cells = split(line, ',');
    if (cells.size() != shift::kSubgroups + 1)
      throw Error("schedule row '" + cells[0] + "' has wrong column count");
    if (cells[0] != shift::day_label(day))
      throw Error("expected day row '" + shift::day_label(day) + "', found '" + cells[0] + "'");
    for (std::size_t i = 1; i < cells.size(); ++i) {
      const std::string& cell = cells[i];
      if (cell.empty()) continue;
      const auto sep = cell.find(':');
      if (sep == std::string::npos)
        throw Error("cell '" + cell + "' must look like CODE:duration");
      s.set(day, columns[i - 1],
            {shift::shift_code_from_string(cell.substr(0, sep)),
             parse_double(cell.substr(sep + 1))});
    }
    ++day;
  }
  if (day != shift::kCycleDays) throw Error("schedule needs exactly 21 day rows");
  return s;
}

std::string trace_to_csv(const std::vector<optim::TracePoint>& trace) {
  std::ostringstream out;
  out << "eval_index,current,best\n";
  for (const auto& t : trace) {
    out << t.eval_index << ',' << format_double(t.current) << ',' << format_double(t.best) << '\n';
  }
  return out.str();
}

}  // namespace fuzzopt::io
