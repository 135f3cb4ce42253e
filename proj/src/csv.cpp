#include "qgrad/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstring>
#include <ostream>
#include <system_error>

#include "qgrad/errors.hpp"

namespace qgrad::bench {
namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_double(std::string_view token, std::size_t line_no) {
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), x);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    throw InvalidInput("csv line " + std::to_string(line_no) + ": bad number '" +
                       std::string(token) + "'");
  }
  return x;
}

int parse_int(std::string_view token, std::size_t line_no) {
  int x = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), x);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    throw InvalidInput("csv line " + std::to_string(line_no) + ": bad iteration '" +
                       std::string(token) + "'");
  }
  return x;
}

bool same_value(double a, double b) {
  if (std::isnan(a) || std::isnan(b)) return std::isnan(a) && std::isnan(b);
  return a == b;
}

}  // namespace

bool CsvTable::rectangular() const noexcept {
  for (const CsvRow& row : rows)
    if (row.values.size() != labels.size()) return false;
  return true;
}

std::string format_value(double x) {
  if (std::isnan(x)) return "nan";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

std::string emit_csv(const CsvTable& table) {
  std::string out(kIterationColumn);
  for (const std::string& label : table.labels) {
    out += ',';
    out += label;
  }
  out += '\n';
  for (const CsvRow& row : table.rows) {
    out += std::to_string(row.iteration);
    for (double x : row.values) {
      out += ',';
      out += format_value(x);
    }
    out += '\n';
  }
  return out;
}

void write_csv(std::ostream& out, const CsvTable& table) { out << emit_csv(table); }

CsvTable parse_csv(std::string_view text) {
  std::vector<std::string_view> lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw InvalidInput("csv: empty input");

  const std::vector<std::string_view> header = split(lines.front(), ',');
  if (header.front() != kIterationColumn) {
    throw InvalidInput("csv: first column must be '" + std::string(kIterationColumn) + "'");
  }

  CsvTable table;
  for (std::size_t i = 1; i < header.size(); ++i) table.labels.emplace_back(header[i]);

  for (std::size_t ln = 1; ln < lines.size(); ++ln) {
    const std::vector<std::string_view> cells = split(lines[ln], ',');
    if (cells.size() != header.size()) {
      throw InvalidInput("csv line " + std::to_string(ln + 1) + ": expected " +
                         std::to_string(header.size()) + " cells, got " +
                         std::to_string(cells.size()));
    }
    CsvRow row;
    row.iteration = parse_int(cells[0], ln + 1);
    for (std::size_t c = 1; c < cells.size(); ++c) row.values.push_back(parse_double(cells[c], ln + 1));
    table.rows.push_back(std::move(row));
  }
  return table;
}

bool same_table(const CsvTable& a, const CsvTable& b) {
  if (a.labels != b.labels || a.rows.size() != b.rows.size()) return false;
  for (std::size_t r = 0; r < a.rows.size(); ++r) {
    const CsvRow& x = a.rows[r];
    const CsvRow& y = b.rows[r];
    if (x.iteration != y.iteration || x.values.size() != y.values.size()) return false;
    for (std::size_t c = 0; c < x.values.size(); ++c)
      if (!same_value(x.values[c], y.values[c])) return false;
  }
  return true;
}

}  // namespace qgrad::bench
