#pragma once

// Loss-trajectory tables: header "Iterations,<label>,...", then one row per
// iteration. Values use the shortest decimal form that round-trips a double
// (at most 17 significant digits); NaN is written as the literal "nan".

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace qgrad::bench {

inline constexpr std::string_view kIterationColumn = "Iterations";

struct CsvRow {
  int iteration = 0;
  std::vector<double> values;
};

struct CsvTable {
  /// Method labels, excluding the leading "Iterations" column.
  std::vector<std::string> labels;
  std::vector<CsvRow> rows;

  /// Every row carries exactly labels.size() values.
  bool rectangular() const noexcept;
};

std::string format_value(double x);

std::string emit_csv(const CsvTable& table);
void write_csv(std::ostream& out, const CsvTable& table);

/// Inverse of emit_csv. Throws InvalidInput on malformed text.
CsvTable parse_csv(std::string_view text);

/// Exact equality with NaN treated as equal to NaN.
bool same_table(const CsvTable& a, const CsvTable& b);

}  // namespace qgrad::bench
