#pragma once

// Command reports: parameters, one result table, and a list of checks.
// Rendered as csv (the table only), json (everything, lossless) or text.

#include "sp1kepler/exact.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace sp1kepler::report {

inline constexpr int kSchemaVersion = 1;

/// A table cell or parameter value. Exact integers and rationals are kept
/// exact; doubles are printed with 17 significant digits in csv and text.
using Value = std::variant<std::monostate, bool, BigInt, Rational, double, std::string>;

std::string render(const Value& v);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;

  /// Throws std::invalid_argument when the row width differs from the header.
  void add_row(std::vector<Value> row);
  bool empty() const { return rows.empty(); }
  friend bool operator==(const Table&, const Table&) = default;
};

struct Check {
  std::string name;
  Value lhs;
  Value rhs;
  std::optional<double> residual;
  std::optional<double> tolerance;
  bool pass = false;
  friend bool operator==(const Check&, const Check&) = default;
};

struct Report {
  int schema_version = kSchemaVersion;
  std::string command;
  std::vector<std::pair<std::string, Value>> parameters;
  Table table;
  std::vector<Check> checks;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> timestamp;

  void add_parameter(std::string name, Value v) { parameters.emplace_back(std::move(name), std::move(v)); }
  void add_check(Check c) { checks.push_back(std::move(c)); }

  /// True iff every check passed (vacuously true without checks).
  bool pass() const;

  friend bool operator==(const Report&, const Report&) = default;
};

enum class Format { csv, json, text };

/// Throws std::invalid_argument for an unknown name.
Format parse_format(const std::string& name);

std::string emit(const Report& r, Format f);

/// Inverse of emit(r, Format::json). Throws std::invalid_argument on malformed
/// input, an unknown schema version or a summary flag that contradicts the checks.
Report from_json(const std::string& text);

} // namespace sp1kepler::report
