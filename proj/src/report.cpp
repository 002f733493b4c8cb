#include "sp1kepler/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace sp1kepler::report {

using nlohmann::json;

namespace {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

} // namespace

std::string render(const Value& v) {
  return std::visit(Overloaded{
                        [](std::monostate) { return std::string(); },
                        [](bool b) { return std::string(b ? "true" : "false"); },
                        [](const BigInt& i) { return i.str(); },
                        [](const Rational& q) { return to_string(q); },
                        [](double d) { return format_double(d); },
                        [](const std::string& s) { return s; },
                    },
                    v);
}

void Table::add_row(std::vector<Value> row) {
  if (row.size() != columns.size()) {
    throw std::invalid_argument("Table::add_row: expected " + std::to_string(columns.size()) + " cells, got " +
                                std::to_string(row.size()));
  }
  rows.push_back(std::move(row));
}

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  if (name == "text") return Format::text;
  throw std::invalid_argument("unknown format '" + name + "'");
}

// ---------------------------------------------------------------------------
// json

namespace {

json to_json(const Value& v) {
  return std::visit(Overloaded{
                        [](std::monostate) { return json(nullptr); },
                        [](bool b) { return json(b); },
                        [](const BigInt& i) {
                          if (i >= std::numeric_limits<std::int64_t>::min() &&
                              i <= std::numeric_limits<std::int64_t>::max()) {
                            return json(i.convert_to<std::int64_t>());
                          }
                          return json{{"bigint", i.str()}};
                        },
                        [](const Rational& q) { return json{{"rational", to_string(q)}}; },
                        [](double d) { return std::isfinite(d) ? json(d) : json{{"double", format_double(d)}}; },
                        [](const std::string& s) { return json(s); },
                    },
                    v);
}

Value value_from_json(const json& j) {
  switch (j.type()) {
    case json::value_t::null:
      return std::monostate{};
    case json::value_t::boolean:
      return j.get<bool>();
    case json::value_t::number_integer:
      return BigInt(j.get<std::int64_t>());
    case json::value_t::number_unsigned:
      return BigInt(j.get<std::uint64_t>());
    case json::value_t::number_float:
      return j.get<double>();
    case json::value_t::string:
      return j.get<std::string>();
    case json::value_t::object:
      if (j.size() == 1) {
        if (j.contains("bigint")) return BigInt(j.at("bigint").get<std::string>());
        if (j.contains("rational")) return Rational(j.at("rational").get<std::string>());
        if (j.contains("double")) {
          const auto s = j.at("double").get<std::string>();
          if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
          if (s == "inf") return std::numeric_limits<double>::infinity();
          if (s == "-inf") return -std::numeric_limits<double>::infinity();
        }
      }
      break;
    default:
      break;
  }
  throw std::invalid_argument("report: unrecognised value " + j.dump());
}

json optional_double(const std::optional<double>& d) { return d ? to_json(*d) : json(nullptr); }

std::optional<double> optional_double_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  const Value v = value_from_json(j);
  if (const auto* d = std::get_if<double>(&v)) return *d;
  if (const auto* i = std::get_if<BigInt>(&v)) return i->convert_to<double>();
  throw std::invalid_argument("report: expected a number, got " + j.dump());
}

std::string to_json_text(const Report& r) {
  json params = json::array();
  for (const auto& [name, value] : r.parameters) params.push_back(json{{"name", name}, {"value", to_json(value)}});

  json rows = json::array();
  for (const auto& row : r.table.rows) {
    json cells = json::array();
    for (const auto& c : row) cells.push_back(to_json(c));
    rows.push_back(std::move(cells));
  }

  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back(json{{"name", c.name},
                          {"lhs", to_json(c.lhs)},
                          {"rhs", to_json(c.rhs)},
                          {"residual", optional_double(c.residual)},
                          {"tolerance", optional_double(c.tolerance)},
                          {"pass", c.pass}});
  }

  json out = {
      {"schema_version", r.schema_version},
      {"command", r.command},
      {"parameters", std::move(params)},
      {"table", {{"columns", r.table.columns}, {"rows", std::move(rows)}}},
      {"checks", std::move(checks)},
      {"pass", r.pass()},
      {"seed", r.seed ? json(*r.seed) : json(nullptr)},
      {"timestamp", r.timestamp ? json(*r.timestamp) : json(nullptr)},
  };
  return out.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// csv and text

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string to_csv(const Report& r) {
  std::ostringstream os;
  for (std::size_t i = 0; i < r.table.columns.size(); ++i) os << (i ? "," : "") << csv_field(r.table.columns[i]);
  os << "\n";
  for (const auto& row : r.table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(render(row[i]));
    os << "\n";
  }
  return os.str();
}

void aligned(std::ostringstream& os, const std::vector<std::string>& header,
             const std::vector<std::vector<std::string>>& body) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& row : body)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());

  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += "  ";
      s += cells[i];
      if (i + 1 < cells.size()) s.append(width[i] - cells[i].size(), ' ');
    }
    s.erase(s.find_last_not_of(' ') + 1);
    os << s << "\n";
  };
  line(header);
  for (const auto& row : body) line(row);
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << "command: " << r.command << "\n";
  for (const auto& [name, value] : r.parameters) {
    const std::string v = render(value);
    os << "  " << name << " =" << (v.empty() ? "" : " " + v) << "\n";
  }
  if (r.seed) os << "  seed = " << *r.seed << "\n";
  if (r.timestamp) os << "  timestamp = " << *r.timestamp << "\n";

  if (!r.table.columns.empty()) {
    os << "\n";
    std::vector<std::vector<std::string>> body;
    for (const auto& row : r.table.rows) {
      std::vector<std::string> cells;
      for (const auto& c : row) cells.push_back(render(c));
      body.push_back(std::move(cells));
    }
    aligned(os, r.table.columns, body);
    if (r.table.empty()) os << "(no rows)\n";
  }

  if (!r.checks.empty()) {
    os << "\n";
    std::vector<std::vector<std::string>> body;
    std::size_t passed = 0;
    for (const auto& c : r.checks) {
      body.push_back({c.pass ? "PASS" : "FAIL", c.name, render(c.lhs), render(c.rhs),
                      c.residual ? format_double(*c.residual) : "", c.tolerance ? format_double(*c.tolerance) : ""});
      passed += c.pass ? 1 : 0;
    }
    aligned(os, {"status", "check", "lhs", "rhs", "residual", "tolerance"}, body);
    os << "\n" << passed << "/" << r.checks.size() << " checks passed: " << (r.pass() ? "PASS" : "FAIL") << "\n";
  }
  return os.str();
}

} // namespace

std::string emit(const Report& r, Format f) {
  switch (f) {
    case Format::csv:
      return to_csv(r);
    case Format::json:
      return to_json_text(r);
    case Format::text:
      return to_text(r);
  }
  throw std::invalid_argument("emit: unknown format");
}

Report from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    Report r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != kSchemaVersion) {
      throw std::invalid_argument("report: unsupported schema version " + std::to_string(r.schema_version));
    }
    r.command = j.at("command").get<std::string>();
    for (const auto& p : j.at("parameters")) r.add_parameter(p.at("name").get<std::string>(), value_from_json(p.at("value")));

    const auto& t = j.at("table");
    r.table.columns = t.at("columns").get<std::vector<std::string>>();
    for (const auto& row : t.at("rows")) {
      std::vector<Value> cells;
      for (const auto& c : row) cells.push_back(value_from_json(c));
      r.table.add_row(std::move(cells));
    }

    for (const auto& c : j.at("checks")) {
      r.add_check({c.at("name").get<std::string>(), value_from_json(c.at("lhs")), value_from_json(c.at("rhs")),
                   optional_double_from(c.at("residual")), optional_double_from(c.at("tolerance")),
                   c.at("pass").get<bool>()});
    }
    if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
    if (!j.at("timestamp").is_null()) r.timestamp = j.at("timestamp").get<std::string>();

    if (j.at("pass").get<bool>() != r.pass()) throw std::invalid_argument("report: summary pass contradicts the checks");
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("report: malformed json: ") + e.what());
  }
}

} // namespace sp1kepler::report
