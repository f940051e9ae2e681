#include "emit.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace maglt::cli {

std::string format_double(double x) {
  if (x == 0.0) return "0";  // normalize -0
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

std::string escape_json(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string cell_to_json(const Cell& cell) {
  if (std::holds_alternative<std::monostate>(cell)) return "null";
  if (const auto* b = std::get_if<bool>(&cell)) return *b ? "true" : "false";
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&cell)) {
    const std::string s = format_double(*d);
    if (s == "nan" || s == "inf" || s == "-inf") return "null";  // not valid JSON
    return s;
  }
  return '"' + escape_json(std::get<std::string>(cell)) + '"';
}

std::string cell_to_csv(const Cell& cell) {
  if (std::holds_alternative<std::monostate>(cell)) return "";
  if (const auto* b = std::get_if<bool>(&cell)) return *b ? "true" : "false";
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&cell)) return format_double(*d);
  const auto& s = std::get<std::string>(cell);
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    out += c;
    if (c == '"') out += '"';
  }
  out += '"';
  return out;
}

} // namespace

std::string emit_json_object(const Record& record) {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, cell] : record.fields) {
    if (!first) out += ',';
    first = false;
    out += '"';
    out += escape_json(name);
    out += "\":";
    out += cell_to_json(cell);
  }
  out += '}';
  return out;
}

std::string emit_json_array(std::span<const Record> records) {
  if (records.empty()) return "[]\n";
  std::string out = "[\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    out += emit_json_object(records[i]);
    out += (i + 1 < records.size()) ? ",\n" : "\n";
  }
  out += "]\n";
  return out;
}

std::string emit_csv(std::span<const std::string> columns,
                     std::span<const Record> records) {
  std::string out;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c) out += ',';
    out += columns[c];
  }
  out += '\n';
  for (const auto& record : records) {
    if (record.fields.size() != columns.size())
      throw std::invalid_argument("emit_csv: rows are not homogeneous with the header");
    for (std::size_t c = 0; c < record.fields.size(); ++c) {
      if (c) out += ',';
      out += cell_to_csv(record.fields[c].second);
    }
    out += '\n';
  }
  return out;
}

namespace {

Record record_from_json(const nlohmann::ordered_json& obj) {
  Record rec;
  for (const auto& [key, value] : obj.items()) {
    if (value.is_null()) rec.add(key, std::monostate{});
    else if (value.is_boolean()) rec.add(key, value.get<bool>());
    else if (value.is_number_integer()) rec.add(key, value.get<std::int64_t>());
    else if (value.is_number_unsigned()) rec.add(key, static_cast<std::int64_t>(value.get<std::uint64_t>()));
    else if (value.is_number_float()) rec.add(key, value.get<double>());
    else if (value.is_string()) rec.add(key, value.get<std::string>());
    else throw std::invalid_argument("reserialize_json: nested values are not part of the report schema");
  }
  return rec;
}

} // namespace

std::string reserialize_json(const std::string& payload) {
  const auto parsed = nlohmann::ordered_json::parse(payload);
  if (parsed.is_object()) return emit_json_object(record_from_json(parsed)) + "\n";
  if (!parsed.is_array())
    throw std::invalid_argument("reserialize_json: expected a JSON object or array");
  std::vector<Record> records;
  records.reserve(parsed.size());
  for (const auto& item : parsed) records.push_back(record_from_json(item));
  return emit_json_array(records);
}

} // namespace maglt::cli
