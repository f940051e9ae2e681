#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace maglt::cli {

/// One table cell. monostate renders as an empty CSV field / JSON null.
using Cell = std::variant<std::monostate, bool, std::int64_t, double, std::string>;

/// Flat record with a fixed field order (the emitted key order).
struct Record {
  std::vector<std::pair<std::string, Cell>> fields;

  void add(std::string name, Cell value) {
    fields.emplace_back(std::move(name), std::move(value));
  }
};

/// %.17g with negative zero normalized; lossless for binary doubles, and a
/// fixed point in the parse/re-serialize loop.
std::string format_double(double x);

/// Compact single-line JSON object with keys in field order.
std::string emit_json_object(const Record& record);

/// JSON array of flat objects, one object per line, trailing newline.
std::string emit_json_array(std::span<const Record> records);

/// CSV with the given header; RFC-style quoting only when needed.
std::string emit_csv(std::span<const std::string> columns,
                     std::span<const Record> records);

/// Parses a JSON payload produced by the emitters above and re-serializes it
/// through the same writer. Byte-identical output on emitter-produced input.
std::string reserialize_json(const std::string& payload);

} // namespace maglt::cli
