#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "kmstab/diagram.hpp"
#include "kmstab/ring.hpp"
#include "kmstab/weight.hpp"

namespace kmstab {

/// Malformed input text; line and column are one-based (0 when unknown).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0);
  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// {"name": str, "cartan": [[int]], "marked": int (1-based)}.
MarkedDiagram diagram_from_json(const std::string& text);
nlohmann::json diagram_to_json(const MarkedDiagram& x);

/// A preset name, or otherwise a path to a diagram JSON file.
MarkedDiagram load_diagram(const std::string& source);

nlohmann::json weight_to_json(const DoubleWeight& w);
DoubleWeight weight_from_json(const nlohmann::json& j);

/// "h1,h2/t1,t2" (either side may be empty; no slash means head only) or a
/// JSON object {"head": [...], "tail": [...]}.
DoubleWeight parse_weight(const std::string& text);

/// Comma-separated parts, e.g. "2,1"; empty text is the empty partition.
std::vector<std::int64_t> parse_int_list(const std::string& text);

/// JSON list of {"weight": ..., "coeff": ...} in canonical term order.
std::string table_to_json(const MultTable& t);
/// Inverse of table_to_json; grade and cutoff are not part of the text.
MultTable table_from_json(const std::string& text);

}  // namespace kmstab
