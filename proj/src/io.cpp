#include "kmstab/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace kmstab {

using nlohmann::json;

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(line ? what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"
                              : what),
      line_(line),
      column_(column) {}

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is one past the offending character.
    const std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed JSON", line, column);
  }
}

std::vector<std::int64_t> int_array(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of integers");
  std::vector<std::int64_t> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError(std::string(what) + " must be an array of integers");
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

}  // namespace

MarkedDiagram diagram_from_json(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw ParseError("diagram must be a JSON object");
  for (const char* key : {"name", "cartan", "marked"})
    if (!j.contains(key)) throw ParseError(std::string("diagram is missing \"") + key + "\"");
  if (!j["name"].is_string()) throw ParseError("\"name\" must be a string");
  if (!j["marked"].is_number_integer()) throw ParseError("\"marked\" must be an integer");
  if (!j["cartan"].is_array()) throw ParseError("\"cartan\" must be an array of rows");
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& row : j["cartan"]) rows.push_back(int_array(row, "each Cartan row"));
  for (const auto& row : rows)
    if (row.size() != rows.size()) throw ParseError("\"cartan\" must be a square matrix");
  const auto marked = j["marked"].get<std::int64_t>();
  if (marked < 1 || static_cast<std::size_t>(marked) > rows.size())
    throw ParseError("\"marked\" must be between 1 and " + std::to_string(rows.size()));
  return MarkedDiagram::create(j["name"].get<std::string>(), IntMatrix::from_rows(rows),
                               static_cast<std::size_t>(marked - 1));
}

json diagram_to_json(const MarkedDiagram& x) {
  return json{{"name", x.name()}, {"cartan", x.cartan().to_rows()}, {"marked", x.rank()}};
}

MarkedDiagram load_diagram(const std::string& source) {
  const auto& presets = MarkedDiagram::preset_names();
  if (std::find(presets.begin(), presets.end(), source) != presets.end()) return MarkedDiagram::preset(source);
  if (!std::filesystem::is_regular_file(source))
    throw ParseError("'" + source + "' is neither a preset name nor a readable file");
  std::ifstream in(source);
  std::stringstream buf;
  buf << in.rdbuf();
  return diagram_from_json(buf.str());
}

json weight_to_json(const DoubleWeight& w) {
  const auto h = w.head.entries();
  const auto t = w.tail.entries();
  return json{{"head", std::vector<std::int64_t>(h.begin(), h.end())},
              {"tail", std::vector<std::int64_t>(t.begin(), t.end())}};
}

DoubleWeight weight_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("weight must be an object with \"head\" and \"tail\"");
  DoubleWeight w;
  if (j.contains("head")) w.head = SupportSeq(int_array(j["head"], "\"head\""));
  if (j.contains("tail")) w.tail = SupportSeq(int_array(j["tail"], "\"tail\""));
  return w;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw ParseError("'" + item + "' is not an integer", 1, start + 1);
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos)
      throw ParseError("'" + item + "' is not an integer", 1, start + 1);
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

DoubleWeight parse_weight(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '{') return weight_from_json(parse_json(text));
  const auto slash = text.find('/');
  DoubleWeight w;
  w.head = SupportSeq(parse_int_list(text.substr(0, slash)));
  if (slash != std::string::npos) {
    if (text.find('/', slash + 1) != std::string::npos) throw ParseError("weight has more than one '/'", 1, slash + 1);
    w.tail = SupportSeq(parse_int_list(text.substr(slash + 1)));
  }
  return w;
}

std::string table_to_json(const MultTable& t) {
  json list = json::array();
  for (const auto& [w, c] : t.terms) list.push_back(json{{"weight", weight_to_json(w)}, {"coeff", c}});
  return list.dump(2);
}

MultTable table_from_json(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_array()) throw ParseError("table must be a JSON list");
  MultTable t;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("weight") || !item.contains("coeff") ||
        !item["coeff"].is_number_integer())
      throw ParseError("table entries must be {\"weight\": ..., \"coeff\": int}");
    t.terms[weight_from_json(item["weight"])] += item["coeff"].get<std::int64_t>();
  }
  return t;
}

}  // namespace kmstab
