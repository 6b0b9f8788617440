#include "kstate/census.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include "json.hpp"
#include <sstream>

#include "kstate/error.hpp"

namespace kstate {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  for (char ch : line) {
    if (ch == '"') {
      quoted = !quoted;
    } else if (ch == ',' && !quoted) {
      out.emplace_back(trim(field));
      field.clear();
    } else {
      field.push_back(ch);
    }
  }
  out.emplace_back(trim(field));
  return out;
}

std::optional<bool> parse_flag(std::string_view raw, int line_no) {
  std::string v(raw);
  std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
  if (v.empty()) return std::nullopt;
  if (v == "true" || v == "y" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "n" || v == "no" || v == "0") return false;
  throw Error(ErrorKind::malformed, "census line " + std::to_string(line_no) +
                                        ": bad alternating flag '" + std::string(raw) + "'");
}

std::vector<CensusRecord> parse_csv(std::string_view text) {
  std::vector<CensusRecord> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  std::vector<std::string> header;
  int name_col = -1, pd_col = -1, det_col = -1, alt_col = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty() || trim(line).front() == '#') continue;
    auto fields = split_csv_line(line);
    if (header.empty()) {
      header = fields;
      for (int i = 0; i < static_cast<int>(header.size()); ++i) {
        if (header[i] == "name") name_col = i;
        if (header[i] == "pd") pd_col = i;
        if (header[i] == "determinant") det_col = i;
        if (header[i] == "alternating") alt_col = i;
      }
      if (name_col < 0 || pd_col < 0)
        throw Error(ErrorKind::malformed, "census header must contain 'name' and 'pd' columns");
      continue;
    }
    if (fields.size() != header.size()) {
      throw Error(ErrorKind::malformed, "census line " + std::to_string(line_no) + ": expected " +
                                            std::to_string(header.size()) + " fields, got " +
                                            std::to_string(fields.size()));
    }
    CensusRecord r;
    r.name = fields[name_col];
    r.pd = fields[pd_col];
    if (det_col >= 0 && !fields[det_col].empty()) {
      try {
        r.determinant = std::stoll(fields[det_col]);
      } catch (const std::exception&) {
        throw Error(ErrorKind::malformed, "census line " + std::to_string(line_no) + ": bad determinant");
      }
    }
    if (alt_col >= 0) r.alternating = parse_flag(fields[alt_col], line_no);
    out.push_back(std::move(r));
  }
  if (header.empty()) throw Error(ErrorKind::malformed, "census is empty");
  return out;
}

std::vector<CensusRecord> parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::malformed, std::string("census JSON: ") + e.what());
  }
  if (!doc.is_array()) throw Error(ErrorKind::malformed, "census JSON must be an array");
  std::vector<CensusRecord> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& item = doc[i];
    if (!item.is_object() || !item.contains("name") || !item.contains("pd") ||
        !item["name"].is_string() || !item["pd"].is_string()) {
      throw Error(ErrorKind::malformed, "census JSON entry " + std::to_string(i) +
                                            " needs string fields 'name' and 'pd'");
    }
    CensusRecord r;
    r.name = item["name"].get<std::string>();
    r.pd = item["pd"].get<std::string>();
    if (item.contains("determinant") && item["determinant"].is_number_integer())
      r.determinant = item["determinant"].get<std::int64_t>();
    if (item.contains("alternating") && item["alternating"].is_boolean())
      r.alternating = item["alternating"].get<bool>();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

bool looks_like_census(std::string_view text) {
  const std::string_view t = trim(text);
  return t.starts_with("[") || t.starts_with("name") || t.starts_with("#");
}

std::vector<CensusRecord> parse_census(std::string_view text) {
  return trim(text).starts_with("[") ? parse_json(text) : parse_csv(text);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::malformed, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<CensusRecord> load_census(const std::string& path) { return parse_census(read_input(path)); }

}  // namespace kstate
