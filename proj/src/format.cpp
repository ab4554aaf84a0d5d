#include "hcsp/format.hpp"

#include "hcsp/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace hcsp {

namespace {

using nlohmann::json;

std::size_t to_size(const json &v, const std::string &what) {
  if (!v.is_number_integer())
    throw ParseError(what + " must be an integer");
  if (v.is_number_unsigned())
    return v.get<std::size_t>();
  auto i = v.get<std::int64_t>();
  if (i < 0)
    throw ParseError(what + " must be non-negative");
  return static_cast<std::size_t>(i);
}

SetSystem build(std::size_t s, const std::vector<ElementList> &sets) {
  if (s < 1)
    throw ParseError("s must be >= 1");
  std::set<Bitset> seen;
  std::vector<Bitset> blocks;
  blocks.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    Bitset b(s);
    for (std::size_t e : sets[i]) {
      if (e < 1 || e > s)
        throw ParseError("set " + std::to_string(i) + ": element " + std::to_string(e) +
                         " outside 1.." + std::to_string(s));
      if (b.test(e - 1))
        throw ParseError("set " + std::to_string(i) + ": element " + std::to_string(e) +
                         " repeated");
      b.set(e - 1);
    }
    if (!seen.insert(b).second)
      throw ParseError("duplicate block at index " + std::to_string(i));
    blocks.push_back(std::move(b));
  }
  return SetSystem::from_bitsets(s, std::move(blocks));
}

SystemDocument parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error &e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw ParseError("document must be a JSON object");
  if (auto it = doc.find("format_version"); it != doc.end()) {
    if (!it->is_string() || it->get<std::string>() != kFormatVersion)
      throw ParseError("unsupported format_version (expected \"hcsp-1\")");
  }
  auto s_it = doc.find("s");
  if (s_it == doc.end())
    throw ParseError("missing \"s\"");
  std::size_t s = to_size(*s_it, "s");

  auto sets_it = doc.find("sets");
  if (sets_it == doc.end() || !sets_it->is_array())
    throw ParseError("missing or non-array \"sets\"");
  std::vector<ElementList> sets;
  for (const auto &set : *sets_it) {
    if (!set.is_array())
      throw ParseError("each set must be an array of integers");
    ElementList elems;
    for (const auto &e : set)
      elems.push_back(to_size(e, "element"));
    sets.push_back(std::move(elems));
  }

  SystemDocument out{build(s, sets), std::nullopt};
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string())
      throw ParseError("\"name\" must be a string");
    out.name = it->get<std::string>();
  }
  return out;
}

std::vector<std::size_t> parse_numbers(const std::string &line, std::size_t line_no) {
  std::vector<std::size_t> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
      throw ParseError("line " + std::to_string(line_no) + ": not a non-negative integer: " + tok);
    out.push_back(v);
  }
  return out;
}

SystemDocument parse_plain(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> s;
  std::vector<ElementList> sets;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line.front() == '#')
      continue;
    auto nums = parse_numbers(line, line_no);
    if (!s) {
      if (nums.size() != 1)
        throw ParseError("line " + std::to_string(line_no) + ": expected the ground size s");
      s = nums.front();
    } else {
      sets.push_back(std::move(nums));
    }
  }
  if (!s)
    throw ParseError("missing ground size s");
  return {build(*s, sets), std::nullopt};
}

} // namespace

SystemDocument parse_document(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos)
    throw ParseError("empty input");
  if (text[first] == '{')
    return parse_json(text);
  return parse_plain(text);
}

std::vector<ElementList> sorted_block_lists(const SetSystem &sys) {
  auto lists = sys.block_lists();
  std::sort(lists.begin(), lists.end());
  return lists;
}

std::string emit_document(const SystemDocument &doc) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"format_version\": \"" << kFormatVersion << "\",\n";
  out << "  \"s\": " << doc.system.ground_size() << ",\n";
  if (doc.name)
    out << "  \"name\": " << json(*doc.name).dump() << ",\n";
  auto lists = sorted_block_lists(doc.system);
  if (lists.empty()) {
    out << "  \"sets\": []\n";
  } else {
    out << "  \"sets\": [\n";
    for (std::size_t i = 0; i < lists.size(); ++i) {
      out << "    [";
      for (std::size_t j = 0; j < lists[i].size(); ++j)
        out << (j ? ", " : "") << lists[i][j];
      out << "]" << (i + 1 < lists.size() ? "," : "") << "\n";
    }
    out << "  ]\n";
  }
  out << "}\n";
  return out.str();
}

} // namespace hcsp
