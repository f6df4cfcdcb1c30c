#include "logcap/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <vector>

#include "json.hpp"
#include "logcap/errors.hpp"

namespace logcap {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view tok) {
  tok = trim(tok);
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("not a number: '" + std::string(tok) + "'");
  return v;
}

std::string format_with(double v, std::chars_format fmt, int precision) {
  std::array<char, 64> buf{};
  const auto res = precision < 0 ? std::to_chars(buf.data(), buf.data() + buf.size(), v)
                                 : std::to_chars(buf.data(), buf.data() + buf.size(), v, fmt, precision);
  return std::string(buf.data(), res.ptr);
}

}  // namespace

IntervalUnion parse_inline_set(std::string_view text) {
  std::vector<std::pair<double, double>> pairs;
  if (trim(text).empty()) throw ParseError("empty set description");
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos || item.find(':', colon + 1) != std::string_view::npos)
      throw ParseError("expected 'a:b', got '" + std::string(trim(item)) + "'");
    pairs.emplace_back(parse_number(item.substr(0, colon)), parse_number(item.substr(colon + 1)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return IntervalUnion::from_pairs(pairs);
}

IntervalUnion parse_json_set(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("intervals") || !doc["intervals"].is_array())
    throw ParseError("JSON set must be an object with an \"intervals\" array");
  std::vector<std::pair<double, double>> pairs;
  for (const auto& item : doc["intervals"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number())
      throw ParseError("each interval must be a two-element numeric array");
    pairs.emplace_back(item[0].get<double>(), item[1].get<double>());
  }
  if (pairs.empty()) throw ParseError("\"intervals\" is empty");
  return IntervalUnion::from_pairs(pairs);
}

std::string to_inline(const IntervalUnion& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ',';
    out += format_roundtrip(e[i].lo);
    out += ':';
    out += format_roundtrip(e[i].hi);
  }
  return out;
}

std::string to_json(const IntervalUnion& e) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& iv : e) arr.push_back({iv.lo, iv.hi});
  return nlohmann::json{{"intervals", arr}}.dump();
}

std::string format_roundtrip(double v) { return format_with(v, std::chars_format::general, -1); }

std::string format_17g(double v) { return format_with(v, std::chars_format::general, 17); }

}  // namespace logcap
