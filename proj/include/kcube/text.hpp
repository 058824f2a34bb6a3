#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "kcube/cube.hpp"

// Text formats:
//   point   "2,0,1"        comma-separated decimal coordinates
//   family  "0,2;2,0"      semicolon-separated points, empty string for {}
//   variant "standard" | "slice:<i>" | "shift:<z>"
namespace kcube {

namespace detail {

inline int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.empty() || ec != std::errc{} || ptr != last)
    throw parse_error("invalid " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

}  // namespace detail

inline std::string format_point(const Point& a) {
  std::string out;
  for (int i = 0; i < a.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(a[i]);
  }
  return out;
}

// Throws parse_error on malformed text and domain_error when the coordinates
// do not describe a point of E^n for the given parameters.
inline Point parse_point(std::string_view text, const CubeParams& p) {
  std::vector<int> coords;
  for (auto tok : detail::split(text, ',')) coords.push_back(detail::parse_int(tok, "coordinate"));
  return Point(p, std::move(coords));
}

inline std::string format_variant(const LowerHalfSpec& spec) {
  struct {
    std::string operator()(LowerHalfSpec::Standard) const { return "standard"; }
    std::string operator()(LowerHalfSpec::SliceShift s) const { return "slice:" + std::to_string(s.i); }
    std::string operator()(LowerHalfSpec::ThresholdShift t) const { return "shift:" + std::to_string(t.z); }
  } fmt;
  return std::visit(fmt, spec.variant());
}

// Syntax errors raise parse_error; an out-of-range i or z raises domain_error.
inline LowerHalfSpec parse_variant(std::string_view text, const CubeParams& p) {
  if (text == "standard") return LowerHalfSpec::standard(p);
  if (text.starts_with("slice:")) return LowerHalfSpec::slice(p, detail::parse_int(text.substr(6), "slice index"));
  if (text.starts_with("shift:")) return LowerHalfSpec::shift(p, detail::parse_int(text.substr(6), "threshold shift"));
  throw parse_error("unknown variant '" + std::string(text) + "' (expected standard, slice:<i> or shift:<z>)");
}

}  // namespace kcube
