#pragma once

#include <string>
#include <string_view>

#include "logcap/interval_set.hpp"

namespace logcap {

/// Parses "a1:b1,a2:b2,..." (whitespace allowed around tokens).
/// Throws ParseError on malformed text, ValidationError on bad intervals.
IntervalUnion parse_inline_set(std::string_view text);

/// Parses {"intervals": [[a1, b1], ..., [an, bn]]}.
IntervalUnion parse_json_set(std::string_view text);

std::string to_inline(const IntervalUnion& e);
std::string to_json(const IntervalUnion& e);

/// Shortest decimal text that reads back to exactly the same double.
std::string format_roundtrip(double v);

/// Fixed 17 significant digits; locale independent.
std::string format_17g(double v);

}  // namespace logcap
