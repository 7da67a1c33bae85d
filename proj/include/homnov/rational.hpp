#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace homnov {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar.  Stored in lowest terms with positive denominator
// (the backend canonicalizes on every operation); arithmetic never rounds.
// Expression templates are disabled so values behave like plain value types
// inside containers.
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// Parses "p" or "p/q" (optional leading '-' on p; q a positive integer).
// Anything else — floats, signs on q, whitespace, zero denominators —
// yields nullopt.
std::optional<Rat> parse_rational(const std::string& text);

// Canonical textual form: "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rat& value);

} // namespace homnov
