#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <utility>

#include "bienum/errors.hpp"

namespace bienum {

using Int = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational.  All geometry and pivoting in this
/// library is exact; no floating point is used anywhere.
using Rational = boost::multiprecision::cpp_rational;

/// Builds `num / den`, accepting any sign combination.
///
/// The underlying rational type normalizes to lowest terms on its own but
/// rejects negative denominators at construction time, so the sign is
/// folded into the numerator here.  A zero denominator is a usage error.
inline Rational make_rational(Int num, Int den) {
  if (den == 0) {
    throw UsageError("rational with zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

/// Parses `p` or `p/q` with optional sign on either part.  The result is in
/// lowest terms regardless of the input's form.  Throws UsageError on any
/// other shape (embedded spaces, empty parts, trailing characters, `q` = 0).
inline Rational parse_rational(std::string_view text) {
  const auto fail = [&]() -> Rational {
    throw UsageError("malformed rational '" + std::string(text) + "'");
  };

  const auto scan_int = [&](std::size_t& pos) -> Int {
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      negative = text[pos] == '-';
      ++pos;
    }
    const std::size_t digits_begin = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      ++pos;
    }
    if (pos == digits_begin) {
      fail();
    }
    Int value(std::string(text.substr(digits_begin, pos - digits_begin)));
    return negative ? Int(-value) : value;
  };

  std::size_t pos = 0;
  Int num = scan_int(pos);
  Int den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = scan_int(pos);
  }
  if (pos != text.size()) {
    fail();
  }
  if (den == 0) {
    fail();
  }
  return make_rational(std::move(num), std::move(den));
}

/// Formats in the canonical wire form: `p` for integers, `p/q` otherwise,
/// always in lowest terms with a positive denominator.
inline std::string format_rational(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += '/';
    out += denominator(value).str();
  }
  return out;
}

/// True iff `value` has denominator 1.
inline bool is_integer(const Rational& value) {
  return denominator(value) == 1;
}

}  // namespace bienum
