#include "cmgeo/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace cmgeo {

namespace {

bool is_integer_token(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

[[noreturn]] void bad_rational(std::string_view text) {
  throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_token(text)) bad_rational(text);
    return Rational(BigInt(std::string(text)));
  }
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) bad_rational(text);
  const BigInt q{std::string(den)};
  if (q <= 0) bad_rational(text);
  return Rational(BigInt{std::string(num)}, q);
}

std::string format_rational(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string format_significant(double value, int digits) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) {
    std::string out = "0.";
    out.append(static_cast<std::size_t>(digits - 1), '0');
    return out;
  }
  char sci[64];
  std::snprintf(sci, sizeof(sci), "%.*e", digits - 1, value);
  const char* epos = std::strchr(sci, 'e');
  const int exp10 = static_cast<int>(std::strtol(epos + 1, nullptr, 10));
  // %f keeps trailing zeros, unlike %g; fall back to the scientific form
  // when a positional rendering would lose or pad significant digits.
  if (exp10 < -4 || exp10 >= digits) return sci;
  char fixed[512];
  std::snprintf(fixed, sizeof(fixed), "%.*f", digits - 1 - exp10, value);
  return fixed;
}

}  // namespace cmgeo
