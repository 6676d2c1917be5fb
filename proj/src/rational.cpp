#include "ctxprob/rational.hpp"

#include "ctxprob/error.hpp"

namespace ctxprob {

namespace {

bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

BigInt parse_bigint(std::string_view s, std::string_view whole) {
  if (!is_integer_token(s))
    throw ParseError("invalid rational '" + std::string(whole) + "'");
  // cpp_int's own parser accepts neither a leading '+' nor anything else we let
  // through above, so hand it digits only
  const bool negative = s.front() == '-';
  if (s.front() == '-' || s.front() == '+') s.remove_prefix(1);
  BigInt v{std::string(s)};
  return negative ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text, text));
  BigInt num = parse_bigint(text.substr(0, slash), text);
  BigInt den = parse_bigint(text.substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator in rational '" + std::string(text) + "'");
  if (den < 0) {  // cpp_rational requires a positive denominator at construction
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

std::string rational_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

double rational_to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace ctxprob
