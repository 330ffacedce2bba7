#include "pgcycles/rational.hpp"

#include <cctype>
#include <climits>

#include "pgcycles/errors.hpp"

namespace pgc {
namespace {

bool is_signed_digits(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_signed_digits(num) || !is_signed_digits(den)) {
    throw ValidationError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class d = parse_integer(den);
  if (d == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

long to_long(const Rational& value) {
  if (!is_integer(value) || !value.get_num().fits_slong_p()) {
    throw ValidationError("expected a machine integer, got " + value.get_str());
  }
  return value.get_num().get_si();
}

}  // namespace pgc
