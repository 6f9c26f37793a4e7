#include "tendo/rational.hpp"

#include <cctype>

#include "tendo/error.hpp"

namespace tendo {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw ParseError("'" + std::string(text) + "'", "expected a rational of the form n or n/d");
  }
  Integer n(std::string(num), 10);
  Integer d = slash == std::string_view::npos ? Integer(1) : Integer(std::string(den), 10);
  if (d == 0) throw ParseError("'" + std::string(text) + "'", "zero denominator");
  if (!text.empty() && text.front() == '-') n = -n;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational make_rational(std::int64_t num, std::int64_t den) {
  require(den != 0, "zero denominator");
  Rational r(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

Integer residue_mod(const Rational& value, const Integer& modulus) {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), value.get_den_mpz_t(), modulus.get_mpz_t()) == 0) {
    throw InvalidArgument("denominator not invertible modulo " + modulus.get_str());
  }
  Integer r = (value.get_num() * inv) % modulus;
  if (r < 0) r += modulus;
  return r;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace tendo
