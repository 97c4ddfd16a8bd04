#include "tuttekit/rational.hpp"

#include <cctype>
#include <limits>

#include "tuttekit/error.hpp"

namespace tuttekit {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse: return "parse_error";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::unknown_variable: return "unknown_variable";
    case ErrorCode::non_central: return "non_central";
    case ErrorCode::bad_prime: return "bad_prime";
    case ErrorCode::budget_exceeded: return "budget_exceeded";
    case ErrorCode::inconsistent: return "inconsistent";
    case ErrorCode::internal: return "internal";
  }
  return "internal";
}

Rational make_rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::invalid_argument, "zero denominator");
  }
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

namespace {

std::string strip(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

Integer parse_integer(const std::string& digits, std::string_view original) {
  std::size_t start = 0;
  if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) start = 1;
  if (start == digits.size()) {
    throw Error(ErrorCode::parse, "malformed rational '" + std::string(original) + "'");
  }
  for (std::size_t i = start; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
      throw Error(ErrorCode::parse, "malformed rational '" + std::string(original) + "'");
    }
  }
  // mpz_class rejects a leading '+'.
  return Integer(digits[0] == '+' ? digits.substr(1) : digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string s = strip(text);
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s, text));
  const Integer num = parse_integer(s.substr(0, slash), text);
  const std::string den_text = s.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '+' || den_text[0] == '-')) {
    throw Error(ErrorCode::parse, "sign in denominator of '" + std::string(text) + "'");
  }
  const Integer den = parse_integer(den_text, text);
  if (den == 0) throw Error(ErrorCode::parse, "zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

std::string to_string(const Rational& value) { return value.get_str(10); }
std::string to_string(const Integer& value) { return value.get_str(10); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Integer to_integer(const Rational& value) {
  if (!is_integer(value)) {
    throw Error(ErrorCode::inconsistent, "expected an integer, got " + to_string(value));
  }
  return value.get_num();
}

std::int64_t to_int64(const Integer& value) {
  if (!value.fits_slong_p()) {
    throw Error(ErrorCode::invalid_argument, "integer out of machine range: " + to_string(value));
  }
  return value.get_si();
}

Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer ipow(const Integer& base, unsigned exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational rpow(const Rational& base, unsigned exponent) {
  return make_rational(ipow(base.get_num(), exponent), ipow(base.get_den(), exponent));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

}  // namespace tuttekit
