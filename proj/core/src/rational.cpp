#include "exactfn/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "exactfn/errors.hpp"

namespace exactfn {

namespace {

bool all_digits(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) {
    throw InputError("malformed rational \"" + std::string(whole) + "\"");
  }
  mpz_class value(std::string(digits), 10);
  return negative ? mpz_class(-value) : value;
}

mpz_class power_of_ten(unsigned long exponent) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())) != 0) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())) != 0) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw InputError("empty rational");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash), whole);
    const std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
      throw InputError("malformed rational \"" + std::string(whole) + "\"");
    }
    mpz_class den = parse_integer(den_text, whole);
    if (den == 0) throw InputError("zero denominator in \"" + std::string(whole) + "\"");
    Rational out;
    out.value_ = mpq_class(num, den);
    out.value_.canonicalize();
    return out;
  }

  // Decimal with optional exponent.
  std::string_view mantissa = text;
  long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    const mpz_class exp_value = parse_integer(text.substr(e + 1), whole);
    if (!exp_value.fits_slong_p() || ::abs(exp_value) > 4096) {
      throw InputError("exponent out of range in \"" + std::string(whole) + "\"");
    }
    exponent = exp_value.get_si();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long fraction_digits = 0;
  if (const auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = mantissa.substr(0, dot);
    const std::string_view frac_part = mantissa.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw InputError("malformed rational \"" + std::string(whole) + "\"");
    }
    digits = std::string(int_part) + std::string(frac_part);
    fraction_digits = static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(mantissa)) {
      throw InputError("malformed rational \"" + std::string(whole) + "\"");
    }
    digits = std::string(mantissa);
  }
  mpz_class num(digits, 10);
  if (negative) num = -num;
  const long scale = exponent - fraction_digits;
  Rational out;
  if (scale >= 0) {
    out.value_ = mpq_class(num * power_of_ten(static_cast<unsigned long>(scale)));
  } else {
    out.value_ = mpq_class(num, power_of_ten(static_cast<unsigned long>(-scale)));
  }
  out.value_.canonicalize();
  return out;
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::abs() const {
  Rational out;
  out.value_ = ::abs(value_);
  return out;
}

std::size_t Rational::hash() const {
  const mpz_srcptr num = value_.get_num_mpz_t();
  const mpz_srcptr den = value_.get_den_mpz_t();
  std::size_t h1 = static_cast<std::size_t>(mpz_getlimbn(num, 0)) ^
                   static_cast<std::size_t>(mpz_size(num) * (mpz_sgn(num) + 2));
  const std::size_t h2 = static_cast<std::size_t>(mpz_getlimbn(den, 0));
  h1 ^= h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2);
  return h1;
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("division by zero");
  value_ /= other.value_;
  return *this;
}

Rational operator-(const Rational& value) {
  Rational out;
  out.value_ = -value.value_;
  return out;
}

std::ostream& operator<<(std::ostream& out, const Rational& value) { return out << value.str(); }

}  // namespace exactfn
