#include "qgf/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "qgf/errors.hpp"

namespace qgf {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body))
    throw std::invalid_argument("not a rational literal: '" + std::string(whole) + "'");
  mpz_class v(std::string(body), 10);
  return negative ? mpz_class(-v) : v;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

Rational parse_decimal(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    const mpz_class ev = parse_integer(body.substr(e + 1), text);
    if (!ev.fits_slong_p() || abs(ev) > 100000)
      throw std::invalid_argument("exponent out of range: '" + std::string(text) + "'");
    exponent = ev.get_si();
    body = body.substr(0, e);
  }
  std::string digits;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view ip = body.substr(0, dot);
    std::string_view fp = body.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    digits = std::string(ip) + std::string(fp);
    exponent -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(body))
      throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    digits = std::string(body);
  }
  mpq_class v{mpz_class(digits, 10)};
  if (exponent >= 0)
    v *= pow10(static_cast<unsigned long>(exponent));
  else
    v /= pow10(static_cast<unsigned long>(-exponent));
  v.canonicalize();
  return Rational(negative ? mpq_class(-v) : v);
}

} // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0)
    throw DomainError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpq_class &value) : value_(value) {
  if (value_.get_den() == 0)
    throw DomainError("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const mpz_class num = parse_integer(text.substr(0, slash), text);
    const mpz_class den = parse_integer(text.substr(slash + 1), text);
    if (den == 0)
      throw DomainError("rational with zero denominator: '" + std::string(text) + "'");
    return Rational(mpq_class(num, den));
  }
  return parse_decimal(text);
}

Rational &Rational::operator+=(const Rational &rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational &Rational::operator-=(const Rational &rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational &Rational::operator*=(const Rational &rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational &Rational::operator/=(const Rational &rhs) {
  if (rhs.is_zero())
    throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational Rational::pow(std::uint64_t exponent) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  // lowest terms are preserved by powers of coprime parts
  mpq_class r;
  mpq_set_num(r.get_mpq_t(), num.get_mpz_t());
  mpq_set_den(r.get_mpq_t(), den.get_mpz_t());
  Rational out;
  out.value_ = r;
  return out;
}

Rational Rational::reciprocal() const { return Rational(1) / *this; }

bool Rational::is_integer() const { return value_.get_den() == 1; }

std::string Rational::str() const {
  if (is_integer())
    return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::size_t Rational::bit_size() const {
  return mpz_sizeinbase(value_.get_num_mpz_t(), 2) + mpz_sizeinbase(value_.get_den_mpz_t(), 2);
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

} // namespace qgf
