#include "tiltwall/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "tiltwall/errors.hpp"

namespace tiltwall {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_signed_digits(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

mpz_class to_mpz(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rat::Rat(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, 1);
  q_ /= den;
  q_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

std::optional<Rat> Rat::try_parse(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_signed_digits(text)) return std::nullopt;
    return Rat(to_mpz(text));
  }
  auto p = trim(text.substr(0, slash));
  auto q = trim(text.substr(slash + 1));
  if (!is_signed_digits(p) || !is_signed_digits(q)) return std::nullopt;
  mpz_class den = to_mpz(q);
  if (den == 0) return std::nullopt;
  return Rat(mpq_class(to_mpz(p), den));
}

Rat Rat::parse(std::string_view text) {
  auto r = try_parse(text);
  if (!r) throw ParseError("not a rational: '" + std::string(text) + "'");
  return *r;
}

mpz_class Rat::floor() const {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

mpz_class Rat::ceil() const {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

long Rat::to_long() const {
  if (!is_integer()) throw std::domain_error("not an integer: " + str());
  if (!q_.get_num().fits_slong_p()) throw std::domain_error("integer out of range: " + str());
  return q_.get_num().get_si();
}

std::string Rat::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

Rat pow(const Rat& r, unsigned k) {
  Rat out(1);
  for (unsigned i = 0; i < k; ++i) out *= r;
  return out;
}

Rat frac(const Rat& r) { return r - Rat(r.floor()); }

Rat floor_to_coset(const Rat& bound, const Rat& offset) {
  return offset + Rat((bound - offset).floor());
}

const Rat& ExtRat::value() const {
  if (!value_) throw std::logic_error("value() of +infinity");
  return *value_;
}

std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
  }
  return *a.value_ <=> *b.value_;
}

std::ostream& operator<<(std::ostream& os, const ExtRat& r) { return os << r.str(); }

}  // namespace tiltwall
