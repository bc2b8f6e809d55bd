#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace tiltwall {

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator. Backed by GMP's mpq_class.
class Rat {
 public:
  Rat() = default;
  Rat(long n) : q_(n) {}  // NOLINT: implicit by intent, integers are rationals
  Rat(long num, long den);
  explicit Rat(const mpz_class& n) : q_(n) {}
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses "p", "-p", "p/q" (surrounding whitespace allowed).
  static Rat parse(std::string_view text);
  static std::optional<Rat> try_parse(std::string_view text);

  const mpq_class& raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_integer() const { return q_.get_den() == 1; }
  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  mpz_class floor() const;
  mpz_class ceil() const;
  /// Integer value; throws std::domain_error when not an integer or out of
  /// the range of long.
  long to_long() const;
  double to_double() const { return q_.get_d(); }

  /// Canonical text: "p/q", denominator omitted when 1.
  std::string str() const;

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Rat abs(const Rat& r);
Rat pow(const Rat& r, unsigned k);
/// Largest element of (offset + Z) that is <= bound.
Rat floor_to_coset(const Rat& bound, const Rat& offset);
/// Fractional part in [0, 1).
Rat frac(const Rat& r);

/// A rational extended by +infinity, the value set of slope functions.
class ExtRat {
 public:
  ExtRat(Rat value) : value_(std::move(value)) {}  // NOLINT
  static ExtRat infinity() { return ExtRat(); }

  bool is_infinite() const { return !value_.has_value(); }
  const Rat& value() const;  ///< throws std::logic_error when infinite
  std::string str() const { return value_ ? value_->str() : "+inf"; }

  friend bool operator==(const ExtRat&, const ExtRat&) = default;
  friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b);

 private:
  ExtRat() = default;
  std::optional<Rat> value_;
};

std::ostream& operator<<(std::ostream& os, const ExtRat& r);

}  // namespace tiltwall
