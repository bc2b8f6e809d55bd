#include "tiltwall/chern.hpp"

#include <algorithm>
#include <ostream>
#include <vector>

#include "tiltwall/errors.hpp"

namespace tiltwall {

namespace {

const Rat kHalf(1, 2);
const Rat kSixth(1, 6);

std::vector<std::string> split_tuple(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t' && ch != '\n' && ch != '\r') s.push_back(ch);
  }
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw ParseError("expected a parenthesized tuple: '" + std::string(text) + "'");
  }
  std::vector<std::string> parts;
  std::string cur;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i] == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(s[i]);
    }
  }
  parts.push_back(cur);
  return parts;
}

bool twice_is_integer(const Rat& x) { return (Rat(2) * x).is_integer(); }

}  // namespace

bool ChernTrunc::is_lattice() const {
  return ch0.is_integer() && ch1.is_integer() && twice_is_integer(ch2);
}

bool ChernTrunc::is_extendable() const {
  return is_lattice() && (ch2 - ch1 * ch1 * kHalf).is_integer();
}

std::string ChernTrunc::str() const {
  return "(" + ch0.str() + "," + ch1.str() + "," + ch2.str() + ")";
}

std::string ChernCharacter::str() const {
  return "(" + ch0.str() + "," + ch1.str() + "," + ch2.str() + "," + ch3.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const ChernTrunc& v) { return os << v.str(); }
std::ostream& operator<<(std::ostream& os, const ChernCharacter& v) { return os << v.str(); }

ChernCharacter parse_class(std::string_view text) {
  auto parts = split_tuple(text);
  if (parts.size() != 4) {
    throw ParseError("a class needs four components: '" + std::string(text) + "'");
  }
  ChernCharacter v{Rat::parse(parts[0]), Rat::parse(parts[1]), Rat::parse(parts[2]),
                   Rat::parse(parts[3])};
  check_lattice_denominators(v);
  return v;
}

ChernTrunc parse_trunc(std::string_view text) {
  auto parts = split_tuple(text);
  if (parts.size() != 3 && parts.size() != 4) {
    throw ParseError("expected (r,c,d) or (r,c,d,e): '" + std::string(text) + "'");
  }
  if (parts.size() == 4 && parts[3] != "*") Rat::parse(parts[3]);
  ChernTrunc v{Rat::parse(parts[0]), Rat::parse(parts[1]), Rat::parse(parts[2])};
  if (!v.is_lattice()) throw ParseError("not in the lattice Z+Z+Z/2: " + v.str());
  return v;
}

void check_lattice_denominators(const ChernCharacter& v) {
  if (!v.trunc().is_lattice() || !(Rat(6) * v.ch3).is_integer()) {
    throw ParseError("component denominators must divide (1,1,2,6): " + v.str());
  }
}

ChernCharacter twist(const ChernCharacter& v, const Rat& b) {
  Rat b2 = b * b * kHalf;
  Rat b3 = b * b * b * kSixth;
  return {v.ch0, v.ch1 - b * v.ch0, v.ch2 - b * v.ch1 + b2 * v.ch0,
          v.ch3 - b * v.ch2 + b2 * v.ch1 - b3 * v.ch0};
}

ChernTrunc twist(const ChernTrunc& v, const Rat& b) {
  return {v.ch0, v.ch1 - b * v.ch0, v.ch2 - b * v.ch1 + b * b * kHalf * v.ch0};
}

ChernCharacter line_bundle(long n) {
  Rat x(n);
  return {1, x, x * x * kHalf, x * x * x * kSixth};
}

ChernCharacter tensor_line_bundle(const ChernCharacter& v, long n) {
  return truncated_product(v, line_bundle(n));
}

ChernCharacter plane_sheaf_class(long k) {
  Rat x(k);
  return {0, 1, x - kHalf, x * x * kHalf - x * kHalf + kSixth};
}

ChernCharacter dual_class(const ChernCharacter& v) { return {v.ch0, -v.ch1, v.ch2, -v.ch3}; }

ChernCharacter dual_shift_class(const ChernCharacter& v) {
  return {-v.ch0, v.ch1, -v.ch2, v.ch3};
}

Rat delta(const ChernTrunc& v) { return v.ch1 * v.ch1 - Rat(2) * v.ch0 * v.ch2; }

ExtRat mu(const ChernTrunc& v) {
  if (v.ch0.is_zero()) return ExtRat::infinity();
  return v.ch1 / v.ch0;
}

ChernCharacter truncated_product(const ChernCharacter& a, const ChernCharacter& b) {
  auto x = a.components();
  auto y = b.components();
  std::array<Rat, 4> z;
  for (int k = 0; k < 4; ++k) {
    for (int i = 0; i <= k; ++i) z[k] += x[i] * y[k - i];
  }
  return {z[0], z[1], z[2], z[3]};
}

Rat euler_char(const ChernCharacter& v) {
  return v.ch3 + Rat(2) * v.ch2 + Rat(11, 6) * v.ch1 + v.ch0;
}

Rat euler_pairing(const ChernCharacter& v, const ChernCharacter& w) {
  return euler_char(truncated_product(dual_class(v), w));
}

HilbertPolynomial hilbert_polynomial(const ChernCharacter& v) {
  // Expand chi(v . e^{mH}) in m.
  Rat r = v.ch0, c = v.ch1, d = v.ch2;
  HilbertPolynomial p;
  p.a3 = r * kSixth;
  p.a2 = c * kHalf + r;
  p.a1 = d + Rat(2) * c + Rat(11, 6) * r;
  p.a0 = euler_char(v);
  return p;
}

bool is_sheaf_lattice_class(const ChernCharacter& v) {
  for (long n = 0; n <= 3; ++n) {
    if (!euler_char(tensor_line_bundle(v, n)).is_integer()) return false;
  }
  return true;
}

Rat ch3_offset(const ChernTrunc& v) {
  if (!v.is_extendable()) throw DomainError("no sheaf-lattice class extends " + v.str());
  return frac(-(Rat(2) * v.ch2 + Rat(11, 6) * v.ch1 + v.ch0));
}

std::optional<LineBundleMultiple> recognize_line_bundle_class(const ChernCharacter& v) {
  if (v.ch0.is_zero() || !v.ch0.is_integer()) return std::nullopt;
  Rat nr = v.ch1 / v.ch0;
  if (!nr.is_integer()) return std::nullopt;
  long n = nr.to_long();
  long r = v.ch0.to_long();
  ChernCharacter o = line_bundle(n);
  if (r > 0) {
    if (v == Rat(r) * o) return LineBundleMultiple{n, r, false};
    return std::nullopt;
  }
  if (v.trunc() == Rat(r) * o.trunc()) return LineBundleMultiple{n, -r, true};
  return std::nullopt;
}

}  // namespace tiltwall
