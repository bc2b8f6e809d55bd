#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "tiltwall/rational.hpp"

namespace tiltwall {

/// ch_{<=2} of a class: the lattice Z + Z + (1/2)Z. The components are kept
/// as Rat because twisted classes (rational beta) leave the lattice.
struct ChernTrunc {
  Rat ch0, ch1, ch2;

  friend bool operator==(const ChernTrunc&, const ChernTrunc&) = default;
  friend ChernTrunc operator+(const ChernTrunc& a, const ChernTrunc& b) {
    return {a.ch0 + b.ch0, a.ch1 + b.ch1, a.ch2 + b.ch2};
  }
  friend ChernTrunc operator-(const ChernTrunc& a, const ChernTrunc& b) {
    return {a.ch0 - b.ch0, a.ch1 - b.ch1, a.ch2 - b.ch2};
  }
  friend ChernTrunc operator*(const Rat& t, const ChernTrunc& a) {
    return {t * a.ch0, t * a.ch1, t * a.ch2};
  }

  /// ch2 denominators divide 2 and ch0, ch1 are integers.
  bool is_lattice() const;
  /// Whether some ch3 makes this a sheaf-lattice class.
  bool is_extendable() const;
  /// "(r,c,d)"
  std::string str() const;
};

/// (ch0, ch1, ch2, ch3) of a class on P3, each ch_i paired against H^{3-i}.
struct ChernCharacter {
  Rat ch0, ch1, ch2, ch3;

  ChernTrunc trunc() const { return {ch0, ch1, ch2}; }
  std::array<Rat, 4> components() const { return {ch0, ch1, ch2, ch3}; }

  friend bool operator==(const ChernCharacter&, const ChernCharacter&) = default;
  friend ChernCharacter operator+(const ChernCharacter& a, const ChernCharacter& b) {
    return {a.ch0 + b.ch0, a.ch1 + b.ch1, a.ch2 + b.ch2, a.ch3 + b.ch3};
  }
  friend ChernCharacter operator-(const ChernCharacter& a, const ChernCharacter& b) {
    return {a.ch0 - b.ch0, a.ch1 - b.ch1, a.ch2 - b.ch2, a.ch3 - b.ch3};
  }
  friend ChernCharacter operator-(const ChernCharacter& a) {
    return {-a.ch0, -a.ch1, -a.ch2, -a.ch3};
  }
  friend ChernCharacter operator*(const Rat& t, const ChernCharacter& a) {
    return {t * a.ch0, t * a.ch1, t * a.ch2, t * a.ch3};
  }

  /// "(r,c,d,e)" in canonical rational form.
  std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const ChernTrunc& v);
std::ostream& operator<<(std::ostream& os, const ChernCharacter& v);

/// Parses "(r,c,d,e)"; whitespace is ignored. Throws ParseError.
ChernCharacter parse_class(std::string_view text);
/// Parses "(r,c,d)" or "(r,c,d,*)" or "(r,c,d,e)", keeping ch_{<=2}.
ChernTrunc parse_trunc(std::string_view text);

/// Throws ParseError unless 2*ch2 and 6*ch3 are integers (and ch0, ch1 are).
void check_lattice_denominators(const ChernCharacter& v);

ChernCharacter twist(const ChernCharacter& v, const Rat& beta);
ChernTrunc twist(const ChernTrunc& v, const Rat& beta);
ChernCharacter tensor_line_bundle(const ChernCharacter& v, long n);
/// ch(O(n)).
ChernCharacter line_bundle(long n);
/// ch(O_V(k)) for a plane V.
ChernCharacter plane_sheaf_class(long k);

ChernCharacter dual_class(const ChernCharacter& v);
ChernCharacter dual_shift_class(const ChernCharacter& v);

Rat delta(const ChernTrunc& v);
inline Rat delta(const ChernCharacter& v) { return delta(v.trunc()); }

ExtRat mu(const ChernTrunc& v);
inline ExtRat mu(const ChernCharacter& v) { return mu(v.trunc()); }

/// Truncated product in the Chow ring of P3.
ChernCharacter truncated_product(const ChernCharacter& a, const ChernCharacter& b);

Rat euler_char(const ChernCharacter& v);
/// chi(v, w) = chi(v^dual . w).
Rat euler_pairing(const ChernCharacter& v, const ChernCharacter& w);

/// P(v, m) = a3 m^3 + a2 m^2 + a1 m + a0.
struct HilbertPolynomial {
  Rat a3, a2, a1, a0;
  Rat operator()(const Rat& m) const { return ((a3 * m + a2) * m + a1) * m + a0; }
  /// Second truncation a3 m^2 + a2 m + a1.
  Rat p2(const Rat& m) const { return (a3 * m + a2) * m + a1; }
};
HilbertPolynomial hilbert_polynomial(const ChernCharacter& v);

bool is_sheaf_lattice_class(const ChernCharacter& v);

/// The unique residue e0 in [0,1) with (r,c,d,e0 + k) integral for all k.
/// Requires the truncation to be extendable.
Rat ch3_offset(const ChernTrunc& v);

struct LineBundleMultiple {
  long n;
  long m;  ///< positive multiplicity
  bool negated;  ///< v = -m ch_{<=2}(O(n)) (third component ignored)
  friend bool operator==(const LineBundleMultiple&, const LineBundleMultiple&) = default;
};
/// v = m ch(O(n)) exactly, or ch_{<=2}(v) = -m ch_{<=2}(O(n)).
std::optional<LineBundleMultiple> recognize_line_bundle_class(const ChernCharacter& v);

}  // namespace tiltwall
