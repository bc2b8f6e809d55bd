#pragma once

#include <optional>
#include <string>
#include <variant>

#include "tiltwall/chern.hpp"

namespace tiltwall {

/// (beta, alpha^2). alphasq = 0 is a boundary probe.
struct HalfPlanePoint {
  Rat beta;
  Rat alphasq;
  friend bool operator==(const HalfPlanePoint&, const HalfPlanePoint&) = default;
};

struct Semicircle {
  Rat s;
  Rat rhosq;
  friend bool operator==(const Semicircle&, const Semicircle&) = default;
};
struct Vertical {
  Rat beta;
  friend bool operator==(const Vertical&, const Vertical&) = default;
};
struct Degenerate {
  friend bool operator==(const Degenerate&, const Degenerate&) = default;
};
/// The circle equation had rho^2 <= 0: no points of the open half plane.
struct EmptyWall {
  Rat s;
  Rat rhosq;
  friend bool operator==(const EmptyWall&, const EmptyWall&) = default;
};

class Wall {
 public:
  using Variant = std::variant<Semicircle, Vertical, Degenerate, EmptyWall>;

  Wall(Variant v) : v_(std::move(v)) {}  // NOLINT
  Wall(Semicircle w) : v_(std::move(w)) {}  // NOLINT
  Wall(Vertical w) : v_(std::move(w)) {}  // NOLINT
  Wall(Degenerate w) : v_(w) {}  // NOLINT
  Wall(EmptyWall w) : v_(std::move(w)) {}  // NOLINT
  /// Semicircle when rhosq > 0, EmptyWall otherwise.
  static Wall circle(Rat s, Rat rhosq);

  bool is_semicircle() const { return std::holds_alternative<Semicircle>(v_); }
  bool is_vertical() const { return std::holds_alternative<Vertical>(v_); }
  bool is_degenerate() const { return std::holds_alternative<Degenerate>(v_); }
  bool is_empty() const { return std::holds_alternative<EmptyWall>(v_); }

  /// Throws std::logic_error unless semicircular.
  const Semicircle& semicircle() const;
  const Variant& variant() const { return v_; }

  /// "semicircle s=.. rho2=..", "vertical beta=..", "degenerate", "empty s=.. rho2=..".
  std::string str() const;

  friend bool operator==(const Wall&, const Wall&) = default;

 private:
  Variant v_;
};

ExtRat nu(const ChernTrunc& v, const HalfPlanePoint& p);
inline ExtRat nu(const ChernCharacter& v, const HalfPlanePoint& p) { return nu(v.trunc(), p); }

/// alpha^2 Delta + 4 (ch2^b)^2 - 6 ch1^b ch3^b.
Rat bigQ(const ChernCharacter& v, const HalfPlanePoint& p);

Wall wall(const ChernTrunc& v, const ChernTrunc& w);
/// Numerical wall along which Q(v) changes sign.
Wall q_wall(const ChernCharacter& v);

/// The unique wall of v through p. Throws DomainError when ch1^beta(v) = 0.
Wall wall_through_point(const ChernTrunc& v, const HalfPlanePoint& p);

std::optional<Rat> vertical_wall(const ChernTrunc& v);

bool on_nu_zero_curve(const ChernTrunc& v, const HalfPlanePoint& p);

/// Upper bound for rho^2 of walls destabilized by a class of rank rF > ch0(v) >= 0.
Rat higher_rank_radius_bound(const ChernTrunc& v, long rF);

/// -Re Z / Im Z for Z = -ch3^b + (s + 1/6) a^2 ch1^b + i (ch2^b - a^2/2 ch0).
ExtRat lambda_slope(const ChernCharacter& v, const HalfPlanePoint& p, const Rat& s);

/// alpha^2 of the semicircle above beta (may be <= 0 off the disk).
Rat alphasq_on(const Semicircle& w, const Rat& beta);

/// alpha^2 at which W(v, w) crosses beta; none when the classes have
/// proportional ch_{<=1}^beta (the wall does not meet the line).
std::optional<Rat> crossing_alphasq(const ChernTrunc& v, const ChernTrunc& w, const Rat& beta);

/// Relative position of two semicircles.
enum class NestingRelation { Equal, Disjoint, Nested, Crossing };
NestingRelation nesting(const Semicircle& a, const Semicircle& b);

}  // namespace tiltwall
