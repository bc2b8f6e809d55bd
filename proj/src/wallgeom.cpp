#include "tiltwall/wallgeom.hpp"

#include <stdexcept>

#include "tiltwall/errors.hpp"

namespace tiltwall {

Wall Wall::circle(Rat s, Rat rhosq) {
  if (rhosq.sign() > 0) return Semicircle{std::move(s), std::move(rhosq)};
  return EmptyWall{std::move(s), std::move(rhosq)};
}

const Semicircle& Wall::semicircle() const {
  if (!is_semicircle()) throw std::logic_error("not a semicircular wall: " + str());
  return std::get<Semicircle>(v_);
}

std::string Wall::str() const {
  struct {
    std::string operator()(const Semicircle& w) const {
      return "semicircle s=" + w.s.str() + " rho2=" + w.rhosq.str();
    }
    std::string operator()(const Vertical& w) const { return "vertical beta=" + w.beta.str(); }
    std::string operator()(const Degenerate&) const { return "degenerate"; }
    std::string operator()(const EmptyWall& w) const {
      return "empty s=" + w.s.str() + " rho2=" + w.rhosq.str();
    }
  } fmt;
  return std::visit(fmt, v_);
}

ExtRat nu(const ChernTrunc& v, const HalfPlanePoint& p) {
  ChernTrunc t = twist(v, p.beta);
  if (t.ch1.is_zero()) return ExtRat::infinity();
  return (t.ch2 - p.alphasq * Rat(1, 2) * t.ch0) / t.ch1;
}

Rat bigQ(const ChernCharacter& v, const HalfPlanePoint& p) {
  ChernCharacter t = twist(v, p.beta);
  return p.alphasq * delta(v) + Rat(4) * t.ch2 * t.ch2 - Rat(6) * t.ch1 * t.ch3;
}

Wall wall(const ChernTrunc& v, const ChernTrunc& w) {
  Rat c01 = v.ch0 * w.ch1 - v.ch1 * w.ch0;
  Rat c02 = v.ch0 * w.ch2 - v.ch2 * w.ch0;
  Rat c12 = v.ch1 * w.ch2 - v.ch2 * w.ch1;
  if (c01.is_zero()) {
    if (c02.is_zero()) {
      // c12 != 0 alone forces v0 = w0 = 0 with independent (ch1, ch2): nu
      // never agrees, which is the same "no wall" as proportional classes.
      return Degenerate{};
    }
    return Vertical{c12 / c02};
  }
  Rat s = c02 / c01;
  return Wall::circle(s, s * s - Rat(2) * c12 / c01);
}

Wall q_wall(const ChernCharacter& v) {
  return wall(v.trunc(), ChernTrunc{v.ch1, Rat(2) * v.ch2, Rat(3) * v.ch3});
}

Wall wall_through_point(const ChernTrunc& v, const HalfPlanePoint& p) {
  // Circle b^2 + a^2 - 2 s b + q = 0 through p, with v2 - s v1 + (q/2) v0 = 0.
  Rat det = v.ch1 - v.ch0 * p.beta;
  if (det.is_zero()) {
    throw DomainError("point lies on the vertical wall beta=" + p.beta.str());
  }
  Rat r2 = p.beta * p.beta + p.alphasq;
  Rat s = (Rat(2) * v.ch2 - v.ch0 * r2) / (Rat(2) * det);
  Rat q = Rat(2) * s * p.beta - r2;
  return Wall::circle(s, s * s - q);
}

std::optional<Rat> vertical_wall(const ChernTrunc& v) {
  if (v.ch0.is_zero()) return std::nullopt;
  return v.ch1 / v.ch0;
}

bool on_nu_zero_curve(const ChernTrunc& v, const HalfPlanePoint& p) {
  ExtRat n = nu(v, p);
  return !n.is_infinite() && n.value().is_zero();
}

Rat higher_rank_radius_bound(const ChernTrunc& v, long rF) {
  if (v.ch0.sign() < 0 || !(Rat(rF) > v.ch0)) {
    throw std::invalid_argument("radius bound needs rF > ch0(v) >= 0");
  }
  return delta(v) / (Rat(4) * Rat(rF) * (Rat(rF) - v.ch0));
}

ExtRat lambda_slope(const ChernCharacter& v, const HalfPlanePoint& p, const Rat& s) {
  if (s.sign() <= 0) throw std::invalid_argument("lambda slope needs s > 0");
  ChernCharacter t = twist(v, p.beta);
  Rat re = -t.ch3 + (s + Rat(1, 6)) * p.alphasq * t.ch1;
  Rat im = t.ch2 - p.alphasq * Rat(1, 2) * t.ch0;
  if (im.is_zero()) return ExtRat::infinity();
  return -re / im;
}

Rat alphasq_on(const Semicircle& w, const Rat& beta) {
  Rat d = beta - w.s;
  return w.rhosq - d * d;
}

std::optional<Rat> crossing_alphasq(const ChernTrunc& v, const ChernTrunc& w, const Rat& beta) {
  ChernTrunc V = twist(v, beta);
  ChernTrunc W = twist(w, beta);
  Rat den = W.ch0 * V.ch1 - V.ch0 * W.ch1;
  if (den.is_zero()) return std::nullopt;
  return Rat(2) * (W.ch2 * V.ch1 - V.ch2 * W.ch1) / den;
}

NestingRelation nesting(const Semicircle& a, const Semicircle& b) {
  if (a == b) return NestingRelation::Equal;
  // Compare squared distances without square roots:
  // disjoint  <=> |s1-s2| >= r1 + r2,  nested <=> |s1-s2| <= |r1 - r2|.
  Rat d2 = (a.s - b.s) * (a.s - b.s);
  Rat sum = a.rhosq + b.rhosq;
  Rat k = d2 - sum;  // d^2 - r1^2 - r2^2, compared with +-2 r1 r2
  Rat prod4 = Rat(4) * a.rhosq * b.rhosq;
  if (k.sign() >= 0 && k * k >= prod4) return NestingRelation::Disjoint;
  if (k.sign() <= 0 && k * k >= prod4) return NestingRelation::Nested;
  return NestingRelation::Crossing;
}

}  // namespace tiltwall
