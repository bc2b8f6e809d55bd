#include "tiltwall/moduli.hpp"

#include <stdexcept>

#include "tiltwall/bounds.hpp"
#include "tiltwall/errors.hpp"

namespace tiltwall {

namespace {

const ChernCharacter kF{2, -1, Rat(-1, 2), Rat(5, 6)};

long plane_twist(ExtPair pair, const Rat& d) {
  if (pair == ExtPair::OvOv) return -2;
  if (!d.is_integer()) throw std::invalid_argument("ext tables need integral d");
  if (d == Rat(-3)) return -2;
  if (d <= Rat(-4)) return (d + Rat(1)).to_long();
  throw std::invalid_argument("ext tables are stored for d = -3 and d <= -4");
}

}  // namespace

std::string ModuliDescription::str() const {
  struct {
    std::string operator()(const ProjectiveSpace& p) const { return "P" + std::to_string(p.n); }
    std::string operator()(const PointModuli& p) const { return "point " + p.cls.str(); }
    std::string operator()(const GrassBundle& g) const {
      return "Gr(" + std::to_string(g.k) + "," + std::to_string(g.n) + ")-bundle over " + g.base;
    }
    std::string operator()(const ProjBundle& p) const {
      return "P" + std::to_string(p.n) + "-bundle over " + p.base;
    }
    std::string operator()(const BlowUp& b) const {
      return "blow-up of " + b.ambient + " along " + b.center;
    }
    std::string operator()(const SingularSemistable& s) const { return s.note; }
  } fmt;
  std::string out = std::visit(fmt, kind);
  if (std::holds_alternative<SingularSemistable>(kind)) {
    return out + ", expected dim " + std::to_string(dimension);
  }
  return out + ", dim " + std::to_string(dimension);
}

long grass_fiber_n(const Rat& d) {
  if (!(d - Rat(1, 2)).is_integer() || d > Rat(-3, 2)) {
    throw std::invalid_argument("grass_fiber_n needs d in 1/2 + Z with d <= -3/2");
  }
  long m = (Rat(5, 2) - d).to_long();
  return m * (m - 1) / 2;
}

Rat expected_dimension(const ChernCharacter& v) { return Rat(1) - euler_pairing(v, v); }

ModuliDescription moduli_description(const Rat& c, const Rat& d) {
  check_rank2_normalized(c, d);
  if (c == Rat(-1)) {
    if (d == Rat(-1, 2)) return {ProjectiveSpace{3}, 3};
    long n = grass_fiber_n(d);
    return {GrassBundle{"P3", 2, n}, 3 + 2 * (n - 2)};
  }
  if (d.is_zero()) return {PointModuli{ChernCharacter{2, 0, 0, 0}}, 0};
  if (d == Rat(-1)) return {ProjectiveSpace{5}, 5};
  if (d == Rat(-2)) {
    ChernCharacter v{2, 0, -2, rank2_max_ch3_closed(c, d)};
    return {SingularSemistable{"strictly semistable sheaves, singular moduli"},
            expected_dimension(v).to_long()};
  }
  if (d == Rat(-3)) return {BlowUp{}, 21};
  long n = (d * (d - Rat(2)) - Rat(1)).to_long();
  return {ProjBundle{"P3xP3", n}, 6 + n};
}

std::pair<ChernCharacter, ChernCharacter> ext_pair_classes(ExtPair pair, const Rat& d) {
  if (pair == ExtPair::FF) return {kF, kF};
  ChernCharacter ov = plane_sheaf_class(plane_twist(pair, d));
  if (pair == ExtPair::OvOv) return {ov, ov};
  if (pair == ExtPair::F_Ov) return {kF, ov};
  return {ov, kF};
}

std::array<long, 4> ext_table(ExtPair pair, const Rat& d) {
  switch (pair) {
    case ExtPair::FF:
    case ExtPair::OvOv:
      return {1, 3, 0, 0};
    case ExtPair::F_Ov: {
      plane_twist(pair, d);
      if (d == Rat(-3)) return {0, 1, 0, 0};
      long x = d.to_long();
      return {0, 0, (x + 4) * (x + 2), 0};
    }
    case ExtPair::Ov_F: {
      plane_twist(pair, d);
      if (d == Rat(-3)) return {0, 15, 0, 0};
      long x = d.to_long();
      return {0, x * (x - 2), 0, 0};
    }
  }
  throw std::logic_error("unknown ext pair");
}

}  // namespace tiltwall
