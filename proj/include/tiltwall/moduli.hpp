#pragma once

#include <array>
#include <string>
#include <variant>

#include "tiltwall/chern.hpp"

namespace tiltwall {

struct ProjectiveSpace {
  long n;
};
struct PointModuli {
  ChernCharacter cls;
};
struct GrassBundle {
  std::string base = "P3";
  long k = 2;
  long n;
};
struct ProjBundle {
  std::string base = "P3xP3";
  long n;
};
struct BlowUp {
  std::string ambient = "Gr(3,10)";
  std::string center = "P3xP3";
};
struct SingularSemistable {
  std::string note;
};

struct ModuliDescription {
  std::variant<ProjectiveSpace, PointModuli, GrassBundle, ProjBundle, BlowUp, SingularSemistable>
      kind;
  /// For SingularSemistable this is the expected dimension 1 - chi(v, v).
  long dimension;

  std::string str() const;
};

/// binomial(5/2 - d, 2); d in 1/2 + Z, d <= -3/2.
long grass_fiber_n(const Rat& d);

ModuliDescription moduli_description(const Rat& c, const Rat& d);

/// 1 - chi(v, v). Equals ext^1(v, v) when hom = 1 and ext^2 = ext^3 = 0.
Rat expected_dimension(const ChernCharacter& v);

enum class ExtPair { FF, OvOv, F_Ov, Ov_F };

/// Stored ext^0..ext^3 between F = (2,-1,-1/2,5/6) and O_V(d+1) (for d <= -4)
/// or O_V(-2) (at d = -3). OvOv does not depend on d.
std::array<long, 4> ext_table(ExtPair pair, const Rat& d);

/// The two classes the table refers to, in (first, second) order.
std::pair<ChernCharacter, ChernCharacter> ext_pair_classes(ExtPair pair, const Rat& d);

}  // namespace tiltwall
