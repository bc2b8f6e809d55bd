#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "tiltwall/chern.hpp"
#include "tiltwall/destab.hpp"
#include "tiltwall/wallgeom.hpp"

namespace tiltwall {

struct QCert {
  HalfPlanePoint point;  ///< Q >= 0 here caps ch3
  friend bool operator==(const QCert&, const QCert&) = default;
};
struct WallCert {
  ChernCharacter sub;
  ChernCharacter quot;
  Semicircle wall;
  friend bool operator==(const WallCert&, const WallCert&) = default;
};
struct RigidCert {
  LineBundleMultiple line_bundle;
  friend bool operator==(const RigidCert&, const RigidCert&) = default;
};
using BoundCertificate = std::variant<QCert, WallCert, RigidCert>;

std::string certificate_str(const BoundCertificate& cert);

/// n with ch1((2, c)(n)) in {0, -1}.
long rank2_normalizing_twist(long c);

// ---- closed forms -------------------------------------------------------

/// c^3/24 + d^2/(2c); c > 0.
Rat rank0_max_ch3(const Rat& c, const Rat& d);
/// Cap for (1, c, d); throws NoSemistableClass when c^2/2 - d < 0.
Rat rank1_max_ch3(const Rat& c, const Rat& d);
/// Cap for (-1, c, d) through the shifted dual (1, c, -d).
Rat rank_minus1_max_ch3(const Rat& c, const Rat& d);

/// Validates c in {-1, 0} and the lattice/range of d. Throws
/// std::invalid_argument off the lattice and NoSemistableClass past the range.
void check_rank2_normalized(const Rat& c, const Rat& d);

Rat rank2_max_ch3_closed(const Rat& c, const Rat& d);
/// Rank -2 table, written out directly (no dual map involved).
Rat negative_rank2_max_ch3(const Rat& c, const Rat& d);

/// Destabilizing pair(s) realizing the maximum, shifted factors as negated classes.
std::vector<std::pair<ChernCharacter, ChernCharacter>> equality_decomposition(const Rat& c,
                                                                              const Rat& d);

/// Largest lattice ch3 over ranks -2..2 and any c, by twisting to the
/// normalized tables. Rank 0 values are floored to the lattice.
Rat max_ch3(const ChernTrunc& u);

// ---- search -------------------------------------------------------------

struct SearchedBound {
  Rat e;
  BoundCertificate cert;
};

struct SolverConfig {
  Rat max_delta = Rat(2000);
};

/// Recursive wall search for (2, c, d). Thread safe; results are memoized
/// per instance keyed by the normalized (c, d).
class BoundSolver {
 public:
  explicit BoundSolver(SolverConfig cfg = {}) : cfg_(cfg) {}

  SearchedBound rank2(const Rat& c, const Rat& d);

  /// Upper bound for ch3 of a semistable class u that destabilizes along a
  /// wall through `at`; none when u cannot be semistable.
  std::optional<Rat> budget(const ChernTrunc& u, const std::optional<HalfPlanePoint>& at);

  /// Candidates at the given probes, with the Q-wall of v as minimum and
  /// budget(w) + budget(v - w) >= ch3(v). One entry per distinct wall, in
  /// candidate order.
  std::vector<CandidateWall> potential_walls(const ChernCharacter& v,
                                             const std::vector<Rat>& probes);

  /// Number of memoized rank-2 results.
  std::size_t memo_size() const;

 private:
  SearchedBound solve(const Rat& c, const Rat& d);

  SolverConfig cfg_;
  mutable std::recursive_mutex mu_;
  std::map<std::pair<Rat, Rat>, SearchedBound> memo_;
  std::vector<Rat> active_deltas_;
};

/// Shared process-wide solver.
BoundSolver& default_solver();

SearchedBound rank2_max_ch3_searched(const Rat& c, const Rat& d);
std::vector<CandidateWall> potential_walls(const ChernCharacter& v, const std::vector<Rat>& probes);

}  // namespace tiltwall
