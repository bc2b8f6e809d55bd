#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tiltwall/chern.hpp"
#include "tiltwall/wallgeom.hpp"

namespace tiltwall {

/// A numerical decomposition v = w + (v - w) whose wall meets the probe line.
struct CandidateWall {
  ChernTrunc sub;  ///< w; the quotient is v - w
  Semicircle wall;
  Rat probe;
  Rat alphasq_at_probe;

  ChernTrunc quotient(const ChernTrunc& v) const { return v - sub; }
  friend bool operator==(const CandidateWall&, const CandidateWall&) = default;
};

/// Rank cap used when no positive minimum radius is available.
inline constexpr long kFallbackRankCap = 64;

struct Enumeration {
  std::vector<CandidateWall> candidates;
  std::vector<std::string> warnings;
};

/// Membership test shared by the enumerator and any brute-force check.
/// `min_rhosq`: every candidate needs rho^2 >= it (pass none for no bound).
/// `high_rank_min_rhosq`: extra requirement for max(r, v0 - r) > v0.
bool is_candidate(const ChernTrunc& v, const Rat& beta0, const ChernTrunc& w,
                  const std::optional<Rat>& min_rhosq,
                  const std::optional<Rat>& high_rank_min_rhosq,
                  CandidateWall* out = nullptr);

/// All lattice candidates along beta = beta0, deduplicated under w <-> v - w,
/// ordered by rho^2 descending then (r, c1, c2) ascending.
/// Throws DomainError when beta0 is on or right of the vertical wall.
Enumeration enumerate_candidates_report(const ChernCharacter& v, const Rat& beta0,
                                        const std::optional<Wall>& min_wall);
std::vector<CandidateWall> enumerate_candidates(const ChernCharacter& v, const Rat& beta0,
                                                const std::optional<Wall>& min_wall);

std::optional<CandidateWall> largest_wall_left(const ChernCharacter& v,
                                               const std::vector<Rat>& probes);

/// Representative of {w, v - w}: higher rank, then smaller c1, then smaller c2.
ChernTrunc preferred_representative(const ChernTrunc& v, const ChernTrunc& w);

/// Candidate order: rho^2 descending, then sub (r, c1, c2) ascending.
bool candidate_less(const CandidateWall& a, const CandidateWall& b);

/// Probe lines per class. TILTWALLS_PROBES (comma separated) overrides.
std::vector<Rat> default_probes(const ChernCharacter& v);
/// Parses "a,b,c" into rationals. Throws ParseError.
std::vector<Rat> parse_probe_list(const std::string& text);

}  // namespace tiltwall
