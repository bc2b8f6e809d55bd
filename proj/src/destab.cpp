#include "tiltwall/destab.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "tiltwall/bounds.hpp"
#include "tiltwall/errors.hpp"

namespace tiltwall {

namespace {

struct Linear {
  Rat a, b;  // a*y + b >= 0
};

long rank_max_from_radius(const Rat& v0, const Rat& dv, const Rat& m) {
  // largest R > v0 with 4 m R (R - v0) <= dv, or v0 when none
  long R = v0.to_long();
  while (Rat(4) * m * Rat(R + 1) * (Rat(R + 1) - v0) <= dv) ++R;
  return R;
}

}  // namespace

ChernTrunc preferred_representative(const ChernTrunc& v, const ChernTrunc& w) {
  ChernTrunc g = v - w;
  auto key = [](const ChernTrunc& u) { return std::tuple(-u.ch0, u.ch1, u.ch2); };
  return key(w) <= key(g) ? w : g;
}

bool candidate_less(const CandidateWall& a, const CandidateWall& b) {
  if (a.wall.rhosq != b.wall.rhosq) return a.wall.rhosq > b.wall.rhosq;
  return std::tie(a.sub.ch0, a.sub.ch1, a.sub.ch2) < std::tie(b.sub.ch0, b.sub.ch1, b.sub.ch2);
}

bool is_candidate(const ChernTrunc& v, const Rat& beta0, const ChernTrunc& w,
                  const std::optional<Rat>& min_rhosq,
                  const std::optional<Rat>& high_rank_min_rhosq, CandidateWall* out) {
  ChernTrunc g = v - w;
  if (!w.is_extendable() || !g.is_extendable()) return false;
  Rat X = v.ch1 - beta0 * v.ch0;
  Rat x = w.ch1 - beta0 * w.ch0;
  if (!(x.sign() > 0 && x < X)) return false;
  Rat dw = delta(w), dg = delta(g);
  if (dw.sign() < 0 || dg.sign() < 0 || dw + dg > delta(v)) return false;
  auto a2 = crossing_alphasq(v, w, beta0);
  if (!a2 || a2->sign() <= 0) return false;
  Wall W = wall(v, w);
  if (!W.is_semicircle()) return false;
  const Semicircle& sc = W.semicircle();
  if (v.ch0.sign() >= 0) {
    Rat R = std::max(w.ch0, g.ch0);
    if (R > v.ch0) {
      if (sc.rhosq * Rat(4) * R * (R - v.ch0) > delta(v)) return false;
      if (high_rank_min_rhosq && sc.rhosq < *high_rank_min_rhosq) return false;
    }
  }
  if (min_rhosq && sc.rhosq < *min_rhosq) return false;
  if (out) *out = CandidateWall{w, sc, beta0, *a2};
  return true;
}

Enumeration enumerate_candidates_report(const ChernCharacter& vfull, const Rat& beta0,
                                        const std::optional<Wall>& min_wall) {
  const ChernTrunc v = vfull.trunc();
  const Rat X = v.ch1 - beta0 * v.ch0;
  if (X.is_zero()) throw DomainError("probe beta=" + beta0.str() + " is on the vertical wall");
  if (X.sign() < 0) {
    throw DomainError("probe beta=" + beta0.str() + " is right of the vertical wall");
  }
  Enumeration rep;

  std::optional<Rat> min_rhosq, high_min;
  if (min_wall && min_wall->is_semicircle()) {
    min_rhosq = min_wall->semicircle().rhosq;
  } else {
    Wall qw = q_wall(vfull);
    if (qw.is_semicircle()) high_min = qw.semicircle().rhosq;
  }
  std::optional<Rat> cut = min_rhosq ? min_rhosq : high_min;

  const Rat v0 = v.ch0;
  const Rat dv = delta(v);
  long rmax;  // bound on max(r, v0 - r)
  if (v0.sign() >= 0 && dv.sign() <= 0) {
    rmax = v0.to_long();
  } else if (v0.sign() >= 0 && cut && cut->sign() > 0) {
    rmax = rank_max_from_radius(v0, dv, *cut);
  } else {
    rmax = kFallbackRankCap;
    rep.warnings.push_back("rank loop capped at " + std::to_string(kFallbackRankCap) +
                           " for " + vfull.str());
  }
  const long v0l = v0.to_long();
  const long rlo = v0l - rmax;

  std::vector<CandidateWall> found;
  for (long r = rlo; r <= rmax; ++r) {
    const Rat R(r);
    const Rat br = beta0 * R;
    for (mpz_class c1z = br.floor() + 1; Rat(c1z) < br + X; ++c1z) {
      const Rat c1(c1z);
      const Rat x = c1 - br;
      if (x.sign() <= 0) continue;
      const Rat cg = v.ch1 - c1;
      const Rat rg = v0 - R;
      std::vector<Linear> cons;
      cons.push_back({Rat(-2) * R, c1 * c1});
      cons.push_back({Rat(2) * rg, cg * cg - Rat(2) * rg * v.ch2});
      cons.push_back({Rat(4) * R - Rat(2) * v0, dv - c1 * c1 - cg * cg + Rat(2) * rg * v.ch2});
      const Rat D = R * X - v0 * x;
      if (D.is_zero()) continue;
      const Rat sgn(D.sign());
      const Rat V2 = v.ch2 - beta0 * v.ch1 + beta0 * beta0 * Rat(1, 2) * v0;
      const Rat shift = -beta0 * c1 + beta0 * beta0 * Rat(1, 2) * R;
      cons.push_back({X * sgn, (shift * X - V2 * x) * sgn});

      std::optional<Rat> lo, hi;
      bool infeasible = false;
      for (const auto& [a, b] : cons) {
        if (a.is_zero()) {
          if (b.sign() < 0) infeasible = true;
          continue;
        }
        Rat t = -b / a;
        if (a.sign() > 0) {
          if (!lo || t > *lo) lo = t;
        } else {
          if (!hi || t < *hi) hi = t;
        }
      }
      if (infeasible) continue;
      if (!lo || !hi) {
        throw UnsupportedRange("unbounded ch2 interval for sub rank " + std::to_string(r) +
                               " of " + vfull.str());
      }
      const Rat off = frac(c1 * c1 * Rat(1, 2));
      for (Rat y = off + Rat((*lo - off).ceil()); y <= *hi; y += Rat(1)) {
        CandidateWall cw;
        if (is_candidate(v, beta0, ChernTrunc{R, c1, y}, min_rhosq, high_min, &cw)) {
          cw.sub = preferred_representative(v, cw.sub);
          found.push_back(cw);
        }
      }
    }
  }
  std::sort(found.begin(), found.end(), candidate_less);
  found.erase(std::unique(found.begin(), found.end()), found.end());
  rep.candidates = std::move(found);
  return rep;
}

std::vector<CandidateWall> enumerate_candidates(const ChernCharacter& v, const Rat& beta0,
                                                const std::optional<Wall>& min_wall) {
  return enumerate_candidates_report(v, beta0, min_wall).candidates;
}

std::optional<CandidateWall> largest_wall_left(const ChernCharacter& v,
                                               const std::vector<Rat>& probes) {
  if (probes.empty()) throw std::invalid_argument("largest_wall_left needs probes");
  std::optional<CandidateWall> best;
  for (const auto& b : probes) {
    for (const auto& cw : enumerate_candidates(v, b, std::nullopt)) {
      if (!best || cw.wall.rhosq > best->wall.rhosq) best = cw;
    }
  }
  return best;
}

std::vector<Rat> parse_probe_list(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rat::parse(item));
  if (out.empty()) throw ParseError("empty probe list");
  return out;
}

std::vector<Rat> default_probes(const ChernCharacter& v) {
  if (const char* env = std::getenv("TILTWALLS_PROBES"); env && *env) {
    return parse_probe_list(env);
  }
  if (v.ch0 == Rat(2) && v.ch1.is_integer()) {
    // v(n) has ch1 in {0, -1}; twisting back shifts the base lines by -n.
    Rat shift(rank2_normalizing_twist(v.ch1.to_long()));
    return {Rat(-1) - shift, Rat(-3, 2) - shift, Rat(-2) - shift};
  }
  if (v.ch0.is_zero()) {
    if (v.ch1.is_zero()) return {};
    return {v.ch2 / v.ch1};
  }
  Rat m = v.ch1 / v.ch0;
  std::vector<Rat> out;
  Rat start = Rat((Rat(2) * (m - Rat(2))).ceil()) * Rat(1, 2);
  for (Rat b = start; b < m; b += Rat(1, 2)) out.push_back(b);
  return out;
}

}  // namespace tiltwall
