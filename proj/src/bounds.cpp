#include "tiltwall/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "tiltwall/errors.hpp"

namespace tiltwall {

namespace {

const Rat kHalf(1, 2);

Rat normalizing_twist(const Rat& c) { return Rat(rank2_normalizing_twist(c.to_long())); }

// ch3 of (r, c, d, e) tensored with O(m), given only the ch3 change.
Rat untwist_ch3(const ChernCharacter& u, const Rat& m) {
  return u.ch3 + m * u.ch2 + m * m * kHalf * u.ch1 + m * m * m * Rat(1, 6) * u.ch0;
}

bool window_consistent(const ChernTrunc& v, const CandidateWall& cw,
                       const std::vector<Rat>& probes) {
  for (const auto& b : probes) {
    if (alphasq_on(cw.wall, b).sign() <= 0) continue;
    Rat X = v.ch1 - b * v.ch0;
    Rat x = cw.sub.ch1 - b * cw.sub.ch0;
    if (!(x.sign() > 0 && x < X)) return false;
  }
  return true;
}

struct Budgeted {
  CandidateWall cw;
  Rat sub_budget;
  Rat total;
};

// Larger rho^2, then higher sub rank, then smaller (c1, c2).
bool better_certificate(const Budgeted& a, const Budgeted& b) {
  if (a.cw.wall.rhosq != b.cw.wall.rhosq) return a.cw.wall.rhosq > b.cw.wall.rhosq;
  if (a.cw.sub.ch0 != b.cw.sub.ch0) return a.cw.sub.ch0 > b.cw.sub.ch0;
  return std::tie(a.cw.sub.ch1, a.cw.sub.ch2) < std::tie(b.cw.sub.ch1, b.cw.sub.ch2);
}

}  // namespace

long rank2_normalizing_twist(long c) { return (c % 2 == 0) ? -c / 2 : -(c + 1) / 2; }

std::string certificate_str(const BoundCertificate& cert) {
  struct {
    std::string operator()(const QCert& q) const {
      return "Q(beta=" + q.point.beta.str() + ", alpha2=" + q.point.alphasq.str() + ") >= 0";
    }
    std::string operator()(const WallCert& w) const {
      return w.sub.str() + " + " + w.quot.str() + " along " + Wall(w.wall).str();
    }
    std::string operator()(const RigidCert& r) const {
      return std::to_string(r.line_bundle.m) + " ch(O(" + std::to_string(r.line_bundle.n) +
             "))";
    }
  } fmt;
  return std::visit(fmt, cert);
}

Rat rank0_max_ch3(const Rat& c, const Rat& d) {
  if (c.sign() <= 0) throw std::invalid_argument("rank zero bound needs c > 0");
  return c * c * c / Rat(24) + d * d / (Rat(2) * c);
}

Rat rank1_max_ch3(const Rat& c, const Rat& d) {
  if (!c.is_integer()) throw std::invalid_argument("ch1 must be an integer");
  Rat dn = c * c * kHalf - d;
  if (dn.sign() < 0) {
    throw NoSemistableClass("(1," + c.str() + "," + d.str() + ") is vacuous");
  }
  Rat cap = dn * (dn + Rat(1)) * kHalf;
  return cap - c * dn + c * c * c / Rat(6);
}

Rat rank_minus1_max_ch3(const Rat& c, const Rat& d) { return rank1_max_ch3(c, -d); }

void check_rank2_normalized(const Rat& c, const Rat& d) {
  if (c == Rat(-1)) {
    if (d > Rat(-1, 2)) throw NoSemistableClass("(2,-1," + d.str() + ") needs d <= -1/2");
    if (!(d - kHalf).is_integer()) throw std::invalid_argument("c = -1 needs d in 1/2 + Z");
    return;
  }
  if (c.is_zero()) {
    if (d.sign() > 0) throw NoSemistableClass("(2,0," + d.str() + ") needs d <= 0");
    if (!d.is_integer()) throw std::invalid_argument("c = 0 needs d in Z");
    return;
  }
  throw std::invalid_argument("normalized rank two classes have c in {-1, 0}");
}

Rat rank2_max_ch3_closed(const Rat& c, const Rat& d) {
  check_rank2_normalized(c, d);
  if (c == Rat(-1)) {
    if (d == Rat(-1, 2)) return Rat(5, 6);
    return d * d * kHalf - d + Rat(5, 24);
  }
  if (d == Rat(0) || d == Rat(-1)) return 0;
  if (d == Rat(-2)) return 2;
  if (d == Rat(-3)) return 4;
  return d * d * kHalf + d * kHalf + Rat(1);
}

Rat negative_rank2_max_ch3(const Rat& c, const Rat& d) {
  if (c == Rat(-1)) {
    if (d < Rat(1, 2)) throw NoSemistableClass("(-2,-1," + d.str() + ") needs d >= 1/2");
    if (!(d - kHalf).is_integer()) throw std::invalid_argument("c = -1 needs d in 1/2 + Z");
    return d * d * kHalf + d + Rat(5, 24);
  }
  if (c.is_zero()) {
    if (d.sign() < 0) throw NoSemistableClass("(-2,0," + d.str() + ") needs d >= 0");
    if (!d.is_integer()) throw std::invalid_argument("c = 0 needs d in Z");
    if (d <= Rat(1)) return 0;
    return d * d * kHalf - d * kHalf + Rat(1);
  }
  throw std::invalid_argument("normalized rank two classes have c in {-1, 0}");
}

std::vector<std::pair<ChernCharacter, ChernCharacter>> equality_decomposition(const Rat& c,
                                                                              const Rat& d) {
  check_rank2_normalized(c, d);
  using P = std::pair<ChernCharacter, ChernCharacter>;
  const ChernCharacter F{2, -1, Rat(-1, 2), Rat(5, 6)};
  if (c == Rat(-1)) {
    if (d == Rat(-1, 2)) return {P{Rat(3) * line_bundle(-1), -line_bundle(-2)}};
    long k = (d - kHalf).to_long();
    return {P{Rat(2) * line_bundle(-1), plane_sheaf_class(k)}};
  }
  if (d.is_zero()) return {P{line_bundle(0), line_bundle(0)}};
  if (d == Rat(-1)) return {P{Rat(5) * line_bundle(-1), -tensor_line_bundle(
                                                            {3, 4, 2, Rat(2, 3)}, -3)}};
  if (d == Rat(-2)) return {P{Rat(4) * line_bundle(-1), Rat(-2) * line_bundle(-2)}};
  if (d == Rat(-3)) {
    ChernCharacter ov = plane_sheaf_class(-2);
    return {P{Rat(3) * line_bundle(-1), -line_bundle(-3)}, P{F, ov}, P{ov, F}};
  }
  return {P{F, plane_sheaf_class((d + Rat(1)).to_long())}};
}

Rat max_ch3(const ChernTrunc& u) {
  const Rat& r = u.ch0;
  // Rank two checks its range before the lattice, so vacuous classes off the
  // lattice still report as vacuous.
  if (r != Rat(2) && r != Rat(-2) && !u.is_extendable()) {
    throw std::invalid_argument("not a lattice class: " + u.str());
  }
  if (r.is_zero()) {
    if (u.ch1.sign() <= 0) {
      throw NoSemistableClass("rank zero needs c > 0 in " + u.str());
    }
    return floor_to_coset(rank0_max_ch3(u.ch1, u.ch2), ch3_offset(u));
  }
  if (r == Rat(1)) return rank1_max_ch3(u.ch1, u.ch2);
  if (r == Rat(-1)) return rank_minus1_max_ch3(u.ch1, u.ch2);
  if (r == Rat(2) || r == Rat(-2)) {
    Rat d = r == Rat(2) ? u.ch2 : -u.ch2;
    Rat n = normalizing_twist(u.ch1);
    ChernCharacter t = tensor_line_bundle({2, u.ch1, d, 0}, n.to_long());
    ChernCharacter top{2, t.ch1, t.ch2, rank2_max_ch3_closed(t.ch1, t.ch2)};
    return untwist_ch3(top, -n);
  }
  throw std::invalid_argument("ranks -2..2 only");
}

// ---- search -------------------------------------------------------------

std::size_t BoundSolver::memo_size() const {
  std::lock_guard lock(mu_);
  return memo_.size();
}

SearchedBound BoundSolver::rank2(const Rat& c, const Rat& d) {
  std::lock_guard lock(mu_);
  check_rank2_normalized(c, d);
  return solve(c, d);
}

std::optional<Rat> BoundSolver::budget(const ChernTrunc& u,
                                       const std::optional<HalfPlanePoint>& at) {
  std::lock_guard lock(mu_);
  const Rat du = delta(u);
  if (du.sign() < 0) return std::nullopt;
  const Rat& r = u.ch0;
  if (r.sign() > 0 && du.is_zero()) {
    return floor_to_coset(u.ch1 * u.ch1 * u.ch1 / (Rat(6) * r * r), ch3_offset(u));
  }
  if (r.sign() < 0 && r >= Rat(-2)) {
    ChernTrunc dual{-u.ch0, u.ch1, -u.ch2};
    return budget(dual, std::nullopt);
  }
  if (r.is_zero()) {
    if (u.ch1.sign() <= 0) return std::nullopt;
    return floor_to_coset(rank0_max_ch3(u.ch1, u.ch2), ch3_offset(u));
  }
  if (r == Rat(1)) {
    try {
      return rank1_max_ch3(u.ch1, u.ch2);
    } catch (const NoSemistableClass&) {
      return std::nullopt;
    }
  }
  if (r == Rat(2)) {
    Rat n = normalizing_twist(u.ch1);
    ChernCharacter t = tensor_line_bundle({2, u.ch1, u.ch2, 0}, n.to_long());
    try {
      check_rank2_normalized(t.ch1, t.ch2);
    } catch (const NoSemistableClass&) {
      return std::nullopt;
    }
    if (!active_deltas_.empty() && !(du < active_deltas_.back())) {
      throw std::logic_error("rank two recursion did not decrease Delta at " + u.str());
    }
    SearchedBound sb = solve(t.ch1, t.ch2);
    return untwist_ch3({2, t.ch1, t.ch2, sb.e}, -n);
  }
  // |r| >= 3: Q >= 0 at the wall point.
  if (!at || du.is_zero()) return std::nullopt;
  ChernCharacter t = twist(ChernCharacter{u.ch0, u.ch1, u.ch2, 0}, at->beta);
  if (t.ch1.sign() <= 0) return std::nullopt;
  Rat cap3 = (at->alphasq * du + Rat(4) * t.ch2 * t.ch2) / (Rat(6) * t.ch1);
  Rat e = untwist_ch3({t.ch0, t.ch1, t.ch2, cap3}, at->beta);
  return floor_to_coset(e, ch3_offset(u));
}

SearchedBound BoundSolver::solve(const Rat& c, const Rat& d) {
  const auto key = std::pair(c, d);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const ChernTrunc v{2, c, d};
  const Rat dv = delta(v);
  if (dv > cfg_.max_delta) {
    throw UnsupportedRange("Delta=" + dv.str() + " exceeds the configured ceiling " +
                           cfg_.max_delta.str());
  }
  if (dv.is_zero()) {
    SearchedBound sb{0, RigidCert{LineBundleMultiple{0, 2, false}}};
    memo_.emplace(key, sb);
    return sb;
  }

  const std::vector<Rat> probes =
      c.is_zero() ? std::vector<Rat>{-1} : std::vector<Rat>{-1, Rat(-3, 2), -2};
  const Rat off = ch3_offset(v);

  // Q_{0,b} >= 0 is linear in e with positive leading coefficient -6 ch1^b.
  std::vector<Rat> caps;
  for (const auto& b : probes) {
    ChernCharacter t = twist(ChernCharacter{2, c, d, 0}, b);
    caps.push_back(Rat(4) * t.ch2 * t.ch2 / (Rat(6) * t.ch1) - t.ch3);
  }
  std::size_t bind = 0;
  for (std::size_t i = 1; i < caps.size(); ++i) {
    if (caps[i] < caps[bind]) bind = i;
  }
  const Rat eQ = floor_to_coset(caps[bind], off);
  const Rat e1 = eQ + Rat(1);
  Rat bstar = probes[bind];
  for (std::size_t i = 0; i < probes.size(); ++i) {
    if (caps[i] < e1) {
      bstar = probes[i];
      break;
    }
  }

  active_deltas_.push_back(dv);
  struct Pop {
    std::vector<Rat>& s;
    ~Pop() { s.pop_back(); }
  } pop{active_deltas_};

  const ChernCharacter v1{2, c, d, e1};
  std::vector<Budgeted> entries;
  for (const auto& cw : enumerate_candidates(v1, bstar, q_wall(v1))) {
    if (!window_consistent(v, cw, probes)) continue;
    HalfPlanePoint pt{bstar, cw.alphasq_at_probe};
    auto b1 = budget(cw.sub, pt);
    auto b2 = budget(v - cw.sub, pt);
    if (!b1 || !b2) continue;
    entries.push_back({cw, *b1, *b1 + *b2});
  }

  SearchedBound result{eQ, QCert{HalfPlanePoint{probes[bind], 0}}};
  if (!entries.empty()) {
    Rat B = entries.front().total;
    for (const auto& en : entries) B = std::max(B, en.total);
    for (Rat e = floor_to_coset(B, off); e >= e1; e -= Rat(1)) {
      Wall qe = q_wall({2, c, d, e});
      const Budgeted* best = nullptr;
      for (const auto& en : entries) {
        if (en.total < e) continue;
        if (qe.is_semicircle() && en.cw.wall.rhosq < qe.semicircle().rhosq) continue;
        if (!best || better_certificate(en, *best)) best = &en;
      }
      if (best) {
        ChernTrunc s = best->cw.sub;
        ChernTrunc q = v - s;
        result = SearchedBound{
            e, WallCert{{s.ch0, s.ch1, s.ch2, best->sub_budget},
                        {q.ch0, q.ch1, q.ch2, e - best->sub_budget},
                        best->cw.wall}};
        break;
      }
    }
  }
  memo_.emplace(key, result);
  return result;
}

std::vector<CandidateWall> BoundSolver::potential_walls(const ChernCharacter& v,
                                                        const std::vector<Rat>& probes) {
  std::lock_guard lock(mu_);
  Wall qw = q_wall(v);
  std::optional<Wall> min;
  if (qw.is_semicircle()) min = qw;
  std::vector<CandidateWall> out;
  for (const auto& b : probes) {
    for (const auto& cw : enumerate_candidates(v, b, min)) {
      if (!window_consistent(v.trunc(), cw, probes)) continue;
      bool seen = std::any_of(out.begin(), out.end(),
                              [&](const CandidateWall& o) { return o.sub == cw.sub; });
      if (seen) continue;
      HalfPlanePoint pt{b, cw.alphasq_at_probe};
      auto b1 = budget(cw.sub, pt);
      auto b2 = budget(v.trunc() - cw.sub, pt);
      if (!b1 || !b2 || *b1 + *b2 < v.ch3) continue;
      out.push_back(cw);
    }
  }
  std::sort(out.begin(), out.end(), candidate_less);
  // One representative per wall: the first sub in candidate order.
  out.erase(std::unique(out.begin(), out.end(),
                        [](const CandidateWall& a, const CandidateWall& b) {
                          return a.wall == b.wall;
                        }),
            out.end());
  return out;
}

BoundSolver& default_solver() {
  static BoundSolver solver;
  return solver;
}

SearchedBound rank2_max_ch3_searched(const Rat& c, const Rat& d) {
  return default_solver().rank2(c, d);
}

std::vector<CandidateWall> potential_walls(const ChernCharacter& v,
                                           const std::vector<Rat>& probes) {
  return default_solver().potential_walls(v, probes);
}

}  // namespace tiltwall
