#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>
#include <tuple>

#include "oracles.hpp"
#include "support.hpp"
#include "tiltwall/errors.hpp"
#include "tiltwall/destab.hpp"

using namespace tiltwall;
using testing_support::lattice_class;
using testing_support::uniform;
using namespace testing_oracles;


TEST_CASE("enumeration examples") {
  CHECK(enumerate_candidates({2, 0, -2, 2}, Rat(-1), std::nullopt).empty());
  auto one = enumerate_candidates({2, 0, -3, 4}, Rat(-1), std::nullopt);
  REQUIRE(one.size() == 1);
  CHECK(one[0].sub == ChernTrunc{2, -1, Rat(-1, 2)});
  CHECK(one[0].alphasq_at_probe == Rat(1));
  CHECK(one[0].wall == Semicircle{Rat(-5, 2), Rat(13, 4)});
  CHECK(enumerate_candidates({2, -1, Rat(-1, 2), Rat(5, 6)}, Rat(-1), std::nullopt).empty());
  CHECK_THROWS_AS(enumerate_candidates({2, 0, 0, 0}, Rat(0), std::nullopt), DomainError);
  CHECK_THROWS_AS(enumerate_candidates({2, 0, -3, 4}, Rat(1), std::nullopt), DomainError);
}

TEST_CASE("largest wall left") {
  auto w = largest_wall_left({2, 0, -3, 4}, {Rat(-1)});
  REQUIRE(w);
  CHECK(w->sub == ChernTrunc{2, -1, Rat(-1, 2)});
  CHECK(w->wall == Semicircle{Rat(-5, 2), Rat(13, 4)});
  CHECK_FALSE(largest_wall_left({2, 0, 0, 0}, {Rat(-1)}));
  // the O(-1) wall of an ideal sheaf of a line has its top point at beta = -3/2
  // and only touches beta = -1 at alpha = 0
  CHECK_FALSE(largest_wall_left({1, 0, -1, 1}, {Rat(-1)}));
  auto l = largest_wall_left({1, 0, -1, 1}, {Rat(-1), Rat(-3, 2)});
  REQUIRE(l);
  CHECK(l->sub == ChernTrunc{1, -1, Rat(1, 2)});
  CHECK(l->wall == Semicircle{Rat(-3, 2), Rat(1, 4)});
  CHECK_THROWS(largest_wall_left({2, 0, 0, 0}, {}));
}

TEST_CASE("probe lists") {
  auto p = default_probes({2, 0, -3, 4});
  CHECK(p == std::vector<Rat>{Rat(-1), Rat(-3, 2), Rat(-2)});
  auto q = default_probes({2, -1, Rat(-1, 2), Rat(5, 6)});
  CHECK(q == std::vector<Rat>{Rat(-1), Rat(-3, 2), Rat(-2)});
  CHECK(parse_probe_list("-1, -3/2") == std::vector<Rat>{Rat(-1), Rat(-3, 2)});
  CHECK_THROWS_AS(parse_probe_list(""), ParseError);
  setenv("TILTWALLS_PROBES", "-5/2", 1);
  CHECK(default_probes({2, 0, -3, 4}) == std::vector<Rat>{Rat(-5, 2)});
  unsetenv("TILTWALLS_PROBES");
}

TEST_CASE("zero discriminant classes have no candidates") {
  for (long n = -3; n <= 3; ++n) {
    for (long m = 1; m <= 3; ++m) {
      ChernCharacter v = Rat(m) * line_bundle(n);
      Rat b = Rat(n) - Rat(1, 2);
      CHECK(enumerate_candidates(v, b, std::nullopt).empty());
    }
  }
}

TEST_CASE("property: agreement with brute force") {
  int done = 0, nonempty = 0;
  while (done < 220) {
    ChernCharacter v = small_class();
    Rat b = probe_left_of_wall(v);
    Wall qw = q_wall(v);
    bool with_min = done % 3 == 0;
    std::optional<Wall> min_wall;
    std::optional<Rat> cut, high_cut;
    if (with_min) {
      Rat rho(uniform(1, 16), 4);
      min_wall = Wall(Semicircle{b - Rat(1), rho});
      cut = rho;
    } else {
      if (!qw.is_semicircle()) continue;
      high_cut = qw.semicircle().rhosq;
    }
    Enumeration e = enumerate_candidates_report(v, b, min_wall);
    if (!e.warnings.empty()) continue;
    auto got = as_keys(e.candidates);
    CHECK(got.size() == e.candidates.size());
    auto want = brute_force(v.trunc(), b, cut, high_cut, 10, 30);
    CHECK(got == want);
    if (!got.empty()) ++nonempty;
    ++done;
  }
  CHECK(nonempty > 20);
}

TEST_CASE("property: crossing point and ordering") {
  int done = 0;
  while (done < 200) {
    ChernCharacter v = small_class();
    Rat b = probe_left_of_wall(v);
    if (!q_wall(v).is_semicircle()) continue;
    auto cs = enumerate_candidates(v, b, std::nullopt);
    for (size_t i = 0; i < cs.size(); ++i) {
      const auto& c = cs[i];
      Rat q = c.wall.s * c.wall.s - c.wall.rhosq;
      CHECK((b * b + c.alphasq_at_probe - Rat(2) * c.wall.s * b + q).is_zero());
      CHECK(c.probe == b);
      Rat X = v.ch1 - b * v.ch0;
      Rat x = c.sub.ch1 - b * c.sub.ch0;
      CHECK(x.sign() > 0);
      CHECK(x < X);
      CHECK(delta(c.sub) + delta(c.quotient(v.trunc())) <= delta(v));
      CHECK(preferred_representative(v.trunc(), c.quotient(v.trunc())) == c.sub);
      if (i > 0) CHECK_FALSE(candidate_less(c, cs[i - 1]));
    }
    ++done;
  }
}

TEST_CASE("property: symmetry under sub and quotient") {
  int done = 0;
  while (done < 200) {
    ChernCharacter v = small_class();
    Rat b = probe_left_of_wall(v);
    Wall qw = q_wall(v);
    if (!qw.is_semicircle()) continue;
    auto cs = enumerate_candidates(v, b, std::nullopt);
    for (const auto& c : cs) {
      ChernTrunc g = c.quotient(v.trunc());
      CandidateWall a, z;
      REQUIRE(is_candidate(v.trunc(), b, c.sub, std::nullopt, qw.semicircle().rhosq, &a));
      REQUIRE(is_candidate(v.trunc(), b, g, std::nullopt, qw.semicircle().rhosq, &z));
      CHECK(a.wall == z.wall);
      CHECK(a.alphasq_at_probe == z.alphasq_at_probe);
    }
    ++done;
  }
}

TEST_CASE("property: monotone filtering") {
  int done = 0;
  while (done < 200) {
    ChernCharacter v = small_class();
    Rat b = probe_left_of_wall(v);
    Rat lo(uniform(1, 8), 8);
    Rat hi = lo + Rat(uniform(0, 8), 4);
    auto small = as_keys(enumerate_candidates(v, b, Wall(Semicircle{b, lo})));
    auto big = as_keys(enumerate_candidates(v, b, Wall(Semicircle{b, hi})));
    CHECK(std::includes(small.begin(), small.end(), big.begin(), big.end()));
    ++done;
  }
}
