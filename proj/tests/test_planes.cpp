#include <doctest.h>

#include <stdexcept>

#include "hypercover/constructions.hpp"
#include "hypercover/planes.hpp"
#include "test_util.hpp"

using namespace hypercover;

namespace {

Hyperplane plane(std::vector<std::int64_t> a, std::int64_t b) {
  int n = static_cast<int>(a.size());
  return Hyperplane(n, std::move(a), b);
}

CoverFamily random_family(std::mt19937_64& gen, int n, int planes) {
  CoverFamily f(n);
  for (int i = 0; i < planes; ++i) {
    std::vector<std::int64_t> a(n);
    bool nonzero = false;
    for (auto& c : a) {
      c = testutil::uniform(gen, -3, 3);
      nonzero |= c != 0;
    }
    if (!nonzero) a[static_cast<std::size_t>(testutil::uniform(gen, 0, n - 1))] = 1;
    f.add(Hyperplane(n, std::move(a), testutil::uniform(gen, -n, n)),
          testutil::uniform(gen, 1, 2));
  }
  return f;
}

}  // namespace

TEST_SUITE("planes") {
  TEST_CASE("eval") {
    CHECK(eval(plane({1, 0, 0}, 1), point_from_string("100")) == 0);
    CHECK(eval(plane({1, 1, 1}, 2), point_from_string("110")) == 0);
    CHECK(eval(plane({7, 1, 1, 1, 1, 1, 1}, 3), point_from_string("0000111")) == 0);
    CHECK(eval(plane({1, 2}, 0), point_from_string("11")) == 3);
    CHECK_THROWS_AS(eval(plane({1, 1}, 0), point_from_string("111")), std::invalid_argument);
  }

  TEST_CASE("hyperplane needs a nonzero normal") {
    CHECK_THROWS_AS(plane({0, 0, 0}, 1), std::invalid_argument);
  }

  TEST_CASE("profile basics") {
    CoverFamily f(2);
    f.add(plane({1, 0}, 0));
    f.add(plane({1, 0}, 1));
    MultiplicityProfile prof = profile(f);
    for (std::int64_t c : prof.counts) CHECK(c == 1);

    // Level planes G_1..G_n: the origin is uncovered, everything else once.
    const int n = 5;
    CoverFamily levels(n);
    for (int j = 1; j <= n; ++j) levels.add(level_plane(n, j));
    prof = profile(levels);
    CHECK(prof.at(CubePoint(n, 0)) == 0);
    for (std::uint64_t bits = 1; bits < (1ull << n); ++bits)
      CHECK(prof.counts[bits] == 1);

    CoverFamily doubled(3);
    doubled.add(plane({1, 0, 0}, 0), 2);
    CHECK(profile(doubled).at(point_from_string("000")) == 2);
  }

  TEST_CASE("verify_cover on the explicit constructions") {
    CoverFamily f = layer_complement_cover(7, 3, 1);
    CoverReport report = verify_cover(f, layer(7, 3), 1, 0);
    CHECK(report.ok);
    CHECK(report.family_size == 4);

    const int n = 4;
    CoverFamily levels(n);
    for (int j = 1; j <= n; ++j) levels.add(level_plane(n, j));
    PointSet origin_only(n);
    origin_only.insert(CubePoint(n, 0));
    report = verify_cover(levels, origin_only, 1, 0);
    CHECK(report.ok);
    CHECK(report.family_size == n);

    CoverFamily broken = f.without_one(0);
    report = verify_cover(broken, layer(7, 3), 1, 0);
    CHECK_FALSE(report.ok);
    CHECK(report.violations.size() >= 1);
  }

  TEST_CASE("verify_cover parameter validation") {
    CoverFamily f(2);
    f.add(plane({1, 0}, 0));
    CHECK_THROWS_AS(verify_cover(f, PointSet(2), 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_cover(f, PointSet(3), 1, 0), std::invalid_argument);
  }

  TEST_CASE("profile is additive over multiset union") {
    auto gen = testutil::rng(10);
    for (int trial = 0; trial < 25; ++trial) {
      int n = testutil::uniform(gen, 2, 8);
      CoverFamily f1 = random_family(gen, n, testutil::uniform(gen, 1, 4));
      CoverFamily f2 = random_family(gen, n, testutil::uniform(gen, 1, 4));
      CoverFamily joined = f1;
      joined.add_all(f2);
      MultiplicityProfile p1 = profile(f1), p2 = profile(f2), pj = profile(joined);
      for (std::size_t i = 0; i < pj.counts.size(); ++i)
        CHECK(pj.counts[i] == p1.counts[i] + p2.counts[i]);
    }
  }

  TEST_CASE("cover verification is monotone in t") {
    auto gen = testutil::rng(11);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 25; ++trial) {
      int n = testutil::uniform(gen, 2, 6);
      int l = testutil::uniform(gen, 0, 2);
      CoverFamily f = random_family(gen, n, testutil::uniform(gen, 2, 6));
      // S := points covered exactly l times; the largest valid t is the
      // smallest count outside S.
      MultiplicityProfile prof = profile(f);
      PointSet s(n);
      std::int64_t t_max = INT64_MAX;
      for (std::uint64_t bits = 0; bits < prof.counts.size(); ++bits) {
        if (prof.counts[bits] == l)
          s.insert(CubePoint(n, bits));
        else
          t_max = std::min(t_max, prof.counts[bits]);
      }
      if (s.empty() || t_max == INT64_MAX || t_max <= l) continue;
      ++checked;
      REQUIRE(verify_cover(f, s, t_max, l).ok);
      for (std::int64_t tp = l + 1; tp <= t_max; ++tp) CHECK(verify_cover(f, s, tp, l).ok);
      CHECK_FALSE(verify_cover(f, s, t_max + 1, l).ok);
    }
    CHECK(checked > 0);
  }

  TEST_CASE("scaling a plane leaves its trace unchanged") {
    auto gen = testutil::rng(12);
    for (int trial = 0; trial < 40; ++trial) {
      int n = testutil::uniform(gen, 2, 8);
      CoverFamily f = random_family(gen, n, 1);
      const Hyperplane& h = f.planes()[0].plane;
      std::int64_t scale = testutil::uniform(gen, 1, 5) * (testutil::uniform(gen, 0, 1) ? 1 : -1);
      std::vector<std::int64_t> a = h.a;
      for (auto& c : a) c *= scale;
      Hyperplane scaled(n, std::move(a), h.b * scale);
      CHECK(trace(h) == trace(scaled));
    }
  }

  TEST_CASE("arithmetic overflow is a hard error") {
    Hyperplane huge(2, {INT64_MAX, 1}, 0);
    CHECK_THROWS_AS(eval(huge, point_from_string("11")), std::overflow_error);
    CoverFamily f(2);
    f.add(huge);
    CHECK_THROWS_AS(profile(f), std::overflow_error);
  }

  TEST_CASE("profile rejects dimensions past the enumeration cap") {
    CoverFamily f(30);
    std::vector<std::int64_t> a(30, 0);
    a[0] = 1;
    f.add(Hyperplane(30, std::move(a), 0));
    CHECK_THROWS_AS(profile(f), std::invalid_argument);
  }

  TEST_CASE("without_one reduces the size by exactly one") {
    CoverFamily f(3);
    f.add(plane({1, 0, 0}, 0), 2);
    f.add(plane({0, 1, 0}, 1));
    CHECK(f.size() == 3);
    CHECK(f.without_one(0).size() == 2);
    CHECK(f.without_one(1).size() == 2);
    CHECK_THROWS_AS(f.without_one(5), std::out_of_range);
  }
}
