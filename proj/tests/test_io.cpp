#include <doctest.h>

#include <stdexcept>

#include "hypercover/constructions.hpp"
#include "hypercover/io.hpp"
#include "test_util.hpp"

using namespace hypercover;

TEST_SUITE("io") {
  TEST_CASE("point set text format") {
    PointSet s(4);
    s.insert(point_from_string("0110"));
    s.insert(point_from_string("0001"));
    std::string text = pointset_to_text(s);
    CHECK(text == "n=4\n0001\n0110\n");
    CHECK(pointset_from_text(text) == s);
    CHECK_THROWS_AS(pointset_from_text("0101\n"), std::invalid_argument);
    CHECK_THROWS_AS(pointset_from_text("n=3\n0101\n"), std::invalid_argument);
  }

  TEST_CASE("point set round trips, both formats") {
    auto gen = testutil::rng(50);
    for (int trial = 0; trial < 60; ++trial) {
      int n = testutil::uniform(gen, 1, 12);
      PointSet s(n);
      for (int i = testutil::uniform(gen, 0, 20); i > 0; --i)
        s.insert(CubePoint(n, gen() & ((1ull << n) - 1)));
      CHECK(pointset_from_text(pointset_to_text(s)) == s);
      if (!s.empty()) CHECK(pointset_from_json(pointset_to_json(s)) == s);
      CHECK(pointset_from_json(pointset_to_json(s), n) == s);
      if (!s.empty()) CHECK(pointset_from_string(pointset_to_json(s).dump()) == s);
      CHECK(pointset_from_string(pointset_to_text(s)) == s);
    }
  }

  TEST_CASE("family JSON round trip") {
    CoverFamily f = layer_complement_cover(5, 2, 2);
    auto j = family_to_json(f);
    CHECK(j["n"] == 5);
    CHECK(family_from_json(j) == f);

    auto gen = testutil::rng(51);
    for (int trial = 0; trial < 40; ++trial) {
      int n = testutil::uniform(gen, 1, 6);
      CoverFamily random(n);
      for (int i = testutil::uniform(gen, 1, 5); i > 0; --i) {
        std::vector<std::int64_t> a(static_cast<std::size_t>(n));
        bool nonzero = false;
        for (auto& c : a) {
          c = testutil::uniform(gen, -9, 9);
          nonzero |= c != 0;
        }
        if (!nonzero) a[0] = 1;
        random.add(Hyperplane(n, std::move(a), testutil::uniform(gen, -9, 9)),
                   testutil::uniform(gen, 1, 3));
      }
      CHECK(family_from_json(family_to_json(random)) == random);
    }
  }

  TEST_CASE("report JSON carries violations") {
    CoverFamily f(2);
    f.add(Hyperplane(2, {1, 0}, 0));
    CoverReport report = verify_cover(f, PointSet(2), 1, 0);
    auto j = report_to_json(report);
    CHECK(j["ok"] == false);
    CHECK(j["m"] == 1);
    CHECK(j["violations"].size() == report.violations.size());
    CHECK(j["violations"][0].contains("point"));
    CHECK(j["violations"][0].contains("rule"));
    CHECK(j["violations"][0].contains("count"));
  }

  TEST_CASE("polynomial text format") {
    RatPoly p = rat_poly(3);
    p.add_term({2, 0, 1}, Rational(3, 2));
    p.add_term({0, 1, 0}, Rational(-1));
    std::string text = poly_to_text(p);
    CHECK(text == "-1*x2 + 3/2*x1^2*x3");
    CHECK(rat_poly_from_text(text, 3) == p);
    CHECK(rat_poly_from_text(text) == p);
    CHECK(rat_poly_from_text("0", 2) == rat_poly(2));
    CHECK(poly_to_text(rat_poly(2)) == "0");
    CHECK_THROWS_AS(rat_poly_from_text("3 * y1", 2), std::invalid_argument);
    CHECK_THROWS_AS(rat_poly_from_text("x9", 2), std::invalid_argument);
  }

  TEST_CASE("polynomial round trips") {
    auto gen = testutil::rng(52);
    for (int trial = 0; trial < 60; ++trial) {
      int n = testutil::uniform(gen, 1, 5);
      RatPoly p = rat_poly(n);
      for (int i = testutil::uniform(gen, 0, 8); i > 0; --i) {
        RatPoly::Exponents e(static_cast<std::size_t>(n));
        for (auto& x : e) x = static_cast<std::uint32_t>(testutil::uniform(gen, 0, 3));
        p.add_term(e, Rational(testutil::uniform(gen, -20, 20), testutil::uniform(gen, 1, 7)));
      }
      CHECK(rat_poly_from_text(poly_to_text(p), n) == p);
      CHECK(rat_poly_from_json(poly_to_json(p)) == p);

      std::uint32_t prime = std::vector<std::uint32_t>{2, 5, 13}[static_cast<std::size_t>(
          testutil::uniform(gen, 0, 2))];
      FpPoly q = fp_poly(n, prime);
      for (int i = testutil::uniform(gen, 0, 8); i > 0; --i) {
        FpPoly::Exponents e(static_cast<std::size_t>(n));
        for (auto& x : e) x = static_cast<std::uint32_t>(testutil::uniform(gen, 0, 3));
        q.add_term(e, Fp::make(static_cast<std::int64_t>(gen() % prime), prime));
      }
      CHECK(fp_poly_from_text(poly_to_text(q), prime, n) == q);
      CHECK(fp_poly_from_json(poly_to_json(q)) == q);
    }
  }

  TEST_CASE("tuple lists") {
    std::vector<std::vector<std::uint32_t>> tuples{{0, 1, 2}, {3, 4, 5}};
    CHECK(tuples_from_json(tuples_to_json(tuples)) == tuples);
    CHECK_THROWS_AS(tuples_from_json(nlohmann::json::object()), std::invalid_argument);
  }
}
