#include <doctest.h>

#include <stdexcept>

#include "hypercover/constructions.hpp"
#include "hypercover/fieldkit.hpp"
#include "hypercover/poly.hpp"
#include "test_util.hpp"

// The OpenMP kernels must produce results identical to the serial reference
// implementations, element for element, on every input.

using namespace hypercover;

TEST_SUITE("parallel-consistency") {
  TEST_CASE("profile kernels agree") {
    auto gen = testutil::rng(60);
    for (int trial = 0; trial < 20; ++trial) {
      int n = testutil::uniform(gen, 2, 10);
      CoverFamily f(n);
      for (int i = testutil::uniform(gen, 1, 8); i > 0; --i) {
        std::vector<std::int64_t> a(static_cast<std::size_t>(n));
        bool nonzero = false;
        for (auto& c : a) {
          c = testutil::uniform(gen, -4, 4);
          nonzero |= c != 0;
        }
        if (!nonzero) a[0] = 1;
        f.add(Hyperplane(n, std::move(a), testutil::uniform(gen, -n, n)),
              testutil::uniform(gen, 1, 2));
      }
      MultiplicityProfile serial = profile_serial(f);
      MultiplicityProfile parallel = profile(f);
      CHECK(serial.counts == parallel.counts);
    }
    CHECK(profile_serial(layer_complement_cover(9, 4, 2)).counts ==
          profile(layer_complement_cover(9, 4, 2)).counts);
  }

  TEST_CASE("poly cover kernels agree") {
    for (auto [n, k, t] : {std::tuple{4, 2, 2}, {5, 1, 1}, {6, 3, 2}}) {
      RatPoly p = from_family(layer_complement_cover(n, k, t));
      CoverReport a = verify_poly_cover_serial(p, layer(n, k), t);
      CoverReport b = verify_poly_cover(p, layer(n, k), t);
      CHECK(a.ok == b.ok);
      CHECK(a.violations.size() == b.violations.size());
    }
    // A failing instance must report identical violation lists.
    RatPoly x1 = RatPoly::variable(3, 1, Rational(1));
    CoverReport a = verify_poly_cover_serial(x1, layer(3, 1), 1);
    CoverReport b = verify_poly_cover(x1, layer(3, 1), 1);
    REQUIRE(a.violations.size() == b.violations.size());
    for (std::size_t i = 0; i < a.violations.size(); ++i) {
      CHECK(a.violations[i].point == b.violations[i].point);
      CHECK(a.violations[i].rule == b.violations[i].rule);
      CHECK(a.violations[i].count == b.violations[i].count);
    }
  }

  TEST_CASE("grid scan kernels agree") {
    const std::uint32_t p = 5;
    FpPoly f = FpPoly::constant(3, Fp::make(1, p));
    for (int i = 1; i <= 3; ++i) f *= FpPoly::variable(3, i, Fp::make(1, p));
    GridSpec grid(p, {{0, 1}, {0, 1}, {0, 1}}, {1, 1, 1});
    CHECK(cn_witness(f, grid) == cn_witness_serial(f, grid));

    std::vector<FpPoly> polys{FpPoly::variable(2, 1, Fp::make(1, 3)) +
                              FpPoly::variable(2, 2, Fp::make(1, 3))};
    CwReport a = cw_generalized_search(polys, {{0, 0}});
    CwReport b = cw_generalized_search_serial(polys, {{0, 0}});
    REQUIRE(a.zero.has_value());
    REQUIRE(b.zero.has_value());
    CHECK(*a.zero == *b.zero);
    CHECK(a.r == b.r);
  }
}
