#include <doctest.h>

#include <cmath>

#include "metallic/tiling.hpp"
#include "oracles.hpp"

using namespace metallic;

TEST_CASE("step-3 golden tiling") {
  Tiling t = tiling_at_step(MetallicParams(1, 1), 3);
  REQUIRE(t.tiles.size() == 3);
  CHECK(t.word() == "aba");
  CHECK(t.tiles[0].length_exponent == 2);
  CHECK(t.tiles[1].length_exponent == 3);
  CHECK(t.tiles[2].length_exponent == 2);
  CHECK(t.tiles[2].start == gamma_pow(t.params.field(), -2) + gamma_pow(t.params.field(), -3));
}

TEST_CASE("exact cover of the unit interval") {
  for (int p = 1; p <= 3; ++p) {
    for (int q = 1; q <= 3; ++q) {
      MetallicParams params(p, q);
      for (int n = 0; n <= 10; ++n) {
        Tiling t = tiling_at_step(params, n);
        CHECK(sign(total_length(t) - QuadElement::one(params.field())) == 0);
      }
    }
  }
}

TEST_CASE("property: tiles are contiguous and start at zero") {
  for (int p = 1; p <= 3; ++p) {
    for (int q = 1; q <= 3; ++q) {
      Tiling t = tiling_at_step(MetallicParams(p, q), 6);
      CHECK(sign(t.tiles.front().start) == 0);
      for (std::size_t i = 1; i < t.tiles.size(); ++i) {
        CHECK(t.tiles[i].start == t.tiles[i - 1].end());
      }
      CHECK(t.tiles.back().end() == QuadElement::one(t.params.field()));
    }
  }
}

TEST_CASE("property: deflation of step n equals step n + 1") {
  for (int p = 1; p <= 3; ++p) {
    for (int q = 1; q <= 3; ++q) {
      MetallicParams params(p, q);
      for (int n = 0; n <= 6; ++n) {
        Tiling d = deflate(tiling_at_step(params, n));
        Tiling next = tiling_at_step(params, n + 1);
        REQUIRE(d.tiles.size() == next.tiles.size());
        CHECK(d.word() == next.word());
        for (std::size_t i = 0; i < d.tiles.size(); ++i) {
          CHECK(d.tiles[i].length_exponent == next.tiles[i].length_exponent);
          CHECK(d.tiles[i].start == next.tiles[i].start);
        }
      }
    }
  }
}

TEST_CASE("oracle: long double positions") {
  const double g = oracle::gamma(2, 3);
  Tiling t = tiling_at_step(MetallicParams(2, 3), 5);
  double x = 0;
  for (const Tile& tile : t.tiles) {
    CHECK(to_float(tile.start, 128).to_double() == doctest::Approx(x).epsilon(1e-12));
    x += std::pow(g, -tile.length_exponent);
  }
}
