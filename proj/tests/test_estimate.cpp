#include <doctest.h>

#include <cmath>
#include <set>

#include "metallic/dimension.hpp"
#include "metallic/errors.hpp"
#include "metallic/estimate.hpp"
#include "oracles.hpp"

using namespace metallic;

namespace {

FractalSpec spec(int p, int q, int n, int l, int s) {
  return FractalSpec{MetallicParams(p, q), n, l, s, RemovalPolicy::kKeepFirst, {}};
}

// Boxes met by half-open [start, end) intervals, in long double.
std::uint64_t brute_boxes(const std::vector<oracle::Seg>& segs, long double g, long double scale) {
  std::set<long long> boxes;
  for (const auto& s : segs) {
    const long double a = s.start * scale;
    const long double b = (s.start + std::pow(g, -s.exponent)) * scale;
    long long lo = static_cast<long long>(std::floor(a + 1e-12L));
    long long hi = static_cast<long long>(std::ceil(b - 1e-12L)) - 1;
    for (long long j = lo; j <= hi; ++j) boxes.insert(j);
  }
  return boxes.size();
}

}  // namespace

TEST_CASE("(1,1,3,0,1) depth 1 at eps = phi^-3 meets five boxes") {
  // [0, phi^-2) covers boxes 0,1 and [1 - phi^-2, 1) covers boxes 2,3,4
  IntervalCover c = cover_at_depth(spec(1, 1, 3, 0, 1), 1);
  const double phi = oracle::gamma(1, 1);
  CHECK(box_count(c, std::pow(phi, -3)) == 5);
  CHECK(box_count_scaled(c, 3) == 5);
}

TEST_CASE("box counts at the tile scale are exact") {
  // at eps = gamma^-(n-1) every long survivor fills exactly one box edge to edge
  IntervalCover c = cover_at_depth(spec(1, 1, 3, 0, 1), 1);
  CHECK(box_count_scaled(c, 0) == 1);
  CHECK(box_count(c, 1.0) == 1);
  CHECK_THROWS_AS(box_count(c, 0.0), Error);
}

TEST_CASE("oracle: box counts against long double enumeration") {
  const int cases[][5] = {{1, 1, 3, 0, 1}, {1, 1, 4, 1, 1}, {2, 1, 2, 1, 0}};
  for (const auto& c : cases) {
    FractalSpec f = spec(c[0], c[1], c[2], c[3], c[4]);
    IntervalCover cover = cover_at_depth(f, 4);
    auto ref = oracle::cover(c[0], c[1], c[2], c[3], c[4], 4);
    const long double g = oracle::gamma(c[0], c[1]);
    for (int e = 1; e <= 9; ++e) {
      CHECK(box_count_scaled(cover, e) == brute_boxes(ref, g, std::pow(g, e)));
    }
  }
}

TEST_CASE("property: Hausdorff sum at the analytic dimension is one at every depth") {
  for (auto f : {spec(1, 1, 3, 0, 1), spec(1, 1, 4, 1, 1), spec(2, 1, 2, 1, 0), spec(2, 2, 4, 3, 5)}) {
    const double d = dimension(f).dim;
    for (int k = 0; k <= 5; ++k) {
      IntervalCover c = cover_at_depth(f, k);
      HausdorffSum h = hausdorff_sum(c, d);
      CHECK(h.value == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(h.y == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(hausdorff_sum_direct(c, d) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(hausdorff_sum(cover_histogram(f, k), d).value == doctest::Approx(h.value).epsilon(1e-14));
    }
    // value == y^k off the root as well
    HausdorffSum h = hausdorff_sum(cover_at_depth(f, 3), 0.3);
    CHECK(h.value == doctest::Approx(std::pow(h.y, 3)).epsilon(1e-12));
  }
}

TEST_CASE("empirical dimension matches the analytic one") {
  for (auto f : {spec(1, 1, 3, 0, 1), spec(1, 1, 4, 1, 1), spec(2, 1, 2, 1, 0), spec(1, 2, 3, 1, 1)}) {
    const double d = dimension(f).dim;
    for (int k : {1, 2, 4}) {
      CHECK(std::abs(empirical_dimension(cover_at_depth(f, k)) - d) < 1e-9);
      CHECK(std::abs(empirical_dimension(cover_histogram(f, k)) - d) < 1e-9);
    }
  }
  CHECK(empirical_dimension(cover_histogram(spec(1, 1, 3, 0, 0), 3)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(empirical_dimension(cover_histogram(spec(1, 1, 3, 1, 1), 3)) == 0.0);
}

TEST_CASE("limit-set counts equal counts of a deep enough cover") {
  for (auto f : {spec(1, 1, 3, 0, 1), spec(1, 1, 4, 1, 1), spec(2, 1, 2, 1, 0), spec(1, 2, 3, 1, 1)}) {
    IntervalCover deep = cover_at_depth(f, f.n == 2 ? 14 : 9, 50'000'000);
    for (int k = 1; k <= 3; ++k) {
      CHECK(limit_box_count(f, f.n * k) == box_count_scaled(deep, f.n * k));
    }
  }
}

TEST_CASE("property: box counts are monotone in both scale and depth") {
  for (auto f : {spec(1, 1, 4, 1, 1), spec(2, 1, 2, 1, 0), spec(2, 2, 3, 2, 1)}) {
    std::uint64_t prev = 0;
    for (int e = 0; e <= 12; ++e) {
      const std::uint64_t limit = limit_box_count(f, e);
      CHECK(limit >= prev);
      prev = limit;
      std::uint64_t above = UINT64_MAX;
      for (int depth = 0; depth <= 5; ++depth) {
        const std::uint64_t c = box_count_scaled(cover_at_depth(f, depth), e);
        CHECK(c <= above);
        CHECK(c >= limit);
        above = c;
      }
    }
  }
}

TEST_CASE("box dimension converges for the worked fractals") {
  for (auto f : {spec(1, 1, 3, 0, 1), spec(1, 1, 4, 1, 1), spec(2, 1, 2, 1, 0)}) {
    const double d = dimension(f).dim;
    BoxFit six = box_dimension(f, 6);
    BoxFit eight = box_dimension(f, 8);
    CHECK(std::abs(eight.slope - d) < 0.05);
    CHECK(std::abs(eight.slope - d) < std::abs(six.slope - d) + 1e-3);
    CHECK(eight.slope_stderr < six.slope_stderr);
    CHECK(eight.points.size() == 7);
    for (std::size_t i = 0; i < six.points.size(); ++i) CHECK(six.points[i].count == eight.points[i].count);
    for (std::size_t i = 1; i < eight.points.size(); ++i) {
      CHECK(eight.points[i].count >= eight.points[i - 1].count);
    }
  }
  // the coarse silver scales lie off the asymptotic line, so its residual grows
  CHECK(box_dimension(spec(1, 1, 3, 0, 1), 8).residual < box_dimension(spec(1, 1, 3, 0, 1), 6).residual);
  CHECK(box_dimension(spec(1, 1, 4, 1, 1), 8).residual < box_dimension(spec(1, 1, 4, 1, 1), 6).residual);
  CHECK_THROWS_AS(box_dimension(spec(1, 1, 3, 0, 1), 3), Error);
  try {
    box_dimension(spec(1, 1, 4, 1, 1), 8, 1000);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCapExceeded);
  }
}

TEST_CASE("box dimension of the full interval is one") {
  BoxFit fit = box_dimension(spec(1, 1, 3, 0, 0), 5);
  CHECK(std::abs(fit.slope - 1.0) < 0.01);
}

TEST_CASE("property: product structure of the cover sum") {
  for (auto f : {spec(1, 1, 3, 0, 1), spec(1, 1, 4, 1, 1), spec(2, 1, 2, 1, 0), spec(2, 2, 3, 1, 2)}) {
    for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const double one = hausdorff_sum(cover_at_depth(f, 1), t).value;
      for (int k = 1; k <= 6; ++k) {
        CHECK(hausdorff_sum(cover_histogram(f, k), t).value == doctest::Approx(std::pow(one, k)).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("property: the cover sum grows below d and shrinks above it") {
  for (int p = 1; p <= 2; ++p) {
    for (int q = 1; q <= 2; ++q) {
      for (int n = 2; n <= 4; ++n) {
        for (int l = 0; l <= 2; ++l) {
          for (int s = 0; s <= 2; ++s) {
            FractalSpec f = spec(p, q, n, l, s);
            try {
              f.validate();
            } catch (const Error&) {
              continue;
            }
            const double d = dimension(f).dim;
            if (d <= 0.05 || d >= 0.95) continue;
            double below = 0, above = 0;
            for (int k = 1; k <= 4; ++k) {
              const double b = hausdorff_sum(cover_histogram(f, k), d - 0.05).value;
              const double a = hausdorff_sum(cover_histogram(f, k), d + 0.05).value;
              if (k > 1) {
                CHECK(b > below);
                CHECK(a < above);
              }
              below = b;
              above = a;
            }
          }
        }
      }
    }
  }
}
