#include <doctest.h>

#include <cmath>

#include "metallic/dimension.hpp"
#include "metallic/errors.hpp"
#include "oracles.hpp"

using namespace metallic;

namespace {

FractalSpec spec(int p, int q, int n, int l, int s) {
  return FractalSpec{MetallicParams(p, q), n, l, s, RemovalPolicy::kKeepFirst, {}};
}

bool valid(const FractalSpec& f) {
  try {
    f.validate();
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

TEST_CASE("worked fractals") {
  auto a = dimension(spec(1, 1, 3, 0, 1));
  CHECK(a.poly.to_string() == "x^3 - 2 x - 0");
  CHECK(a.dim == doctest::Approx(0.7202).epsilon(5e-5 / 0.72));
  CHECK(a.dim == doctest::Approx(std::log(2.0) / (2 * std::log(oracle::gamma(1, 1)))).epsilon(1e-14));

  auto b = dimension(spec(1, 1, 4, 1, 1));
  CHECK(b.poly.to_string() == "x^4 - 2 x - 1");
  CHECK(b.root.to_double() == doctest::Approx(1.3953).epsilon(1e-4));
  CHECK(b.dim == doctest::Approx(0.6922).epsilon(1e-4));

  auto c = dimension(spec(2, 1, 2, 1, 0));
  CHECK(c.poly.to_string() == "x^2 - 1 x - 1");
  CHECK(c.root.to_double() == doctest::Approx(1.6180339887498949).epsilon(1e-15));
  CHECK(std::abs(c.dim - 0.54596) < 5e-5);
  CHECK(c.dim == doctest::Approx(std::log(oracle::gamma(1, 1)) / std::log(oracle::gamma(2, 1))).epsilon(1e-14));
}

TEST_CASE("char poly coefficients are the survivor counts") {
  auto poly = char_poly(spec(2, 3, 4, 3, 2));
  // step 4 for (2,3): a_4 = 2 a_3 + 3 a_2 with a = 0,1,2,7,20
  CHECK(poly.degree == 4);
  CHECK(poly.linear_coeff == 20 - 3);
  CHECK(poly.constant_coeff == 3 * 7 - 2);
}

TEST_CASE("root solver rejects an empty fractal polynomial") {
  CharPoly zero{3, 0, 0};
  CHECK_THROWS_AS(positive_root(zero, MetallicParams(1, 1), 128), Error);
}

TEST_CASE("oracle: root and dimension over a grid") {
  for (int p = 1; p <= 3; ++p) {
    for (int q = 1; q <= 3; ++q) {
      const double g = oracle::gamma(p, q);
      for (int n = 2; n <= 6; ++n) {
        for (int l = 0; l <= 3; ++l) {
          for (int s = 0; s <= 3; ++s) {
            FractalSpec f = spec(p, q, n, l, s);
            if (!valid(f)) continue;
            auto r = dimension(f);
            long double ref = oracle::poly_root(n, r.poly.linear_coeff.get_d(), r.poly.constant_coeff.get_d());
            CHECK(r.root.to_double() == doctest::Approx(static_cast<double>(ref)).epsilon(1e-13));
            CHECK(r.dim == doctest::Approx(std::log(static_cast<double>(ref)) / std::log(g)).epsilon(1e-12));
            CHECK(std::abs(r.root_residual) < 1e-25);
          }
        }
      }
    }
  }
}

TEST_CASE("property: bracketing and boundary identities") {
  for (int p = 1; p <= 3; ++p) {
    for (int q = 1; q <= 3; ++q) {
      MetallicParams params(p, q);
      BigFloat g = params.gamma(128);
      for (int n = 2; n <= 8; ++n) {
        CHECK(std::abs(dimension(spec(p, q, n, 0, 0)).dim - 1.0) < 1e-12);
        for (int l = 0; l <= 12; ++l) {
          for (int s = 0; s <= 12; ++s) {
            FractalSpec f = spec(p, q, n, l, s);
            if (!valid(f)) continue;
            CharPoly poly = char_poly(f);
            CHECK(sgn(poly(mpq_class(1))) <= 0);
            CHECK(poly(g).to_double() >= -1e-9);
            if (poly.linear_coeff + poly.constant_coeff == 1) CHECK(dimension(f).dim == 0.0);
          }
        }
      }
    }
  }
}

TEST_CASE("property: removing more strictly lowers the dimension") {
  for (int p = 1; p <= 2; ++p) {
    for (int q = 1; q <= 2; ++q) {
      for (int n = 2; n <= 5; ++n) {
        for (int l = 0; l <= 4; ++l) {
          for (int s = 0; s <= 4; ++s) {
            FractalSpec f = spec(p, q, n, l, s);
            if (!valid(f)) continue;
            const double d = dimension(f).dim;
            FractalSpec more_l = spec(p, q, n, l + 1, s);
            FractalSpec more_s = spec(p, q, n, l, s + 1);
            if (valid(more_l)) CHECK(dimension(more_l).dim < d);
            if (valid(more_s)) CHECK(dimension(more_s).dim < d);
          }
        }
      }
    }
  }
}

TEST_CASE("degenerate field") {
  // copper: gamma = 2, so (n, 0, 0) still gives 1 and removal gives log2 of the root
  auto r = dimension(spec(1, 2, 3, 0, 1));
  CHECK(r.dim == doctest::Approx(std::log2(static_cast<double>(oracle::poly_root(3, 3, 1)))).epsilon(1e-13));
  CHECK(std::abs(dimension(spec(1, 2, 5, 0, 0)).dim - 1.0) < 1e-12);
}

TEST_CASE("Cantor formulas") {
  CHECK(cantor_similarity(2, 3.0) == doctest::Approx(0.6309).epsilon(5e-5));
  CHECK(cantor_similarity(1, 7.0) == 0.0);
  CHECK(cantor_similarity(3, 3.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(cantor_hausdorff(2, 1.0 / 3.0) == doctest::Approx(0.6309).epsilon(5e-5));
  CHECK(cantor_hausdorff(1, 0.5) == 0.0);
  const double phi = oracle::gamma(1, 1);
  CHECK(cantor_hausdorff(2, 1.0 / (phi * phi)) == doctest::Approx(dimension(spec(1, 1, 3, 0, 1)).dim).epsilon(1e-14));
  for (long i = 1; i <= 6; ++i) {
    for (double j : {0.1, 0.25, 0.5, 0.9}) {
      CHECK(cantor_hausdorff(i, j) == doctest::Approx(cantor_similarity(i, 1.0 / j)).epsilon(1e-14));
    }
  }
  CHECK_THROWS_AS(cantor_similarity(0, 3.0), Error);
  CHECK_THROWS_AS(cantor_similarity(2, 1.0), Error);
  CHECK_THROWS_AS(cantor_hausdorff(2, 1.5), Error);
}
