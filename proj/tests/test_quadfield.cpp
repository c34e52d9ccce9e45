#include <doctest.h>

#include <cmath>
#include <random>

#include "metallic/errors.hpp"
#include "metallic/quadfield.hpp"
#include "metallic/substitution.hpp"

using namespace metallic;

namespace {

const int kPairs[][2] = {{1, 1}, {2, 1}, {3, 1}, {1, 2}, {1, 3}, {2, 2}, {3, 2}, {2, 3}, {3, 3}};

}  // namespace

TEST_CASE("metallic means match closed forms") {
  CHECK(MetallicParams(1, 1).gamma_double() == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-15));
  CHECK(MetallicParams(2, 1).gamma_double() == doctest::Approx(1 + std::sqrt(2.0)).epsilon(1e-15));
  CHECK(MetallicParams(1, 2).gamma_double() == 2.0);
  CHECK(MetallicParams(3, 2).gamma_double() == doctest::Approx((3 + std::sqrt(17.0)) / 2).epsilon(1e-15));
  CHECK(MetallicParams(1, 2).is_degenerate());
  CHECK_FALSE(MetallicParams(1, 1).is_degenerate());
}

TEST_CASE("parameters must be positive") {
  CHECK_THROWS_AS(MetallicParams(0, 1), Error);
  CHECK_THROWS_AS(MetallicParams(1, 0), Error);
  try {
    MetallicParams(-1, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidArgument);
  }
}

TEST_CASE("gamma satisfies its minimal relation exactly") {
  for (auto [p, q] : kPairs) {
    MetallicParams params(p, q);
    const Field f = params.field();
    QuadElement g = QuadElement::gamma(f);
    QuadElement lhs = g * g;
    QuadElement rhs = QuadElement(f, q, 0) + QuadElement(f, p, 0) * g;
    CHECK(lhs == rhs);
    // gamma^-1 = (gamma - p) / q
    QuadElement inv = gamma_pow(f, -1);
    QuadElement expect = (g - QuadElement(f, p, 0)) * QuadElement(f, mpq_class(1, q), 0);
    CHECK(inv == expect);
  }
}

TEST_CASE("gamma_pow round trips and tracks the metallic sequence") {
  for (auto [p, q] : kPairs) {
    MetallicParams params(p, q);
    const Field f = params.field();
    for (int m = 0; m <= 30; ++m) {
      CHECK(gamma_pow(f, m) * gamma_pow(f, -m) == QuadElement::one(f));
    }
    // gamma^m = q a_{m-1} + a_m gamma
    for (int m = 1; m <= 20; ++m) {
      QuadElement g = gamma_pow(f, m);
      CHECK(g.c0() == mpq_class(q * metallic_sequence(params, m - 1)));
      CHECK(g.c1() == mpq_class(metallic_sequence(params, m)));
    }
  }
}

TEST_CASE("mismatched fields are rejected") {
  QuadElement a(Field{1, 1}, 1, 1);
  QuadElement b(Field{2, 1}, 1, 1);
  CHECK_THROWS_AS(a + b, Error);
  try {
    qe_arith(a, b, QuadOp::kMul);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParamsMismatch);
  }
}

TEST_CASE("sign examples") {
  const Field golden{1, 1};
  CHECK(sign(QuadElement(golden, 0, 0)) == 0);
  CHECK(sign(QuadElement(golden, -1, 1)) > 0);          // phi - 1
  CHECK(sign(QuadElement(golden, 2, -1)) > 0);          // 2 - phi
  CHECK(sign(QuadElement(golden, -2, 1)) < 0);          // phi - 2
  // phi^-1 + phi^-2 = 1
  CHECK(sign(gamma_pow(golden, -1) + gamma_pow(golden, -2) - QuadElement::one(golden)) == 0);
  // copper gamma = 2: gamma - 2 is zero without being the zero representation
  const Field copper{1, 2};
  QuadElement z(copper, -2, 1);
  CHECK(sign(z) == 0);
  CHECK(z == QuadElement::zero(copper));
  CHECK(sign(QuadElement(copper, -3, 1)) < 0);
}

TEST_CASE("property: exact sign agrees with a 256-bit evaluation") {
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<long> coef(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 50);
  for (auto [p, q] : kPairs) {
    const Field f{p, q};
    for (int trial = 0; trial < 400; ++trial) {
      QuadElement v(f, mpq_class(coef(rng), den(rng)), mpq_class(coef(rng), den(rng)));
      BigFloat x = to_float(v, 256);
      int s = sign(v);
      if (x.sign() == 0) {
        CHECK(s == 0);
      } else if (abs(x) > BigFloat(1e-60, 256)) {
        CHECK(s == x.sign());
      }
    }
  }
}

TEST_CASE("property: ordering is consistent with addition") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-50, 50);
  const Field f{2, 3};
  for (int trial = 0; trial < 300; ++trial) {
    QuadElement a(f, coef(rng), coef(rng));
    QuadElement b(f, coef(rng), coef(rng));
    QuadElement c(f, coef(rng), coef(rng));
    CHECK((compare(a, b) < 0) == (compare(a + c, b + c) < 0));
    CHECK((compare(a, b) == 0) == (a == b));
    CHECK((a - b) + b == a);
  }
}

TEST_CASE("exact floor") {
  const Field golden{1, 1};
  CHECK(floor(QuadElement(golden, 0, 1)) == 1);
  CHECK(floor(QuadElement(golden, 0, -1)) == -2);
  CHECK(floor(gamma_pow(golden, 10)) == 122);  // phi^10 = 122.99...
  CHECK(floor(QuadElement(Field{1, 2}, 0, 3)) == 6);
}

TEST_CASE("to_float keeps relative precision for tiny values") {
  const Field golden{1, 1};
  QuadElement tiny = gamma_pow(golden, -60);
  BigFloat v = to_float(tiny, 128);
  double expect = std::pow((1 + std::sqrt(5.0)) / 2, -60);
  CHECK(v.to_double() == doctest::Approx(expect).epsilon(1e-14));
}
