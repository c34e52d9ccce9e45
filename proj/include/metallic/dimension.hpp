#pragma once

#include <gmpxx.h>

#include <string>

#include "metallic/bigfloat.hpp"
#include "metallic/fractal.hpp"

namespace metallic {

// g(x) = x^degree - linear_coeff x - constant_coeff with non-negative
// coefficients, so g has exactly one positive root.
struct CharPoly {
  int degree;
  mpz_class linear_coeff;    // N_a'
  mpz_class constant_coeff;  // N_b'

  mpq_class operator()(const mpq_class& x) const;
  BigFloat operator()(const BigFloat& x) const;
  BigFloat derivative(const BigFloat& x) const;

  // "x^n - A x - B", all three terms always present.
  std::string to_string() const;
};

CharPoly char_poly(const FractalSpec& spec);

// Unique root in [1, gamma]: exact-sign bisection on dyadic rationals down to
// width 1e-15 gamma, then at most five Newton steps at `bits` precision.
BigFloat positive_root(const CharPoly& poly, const MetallicParams& params,
                       mpfr_prec_t bits = BigFloat::kDefaultBits);

// Similarity and Hausdorff dimension coincide: both reduce to g(gamma^d) = 0.
struct DimensionReport {
  FractalSpec spec;
  CharPoly poly;
  BigFloat root;
  BigFloat dim_hp;
  double dim;
  double root_residual;
};

DimensionReport dimension(const FractalSpec& spec, mpfr_prec_t bits = BigFloat::kDefaultBits);

// ln m / ln r for m copies scaled by 1/r.
double cantor_similarity(long copies, double scale);
// ln(1/i) / ln j from i j^t = 1.
double cantor_hausdorff(long count, double length);

}  // namespace metallic
