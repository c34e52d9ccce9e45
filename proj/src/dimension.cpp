#include "metallic/dimension.hpp"

#include <cmath>

#include "metallic/errors.hpp"

namespace metallic {

mpq_class CharPoly::operator()(const mpq_class& x) const {
  mpq_class power = 1;
  for (int i = 0; i < degree; ++i) power *= x;
  mpq_class out = power - linear_coeff * x - constant_coeff;
  out.canonicalize();
  return out;
}

BigFloat CharPoly::operator()(const BigFloat& x) const {
  const mpfr_prec_t bits = x.bits();
  return pow(x, degree) - BigFloat(linear_coeff, bits) * x - BigFloat(constant_coeff, bits);
}

BigFloat CharPoly::derivative(const BigFloat& x) const {
  const mpfr_prec_t bits = x.bits();
  return BigFloat(mpz_class(degree), bits) * pow(x, degree - 1) - BigFloat(linear_coeff, bits);
}

std::string CharPoly::to_string() const {
  return "x^" + std::to_string(degree) + " - " + linear_coeff.get_str() + " x - " +
         constant_coeff.get_str();
}

CharPoly char_poly(const FractalSpec& spec) {
  spec.validate();
  return CharPoly{spec.n, spec.long_survivors(), spec.short_survivors()};
}

BigFloat positive_root(const CharPoly& poly, const MetallicParams& params, mpfr_prec_t bits) {
  if (poly.linear_coeff + poly.constant_coeff < 1 || sgn(poly.linear_coeff) < 0 ||
      sgn(poly.constant_coeff) < 0) {
    throw Error(ErrorCode::kEmptyFractal, "characteristic polynomial has no surviving tiles");
  }
  // g(1) = 1 - N_a' - N_b' <= 0, and g(ceil gamma) >= g(gamma) >= 0.
  mpq_class lo = 1;
  mpq_class hi = to_mpz(ceil(params.gamma()));
  if (sgn(poly(lo)) == 0) return BigFloat(lo, bits);
  if (sgn(poly(hi)) == 0) return BigFloat(hi, bits);

  const mpq_class width = mpq_class(params.gamma_double()) / mpq_class("1000000000000000");
  while (hi - lo > width) {
    mpq_class mid = (lo + hi) / 2;
    int s = sgn(poly(mid));
    if (s == 0) return BigFloat(mid, bits);
    (s < 0 ? lo : hi) = mid;
  }

  const BigFloat lo_f(lo, bits);
  const BigFloat hi_f(hi, bits);
  BigFloat x = BigFloat((lo + hi) / 2, bits);
  for (int step = 0; step < 5; ++step) {
    BigFloat next = x - poly(x) / poly.derivative(x);
    if (next < lo_f || next > hi_f) break;
    if (next == x) break;
    x = std::move(next);
  }
  return x;
}

DimensionReport dimension(const FractalSpec& spec, mpfr_prec_t bits) {
  CharPoly poly = char_poly(spec);
  BigFloat root = positive_root(poly, spec.params, bits);
  BigFloat dim_hp = log(root) / log(spec.params.gamma(bits));
  const double residual = abs(poly(root)).to_double();
  const double dim = dim_hp.to_double();
  return DimensionReport{spec, std::move(poly), std::move(root), std::move(dim_hp), dim, residual};
}

double cantor_similarity(long copies, double scale) {
  if (copies < 1) throw Error(ErrorCode::kInvalidArgument, "copy count must be at least 1");
  if (!(scale > 1.0)) throw Error(ErrorCode::kInvalidArgument, "scale factor must exceed 1");
  return std::log(static_cast<double>(copies)) / std::log(scale);
}

double cantor_hausdorff(long count, double length) {
  if (count < 1) throw Error(ErrorCode::kInvalidArgument, "interval count must be at least 1");
  if (!(length > 0.0 && length < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "interval length must lie in (0, 1)");
  }
  return std::log(1.0 / static_cast<double>(count)) / std::log(length);
}

}  // namespace metallic
