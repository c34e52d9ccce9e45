#pragma once

// Exact arithmetic in Q(gamma), where gamma > 1 is the positive root of
// x^2 = p x + q. Elements are stored in the basis {1, gamma}.

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

#include "metallic/bigfloat.hpp"

namespace metallic {

// The pair (p, q) identifying a field; cheap to copy and compare.
struct Field {
  int p = 1;
  int q = 1;

  long discriminant() const { return static_cast<long>(p) * p + 4L * q; }
  friend bool operator==(const Field&, const Field&) = default;
};

class MetallicParams {
 public:
  MetallicParams(int p, int q);

  int p() const { return field_.p; }
  int q() const { return field_.q; }
  long discriminant() const { return field_.discriminant(); }
  const Field& field() const { return field_; }

  // True iff D is a perfect square, i.e. gamma is rational (copper: D = 9).
  bool is_degenerate() const { return degenerate_; }

  // gamma at kGammaBits precision.
  const BigFloat& gamma() const { return gamma_; }
  BigFloat gamma(mpfr_prec_t bits) const;
  double gamma_double() const { return gamma_.to_double(); }

  // Conventional symbol: phi, delta, sigma, alpha, beta for the named means,
  // gamma otherwise.
  std::string symbol() const;
  std::string tex_symbol() const;

  friend bool operator==(const MetallicParams& a, const MetallicParams& b) {
    return a.field_ == b.field_;
  }

  static constexpr mpfr_prec_t kGammaBits = 256;

 private:
  Field field_;
  bool degenerate_ = false;
  BigFloat gamma_;
};

// c0 + c1 * gamma with rational coordinates kept in lowest terms.
class QuadElement {
 public:
  explicit QuadElement(Field field, mpq_class c0 = 0, mpq_class c1 = 0);
  QuadElement(const MetallicParams& params, mpq_class c0 = 0, mpq_class c1 = 0)
      : QuadElement(params.field(), std::move(c0), std::move(c1)) {}

  static QuadElement zero(Field field) { return QuadElement(field); }
  static QuadElement one(Field field) { return QuadElement(field, 1, 0); }
  static QuadElement gamma(Field field) { return QuadElement(field, 0, 1); }

  const mpq_class& c0() const { return c0_; }
  const mpq_class& c1() const { return c1_; }
  const Field& field() const { return field_; }
  bool is_zero() const { return sgn(c0_) == 0 && sgn(c1_) == 0; }

  QuadElement& operator+=(const QuadElement& rhs);
  QuadElement& operator-=(const QuadElement& rhs);
  // Applies gamma^2 = q + p gamma once.
  QuadElement& operator*=(const QuadElement& rhs);
  QuadElement& operator*=(const mpq_class& scalar);

  friend QuadElement operator+(QuadElement a, const QuadElement& b) { return a += b; }
  friend QuadElement operator-(QuadElement a, const QuadElement& b) { return a -= b; }
  friend QuadElement operator*(QuadElement a, const QuadElement& b) { return a *= b; }
  friend QuadElement operator*(QuadElement a, const mpq_class& s) { return a *= s; }
  QuadElement operator-() const { return QuadElement(field_, -c0_, -c1_); }

  // Value equality. Coordinates are not unique when gamma is rational, so
  // this compares through sign(a - b).
  friend bool operator==(const QuadElement& a, const QuadElement& b);

 private:
  Field field_;
  mpq_class c0_;
  mpq_class c1_;
};

enum class QuadOp { kAdd, kSub, kMul };

// Throws Error(kParamsMismatch) when a and b live in different fields.
QuadElement qe_arith(const QuadElement& a, const QuadElement& b, QuadOp op);

// gamma^m for any integer m; negative powers go through gamma^-1 = (gamma - p) / q.
QuadElement gamma_pow(Field field, long m);
inline QuadElement gamma_pow(const MetallicParams& params, long m) {
  return gamma_pow(params.field(), m);
}

// Exact sign of c0 + c1 gamma.
int sign(const QuadElement& a);

// Exact three-way comparison; throws on field mismatch.
std::strong_ordering compare(const QuadElement& a, const QuadElement& b);
inline bool operator<(const QuadElement& a, const QuadElement& b) { return compare(a, b) < 0; }
inline bool operator<=(const QuadElement& a, const QuadElement& b) { return compare(a, b) <= 0; }

// Approximation with |result - value| <= 2^(1-bits) max(1, |value|).
BigFloat to_float(const QuadElement& a, mpfr_prec_t bits = BigFloat::kDefaultBits);

// Same, reusing a precomputed gamma; the result carries gamma's precision.
// Intended for hot loops over many elements with modest coordinates.
BigFloat to_float(const QuadElement& a, const BigFloat& gamma);

// Exact floor, confirmed with sign() after a floating-point guess.
mpz_class floor(const QuadElement& a);

std::ostream& operator<<(std::ostream& os, const QuadElement& a);

}  // namespace metallic
