#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace metallic {

/// RAII handle around an MPFR value. Every operation rounds to nearest;
/// binary operations produce a result at the larger of the operand precisions.
class BigFloat {
 public:
  static constexpr mpfr_prec_t kDefaultBits = 128;

  explicit BigFloat(mpfr_prec_t bits = kDefaultBits);
  BigFloat(double value, mpfr_prec_t bits = kDefaultBits);
  BigFloat(const mpz_class& value, mpfr_prec_t bits);
  BigFloat(const mpq_class& value, mpfr_prec_t bits);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_prec_t bits() const { return mpfr_get_prec(value_); }
  BigFloat with_bits(mpfr_prec_t bits) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long double to_long_double() const { return mpfr_get_ld(value_, MPFR_RNDN); }
  // Shortest-form decimal with `digits` significant digits.
  std::string to_string(int digits = 30) const;
  std::string to_fixed(int decimals) const;

  int sign() const { return mpfr_sgn(value_); }
  bool is_integer() const { return mpfr_integer_p(value_) != 0; }

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);

  friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
  friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
  friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
  friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }
  BigFloat operator-() const;

  friend int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.value_, b.value_); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return compare(a, b) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return compare(a, b) > 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return compare(a, b) >= 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return compare(a, b) == 0; }

 private:
  mpfr_t value_;
};

BigFloat sqrt(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat abs(const BigFloat& x);
BigFloat floor(const BigFloat& x);
BigFloat ceil(const BigFloat& x);
BigFloat round(const BigFloat& x);
BigFloat pow(const BigFloat& x, long e);
// Exact conversion of an integral value; the argument must be an integer.
mpz_class to_mpz(const BigFloat& x);

}  // namespace metallic
