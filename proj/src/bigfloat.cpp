#include "metallic/bigfloat.hpp"

#include <algorithm>
#include <vector>

namespace metallic {

namespace {

mpfr_prec_t wider(const BigFloat& a, const BigFloat& b) { return std::max(a.bits(), b.bits()); }

}  // namespace

BigFloat::BigFloat(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(double value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const mpz_class& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.bits());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, other.bits());
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.bits());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::with_bits(mpfr_prec_t bits) const {
  BigFloat out(bits);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

std::string BigFloat::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, value_);
  return std::string(buf.data());
}

std::string BigFloat::to_fixed(int decimals) const {
  std::vector<char> buf(static_cast<std::size_t>(decimals) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", decimals, value_);
  return std::string(buf.data());
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  mpfr_prec_t bits = wider(*this, rhs);
  if (bits != this->bits()) mpfr_prec_round(value_, bits, MPFR_RNDN);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  mpfr_prec_t bits = wider(*this, rhs);
  if (bits != this->bits()) mpfr_prec_round(value_, bits, MPFR_RNDN);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  mpfr_prec_t bits = wider(*this, rhs);
  if (bits != this->bits()) mpfr_prec_round(value_, bits, MPFR_RNDN);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  mpfr_prec_t bits = wider(*this, rhs);
  if (bits != this->bits()) mpfr_prec_round(value_, bits, MPFR_RNDN);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat out(bits());
  mpfr_neg(out.value_, value_, MPFR_RNDN);
  return out;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat out(x.bits());
  mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigFloat log(const BigFloat& x) {
  BigFloat out(x.bits());
  mpfr_log(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigFloat exp(const BigFloat& x) {
  BigFloat out(x.bits());
  mpfr_exp(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigFloat abs(const BigFloat& x) {
  BigFloat out(x.bits());
  mpfr_abs(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigFloat floor(const BigFloat& x) {
  BigFloat out(x.bits());
  mpfr_floor(out.get(), x.get());
  return out;
}

BigFloat ceil(const BigFloat& x) {
  BigFloat out(x.bits());
  mpfr_ceil(out.get(), x.get());
  return out;
}

BigFloat round(const BigFloat& x) {
  BigFloat out(x.bits());
  mpfr_round(out.get(), x.get());
  return out;
}

BigFloat pow(const BigFloat& x, long e) {
  BigFloat out(x.bits());
  mpfr_pow_si(out.get(), x.get(), e, MPFR_RNDN);
  return out;
}

mpz_class to_mpz(const BigFloat& x) {
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), x.get(), MPFR_RNDN);
  return out;
}

}  // namespace metallic
