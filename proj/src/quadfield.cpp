#include "metallic/quadfield.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "metallic/errors.hpp"

namespace metallic {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParamsMismatch: return "ParamsMismatch";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kInvalidRemovalCount: return "InvalidRemovalCount";
    case ErrorCode::kPolicyIndexMismatch: return "PolicyIndexMismatch";
    case ErrorCode::kEmptyFractal: return "EmptyFractal";
  }
  return "Unknown";
}

namespace {

// Integer square root of D when D is a perfect square, else -1.
long exact_sqrt(long d) {
  mpz_class z(d);
  if (!mpz_perfect_square_p(z.get_mpz_t())) return -1;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r.get_si();
}

void require_same_field(const QuadElement& a, const QuadElement& b) {
  if (!(a.field() == b.field())) {
    std::ostringstream os;
    os << "quadratic elements from different fields: (p,q)=(" << a.field().p << ","
       << a.field().q << ") vs (" << b.field().p << "," << b.field().q << ")";
    throw Error(ErrorCode::kParamsMismatch, os.str());
  }
}

int sign_of(const mpq_class& x) { return sgn(x); }

long bit_magnitude(const mpq_class& x) {
  if (sgn(x) == 0) return 0;
  long num = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2));
  long den = static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
  return std::max(0L, num - den + 1);
}

}  // namespace

MetallicParams::MetallicParams(int p, int q) : field_{p, q}, gamma_(kGammaBits) {
  if (p < 1 || q < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "metallic parameters must be positive integers (got p=" + std::to_string(p) +
                    ", q=" + std::to_string(q) + ")");
  }
  degenerate_ = exact_sqrt(field_.discriminant()) >= 0;
  gamma_ = gamma(kGammaBits);
}

BigFloat MetallicParams::gamma(mpfr_prec_t bits) const {
  BigFloat d(mpz_class(field_.discriminant()), bits);
  BigFloat g = sqrt(d) + BigFloat(mpz_class(field_.p), bits);
  mpfr_div_2ui(g.get(), g.get(), 1, MPFR_RNDN);
  return g;
}

std::string MetallicParams::symbol() const {
  if (field_ == Field{1, 1}) return "φ";
  if (field_ == Field{2, 1}) return "δ";
  if (field_ == Field{3, 1}) return "σ";
  if (field_ == Field{1, 2}) return "α";
  if (field_ == Field{1, 3}) return "β";
  return "γ";
}

std::string MetallicParams::tex_symbol() const {
  if (field_ == Field{1, 1}) return "\\phi";
  if (field_ == Field{2, 1}) return "\\delta";
  if (field_ == Field{3, 1}) return "\\sigma";
  if (field_ == Field{1, 2}) return "\\alpha";
  if (field_ == Field{1, 3}) return "\\beta";
  return "\\gamma";
}

QuadElement::QuadElement(Field field, mpq_class c0, mpq_class c1)
    : field_(field), c0_(std::move(c0)), c1_(std::move(c1)) {
  c0_.canonicalize();
  c1_.canonicalize();
}

QuadElement& QuadElement::operator+=(const QuadElement& rhs) {
  require_same_field(*this, rhs);
  c0_ += rhs.c0_;
  c1_ += rhs.c1_;
  return *this;
}

QuadElement& QuadElement::operator-=(const QuadElement& rhs) {
  require_same_field(*this, rhs);
  c0_ -= rhs.c0_;
  c1_ -= rhs.c1_;
  return *this;
}

QuadElement& QuadElement::operator*=(const QuadElement& rhs) {
  require_same_field(*this, rhs);
  // (a0 + a1 g)(b0 + b1 g) = a0 b0 + (a0 b1 + a1 b0) g + a1 b1 (q + p g)
  mpq_class cross = c1_ * rhs.c1_;
  mpq_class n0 = c0_ * rhs.c0_ + field_.q * cross;
  mpq_class n1 = c0_ * rhs.c1_ + c1_ * rhs.c0_ + field_.p * cross;
  c0_ = std::move(n0);
  c1_ = std::move(n1);
  return *this;
}

QuadElement& QuadElement::operator*=(const mpq_class& scalar) {
  c0_ *= scalar;
  c1_ *= scalar;
  return *this;
}

bool operator==(const QuadElement& a, const QuadElement& b) {
  require_same_field(a, b);
  if (a.c0_ == b.c0_ && a.c1_ == b.c1_) return true;
  return sign(a - b) == 0;
}

QuadElement qe_arith(const QuadElement& a, const QuadElement& b, QuadOp op) {
  switch (op) {
    case QuadOp::kAdd: return a + b;
    case QuadOp::kSub: return a - b;
    case QuadOp::kMul: return a * b;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown quadratic-field operation");
}

QuadElement gamma_pow(Field field, long m) {
  QuadElement base = m >= 0 ? QuadElement::gamma(field)
                            : QuadElement(field, mpq_class(-field.p, field.q), mpq_class(1, field.q));
  unsigned long e = m >= 0 ? static_cast<unsigned long>(m) : static_cast<unsigned long>(-m);
  QuadElement result = QuadElement::one(field);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

int sign(const QuadElement& a) {
  const Field& f = a.field();
  // value = (A + B sqrt(D)) / 2 with A = 2 c0 + p c1, B = c1
  mpq_class big_a = 2 * a.c0() + f.p * a.c1();
  const mpq_class& big_b = a.c1();
  long d = f.discriminant();
  long root = exact_sqrt(d);
  if (root >= 0) return sign_of(mpq_class(big_a + root * big_b));

  int sa = sign_of(big_a);
  int sb = sign_of(big_b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: the term with the larger square wins.
  mpq_class a2 = big_a * big_a;
  mpq_class b2d = big_b * big_b * d;
  int c = cmp(a2, b2d);
  if (c == 0) return 0;  // unreachable for irrational sqrt(D)
  return c > 0 ? sa : sb;
}

std::strong_ordering compare(const QuadElement& a, const QuadElement& b) {
  int s = sign(a - b);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigFloat to_float(const QuadElement& a, mpfr_prec_t bits) {
  if (bits < 53) throw Error(ErrorCode::kInvalidArgument, "float conversion needs at least 53 bits");
  // Guard bits cover cancellation between the two coordinates.
  mpfr_prec_t work = bits + 64 + std::max(bit_magnitude(a.c0()), bit_magnitude(a.c1()));
  MetallicParams params(a.field().p, a.field().q);
  BigFloat value = BigFloat(a.c0(), work) + BigFloat(a.c1(), work) * params.gamma(work);
  return value.with_bits(bits);
}

BigFloat to_float(const QuadElement& a, const BigFloat& gamma) {
  mpfr_prec_t work = gamma.bits();
  return BigFloat(a.c0(), work) + BigFloat(a.c1(), work) * gamma;
}

mpz_class floor(const QuadElement& a) {
  mpz_class guess = to_mpz(floor(to_float(a, 128)));
  const Field& f = a.field();
  while (sign(a - QuadElement(f, mpq_class(guess))) < 0) --guess;
  while (sign(a - QuadElement(f, mpq_class(guess + 1))) >= 0) ++guess;
  return guess;
}

std::ostream& operator<<(std::ostream& os, const QuadElement& a) {
  return os << "(" << a.c0().get_str() << ", " << a.c1().get_str() << ")";
}

}  // namespace metallic
