#include "affalg/scalar.hpp"

namespace affalg {

namespace {

bool is_odd_prime(std::uint32_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1;
  base %= p;
  while (exp) {
    if (exp & 1) acc = acc * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return acc;
}

} // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_odd_prime(p))
    throw FieldError("prime field characteristic must be an odd prime, got " +
                     std::to_string(p));
  return Field(Kind::Prime, p);
}

std::string Field::str() const {
  return is_rationals() ? "Q" : "F" + std::to_string(p_);
}

Scalar::Scalar(Field f, long value) : field_(f), q_(0), r_(0) {
  if (f.is_rationals()) {
    q_ = value;
  } else {
    long p = static_cast<long>(f.characteristic());
    long m = value % p;
    if (m < 0) m += p;
    r_ = static_cast<std::uint64_t>(m);
  }
}

Scalar::Scalar(Field f, long num, long den) : field_(f), q_(0), r_(0) {
  if (den == 0) throw DivisionByZero("zero denominator");
  if (f.is_rationals()) {
    q_ = mpq_class(num, den);
    q_.canonicalize();
  } else {
    *this = Scalar(f, num) / Scalar(f, den);
  }
}

Scalar::Scalar(Field f, const mpq_class& q) : field_(f), q_(0), r_(0) {
  if (f.is_rationals()) {
    q_ = q;
    q_.canonicalize();
  } else {
    const std::uint64_t p = f.characteristic();
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class nm = num % pz, dm = den % pz;
    if (nm < 0) nm += pz;
    if (dm == 0) throw DivisionByZero("denominator divisible by " + std::to_string(p));
    Scalar n(f, static_cast<long>(nm.get_ui()));
    Scalar d(f, static_cast<long>(mpz_class(dm).get_ui()));
    *this = n / d;
  }
}

Scalar Scalar::parse(Field f, const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw FieldError("cannot parse scalar literal '" + text + "'");
  q.canonicalize();
  return Scalar(f, q);
}

bool Scalar::is_zero() const {
  return field_.is_rationals() ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rationals() ? q_ == 1 : r_ == 1;
}

int Scalar::sign() const {
  if (field_.is_rationals()) return sgn(q_);
  return r_ == 0 ? 0 : 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw FieldMismatch(field_.str() + " vs " + o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar out(field_);
  if (field_.is_rationals()) {
    out.q_ = q_ + o.q_;
  } else {
    out.r_ = (r_ + o.r_) % field_.characteristic();
  }
  return out;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  Scalar out(field_);
  if (field_.is_rationals()) {
    out.q_ = q_ - o.q_;
  } else {
    const std::uint64_t p = field_.characteristic();
    out.r_ = (r_ + p - o.r_) % p;
  }
  return out;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar out(field_);
  if (field_.is_rationals()) {
    out.q_ = q_ * o.q_;
  } else {
    out.r_ = r_ * o.r_ % field_.characteristic();
  }
  return out;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar out(field_);
  if (field_.is_rationals()) {
    out.q_ = -q_;
  } else {
    const std::uint64_t p = field_.characteristic();
    out.r_ = (p - r_) % p;
  }
  return out;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(o);
  return field_.is_rationals() ? q_ == o.q_ : r_ == o.r_;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Scalar out(field_);
  if (field_.is_rationals()) {
    out.q_ = 1 / q_;
  } else {
    const std::uint64_t p = field_.characteristic();
    out.r_ = mod_pow(r_, p - 2, p); // Fermat: r^(p-2) = r^-1
  }
  return out;
}

std::string Scalar::str() const {
  if (field_.is_rationals()) return q_.get_str();
  return std::to_string(r_);
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rationals())
    throw FieldMismatch("rational() on a prime-field scalar");
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (!field_.is_prime())
    throw FieldMismatch("residue() on a rational scalar");
  return r_;
}

} // namespace affalg
