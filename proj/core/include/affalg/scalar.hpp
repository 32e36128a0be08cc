#ifndef AFFALG_SCALAR_HPP
#define AFFALG_SCALAR_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "affalg/errors.hpp"

namespace affalg {

/// Coefficient field: the rationals, or a prime field of odd characteristic.
/// PrimeField(2) is rejected; every identity in the library assumes char != 2.
class Field {
public:
  enum class Kind { Rationals, Prime };

  static Field rationals() { return Field(Kind::Rationals, 0); }
  static Field prime(std::uint32_t p);

  Kind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == Kind::Rationals; }
  bool is_prime() const { return kind_ == Kind::Prime; }
  std::uint32_t characteristic() const { return p_; }

  bool operator==(const Field& o) const = default;

  std::string str() const;

private:
  Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator; prime-field values as residues in [0, p).
class Scalar {
public:
  explicit Scalar(Field f) : field_(f), q_(0), r_(0) {}
  Scalar(Field f, long value);
  Scalar(Field f, long num, long den);
  Scalar(Field f, const mpq_class& q);

  static Scalar zero(Field f) { return Scalar(f); }
  static Scalar one(Field f) { return Scalar(f, 1); }
  /// Parses "n" or "p/q" over the rationals, a residue over F_p.
  static Scalar parse(Field f, const std::string& text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  int sign() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Multiplicative inverse; throws DivisionByZero on zero.
  Scalar inverse() const;

  /// Canonical string form: "n" or "p/q" over Q, the residue over F_p.
  std::string str() const;

  const mpq_class& rational() const;
  std::uint64_t residue() const;

private:
  void check_same_field(const Scalar& o) const;

  Field field_;
  mpq_class q_;     // active over the rationals
  std::uint64_t r_; // active over a prime field
};

inline Scalar inverse(const Scalar& x) { return x.inverse(); }

} // namespace affalg

#endif
