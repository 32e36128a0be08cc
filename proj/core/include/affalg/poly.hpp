#ifndef AFFALG_POLY_HPP
#define AFFALG_POLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "affalg/linalg.hpp"

namespace affalg {

using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree first, then lex with x0 largest.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial in canonical form: no zero coefficients,
/// terms ordered by grlex. Two polynomials are equal iff their term maps are,
/// which makes the zero test a proof of identity over any field.
class MultiPoly {
public:
  MultiPoly(Field f, std::size_t nvars)
      : field_(f), nvars_(nvars) {}
  static MultiPoly constant(Field f, std::size_t nvars, const Scalar& c);
  static MultiPoly variable(Field f, std::size_t nvars, std::size_t index);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  std::uint32_t total_degree() const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Scalar& s) const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }

  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  Scalar eval(const Vector& point) const;

  /// Substitutes one variable by a scalar value.
  MultiPoly substitute(std::size_t var, const Scalar& value) const;

  /// A point where the polynomial does not vanish; absent iff none exists
  /// (always present for nonzero polynomials over Q; over F_p a nonzero
  /// polynomial can vanish as a function).
  std::optional<Vector> find_nonzero_point() const;

  /// Sorted term list, leading term first, e.g. "x0^2 - 2*x0*x1 + 1/3".
  std::string str() const;

  const std::map<Exponents, Scalar, GrlexLess>& terms() const {
    return terms_;
  }

  void add_term(const Exponents& exp, const Scalar& coeff);

private:
  void check_compatible(const MultiPoly& o) const;

  Field field_;
  std::size_t nvars_;
  std::map<Exponents, Scalar, GrlexLess> terms_;
};

/// Coordinate vector of polynomials: a symbolic point of an affine space.
using PolyVec = std::vector<MultiPoly>;

PolyVec operator+(const PolyVec& a, const PolyVec& b);
PolyVec operator-(const PolyVec& a, const PolyVec& b);
bool all_zero(const PolyVec& v);

/// Lifts a concrete point into the polynomial ring.
PolyVec lift(const Vector& point, std::size_t nvars);

} // namespace affalg

#endif
