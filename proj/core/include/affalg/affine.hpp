#ifndef AFFALG_AFFINE_HPP
#define AFFALG_AFFINE_HPP

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "affalg/poly.hpp"

namespace affalg {

/// Points of the standard coordinate model: <a,b,c> = a - b + c and
/// xi |>_a b = xi*b + (1-xi)*a.
using AffinePoint = Vector;

/// Affine map a -> M a + t; rectangular M is allowed (maps between spaces
/// of different dimension), endomorphisms have square M.
struct AffineMap {
  Matrix M;
  Vector t;

  AffineMap(Matrix m, Vector tr);
  static AffineMap identity(Field f, std::size_t n);
  static AffineMap constant(const Vector& value);
  static AffineMap constant(const Vector& value, std::size_t in_dim);

  const Field& field() const { return M.field(); }
  std::size_t dim() const { return t.dim(); } ///< output dimension
  std::size_t in_dim() const { return M.cols(); }

  Vector operator()(const Vector& a) const;
  PolyVec operator()(const PolyVec& a) const;

  /// (*this) after inner.
  AffineMap compose(const AffineMap& inner) const;
  std::optional<AffineMap> inverted() const;
  bool is_identity() const;

  bool operator==(const AffineMap& o) const {
    return M == o.M && t == o.t;
  }
};

/// Bi-affine map mu(a,b) = B(a,b) + L1 a + L2 b + c. B is stored as one
/// n x n slice per output coordinate: B[k].at(i,j) multiplies a_i b_j.
struct BiAffineMap {
  std::vector<Matrix> B;
  Matrix L1;
  Matrix L2;
  Vector c;

  BiAffineMap(std::vector<Matrix> b, Matrix l1, Matrix l2, Vector cc);
  static BiAffineMap zero(Field f, std::size_t n);

  const Field& field() const { return c.field(); }
  std::size_t dim() const { return c.dim(); }

  Vector operator()(const Vector& a, const Vector& b) const;
  PolyVec operator()(const PolyVec& a, const PolyVec& b) const;

  bool operator==(const BiAffineMap& o) const {
    return B == o.B && L1 == o.L1 && L2 == o.L2 && c == o.c;
  }
};

// Heap and affine-space operations of the coordinate model.
Vector heap_op(const Vector& a, const Vector& b, const Vector& c);
PolyVec heap_op(const PolyVec& a, const PolyVec& b, const PolyVec& c);
Vector action(const Scalar& xi, const Vector& a, const Vector& b);
PolyVec action(const Scalar& xi, const PolyVec& a, const PolyVec& b);
Vector retract_add(const Vector& o, const Vector& a, const Vector& b);
Vector retract_inverse(const Vector& o, const Vector& a);

/// a -> <a, o, e>; bijective with inverse translation_iso(e, o).
AffineMap translation_iso(const Vector& o, const Vector& e);

/// Reconstructs the unique affine map agreeing with evaluations at 0 and the
/// standard basis vectors; any extra sample is checked against the
/// interpolant and a contradiction raises NotAffine.
AffineMap interpolate_affine(
    const std::vector<std::pair<Vector, Vector>>& samples, std::size_t dim);

using BiAffineEvaluator =
    std::function<Vector(const Vector&, const Vector&)>;

/// Recovers (B, L1, L2, c) from evaluations on the probe grid {0, e_1..e_n}^2.
BiAffineMap interpolate_biaffine(const BiAffineEvaluator& eval, Field f,
                                 std::size_t dim);

struct BiAffineValidation {
  bool ok = true;
  std::optional<std::pair<Vector, Vector>> witness; // first mismatching pair
};

/// Compares the normal form against the black box at deterministic probe
/// points beyond the interpolation grid, then at seeded random points. A
/// mismatch proves the black box was not bi-affine.
BiAffineValidation validate_biaffine(const BiAffineMap& m,
                                     const BiAffineEvaluator& eval,
                                     std::size_t trials,
                                     std::uint64_t seed = 0);

/// Blocks of fresh coordinates as polynomial variables: block k is
/// (x_{k n}, ..., x_{k n + n - 1}) in a ring with dim*blocks variables.
std::vector<PolyVec> symbolic_args(Field f, std::size_t dim,
                                   std::size_t blocks);

/// f composed after mu: (a,b) -> f(mu(a,b)).
BiAffineMap postcompose(const AffineMap& f, const BiAffineMap& mu);

/// mu with both slots precomposed: (a,b) -> mu(f(a), g(b)).
BiAffineMap precompose(const BiAffineMap& mu, const AffineMap& f,
                       const AffineMap& g);

/// Push-forward through an invertible map: (a,b) -> f(mu(f^-1 a, f^-1 b)).
BiAffineMap conjugate(const BiAffineMap& mu, const AffineMap& f,
                      const AffineMap& f_inv);

/// Deterministic pseudo-random scalars/points for validation trials; over Q
/// they are small fractions, over F_p uniform residues.
class ScalarSampler {
public:
  ScalarSampler(Field f, std::uint64_t seed);
  Scalar next();
  Vector next_point(std::size_t dim);

private:
  Field field_;
  std::uint64_t state_;
  std::uint64_t next_raw();
};

} // namespace affalg

#endif
