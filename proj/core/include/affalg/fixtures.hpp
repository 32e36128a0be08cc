#ifndef AFFALG_FIXTURES_HPP
#define AFFALG_FIXTURES_HPP

#include <optional>
#include <string>

#include "affalg/derivations.hpp"

namespace affalg {

/// Membership convention for the sna matrix space: unit row/column sums
/// taken over a partial or full index range, with or without a trace-free
/// condition. The builder probes all four readings and keeps the one whose
/// multiplication actually closes.
struct SnaConvention {
  bool trace_zero = true;
  bool full_range = false; // sums over 1..n+1 instead of 1..n

  std::string str() const;
};

/// Affine parametrization of sna(n): embed maps model coordinates K^d into
/// (n+1)x(n+1) matrices, section is its left inverse on the subspace.
class SnaSpace {
public:
  std::size_t n = 0; ///< matrices are (n+1) x (n+1)
  std::size_t d = 0; ///< intrinsic dimension
  Field field = Field::rationals();
  SnaConvention convention;
  Vector base_flat = Vector(Field::rationals(), 0);
  std::vector<Vector> basis_flat;
  std::vector<std::string> report;

  std::size_t ambient() const { return (n + 1) * (n + 1); }
  Matrix embed(const Vector& x) const;
  bool contains(const Matrix& a) const;
  /// Coordinates of a matrix in the space; throws ClosureFailure otherwise.
  Vector section(const Matrix& a) const;
};

/// Probes the membership conventions, selects the multiplicatively closed
/// one, and verifies that heap and action computed on ambient matrices agree
/// with the model through embed.
SnaSpace build_sna(std::size_t n, Field f);

/// The four structures carried by sna(n), pulled back into model
/// coordinates: plain associative and Lie (alpha = id), and the conjugation
/// variants mu_P(A,B) = P(AB)P^-1, alpha(A) = PAP^-1 for an invertible P in
/// the space. A conjugation product that leaves the space is reported as a
/// closure failure, not an error.
struct SnaBundle {
  SnaSpace space;
  Matrix P;
  HomAssocAffgebra assoc;
  HomLieAffgebra lie;
  std::optional<HomAssocAffgebra> hom_assoc;
  std::optional<HomLieAffgebra> hom_lie;
  std::optional<std::string> closure_failure; // witness message when hom
                                              // structures are absent
  std::vector<std::string> report;
};

SnaBundle sna_structures(const SnaSpace& s,
                         std::optional<Matrix> user_p = std::nullopt);

/// Named test algebras: "abelian<k>", "aff1" ([e1,e2] = e2), "heisenberg3"
/// ([e1,e2] = e3), "sl2" ([h,e] = 2e, [h,f] = -2f, [e,f] = h in basis
/// (e,f,h)), and sums "<name>+<name>". The result must pass the Hom-Lie
/// checker with the supplied alpha, else AlphaIncompatible.
HomLieAlgebra classical_homlie(const std::string& name, const Matrix& alpha);

/// Structure constants only, alpha = id.
HomLieAlgebra classical_homlie(const std::string& name, Field f);

HomLieAlgebra direct_sum(const HomLieAlgebra& a, const HomLieAlgebra& b);

/// A compatible twisting map for a named fixture: "id", or "nonid" for a
/// fixed non-identity choice (a Jordan block on abelian algebras, diag(1,2)
/// on aff1, diag(1,2,2) on heisenberg3, the automorphism e<->f, h->-h on
/// sl2). All choices are multiplicative.
Matrix fixture_alpha(const std::string& fixture, const std::string& which,
                     Field f);

/// Deterministic pseudo-random valid data over L: a seeded combination of
/// the pair-space basis plus a random constant. Valid by construction.
AffgebraData sample_valid_data(const HomLieAlgebra& L, std::uint64_t seed);

} // namespace affalg

#endif
