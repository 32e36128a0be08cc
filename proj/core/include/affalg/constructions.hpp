#ifndef AFFALG_CONSTRUCTIONS_HPP
#define AFFALG_CONSTRUCTIONS_HPP

#include "affalg/structures.hpp"

namespace affalg {

/// The tuple (L; kappa, lambda, r) that presents a Hom-Lie affgebra on the
/// underlying space of L via {a,b} = [a,b] + kappa(a) + lambda(b-a) + r.
/// Valid data commutes with alpha and satisfies
///   lambda([a,b]) = [lambda(a), alpha(b)] - [alpha(a), kappa(b)]
///                   + [alpha(a), lambda(b)]
/// on all basis pairs.
struct AffgebraData {
  HomLieAlgebra L;
  Matrix kappa;
  Matrix lambda;
  Vector r;

  const Field& field() const { return r.field(); }
  std::size_t dim() const { return r.dim(); }

  bool operator==(const AffgebraData& o) const {
    return L.sc == o.L.sc && L.alpha == o.L.alpha && kappa == o.kappa &&
           lambda == o.lambda && r == o.r;
  }
};

/// Residual of the compatibility identity on the basis pair (i, j); zero for
/// valid data.
Vector data_identity_residual(const HomLieAlgebra& L, const Matrix& kappa,
                              const Matrix& lambda, std::size_t i,
                              std::size_t j);

/// Checks commutation with alpha plus the compatibility identity on all
/// basis pairs; throws DataInvariantViolated naming the first breaking pair.
void validate_affgebra_data(const AffgebraData& d);

/// {a,b} = <mu(a,b), mu(b,a), alpha(b)> from a multiplicative
/// Hom-associative affgebra.
HomLieAffgebra commutator_bracket(const HomAssocAffgebra& s);

/// {a,b} = <a.b, b.a, alpha(b)> from a multiplicative Hom-pre-Lie affgebra;
/// alpha enters on the second argument, as in the commutator bracket.
HomLieAffgebra prelie_to_lie(const HomPreLieAffgebra& s);

/// {a,b} = xi |>_a b; a Hom-Lie affgebra for every affine alpha.
HomLieAffgebra scalar_action_bracket(std::size_t dim, const Scalar& xi,
                                     const AffineMap& alpha);

/// {a,b} = phi(a); a Hom-Lie affgebra for arbitrary affine phi, alpha.
HomLieAffgebra constant_bracket(std::size_t dim, const AffineMap& phi,
                                const AffineMap& alpha);

/// Twist of an associative affgebra by an endomorphism: mul' = alpha o mul.
HomAssocAffgebra yau_twist_assoc(const HomAssocAffgebra& s,
                                 const AffineMap& alpha);

/// Twist of a Lie affgebra: bracket' = alpha o bracket.
HomLieAffgebra yau_twist_lie(const HomLieAffgebra& s, const AffineMap& alpha);

/// Twist of a pre-Lie affgebra: a .' b = alpha(a) . alpha(b).
HomPreLieAffgebra yau_twist_prelie(const HomPreLieAffgebra& s,
                                   const AffineMap& alpha);

/// The affgebra of valid data: bracket {a,b} = [a,b] + kappa(a)
/// + lambda(b-a) + r assembled in closed form (B = sc, L1 = kappa - lambda,
/// L2 = lambda, c = r), alpha = the linear map of L.
HomLieAffgebra build_from_data(const AffgebraData& d);

/// {a,b} = [a,b] + alpha(b) + r: build_from_data with kappa = lambda = alpha,
/// which requires alpha to be multiplicative on L.
HomLieAffgebra affine_from_homlie(const HomLieAlgebra& L, const Vector& r);

} // namespace affalg

#endif
