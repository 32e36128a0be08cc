#ifndef AFFALG_DERIVATIONS_HPP
#define AFFALG_DERIVATIONS_HPP

#include "affalg/constructions.hpp"

namespace affalg {

/// A generalized derivation (lambda, lambda', lambda''):
/// [lambda(a), alpha(b)] + [alpha(a), lambda'(b)] = lambda''([a,b]) with all
/// three maps commuting with alpha.
struct GenDerivTriple {
  Matrix lam;
  Matrix lamP;
  Matrix lamPP;
};

/// Membership tests evaluate the defining equations directly on basis pairs
/// (complete by bilinearity). `why` receives the first failing condition.
bool in_delta(const HomLieAlgebra& L, const GenDerivTriple& t,
              std::string* why = nullptr);
bool satisfies_pair_identity(const HomLieAlgebra& L, const Matrix& kappa,
                             const Matrix& lambda, std::string* why = nullptr);

/// Basis of the space of triples (3 n^2 unknowns).
SolutionSpace delta_space(const HomLieAlgebra& L);
GenDerivTriple unflatten_triple(const HomLieAlgebra& L, const Vector& v);

/// Quasi-centroid: [kappa(a), alpha(b)] = [alpha(a), kappa(b)],
/// kappa alpha = alpha kappa.
SolutionSpace qc_space(const HomLieAlgebra& L);

/// Centroid: kappa([a,b]) = [kappa(a), alpha(b)] = [alpha(a), kappa(b)],
/// kappa alpha = alpha kappa. Contained in the quasi-centroid.
SolutionSpace centroid_space(const HomLieAlgebra& L);

/// Maps lambda with (lambda, lambda, lambda) a generalized derivation.
SolutionSpace alpha_derivation_space(const HomLieAlgebra& L);

/// Pairs (kappa, lambda) fit for the affgebra presentation: the
/// compatibility identity plus commutation with alpha (2 n^2 unknowns,
/// kappa flattened first).
SolutionSpace pair_space(const HomLieAlgebra& L);
std::pair<Matrix, Matrix> unflatten_pair(const HomLieAlgebra& L,
                                         const Vector& v);

struct ConversionResult {
  Matrix out; // kappa (forward) or delta (backward)
  std::vector<Verdict> certificate;
};

/// (delta, lambda, lambda) in Delta  =>  kappa = lambda - delta satisfies
/// the pair identity; the certificate re-verifies it. Throws NotInDelta.
ConversionResult lemma_forward(const Matrix& delta, const Matrix& lam,
                               const HomLieAlgebra& L);

/// (kappa, lambda) valid pair  =>  delta = lambda - kappa is a generalized
/// derivation (delta, lambda, lambda); certificate re-verifies. Throws
/// NotInPairSpace.
ConversionResult lemma_backward(const Matrix& kappa, const Matrix& lam,
                                const HomLieAlgebra& L);

} // namespace affalg

#endif
