#ifndef AFFALG_MORPHISMS_HPP
#define AFFALG_MORPHISMS_HPP

#include "affalg/fiber.hpp"

namespace affalg {

/// Candidate homomorphism of Hom-Lie affgebras.
struct AffgebraHom {
  AffineMap phi;
  HomLieAffgebra source;
  HomLieAffgebra target;
};

/// Candidate data-level homomorphism between affgebra presentations.
struct DataHom {
  Matrix psi;
  Vector qprime;
  AffgebraData source;
  AffgebraData target;
};

/// Both defining conditions, phi alpha = alpha' phi and
/// phi{a,b} = {phi a, phi b}', as polynomial identities.
std::vector<Verdict> check_affgebra_hom_detail(const AffgebraHom& h);
Verdict check_affgebra_hom(const AffgebraHom& h);

/// psi = linear part of phi recentred at a fixed point o, q' = phi(o).
std::pair<Matrix, Vector> linearize_hom(const AffgebraHom& h, const Vector& o);

/// ad_q as a matrix: x -> [q, x].
Matrix ad_matrix(const HomLieAlgebra& L, const Vector& q);

/// Line-by-line verdicts: psi is a Hom-Lie algebra homomorphism, commutes
/// with the twisting maps, and the four data equations
///   q' = alpha'(q'),  psi kappa = kappa' psi,
///   psi lambda = (ad_q' + lambda') psi,  psi(r) = r' - q' + kappa'(q').
std::vector<Verdict> check_data_hom_detail(const DataHom& h);
Verdict check_data_hom(const DataHom& h);

struct EquivalenceReport {
  Verdict affgebra_level;
  Verdict data_level;
  DataHom data_hom;
};

/// Runs the affgebra-level check and the data-level check on the same
/// candidate; the two characterizations are equivalent, so any disagreement
/// is a library bug and raises InternalInconsistency. The source is
/// recentred at the fixed point o; the target must have 0 fixed by its
/// alpha.
EquivalenceReport equivalence_check(const HomLieAffgebra& s,
                                    const HomLieAffgebra& target,
                                    const AffineMap& phi, const Vector& o);

/// phi(a) = psi a + q' between the presented affgebras; requires the data
/// conditions to hold.
AffgebraHom assemble_hom(const DataHom& d);

/// Isomorphism criterion with q = psi^-1(q'):
///   q' = alpha'(Psi q),  kappa' = Psi kappa Psi^-1,
///   lambda' = Psi(lambda - ad_q)Psi^-1,  r' = Psi(r + q - kappa(q)).
std::vector<Verdict> check_iso_data_detail(const DataHom& d, const Vector& q);
Verdict check_iso_data(const DataHom& d, const Vector& q);

/// Solution set of the conditions that are linear in psi once q' is fixed
/// (everything except the quadratic homomorphism condition on psi).
SolutionSpace solve_psi_given_qprime(const AffgebraData& src,
                                     const AffgebraData& tgt,
                                     const Vector& qprime);

/// Exhaustive search over a prime field; returns every passing (psi, q'),
/// with a guard on the search-space size.
struct FpDataHom {
  Matrix psi;
  Vector qprime;
  bool invertible;
};
std::vector<FpDataHom> enumerate_data_homs_fp(const AffgebraData& src,
                                              const AffgebraData& tgt);

} // namespace affalg

#endif
