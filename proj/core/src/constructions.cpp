#include "affalg/constructions.hpp"

namespace affalg {

Vector data_identity_residual(const HomLieAlgebra& L, const Matrix& kappa,
                              const Matrix& lambda, std::size_t i,
                              std::size_t j) {
  const Field f = L.field();
  const std::size_t n = L.dim;
  Vector ei = Vector::unit(f, n, i);
  Vector ej = Vector::unit(f, n, j);
  Vector lhs = lambda * lie_bracket(L, ei, ej);
  Vector rhs = lie_bracket(L, lambda * ei, L.alpha * ej) -
               lie_bracket(L, L.alpha * ei, kappa * ej) +
               lie_bracket(L, L.alpha * ei, lambda * ej);
  return lhs - rhs;
}

void validate_affgebra_data(const AffgebraData& d) {
  const std::size_t n = d.dim();
  if (d.L.dim != n || d.kappa.rows() != n || d.lambda.rows() != n)
    throw DimensionMismatch("affgebra data shape");
  Verdict lv = check_homlie_algebra(d.L);
  if (!lv.pass)
    throw DataInvariantViolated("underlying algebra: " + lv.line());
  if (!commute(d.kappa, d.L.alpha))
    throw DataInvariantViolated("kappa does not commute with alpha");
  if (!commute(d.lambda, d.L.alpha))
    throw DataInvariantViolated("lambda does not commute with alpha");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!data_identity_residual(d.L, d.kappa, d.lambda, i, j).is_zero())
        throw DataInvariantViolated("compatibility identity breaks at basis pair (" +
                                    std::to_string(i) + "," +
                                    std::to_string(j) + ")");
}

namespace {

/// mu(a,b) - mu(b,a) + alpha(second) in closed form.
BiAffineMap commutator_form(const BiAffineMap& mu, const AffineMap& alpha) {
  const std::size_t n = mu.dim();
  std::vector<Matrix> B;
  B.reserve(n);
  for (std::size_t k = 0; k < n; ++k)
    B.push_back(mu.B[k] - mu.B[k].transposed());
  Matrix L1 = mu.L1 - mu.L2;
  Matrix L2 = mu.L2 - mu.L1 + alpha.M;
  return BiAffineMap(std::move(B), std::move(L1), std::move(L2), alpha.t);
}

void require_endomorphism(const BiAffineMap& op, const AffineMap& alpha,
                          const char* what) {
  Verdict v = check_multiplicativity(op, alpha);
  if (!v.pass)
    throw NotEndomorphism(std::string(what) + ": " + v.line());
}

} // namespace

HomLieAffgebra commutator_bracket(const HomAssocAffgebra& s) {
  Verdict assoc = check_hom_associativity(s);
  if (!assoc.pass)
    throw PreconditionFailed("commutator bracket needs Hom-associativity: " +
                             assoc.line());
  Verdict mult = check_multiplicativity(s.mul, s.alpha);
  if (!mult.pass)
    throw PreconditionFailed("commutator bracket needs multiplicativity: " +
                             mult.line());
  return HomLieAffgebra{s.dim, commutator_form(s.mul, s.alpha), s.alpha};
}

HomLieAffgebra prelie_to_lie(const HomPreLieAffgebra& s) {
  Verdict pl = check_hom_prelie(s);
  if (!pl.pass)
    throw PreconditionFailed("pre-Lie to Lie needs the pre-Lie law: " +
                             pl.line());
  Verdict mult = check_multiplicativity(s.prod, s.alpha);
  if (!mult.pass)
    throw PreconditionFailed("pre-Lie to Lie needs multiplicativity: " +
                             mult.line());
  return HomLieAffgebra{s.dim, commutator_form(s.prod, s.alpha), s.alpha};
}

HomLieAffgebra scalar_action_bracket(std::size_t dim, const Scalar& xi,
                                     const AffineMap& alpha) {
  const Field f = xi.field();
  if (alpha.dim() != dim) throw DimensionMismatch("scalar_action_bracket");
  Matrix L1 = Matrix::identity(f, dim) * (Scalar::one(f) - xi);
  Matrix L2 = Matrix::identity(f, dim) * xi;
  BiAffineMap br(std::vector<Matrix>(dim, Matrix(f, dim, dim)), std::move(L1),
                 std::move(L2), Vector(f, dim));
  return HomLieAffgebra{dim, std::move(br), alpha};
}

HomLieAffgebra constant_bracket(std::size_t dim, const AffineMap& phi,
                                const AffineMap& alpha) {
  const Field f = phi.field();
  if (phi.dim() != dim || alpha.dim() != dim)
    throw DimensionMismatch("constant_bracket");
  BiAffineMap br(std::vector<Matrix>(dim, Matrix(f, dim, dim)), phi.M,
                 Matrix(f, dim, dim), phi.t);
  return HomLieAffgebra{dim, std::move(br), alpha};
}

HomAssocAffgebra yau_twist_assoc(const HomAssocAffgebra& s,
                                 const AffineMap& alpha) {
  if (!s.alpha.is_identity())
    throw PreconditionFailed("Yau twist starts from an associative affgebra "
                             "(alpha = id)");
  require_endomorphism(s.mul, alpha, "twisting map");
  return HomAssocAffgebra{s.dim, postcompose(alpha, s.mul), alpha};
}

HomLieAffgebra yau_twist_lie(const HomLieAffgebra& s, const AffineMap& alpha) {
  if (!s.alpha.is_identity())
    throw PreconditionFailed("Yau twist starts from a Lie affgebra "
                             "(alpha = id)");
  require_endomorphism(s.bracket, alpha, "twisting map");
  return HomLieAffgebra{s.dim, postcompose(alpha, s.bracket), alpha};
}

HomPreLieAffgebra yau_twist_prelie(const HomPreLieAffgebra& s,
                                   const AffineMap& alpha) {
  if (!s.alpha.is_identity())
    throw PreconditionFailed("Yau twist starts from a pre-Lie affgebra "
                             "(alpha = id)");
  require_endomorphism(s.prod, alpha, "twisting map");
  return HomPreLieAffgebra{s.dim, precompose(s.prod, alpha, alpha), alpha,
                           s.side};
}

HomLieAffgebra build_from_data(const AffgebraData& d) {
  validate_affgebra_data(d);
  const std::size_t n = d.dim();
  BiAffineMap br(d.L.sc, d.kappa - d.lambda, d.lambda, d.r);
  AffineMap alpha(d.L.alpha, Vector(d.field(), n));
  return HomLieAffgebra{n, std::move(br), std::move(alpha)};
}

HomLieAffgebra affine_from_homlie(const HomLieAlgebra& L, const Vector& r) {
  Verdict lv = check_homlie_algebra(L);
  if (!lv.pass) throw PreconditionFailed(lv.line());
  const std::size_t n = L.dim;
  // kappa = lambda = alpha specializes the compatibility identity to
  // multiplicativity of alpha.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!data_identity_residual(L, L.alpha, L.alpha, i, j).is_zero())
        throw AlphaNotMultiplicative("alpha[a,b] != [alpha(a), alpha(b)] at (" +
                                     std::to_string(i) + "," +
                                     std::to_string(j) + ")");
  return build_from_data(AffgebraData{L, L.alpha, L.alpha, r});
}

} // namespace affalg
