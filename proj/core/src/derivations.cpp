#include "affalg/derivations.hpp"

namespace affalg {

namespace {

std::string pair_str(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

bool check_commute(const Matrix& m, const Matrix& alpha, const char* name,
                   std::string* why) {
  if (commute(m, alpha)) return true;
  if (why) *why = std::string(name) + " does not commute with alpha";
  return false;
}

/// Constraint-matrix builder over flattened matrix unknowns. Each unknown
/// matrix occupies a block of n^2 columns, entry (p,q) at offset p*n+q.
class SystemBuilder {
public:
  SystemBuilder(const HomLieAlgebra& L, std::size_t unknown_matrices)
      : L_(L), n_(L.dim), blocks_(unknown_matrices),
        rows_(), field_(L.field()) {}

  std::size_t cols() const { return blocks_ * n_ * n_; }

  /// Starts a fresh zero row and returns its index.
  std::size_t new_row() {
    rows_.emplace_back(field_, cols());
    return rows_.size() - 1;
  }

  /// coefficient += c for unknown entry (p,q) of unknown matrix `block`.
  void add(std::size_t row, std::size_t block, std::size_t p, std::size_t q,
           const Scalar& c) {
    rows_[row][block * n_ * n_ + p * n_ + q] += c;
  }

  /// Rows for [M_block e_i, alpha e_j] contracted into output coordinate k:
  /// coefficient of M[p][i] is sum_q sc[k][p][q] * alpha[q][j].
  void add_bracket_left(std::size_t row, std::size_t block, std::size_t k,
                        std::size_t i, std::size_t j, const Scalar& sign) {
    for (std::size_t p = 0; p < n_; ++p) {
      Scalar coeff = Scalar::zero(field_);
      for (std::size_t q = 0; q < n_; ++q)
        coeff += L_.sc[k].at(p, q) * L_.alpha.at(q, j);
      add(row, block, p, i, coeff * sign);
    }
  }

  /// Rows for [alpha e_i, M_block e_j]: coefficient of M[q][j] is
  /// sum_p sc[k][p][q] * alpha[p][i].
  void add_bracket_right(std::size_t row, std::size_t block, std::size_t k,
                         std::size_t i, std::size_t j, const Scalar& sign) {
    for (std::size_t q = 0; q < n_; ++q) {
      Scalar coeff = Scalar::zero(field_);
      for (std::size_t p = 0; p < n_; ++p)
        coeff += L_.sc[k].at(p, q) * L_.alpha.at(p, i);
      add(row, block, q, j, coeff * sign);
    }
  }

  /// Rows for M_block([e_i, e_j]) in coordinate k: coefficient of M[k][m]
  /// is sc[m][i][j].
  void add_applied_to_bracket(std::size_t row, std::size_t block,
                              std::size_t k, std::size_t i, std::size_t j,
                              const Scalar& sign) {
    for (std::size_t m = 0; m < n_; ++m)
      add(row, block, k, m, L_.sc[m].at(i, j) * sign);
  }

  /// n^2 rows forcing M_block alpha = alpha M_block.
  void add_commutation(std::size_t block) {
    const Scalar one = Scalar::one(field_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        std::size_t row = new_row();
        for (std::size_t k = 0; k < n_; ++k) {
          add(row, block, i, k, L_.alpha.at(k, j));
          add(row, block, k, j, -L_.alpha.at(i, k));
        }
        (void)one;
      }
  }

  SolutionSpace solve() const {
    Matrix a(field_, rows_.size(), cols());
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (std::size_t c = 0; c < cols(); ++c) a.at(r, c) = rows_[r][c];
    return solve_affine(a, Vector(field_, rows_.size()));
  }

private:
  const HomLieAlgebra& L_;
  std::size_t n_;
  std::size_t blocks_;
  std::vector<Vector> rows_;
  Field field_;
};

} // namespace

bool in_delta(const HomLieAlgebra& L, const GenDerivTriple& t,
              std::string* why) {
  const std::size_t n = L.dim;
  const Field f = L.field();
  if (!check_commute(t.lam, L.alpha, "lambda", why)) return false;
  if (!check_commute(t.lamP, L.alpha, "lambda'", why)) return false;
  if (!check_commute(t.lamPP, L.alpha, "lambda''", why)) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector ei = Vector::unit(f, n, i), ej = Vector::unit(f, n, j);
      Vector lhs = lie_bracket(L, t.lam * ei, L.alpha * ej) +
                   lie_bracket(L, L.alpha * ei, t.lamP * ej);
      Vector rhs = t.lamPP * lie_bracket(L, ei, ej);
      if (lhs != rhs) {
        if (why) *why = "defining identity breaks at basis pair " + pair_str(i, j);
        return false;
      }
    }
  return true;
}

bool satisfies_pair_identity(const HomLieAlgebra& L, const Matrix& kappa,
                             const Matrix& lambda, std::string* why) {
  const std::size_t n = L.dim;
  if (!check_commute(kappa, L.alpha, "kappa", why)) return false;
  if (!check_commute(lambda, L.alpha, "lambda", why)) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!data_identity_residual(L, kappa, lambda, i, j).is_zero()) {
        if (why)
          *why = "compatibility identity breaks at basis pair " + pair_str(i, j);
        return false;
      }
  return true;
}

SolutionSpace delta_space(const HomLieAlgebra& L) {
  const std::size_t n = L.dim;
  const Scalar one = Scalar::one(L.field());
  SystemBuilder sb(L, 3); // lambda, lambda', lambda''
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t row = sb.new_row();
        sb.add_bracket_left(row, 0, k, i, j, one);
        sb.add_bracket_right(row, 1, k, i, j, one);
        sb.add_applied_to_bracket(row, 2, k, i, j, -one);
      }
  sb.add_commutation(0);
  sb.add_commutation(1);
  sb.add_commutation(2);
  return sb.solve();
}

GenDerivTriple unflatten_triple(const HomLieAlgebra& L, const Vector& v) {
  const std::size_t n = L.dim;
  return GenDerivTriple{unflatten(L.field(), n, n, v, 0),
                        unflatten(L.field(), n, n, v, n * n),
                        unflatten(L.field(), n, n, v, 2 * n * n)};
}

SolutionSpace qc_space(const HomLieAlgebra& L) {
  const std::size_t n = L.dim;
  const Scalar one = Scalar::one(L.field());
  SystemBuilder sb(L, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t row = sb.new_row();
        sb.add_bracket_left(row, 0, k, i, j, one);
        sb.add_bracket_right(row, 0, k, i, j, -one);
      }
  sb.add_commutation(0);
  return sb.solve();
}

SolutionSpace centroid_space(const HomLieAlgebra& L) {
  const std::size_t n = L.dim;
  const Scalar one = Scalar::one(L.field());
  SystemBuilder sb(L, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t r1 = sb.new_row();
        sb.add_applied_to_bracket(r1, 0, k, i, j, one);
        sb.add_bracket_left(r1, 0, k, i, j, -one);
        std::size_t r2 = sb.new_row();
        sb.add_applied_to_bracket(r2, 0, k, i, j, one);
        sb.add_bracket_right(r2, 0, k, i, j, -one);
      }
  sb.add_commutation(0);
  return sb.solve();
}

SolutionSpace alpha_derivation_space(const HomLieAlgebra& L) {
  const std::size_t n = L.dim;
  const Scalar one = Scalar::one(L.field());
  SystemBuilder sb(L, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t row = sb.new_row();
        sb.add_applied_to_bracket(row, 0, k, i, j, one);
        sb.add_bracket_left(row, 0, k, i, j, -one);
        sb.add_bracket_right(row, 0, k, i, j, -one);
      }
  sb.add_commutation(0);
  return sb.solve();
}

SolutionSpace pair_space(const HomLieAlgebra& L) {
  const std::size_t n = L.dim;
  const Scalar one = Scalar::one(L.field());
  SystemBuilder sb(L, 2); // kappa, lambda
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // lambda([ei,ej]) - [lambda ei, alpha ej] + [alpha ei, kappa ej]
        //                 - [alpha ei, lambda ej] = 0
        std::size_t row = sb.new_row();
        sb.add_applied_to_bracket(row, 1, k, i, j, one);
        sb.add_bracket_left(row, 1, k, i, j, -one);
        sb.add_bracket_right(row, 0, k, i, j, one);
        sb.add_bracket_right(row, 1, k, i, j, -one);
      }
  sb.add_commutation(0);
  sb.add_commutation(1);
  return sb.solve();
}

std::pair<Matrix, Matrix> unflatten_pair(const HomLieAlgebra& L,
                                         const Vector& v) {
  const std::size_t n = L.dim;
  return {unflatten(L.field(), n, n, v, 0),
          unflatten(L.field(), n, n, v, n * n)};
}

ConversionResult lemma_forward(const Matrix& delta, const Matrix& lam,
                               const HomLieAlgebra& L) {
  std::string why;
  if (!in_delta(L, GenDerivTriple{delta, lam, lam}, &why))
    throw NotInDelta(why);
  Matrix kappa = lam - delta;
  ConversionResult out{kappa, {}};
  out.certificate.push_back(
      satisfies_pair_identity(L, kappa, lam)
          ? Verdict::passed("pair_identity")
          : Verdict::failed("pair_identity", {}, "", ""));
  return out;
}

ConversionResult lemma_backward(const Matrix& kappa, const Matrix& lam,
                                const HomLieAlgebra& L) {
  std::string why;
  if (!satisfies_pair_identity(L, kappa, lam, &why)) throw NotInPairSpace(why);
  Matrix delta = lam - kappa;
  ConversionResult out{delta, {}};
  out.certificate.push_back(
      in_delta(L, GenDerivTriple{delta, lam, lam})
          ? Verdict::passed("generalized_derivation")
          : Verdict::failed("generalized_derivation", {}, "", ""));
  return out;
}

} // namespace affalg
