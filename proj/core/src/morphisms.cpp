#include "affalg/morphisms.hpp"

namespace affalg {

namespace {

Verdict matrix_verdict(const std::string& name, const Matrix& residual) {
  if (residual.is_zero()) return Verdict::passed(name);
  return Verdict::failed(name, {}, residual.str());
}

Verdict vector_verdict(const std::string& name, const Vector& residual) {
  if (residual.is_zero()) return Verdict::passed(name);
  return Verdict::failed(name, {}, residual.str());
}

Verdict merge(const std::string& name, const std::vector<Verdict>& vs) {
  for (const Verdict& v : vs)
    if (!v.pass)
      return Verdict::failed(name, v.witness, v.residual, v.check);
  return Verdict::passed(name);
}

} // namespace

std::vector<Verdict> check_affgebra_hom_detail(const AffgebraHom& h) {
  const std::size_t n = h.source.dim;
  const std::size_t m = h.target.dim;
  if (h.phi.in_dim() != n || h.phi.dim() != m)
    throw DimensionMismatch("hom shape vs structures");
  std::vector<Verdict> out;

  auto one = symbolic_args(h.source.field(), n, 1);
  PolyVec a = one[0];
  out.push_back(verdict_from_residual(
      "phi_alpha_intertwine", h.phi(h.source.alpha(a)) - h.target.alpha(h.phi(a)),
      n, 1));

  auto two = symbolic_args(h.source.field(), n, 2);
  const PolyVec& x = two[0];
  const PolyVec& y = two[1];
  out.push_back(verdict_from_residual(
      "phi_bracket_preserve",
      h.phi(h.source.bracket(x, y)) - h.target.bracket(h.phi(x), h.phi(y)), n,
      2));
  return out;
}

Verdict check_affgebra_hom(const AffgebraHom& h) {
  return merge("affgebra_hom", check_affgebra_hom_detail(h));
}

std::pair<Matrix, Vector> linearize_hom(const AffgebraHom& h,
                                        const Vector& o) {
  if (!is_fixed_point(h.source.alpha, o))
    throw NotFixedPoint("linearize_hom at " + o.str());
  return {h.phi.M, h.phi(o)};
}

Matrix ad_matrix(const HomLieAlgebra& L, const Vector& q) {
  const std::size_t n = L.dim;
  Matrix ad(L.field(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector col = lie_bracket(L, q, Vector::unit(L.field(), n, j));
    for (std::size_t k = 0; k < n; ++k) ad.at(k, j) = col[k];
  }
  return ad;
}

std::vector<Verdict> check_data_hom_detail(const DataHom& h) {
  const std::size_t n = h.source.dim();
  const std::size_t m = h.target.dim();
  if (h.psi.rows() != m || h.psi.cols() != n || h.qprime.dim() != m)
    throw DimensionMismatch("data hom shape");
  const Field f = h.source.field();
  const HomLieAlgebra& L = h.source.L;
  const HomLieAlgebra& Lp = h.target.L;

  std::vector<Verdict> out;

  Verdict lie_hom = Verdict::passed("psi_lie_homomorphism");
  for (std::size_t i = 0; i < n && lie_hom.pass; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector ei = Vector::unit(f, n, i), ej = Vector::unit(f, n, j);
      Vector lhs = h.psi * lie_bracket(L, ei, ej);
      Vector rhs = lie_bracket(Lp, h.psi * ei, h.psi * ej);
      if (lhs != rhs) {
        lie_hom = Verdict::failed("psi_lie_homomorphism", {ei, ej},
                                  (lhs - rhs).str());
        break;
      }
    }
  out.push_back(std::move(lie_hom));

  out.push_back(matrix_verdict("psi_alpha_intertwine",
                               h.psi * L.alpha - Lp.alpha * h.psi));
  out.push_back(
      vector_verdict("qprime_fixed_by_alpha", h.qprime - Lp.alpha * h.qprime));
  out.push_back(matrix_verdict("kappa_intertwine",
                               h.psi * h.source.kappa - h.target.kappa * h.psi));
  Matrix ad_qp = ad_matrix(Lp, h.qprime);
  out.push_back(matrix_verdict(
      "lambda_intertwine", h.psi * h.source.lambda - (ad_qp + h.target.lambda) * h.psi));
  out.push_back(vector_verdict(
      "constant_compat", h.psi * h.source.r -
                    (h.target.r - h.qprime + h.target.kappa * h.qprime)));
  return out;
}

Verdict check_data_hom(const DataHom& h) {
  return merge("data_hom", check_data_hom_detail(h));
}

EquivalenceReport equivalence_check(const HomLieAffgebra& s,
                                    const HomLieAffgebra& target,
                                    const AffineMap& phi, const Vector& o) {
  if (!is_fixed_point(s.alpha, o))
    throw NotFixedPoint("equivalence_check source at " + o.str());
  Vector target_origin(target.field(), target.dim);
  if (!is_fixed_point(target.alpha, target_origin))
    throw NotFixedPoint("equivalence_check expects the target's alpha to fix "
                        "0 (data coordinates)");

  Verdict aff = check_affgebra_hom(AffgebraHom{phi, s, target});

  DataHom dh{phi.M, phi(o), extract_data(s, o),
             extract_data(target, target_origin)};
  Verdict data = check_data_hom(dh);

  if (aff.pass != data.pass)
    throw InternalInconsistency(
        "affgebra-level and data-level verdicts disagree: " + aff.line() +
        " vs " + data.line());
  return EquivalenceReport{std::move(aff), std::move(data), std::move(dh)};
}

AffgebraHom assemble_hom(const DataHom& d) {
  Verdict v = check_data_hom(d);
  if (!v.pass) throw DataHomInvalid(v.line());
  AffineMap phi(d.psi, d.qprime);
  return AffgebraHom{std::move(phi), build_from_data(d.source),
                     build_from_data(d.target)};
}

std::vector<Verdict> check_iso_data_detail(const DataHom& d, const Vector& q) {
  const std::size_t n = d.source.dim();
  if (d.target.dim() != n)
    throw DimensionMismatch("isomorphism requires equal dimensions");
  std::optional<Matrix> psi_inv = inverse(d.psi);
  if (!psi_inv) throw PsiNotInvertible("psi is singular");
  if (!(d.psi * q == d.qprime))
    throw PreconditionFailed("q must equal psi^-1(q')");
  const HomLieAlgebra& L = d.source.L;
  const HomLieAlgebra& Lp = d.target.L;
  const Field f = d.source.field();

  std::vector<Verdict> out;

  Verdict lie_iso = Verdict::passed("psi_lie_isomorphism");
  for (std::size_t i = 0; i < n && lie_iso.pass; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector ei = Vector::unit(f, n, i), ej = Vector::unit(f, n, j);
      Vector lhs = d.psi * lie_bracket(L, ei, ej);
      Vector rhs = lie_bracket(Lp, d.psi * ei, d.psi * ej);
      if (lhs != rhs) {
        lie_iso = Verdict::failed("psi_lie_isomorphism", {ei, ej},
                                  (lhs - rhs).str());
        break;
      }
    }
  out.push_back(std::move(lie_iso));
  out.push_back(matrix_verdict("psi_alpha_intertwine",
                               d.psi * L.alpha - Lp.alpha * d.psi));
  out.push_back(vector_verdict(
      "iso_qprime_image", d.qprime - Lp.alpha * (d.psi * q)));
  out.push_back(matrix_verdict(
      "iso_kappa_conjugacy", d.target.kappa - d.psi * d.source.kappa * *psi_inv));
  out.push_back(matrix_verdict(
      "iso_lambda_conjugacy", d.target.lambda -
                    d.psi * (d.source.lambda - ad_matrix(L, q)) * *psi_inv));
  out.push_back(vector_verdict(
      "iso_constant_image",
      d.target.r - d.psi * (d.source.r + q - d.source.kappa * q)));
  return out;
}

Verdict check_iso_data(const DataHom& d, const Vector& q) {
  return merge("iso_data", check_iso_data_detail(d, q));
}

SolutionSpace solve_psi_given_qprime(const AffgebraData& src,
                                     const AffgebraData& tgt,
                                     const Vector& qprime) {
  const std::size_t n = src.dim();
  const std::size_t m = tgt.dim();
  const Field f = src.field();
  // Unknowns: psi entries, row-major (m x n). Linear conditions:
  //   psi alpha = alpha' psi, psi kappa = kappa' psi,
  //   psi lambda = (ad_q' + lambda') psi, psi r = r' - q' + kappa' q'.
  Matrix ad_qp = ad_matrix(tgt.L, qprime);
  std::vector<std::pair<Matrix, Matrix>> sandwiches = {
      {src.L.alpha, tgt.L.alpha},
      {src.kappa, tgt.kappa},
      {src.lambda, ad_qp + tgt.lambda},
  };
  const std::size_t unknowns = m * n;
  std::vector<Vector> rows;
  std::vector<Scalar> rhs;
  for (const auto& [right, left] : sandwiches)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vector row(f, unknowns);
        // (psi * right)[i][j] = sum_k psi[i][k] right[k][j]
        for (std::size_t k = 0; k < n; ++k)
          row[i * n + k] += right.at(k, j);
        // (left * psi)[i][j] = sum_k left[i][k] psi[k][j]
        for (std::size_t k = 0; k < m; ++k)
          row[k * n + j] -= left.at(i, k);
        rows.push_back(std::move(row));
        rhs.push_back(Scalar::zero(f));
      }
  Vector d = tgt.r - qprime + tgt.kappa * qprime;
  for (std::size_t i = 0; i < m; ++i) {
    Vector row(f, unknowns);
    for (std::size_t k = 0; k < n; ++k) row[i * n + k] = src.r[k];
    rows.push_back(std::move(row));
    rhs.push_back(d[i]);
  }
  Matrix a(f, rows.size(), unknowns);
  Vector b(f, rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < unknowns; ++c) a.at(r, c) = rows[r][c];
    b[r] = rhs[r];
  }
  return solve_affine(a, b);
}

std::vector<FpDataHom> enumerate_data_homs_fp(const AffgebraData& src,
                                              const AffgebraData& tgt) {
  const Field f = src.field();
  if (!f.is_prime())
    throw FieldMismatch("exhaustive enumeration needs a prime field");
  const std::size_t n = src.dim();
  const std::size_t m = tgt.dim();
  const std::uint64_t p = f.characteristic();
  const std::size_t cells = m * n + m;
  double size = 1;
  for (std::size_t i = 0; i < cells; ++i) size *= static_cast<double>(p);
  if (size > 2e6)
    throw PreconditionFailed("search space too large for enumeration");

  std::vector<FpDataHom> out;
  std::vector<std::uint64_t> digits(cells, 0);
  while (true) {
    Matrix psi(f, m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        psi.at(i, j) = Scalar(f, static_cast<long>(digits[i * n + j]));
    Vector qp(f, m);
    for (std::size_t i = 0; i < m; ++i)
      qp[i] = Scalar(f, static_cast<long>(digits[m * n + i]));
    DataHom dh{psi, qp, src, tgt};
    if (check_data_hom(dh).pass) {
      bool inv = (m == n) && inverse(psi).has_value();
      out.push_back(FpDataHom{std::move(psi), std::move(qp), inv});
    }
    std::size_t pos = 0;
    while (pos < cells) {
      if (++digits[pos] < p) break;
      digits[pos] = 0;
      ++pos;
    }
    if (pos == cells) break;
  }
  return out;
}

} // namespace affalg
