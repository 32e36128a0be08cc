#include "affalg/structures.hpp"

#include <sstream>

namespace affalg {

Verdict Verdict::passed(std::string name) {
  Verdict v;
  v.check = std::move(name);
  v.pass = true;
  return v;
}

Verdict Verdict::failed(std::string name, std::vector<Vector> witness,
                        std::string residual, std::string note) {
  Verdict v;
  v.check = std::move(name);
  v.pass = false;
  v.witness = std::move(witness);
  v.residual = std::move(residual);
  v.note = std::move(note);
  return v;
}

std::string Verdict::line() const {
  std::ostringstream os;
  os << check << ": " << (pass ? "PASS" : "FAIL");
  if (!pass && !witness.empty()) {
    os << " [witness=";
    for (std::size_t i = 0; i < witness.size(); ++i)
      os << (i ? ";" : "") << witness[i].str();
    os << "]";
  }
  if (!pass && !residual.empty()) os << " [residual=" << residual << "]";
  if (!note.empty()) os << " (" << note << ")";
  return os.str();
}

Verdict verdict_from_residual(const std::string& name, const PolyVec& residual,
                              std::size_t dim, std::size_t blocks) {
  if (all_zero(residual)) return Verdict::passed(name);
  for (const MultiPoly& coord : residual) {
    if (coord.is_zero()) continue;
    std::vector<Vector> blocks_out;
    std::string note;
    std::optional<Vector> point = coord.find_nonzero_point();
    if (point) {
      for (std::size_t k = 0; k < blocks; ++k) {
        Vector b(point->field(), dim);
        for (std::size_t i = 0; i < dim; ++i) b[i] = (*point)[k * dim + i];
        blocks_out.push_back(std::move(b));
      }
    } else {
      note = "symbolically nonzero, no pointwise witness guaranteed";
    }
    return Verdict::failed(name, std::move(blocks_out), coord.str(),
                           std::move(note));
  }
  return Verdict::passed(name); // unreachable
}

Vector lie_bracket(const HomLieAlgebra& L, const Vector& a, const Vector& b) {
  const std::size_t n = L.dim;
  if (a.dim() != n || b.dim() != n) throw DimensionMismatch("lie_bracket");
  Vector out(L.field(), n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        out[k] += L.sc[k].at(i, j) * a[i] * b[j];
    }
  return out;
}

Vector algebra_product(const HomAssocAlgebra& A, const Vector& a,
                       const Vector& b) {
  const std::size_t n = A.dim;
  if (a.dim() != n || b.dim() != n) throw DimensionMismatch("algebra_product");
  Vector out(A.field(), n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        out[k] += A.mt[k].at(i, j) * a[i] * b[j];
    }
  return out;
}

Verdict check_affine_antisymmetry(const HomLieAffgebra& s) {
  auto args = symbolic_args(s.field(), s.dim, 2);
  const PolyVec& a = args[0];
  const PolyVec& b = args[1];
  const BiAffineMap& br = s.bracket;
  // {a,b} - {a,a} + {b,a} - {b,b}
  PolyVec residual = br(a, b) - br(a, a) + br(b, a) - br(b, b);
  return verdict_from_residual("affine_antisymmetry", residual, s.dim, 2);
}

Verdict check_affine_hom_jacobi(const HomLieAffgebra& s) {
  auto args = symbolic_args(s.field(), s.dim, 3);
  const PolyVec& a = args[0];
  const PolyVec& b = args[1];
  const PolyVec& c = args[2];
  const BiAffineMap& br = s.bracket;
  PolyVec aa = s.alpha(a), ab = s.alpha(b), ac = s.alpha(c);
  PolyVec residual = br(aa, br(b, c)) - br(aa, br(a, a)) + br(ab, br(c, a)) -
                     br(ab, br(b, b)) + br(ac, br(a, b)) - br(ac, br(c, c));
  return verdict_from_residual("affine_hom_jacobi", residual, s.dim, 3);
}

Verdict check_affine_jacobi(const HomLieAffgebra& s) {
  if (!s.alpha.is_identity())
    throw AlphaNotIdentity("affine Jacobi requires alpha = id");
  Verdict v = check_affine_hom_jacobi(s);
  v.check = "affine_jacobi";
  return v;
}

Verdict check_hom_associativity(const HomAssocAffgebra& s) {
  auto args = symbolic_args(s.field(), s.dim, 3);
  const PolyVec& a = args[0];
  const PolyVec& b = args[1];
  const PolyVec& c = args[2];
  const BiAffineMap& mu = s.mul;
  PolyVec residual = mu(s.alpha(a), mu(b, c)) - mu(mu(a, b), s.alpha(c));
  return verdict_from_residual("hom_associativity", residual, s.dim, 3);
}

Verdict check_hom_prelie(const HomPreLieAffgebra& s) {
  auto args = symbolic_args(s.field(), s.dim, 3);
  const PolyVec& a = args[0];
  const PolyVec& b = args[1];
  const PolyVec& c = args[2];
  const BiAffineMap& p = s.prod;
  PolyVec aa = s.alpha(a), ab = s.alpha(b), ac = s.alpha(c);
  PolyVec residual = s.side == PreLieSide::Left
                         // (a.b).alpha(c) = <alpha(a).(b.c), alpha(b).(a.c),
                         //                   (b.a).alpha(c)>
                         ? p(p(a, b), ac) - p(aa, p(b, c)) + p(ab, p(a, c)) -
                               p(p(b, a), ac)
                         // alpha(a).(b.c) = <(a.b).alpha(c), (a.c).alpha(b),
                         //                   alpha(a).(c.b)>
                         : p(aa, p(b, c)) - p(p(a, b), ac) + p(p(a, c), ab) -
                               p(aa, p(c, b));
  return verdict_from_residual(s.side == PreLieSide::Left ? "hom_prelie_left"
                                                          : "hom_prelie_right",
                               residual, s.dim, 3);
}

Verdict check_multiplicativity(const BiAffineMap& op, const AffineMap& alpha) {
  const std::size_t n = op.dim();
  auto args = symbolic_args(op.field(), n, 2);
  const PolyVec& a = args[0];
  const PolyVec& b = args[1];
  PolyVec residual = alpha(op(a, b)) - op(alpha(a), alpha(b));
  return verdict_from_residual("multiplicativity", residual, n, 2);
}

namespace {

Verdict basis_triple_fail(const std::string& name, Field f, std::size_t n,
                          std::size_t i, std::size_t j, std::size_t l,
                          const Vector& residual) {
  return Verdict::failed(
      name,
      {Vector::unit(f, n, i), Vector::unit(f, n, j), Vector::unit(f, n, l)},
      residual.str(), "basis triple (" + std::to_string(i) + "," +
                          std::to_string(j) + "," + std::to_string(l) + ")");
}

} // namespace

Verdict check_homlie_algebra(const HomLieAlgebra& L) {
  const std::size_t n = L.dim;
  const Field f = L.field();
  if (L.sc.size() != n || L.alpha.rows() != n || L.alpha.cols() != n)
    throw DimensionMismatch("hom-lie algebra shape");
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (L.sc[k].at(i, j) != -L.sc[k].at(j, i)) {
          Vector res(f, n);
          res[k] = L.sc[k].at(i, j) + L.sc[k].at(j, i);
          Verdict v = Verdict::failed(
              "homlie_algebra",
              {Vector::unit(f, n, i), Vector::unit(f, n, j)}, res.str(),
              "anti-symmetry breaks at c[" + std::to_string(k) + "][" +
                  std::to_string(i) + "][" + std::to_string(j) + "]");
          return v;
        }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t l = j; l < n; ++l) {
        Vector ei = Vector::unit(f, n, i);
        Vector ej = Vector::unit(f, n, j);
        Vector el = Vector::unit(f, n, l);
        Vector sum = lie_bracket(L, L.alpha * ei, lie_bracket(L, ej, el)) +
                     lie_bracket(L, L.alpha * ej, lie_bracket(L, el, ei)) +
                     lie_bracket(L, L.alpha * el, lie_bracket(L, ei, ej));
        if (!sum.is_zero())
          return basis_triple_fail("homlie_algebra", f, n, i, j, l, sum);
      }
  return Verdict::passed("homlie_algebra");
}

Verdict check_homassoc_algebra(const HomAssocAlgebra& A) {
  const std::size_t n = A.dim;
  const Field f = A.field();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        Vector ei = Vector::unit(f, n, i);
        Vector ej = Vector::unit(f, n, j);
        Vector el = Vector::unit(f, n, l);
        Vector lhs =
            algebra_product(A, A.alpha * ei, algebra_product(A, ej, el));
        Vector rhs =
            algebra_product(A, algebra_product(A, ei, ej), A.alpha * el);
        if (lhs != rhs)
          return basis_triple_fail("homassoc_algebra", f, n, i, j, l,
                                   lhs - rhs);
      }
  return Verdict::passed("homassoc_algebra");
}

std::vector<Verdict> check_all(const HomLieAffgebra& s) {
  std::vector<Verdict> out;
  out.push_back(check_affine_antisymmetry(s));
  out.push_back(check_affine_hom_jacobi(s));
  out.push_back(check_multiplicativity(s.bracket, s.alpha));
  return out;
}

std::vector<Verdict> check_all(const HomAssocAffgebra& s) {
  std::vector<Verdict> out;
  out.push_back(check_hom_associativity(s));
  out.push_back(check_multiplicativity(s.mul, s.alpha));
  return out;
}

std::vector<Verdict> check_all(const HomPreLieAffgebra& s) {
  std::vector<Verdict> out;
  out.push_back(check_hom_prelie(s));
  out.push_back(check_multiplicativity(s.prod, s.alpha));
  return out;
}

std::vector<Verdict> check_all(const HomLieAlgebra& L) {
  return {check_homlie_algebra(L)};
}

bool all_pass(const std::vector<Verdict>& vs) {
  for (const Verdict& v : vs)
    if (!v.pass) return false;
  return true;
}

} // namespace affalg
