#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "affalg/constructions.hpp"
#include "helpers.hpp"

using namespace affalg;
using namespace affalg::testing;

namespace {
const Field Q = Field::rationals();

AffineMap scale1(long m, long t = 0) {
  return AffineMap(Matrix::from_rows(Q, {{m}}),
                   Vector(Q, {Scalar(Q, t)}));
}

/// dim-1 bracket {a,b} = B ab + l1 a + l2 b + c.
HomLieAffgebra bracket1(long B, long l1, long l2, long c,
                        AffineMap alpha = AffineMap::identity(Field::rationals(), 1)) {
  BiAffineMap br({Matrix::from_rows(Q, {{B}})}, Matrix::from_rows(Q, {{l1}}),
                 Matrix::from_rows(Q, {{l2}}), Vector(Q, {Scalar(Q, c)}));
  return HomLieAffgebra{1, std::move(br), std::move(alpha)};
}

HomAssocAffgebra product1(long B, long l1, long l2, long c, AffineMap alpha) {
  BiAffineMap mu({Matrix::from_rows(Q, {{B}})}, Matrix::from_rows(Q, {{l1}}),
                 Matrix::from_rows(Q, {{l2}}), Vector(Q, {Scalar(Q, c)}));
  return HomAssocAffgebra{1, std::move(mu), std::move(alpha)};
}
} // namespace

TEST_CASE("affine anti-symmetry") {
  // {a,b} = 2a: constant-in-b bracket through phi(a) = 2a
  CHECK(check_affine_antisymmetry(bracket1(0, 2, 0, 0)).pass);
  // {a,b} = b + 5
  CHECK(check_affine_antisymmetry(bracket1(0, 0, 1, 5)).pass);
  // Any bracket without bilinear part passes: anti-symmetry only constrains
  // the bilinear slice. {a,b} = a + 2b is such a case.
  CHECK(check_affine_antisymmetry(bracket1(0, 1, 2, 0)).pass);
  // {a,b} = ab has symmetric bilinear part and fails, witness verified.
  Verdict v = check_affine_antisymmetry(bracket1(1, 0, 0, 0));
  CHECK(!v.pass);
  REQUIRE(v.witness.size() == 2);
  const HomLieAffgebra s = bracket1(1, 0, 0, 0);
  const Vector &a = v.witness[0], &b = v.witness[1];
  Vector residual = s.bracket(a, b) - s.bracket(a, a) + s.bracket(b, a) -
                    s.bracket(b, b);
  CHECK(!residual.is_zero());
}

TEST_CASE("affine Hom-Jacobi") {
  CHECK(check_affine_hom_jacobi(bracket1(0, 0, 1, 0)).pass); // {a,b}=b, id
  // {a,b} = 2a with alpha(a) = 3a
  CHECK(check_affine_hom_jacobi(bracket1(0, 2, 0, 0, scale1(3))).pass);
  // {a,b} = ab fails; the spec-level expansion is 3abc - a^3 - b^3 - c^3.
  Verdict v = check_affine_hom_jacobi(bracket1(1, 0, 0, 0));
  CHECK(!v.pass);
  Vector w(Q, {Scalar(Q, 1)});
  Vector w2(Q, {Scalar(Q, 1)});
  Vector w3(Q, {Scalar(Q, 2)});
  // 3*1*1*2 - 1 - 1 - 8 = -4 at (1,1,2)
  const HomLieAffgebra s = bracket1(1, 0, 0, 0);
  auto br = [&s](const Vector& x, const Vector& y) { return s.bracket(x, y); };
  Vector sum = br(w, br(w2, w3)) - br(w, br(w, w)) + br(w2, br(w3, w)) -
               br(w2, br(w2, w2)) + br(w3, br(w, w2)) - br(w3, br(w3, w3));
  CHECK(sum == Vector(Q, {Scalar(Q, -4)}));
  // And the checker's own witness evaluates away from zero.
  REQUIRE(v.witness.size() == 3);
  Vector sw = br(v.witness[0], br(v.witness[1], v.witness[2])) -
              br(v.witness[0], br(v.witness[0], v.witness[0])) +
              br(v.witness[1], br(v.witness[2], v.witness[0])) -
              br(v.witness[1], br(v.witness[1], v.witness[1])) +
              br(v.witness[2], br(v.witness[0], v.witness[1])) -
              br(v.witness[2], br(v.witness[2], v.witness[2]));
  CHECK(!sw.is_zero());
}

TEST_CASE("affine Jacobi gate") {
  CHECK_THROWS_AS(check_affine_jacobi(bracket1(0, 0, 1, 0, scale1(2))),
                  AlphaNotIdentity);
  CHECK(check_affine_jacobi(bracket1(0, 0, 1, 0)).pass);
  CHECK(!check_affine_jacobi(bracket1(1, 0, 0, 0)).pass);
}

TEST_CASE("Hom-associativity") {
  CHECK(check_hom_associativity(product1(1, 0, 0, 0,
                                         AffineMap::identity(Q, 1))).pass);
  // mu = ab with alpha(a) = 2a: (2a)(bc) = (ab)(2c), still passes.
  CHECK(check_hom_associativity(product1(1, 0, 0, 0, scale1(2))).pass);
  // alpha(a) = a + 1 breaks it: (a+1)(bc) vs (ab)(c+1).
  Verdict v = check_hom_associativity(product1(1, 0, 0, 0, scale1(1, 1)));
  CHECK(!v.pass);
  Vector p0(Q, {Scalar(Q, 0)}), p1(Q, {Scalar(Q, 1)});
  const HomAssocAffgebra s = product1(1, 0, 0, 0, scale1(1, 1));
  CHECK(s.mul(s.alpha(p0), s.mul(p1, p1)) != s.mul(s.mul(p0, p1), s.alpha(p1)));
}

TEST_CASE("Hom-pre-Lie laws") {
  BiAffineMap ab({Matrix::from_rows(Q, {{1}})}, Matrix(Q, 1, 1),
                 Matrix(Q, 1, 1), Vector(Q, 1));
  CHECK(check_hom_prelie(HomPreLieAffgebra{1, ab, AffineMap::identity(Q, 1),
                                           PreLieSide::Left}).pass);

  BiAffineMap second({Matrix(Q, 1, 1)}, Matrix(Q, 1, 1),
                     Matrix::identity(Q, 1), Vector(Q, 1));
  CHECK(check_hom_prelie(HomPreLieAffgebra{1, second,
                                           AffineMap::identity(Q, 1),
                                           PreLieSide::Right}).pass);
  CHECK(check_hom_prelie(HomPreLieAffgebra{1, second,
                                           AffineMap::identity(Q, 1),
                                           PreLieSide::Left}).pass);

  // a.b = a + ab is not left pre-Lie.
  BiAffineMap mixed({Matrix::from_rows(Q, {{1}})}, Matrix::identity(Q, 1),
                    Matrix(Q, 1, 1), Vector(Q, 1));
  Verdict v = check_hom_prelie(HomPreLieAffgebra{1, mixed,
                                                 AffineMap::identity(Q, 1),
                                                 PreLieSide::Left});
  CHECK(!v.pass);
  CHECK(!v.witness.empty());
}

TEST_CASE("multiplicativity") {
  BiAffineMap ab({Matrix::from_rows(Q, {{1}})}, Matrix(Q, 1, 1),
                 Matrix(Q, 1, 1), Vector(Q, 1));
  CHECK(check_multiplicativity(ab, AffineMap::identity(Q, 1)).pass);
  CHECK(!check_multiplicativity(ab, scale1(2)).pass); // 2ab vs 4ab
  CHECK(check_multiplicativity(ab, scale1(1)).pass);
}

TEST_CASE("linear Hom-Lie algebra checker") {
  CHECK(check_homlie_algebra(classical_homlie("abelian2", Q)).pass);
  HomLieAlgebra sl2 = classical_homlie("sl2", Q);
  CHECK(check_homlie_algebra(sl2).pass);

  // The swap e <-> f fixing h happens to satisfy the twisted Jacobi
  // identity: every cyclic term pairs a basis vector with a bracket that
  // kills it.
  Matrix swap_ef(Q, 3, 3);
  swap_ef.at(0, 1) = Scalar(Q, 1);
  swap_ef.at(1, 0) = Scalar(Q, 1);
  swap_ef.at(2, 2) = Scalar(Q, 1);
  HomLieAlgebra twisted = sl2;
  twisted.alpha = swap_ef;
  CHECK(check_homlie_algebra(twisted).pass);

  // A permutation sending h into the e/f plane does not.
  Matrix perm(Q, 3, 3);
  perm.at(0, 2) = Scalar(Q, 1); // alpha(h) = e ... columns map basis
  perm.at(1, 1) = Scalar(Q, 1);
  perm.at(2, 0) = Scalar(Q, 1);
  HomLieAlgebra broken = sl2;
  broken.alpha = perm;
  Verdict v = check_homlie_algebra(broken);
  CHECK(!v.pass);
  CHECK(v.witness.size() == 3);

  // Anti-symmetry violations are caught before the Jacobi loop.
  HomLieAlgebra asym = classical_homlie("abelian2", Q);
  asym.sc[0].at(0, 1) = Scalar(Q, 1);
  CHECK(!check_homlie_algebra(asym).pass);
}

TEST_CASE("verdicts survive push-forward by invertible affine maps") {
  auto rng = make_rng(31);
  std::vector<HomLieAffgebra> cases = {
      bracket1(0, 0, 1, 5),  // passes
      bracket1(1, 0, 0, 0),  // fails
      bracket1(0, 2, 0, 0, scale1(3)),
  };
  for (const HomLieAffgebra& s : cases) {
    bool anti = check_affine_antisymmetry(s).pass;
    bool jac = check_affine_hom_jacobi(s).pass;
    for (int t = 0; t < 5; ++t) {
      AffineMap g(random_invertible(rng, Q, 1), random_vector(rng, Q, 1));
      AffineMap g_inv = *g.inverted();
      HomLieAffgebra moved{1, conjugate(s.bracket, g, g_inv),
                           g.compose(s.alpha).compose(g_inv)};
      CHECK(check_affine_antisymmetry(moved).pass == anti);
      CHECK(check_affine_hom_jacobi(moved).pass == jac);
    }
  }
}

TEST_CASE("prime-field verdicts flag function-vanishing residuals") {
  const Field f3 = Field::prime(3);
  MultiPoly x = MultiPoly::variable(f3, 1, 0);
  PolyVec residual = {x * x * x - x};
  Verdict v = verdict_from_residual("demo", residual, 1, 1);
  CHECK(!v.pass);
  CHECK(v.witness.empty());
  CHECK(v.note == "symbolically nonzero, no pointwise witness guaranteed");

  PolyVec witnessed = {x * x - x};
  Verdict w = verdict_from_residual("demo", witnessed, 1, 1);
  CHECK(!w.pass);
  REQUIRE(w.witness.size() == 1);
  CHECK(w.witness[0][0] == Scalar(f3, 2));
}

TEST_CASE("checks on dimension zero pass trivially") {
  HomLieAffgebra s{0, BiAffineMap::zero(Q, 0), AffineMap::identity(Q, 0)};
  CHECK(check_affine_antisymmetry(s).pass);
  CHECK(check_affine_hom_jacobi(s).pass);
}

TEST_CASE("verdict lines are stable") {
  CHECK(Verdict::passed("demo").line() == "demo: PASS");
  Verdict f = Verdict::failed("demo", {Vector(Q, {Scalar(Q, 1)})}, "x0");
  CHECK(f.line() == "demo: FAIL [witness=(1)] [residual=x0]");
}
