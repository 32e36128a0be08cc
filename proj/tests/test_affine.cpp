#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace affalg;
using namespace affalg::testing;

namespace {
const Field Q = Field::rationals();

Vector vec(std::initializer_list<long> xs) {
  std::vector<Scalar> entries;
  for (long x : xs) entries.emplace_back(Q, x);
  return Vector(Q, std::move(entries));
}
} // namespace

TEST_CASE("heap operation") {
  CHECK(heap_op(vec({1, 0}), vec({0, 0}), vec({0, 1})) == vec({1, 1}));

  auto args = symbolic_args(Q, 2, 3);
  const PolyVec &a = args[0], &b = args[1], &c = args[2];
  CHECK(all_zero(heap_op(a, a, b) - b)); // Mal'tcev
  CHECK(all_zero(heap_op(b, a, a) - b));
  CHECK(all_zero(heap_op(a, b, c) - heap_op(c, b, a))); // abelian
}

TEST_CASE("heap associativity holds symbolically") {
  // Five symbolic points need five blocks; two rings of 2+3 blocks glued by
  // hand would be awkward, so work with one block of 10 variables directly.
  const std::size_t n = 2;
  std::vector<PolyVec> pts;
  for (std::size_t k = 0; k < 5; ++k) {
    PolyVec p;
    for (std::size_t i = 0; i < n; ++i)
      p.push_back(MultiPoly::variable(Q, 5 * n, k * n + i));
    pts.push_back(std::move(p));
  }
  PolyVec lhs = heap_op(heap_op(pts[0], pts[1], pts[2]), pts[3], pts[4]);
  PolyVec rhs = heap_op(pts[0], pts[1], heap_op(pts[2], pts[3], pts[4]));
  CHECK(all_zero(lhs - rhs));
}

TEST_CASE("scalar action") {
  auto args = symbolic_args(Q, 2, 3);
  const PolyVec &a = args[0], &b = args[1], &c = args[2];
  CHECK(all_zero(action(Scalar(Q, 0), a, b) - a));
  CHECK(all_zero(action(Scalar(Q, 1), a, b) - b));
  CHECK(action(Scalar(Q, 2), vec({1}), vec({3})) == vec({5}));

  // The affine-space axioms, with the scalar ranging over a probe set that
  // exceeds the degree (<= 2) in the scalar: agreement on the probes plus
  // heap-linearity in the scalar pins the identity for every scalar.
  const std::vector<Scalar> probes = {Scalar(Q, 0), Scalar(Q, 1), Scalar(Q, 2),
                                      Scalar(Q, -1), Scalar(Q, 1, 2)};
  for (const Scalar& xi : probes) {
    // base change: xi |>_a b = <xi |>_c b, xi |>_c a, a>
    CHECK(all_zero(action(xi, a, b) -
                   heap_op(action(xi, c, b), action(xi, c, a), a)));
    for (const Scalar& zeta : probes) {
      // compatibility: (xi zeta) |>_a b = xi |>_a (zeta |>_a b)
      CHECK(all_zero(action(xi * zeta, a, b) -
                     action(xi, a, action(zeta, a, b))));
      // heap homomorphism in the scalar slot:
      // (xi - zeta + eta) |>_a b with eta = 2 fixed
      Scalar eta(Q, 2);
      CHECK(all_zero(action(xi - zeta + eta, a, b) -
                     heap_op(action(xi, a, b), action(zeta, a, b),
                             action(eta, a, b))));
    }
    // heap homomorphism in the point slot
    CHECK(all_zero(action(xi, a, heap_op(a, b, c)) -
                   heap_op(action(xi, a, a), action(xi, a, b),
                           action(xi, a, c))));
  }
}

TEST_CASE("retracts") {
  CHECK(retract_add(vec({0}), vec({3}), vec({4})) == vec({7}));
  CHECK(retract_add(vec({1}), vec({3}), vec({4})) == vec({6}));
  Vector o = vec({1, 1});
  Vector a = vec({3, 0});
  CHECK(retract_add(o, a, o) == a);                  // neutral
  CHECK(retract_inverse(o, a) == vec({-1, 2}));
  CHECK(retract_add(o, a, retract_inverse(o, a)) == o);
  CHECK(retract_inverse(vec({0}), vec({3})) == vec({-3}));
  CHECK(retract_inverse(o, o) == o);
}

TEST_CASE("translation isomorphism") {
  AffineMap tau = translation_iso(vec({0}), vec({1}));
  CHECK(tau(vec({5})) == vec({6}));
  CHECK(translation_iso(vec({2, 3}), vec({2, 3})).is_identity());
  AffineMap back = translation_iso(vec({1}), vec({0}));
  CHECK(back.compose(tau).is_identity());
  CHECK(tau.compose(back).is_identity());
}

TEST_CASE("affine evaluation") {
  CHECK(AffineMap::identity(Q, 2)(vec({2, 3})) == vec({2, 3}));
  AffineMap f(Matrix::from_rows(Q, {{2}}), vec({1}));
  CHECK(f(vec({3})) == vec({7}));
  CHECK(AffineMap::constant(vec({5}))(vec({42})) == vec({5}));
}

TEST_CASE("affine interpolation") {
  std::vector<std::pair<Vector, Vector>> samples = {
      {vec({0}), vec({1})}, {vec({1}), vec({3})}};
  AffineMap f = interpolate_affine(samples, 1);
  CHECK(f.M == Matrix::from_rows(Q, {{2}}));
  CHECK(f.t == vec({1}));

  std::vector<std::pair<Vector, Vector>> ident = {
      {vec({0, 0}), vec({0, 0})},
      {vec({1, 0}), vec({1, 0})},
      {vec({0, 1}), vec({0, 1})}};
  CHECK(interpolate_affine(ident, 2).is_identity());

  std::vector<std::pair<Vector, Vector>> bad = {
      {vec({0}), vec({0})}, {vec({1}), vec({1})}, {vec({2}), vec({3})}};
  CHECK_THROWS_AS(interpolate_affine(bad, 1), NotAffine);

  std::vector<std::pair<Vector, Vector>> missing = {{vec({1}), vec({1})}};
  CHECK_THROWS_AS(interpolate_affine(missing, 1), InsufficientSamples);
}

TEST_CASE("bi-affine evaluation") {
  BiAffineMap m({Matrix::from_rows(Q, {{1}})}, Matrix::from_rows(Q, {{2}}),
                Matrix::from_rows(Q, {{3}}), vec({1}));
  CHECK(m(vec({1}), vec({1})) == vec({7}));
  CHECK(BiAffineMap::zero(Q, 2)(vec({5, 5}), vec({1, 2})) == vec({0, 0}));
  BiAffineMap pure({Matrix::from_rows(Q, {{1}})}, Matrix(Q, 1, 1),
                   Matrix(Q, 1, 1), Vector(Q, 1));
  CHECK(pure(vec({2}), vec({3})) == vec({6}));
}

TEST_CASE("bi-affine interpolation") {
  BiAffineEvaluator eval = [](const Vector& a, const Vector& b) {
    Vector out(Q, 1);
    out[0] = a[0] * b[0] + Scalar(Q, 2) * a[0] + Scalar(Q, 3) * b[0] +
             Scalar(Q, 1);
    return out;
  };
  BiAffineMap m = interpolate_biaffine(eval, Q, 1);
  CHECK(m.c == vec({1}));
  CHECK(m.L1 == Matrix::from_rows(Q, {{2}}));
  CHECK(m.L2 == Matrix::from_rows(Q, {{3}}));
  CHECK(m.B[0] == Matrix::from_rows(Q, {{1}}));

  BiAffineEvaluator constant = [](const Vector&, const Vector&) {
    return Vector(Q, {Scalar(Q, 5)});
  };
  BiAffineMap mc = interpolate_biaffine(constant, Q, 1);
  CHECK(mc.B[0].is_zero());
  CHECK(mc.L1.is_zero());
  CHECK(mc.L2.is_zero());
  CHECK(mc.c == vec({5}));

  BiAffineEvaluator second = [](const Vector&, const Vector& b) { return b; };
  BiAffineMap ms = interpolate_biaffine(second, Q, 2);
  CHECK(ms.L2.is_identity());
  CHECK(ms.L1.is_zero());
  CHECK(ms.c.is_zero());
}

TEST_CASE("bi-affine validation") {
  BiAffineEvaluator eval = [](const Vector& a, const Vector& b) {
    Vector out(Q, 1);
    out[0] = a[0] * b[0] - a[0] + b[0] * Scalar(Q, 5);
    return out;
  };
  BiAffineMap m = interpolate_biaffine(eval, Q, 1);
  CHECK(validate_biaffine(m, eval, 30).ok);

  BiAffineEvaluator square = [](const Vector& a, const Vector&) {
    Vector out(Q, 1);
    out[0] = a[0] * a[0];
    return out;
  };
  BiAffineMap bad = interpolate_biaffine(square, Q, 1);
  BiAffineValidation v = validate_biaffine(bad, square, 30);
  CHECK(!v.ok);
  REQUIRE(v.witness.has_value());
  // The probe grid sees a in {0,1} only; the first deterministic probe a=2
  // exposes the quadratic.
  CHECK(v.witness->first == vec({2}));
  CHECK(bad(v.witness->first, v.witness->second) !=
        square(v.witness->first, v.witness->second));
}

TEST_CASE("interpolation reproduces a random bi-affine map everywhere") {
  auto rng = make_rng(17);
  for (int t = 0; t < 5; ++t) {
    const std::size_t n = 1 + t % 3;
    std::vector<Matrix> B;
    for (std::size_t k = 0; k < n; ++k)
      B.push_back(random_matrix(rng, Q, n, n));
    BiAffineMap m(B, random_matrix(rng, Q, n, n), random_matrix(rng, Q, n, n),
                  random_vector(rng, Q, n));
    BiAffineEvaluator eval = [&m](const Vector& a, const Vector& b) {
      return m(a, b);
    };
    BiAffineMap back = interpolate_biaffine(eval, Q, n);
    CHECK(back == m);
    for (int s = 0; s < 100; ++s) {
      Vector a = random_vector(rng, Q, n), b = random_vector(rng, Q, n);
      CHECK(back(a, b) == m(a, b));
    }
  }
}

TEST_CASE("symbolic argument blocks") {
  auto args = symbolic_args(Q, 2, 2);
  REQUIRE(args.size() == 2);
  CHECK(args[0][0] == MultiPoly::variable(Q, 4, 0));
  CHECK(args[1][1] == MultiPoly::variable(Q, 4, 3));

  auto three = symbolic_args(Q, 1, 3);
  CHECK(three[2][0] == MultiPoly::variable(Q, 3, 2));

  CHECK(symbolic_args(Q, 0, 2)[0].empty());
  CHECK_THROWS_AS(symbolic_args(Q, 2, 4), ArityMismatch);
}

TEST_CASE("composition closed forms agree with pointwise composition") {
  auto rng = make_rng(23);
  const std::size_t n = 2;
  for (int t = 0; t < 10; ++t) {
    std::vector<Matrix> B;
    for (std::size_t k = 0; k < n; ++k)
      B.push_back(random_matrix(rng, Q, n, n));
    BiAffineMap mu(B, random_matrix(rng, Q, n, n), random_matrix(rng, Q, n, n),
                   random_vector(rng, Q, n));
    AffineMap f(random_matrix(rng, Q, n, n), random_vector(rng, Q, n));
    AffineMap g(random_matrix(rng, Q, n, n), random_vector(rng, Q, n));
    BiAffineMap post = postcompose(f, mu);
    BiAffineMap pre = precompose(mu, f, g);
    for (int s = 0; s < 20; ++s) {
      Vector a = random_vector(rng, Q, n), b = random_vector(rng, Q, n);
      CHECK(post(a, b) == f(mu(a, b)));
      CHECK(pre(a, b) == mu(f(a), g(b)));
    }
    Matrix inv_m = random_invertible(rng, Q, n);
    AffineMap h(inv_m, random_vector(rng, Q, n));
    AffineMap h_inv = *h.inverted();
    BiAffineMap conj = conjugate(mu, h, h_inv);
    for (int s = 0; s < 20; ++s) {
      Vector a = random_vector(rng, Q, n), b = random_vector(rng, Q, n);
      CHECK(conj(a, b) == h(mu(h_inv(a), h_inv(b))));
    }
  }
}

TEST_CASE("dimension zero is admitted") {
  Vector empty(Q, 0);
  CHECK(heap_op(empty, empty, empty) == empty);
  AffineMap id0 = AffineMap::identity(Q, 0);
  CHECK(id0(empty) == empty);
  BiAffineMap z0 = BiAffineMap::zero(Q, 0);
  CHECK(z0(empty, empty) == empty);
}
