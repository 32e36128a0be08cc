#ifndef AFFALG_TESTS_HELPERS_HPP
#define AFFALG_TESTS_HELPERS_HPP

#include <random>

#include "affalg/fixtures.hpp"

namespace affalg::testing {

inline std::mt19937_64 make_rng(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

inline Scalar random_scalar(std::mt19937_64& rng, Field f, long lo = -4,
                            long hi = 4) {
  std::uniform_int_distribution<long> num(lo, hi);
  if (f.is_prime()) return Scalar(f, num(rng));
  std::uniform_int_distribution<long> den(1, 3);
  return Scalar(f, num(rng), den(rng));
}

inline Vector random_vector(std::mt19937_64& rng, Field f, std::size_t dim) {
  Vector v(f, dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = random_scalar(rng, f);
  return v;
}

inline Matrix random_matrix(std::mt19937_64& rng, Field f, std::size_t rows,
                            std::size_t cols) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_scalar(rng, f);
  return m;
}

/// Product of unit triangular matrices and a permutation: always invertible.
inline Matrix random_invertible(std::mt19937_64& rng, Field f,
                                std::size_t n) {
  Matrix lower = Matrix::identity(f, n);
  Matrix upper = Matrix::identity(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j < i) lower.at(i, j) = random_scalar(rng, f);
      if (j > i) upper.at(i, j) = random_scalar(rng, f);
    }
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix p(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    p.at(i, perm[i]) = Scalar::one(f);
  return lower * upper * p;
}

inline MultiPoly random_poly(std::mt19937_64& rng, Field f, std::size_t nvars,
                             std::size_t terms, std::uint32_t max_exp = 2) {
  MultiPoly p(f, nvars);
  std::uniform_int_distribution<std::uint32_t> e(0, max_exp);
  for (std::size_t t = 0; t < terms; ++t) {
    Exponents exp(nvars);
    for (std::size_t i = 0; i < nvars; ++i) exp[i] = e(rng);
    p.add_term(exp, random_scalar(rng, f));
  }
  return p;
}

struct NamedFixture {
  std::string algebra;
  std::string alpha;
};

/// The standard fixture grid for property suites.
inline std::vector<NamedFixture> fixture_grid() {
  return {
      {"abelian1", "id"},     {"abelian2", "id"},  {"abelian3", "id"},
      {"abelian2", "nonid"},  {"abelian3", "nonid"},
      {"aff1", "id"},         {"aff1", "nonid"},
      {"heisenberg3", "id"},  {"heisenberg3", "nonid"},
      {"sl2", "id"},          {"sl2", "nonid"},
  };
}

inline HomLieAlgebra fixture(const NamedFixture& nf,
                             Field f = Field::rationals()) {
  return classical_homlie(nf.algebra, fixture_alpha(nf.algebra, nf.alpha, f));
}

} // namespace affalg::testing

#endif
