#ifndef AFFALG_TESTS_ORACLES_HPP
#define AFFALG_TESTS_ORACLES_HPP

#include "affalg/derivations.hpp"

// Independent brute-force assembly of the derivation-space linear systems.
// Where the library contracts structure constants into coefficient rows,
// this oracle probes each unknown with a unit matrix, evaluates the defining
// equations directly with its own bracket arithmetic, and stacks the
// residuals as a column of the constraint matrix. Test-only code.

namespace affalg::oracle {

enum class Space { Delta, Qc, Centroid, AlphaDer, Pairs };

inline Vector bracket_of(const HomLieAlgebra& L, const Vector& a,
                         const Vector& b) {
  Vector out(L.field(), L.dim);
  for (std::size_t k = 0; k < L.dim; ++k) {
    Scalar acc = Scalar::zero(L.field());
    for (std::size_t i = 0; i < L.dim; ++i)
      for (std::size_t j = 0; j < L.dim; ++j)
        acc += L.sc[k].at(i, j) * a[i] * b[j];
    out[k] = acc;
  }
  return out;
}

inline std::size_t unknown_count(const HomLieAlgebra& L, Space which) {
  const std::size_t nn = L.dim * L.dim;
  switch (which) {
    case Space::Delta: return 3 * nn;
    case Space::Pairs: return 2 * nn;
    default: return nn;
  }
}

/// Residuals of the defining equations for a concrete instance, stacked in a
/// fixed order. Linear in the instance, so probing units recovers the system.
inline std::vector<Scalar> residuals(const HomLieAlgebra& L, Space which,
                                     const Vector& flat) {
  const std::size_t n = L.dim;
  const Field f = L.field();
  std::vector<Scalar> out;
  auto push_vec = [&out](const Vector& v) {
    for (std::size_t i = 0; i < v.dim(); ++i) out.push_back(v[i]);
  };
  auto push_mat = [&out](const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.at(i, j));
  };
  auto commutator = [&L](const Matrix& m) { return m * L.alpha - L.alpha * m; };

  switch (which) {
    case Space::Delta: {
      Matrix lam = unflatten(f, n, n, flat, 0);
      Matrix lamP = unflatten(f, n, n, flat, n * n);
      Matrix lamPP = unflatten(f, n, n, flat, 2 * n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Vector ei = Vector::unit(f, n, i), ej = Vector::unit(f, n, j);
          push_vec(bracket_of(L, lam * ei, L.alpha * ej) +
                   bracket_of(L, L.alpha * ei, lamP * ej) -
                   lamPP * bracket_of(L, ei, ej));
        }
      push_mat(commutator(lam));
      push_mat(commutator(lamP));
      push_mat(commutator(lamPP));
      break;
    }
    case Space::Qc: {
      Matrix kap = unflatten(f, n, n, flat, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Vector ei = Vector::unit(f, n, i), ej = Vector::unit(f, n, j);
          push_vec(bracket_of(L, kap * ei, L.alpha * ej) -
                   bracket_of(L, L.alpha * ei, kap * ej));
        }
      push_mat(commutator(kap));
      break;
    }
    case Space::Centroid: {
      Matrix kap = unflatten(f, n, n, flat, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Vector ei = Vector::unit(f, n, i), ej = Vector::unit(f, n, j);
          Vector through = kap * bracket_of(L, ei, ej);
          push_vec(through - bracket_of(L, kap * ei, L.alpha * ej));
          push_vec(through - bracket_of(L, L.alpha * ei, kap * ej));
        }
      push_mat(commutator(kap));
      break;
    }
    case Space::AlphaDer: {
      Matrix lam = unflatten(f, n, n, flat, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Vector ei = Vector::unit(f, n, i), ej = Vector::unit(f, n, j);
          push_vec(lam * bracket_of(L, ei, ej) -
                   bracket_of(L, lam * ei, L.alpha * ej) -
                   bracket_of(L, L.alpha * ei, lam * ej));
        }
      push_mat(commutator(lam));
      break;
    }
    case Space::Pairs: {
      Matrix kap = unflatten(f, n, n, flat, 0);
      Matrix lam = unflatten(f, n, n, flat, n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Vector ei = Vector::unit(f, n, i), ej = Vector::unit(f, n, j);
          push_vec(lam * bracket_of(L, ei, ej) -
                   bracket_of(L, lam * ei, L.alpha * ej) +
                   bracket_of(L, L.alpha * ei, kap * ej) -
                   bracket_of(L, L.alpha * ei, lam * ej));
        }
      push_mat(commutator(kap));
      push_mat(commutator(lam));
      break;
    }
  }
  return out;
}

inline Matrix constraint_matrix(const HomLieAlgebra& L, Space which) {
  const Field f = L.field();
  const std::size_t cols = unknown_count(L, which);
  const std::size_t rows = residuals(L, which, Vector(f, cols)).size();
  Matrix m(f, rows, cols);
  for (std::size_t u = 0; u < cols; ++u) {
    Vector probe(f, cols);
    probe[u] = Scalar::one(f);
    std::vector<Scalar> col = residuals(L, which, probe);
    for (std::size_t r = 0; r < rows; ++r) m.at(r, u) = col[r];
  }
  return m;
}

inline std::size_t space_dim(const HomLieAlgebra& L, Space which) {
  return kernel(constraint_matrix(L, which)).size();
}

/// Membership of a concrete instance, decided by the oracle's own residuals.
inline bool member(const HomLieAlgebra& L, Space which, const Vector& flat) {
  for (const Scalar& s : residuals(L, which, flat))
    if (!s.is_zero()) return false;
  return true;
}

} // namespace affalg::oracle

#endif
