#include "affalg/affine.hpp"

#include <sstream>

namespace affalg {

AffineMap::AffineMap(Matrix m, Vector tr) : M(std::move(m)), t(std::move(tr)) {
  if (M.rows() != t.dim()) throw DimensionMismatch("affine map shape");
  if (!(M.field() == t.field())) throw FieldMismatch("affine map");
}

AffineMap AffineMap::identity(Field f, std::size_t n) {
  return AffineMap(Matrix::identity(f, n), Vector(f, n));
}

AffineMap AffineMap::constant(const Vector& value) {
  return AffineMap(Matrix(value.field(), value.dim(), value.dim()), value);
}

AffineMap AffineMap::constant(const Vector& value, std::size_t in_dim) {
  return AffineMap(Matrix(value.field(), value.dim(), in_dim), value);
}

Vector AffineMap::operator()(const Vector& a) const { return M * a + t; }

PolyVec AffineMap::operator()(const PolyVec& a) const {
  if (a.size() != in_dim()) throw DimensionMismatch("affine map symbolic eval");
  const std::size_t nv = a.empty() ? 0 : a[0].nvars();
  PolyVec out;
  out.reserve(dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    MultiPoly acc = MultiPoly::constant(field(), nv, t[k]);
    for (std::size_t j = 0; j < in_dim(); ++j)
      acc += a[j] * M.at(k, j);
    out.push_back(std::move(acc));
  }
  return out;
}

AffineMap AffineMap::compose(const AffineMap& inner) const {
  return AffineMap(M * inner.M, M * inner.t + t);
}

std::optional<AffineMap> AffineMap::inverted() const {
  std::optional<Matrix> mi = inverse(M);
  if (!mi) return std::nullopt;
  return AffineMap(*mi, -(*mi * t));
}

bool AffineMap::is_identity() const { return M.is_identity() && t.is_zero(); }

BiAffineMap::BiAffineMap(std::vector<Matrix> b, Matrix l1, Matrix l2,
                         Vector cc)
    : B(std::move(b)), L1(std::move(l1)), L2(std::move(l2)), c(std::move(cc)) {
  const std::size_t n = c.dim();
  if (B.size() != n || L1.rows() != n || L1.cols() != n || L2.rows() != n ||
      L2.cols() != n)
    throw DimensionMismatch("bi-affine map shape");
  for (const Matrix& s : B)
    if (s.rows() != n || s.cols() != n)
      throw DimensionMismatch("bi-affine bilinear slice shape");
}

BiAffineMap BiAffineMap::zero(Field f, std::size_t n) {
  return BiAffineMap(std::vector<Matrix>(n, Matrix(f, n, n)), Matrix(f, n, n),
                     Matrix(f, n, n), Vector(f, n));
}

Vector BiAffineMap::operator()(const Vector& a, const Vector& b) const {
  const std::size_t n = dim();
  if (a.dim() != n || b.dim() != n)
    throw DimensionMismatch("bi-affine eval");
  Vector out = L1 * a + L2 * b + c;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        out[k] += B[k].at(i, j) * a[i] * b[j];
    }
  return out;
}

PolyVec BiAffineMap::operator()(const PolyVec& a, const PolyVec& b) const {
  const std::size_t n = dim();
  if (a.size() != n || b.size() != n)
    throw DimensionMismatch("bi-affine symbolic eval");
  const std::size_t nv = n ? a[0].nvars() : 0;
  PolyVec out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    MultiPoly acc = MultiPoly::constant(field(), nv, c[k]);
    for (std::size_t j = 0; j < n; ++j) {
      acc += a[j] * L1.at(k, j);
      acc += b[j] * L2.at(k, j);
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& bij = B[k].at(i, j);
        if (bij.is_zero()) continue;
        acc += a[i] * b[j] * bij;
      }
    out.push_back(std::move(acc));
  }
  return out;
}

Vector heap_op(const Vector& a, const Vector& b, const Vector& c) {
  return a - b + c;
}

PolyVec heap_op(const PolyVec& a, const PolyVec& b, const PolyVec& c) {
  return a - b + c;
}

Vector action(const Scalar& xi, const Vector& a, const Vector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("action");
  return b * xi + a * (Scalar::one(xi.field()) - xi);
}

PolyVec action(const Scalar& xi, const PolyVec& a, const PolyVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("action");
  PolyVec out;
  out.reserve(a.size());
  const Scalar one_minus = Scalar::one(xi.field()) - xi;
  for (std::size_t i = 0; i < a.size(); ++i)
    out.push_back(b[i] * xi + a[i] * one_minus);
  return out;
}

Vector retract_add(const Vector& o, const Vector& a, const Vector& b) {
  return a - o + b;
}

Vector retract_inverse(const Vector& o, const Vector& a) {
  return o + o - a;
}

AffineMap translation_iso(const Vector& o, const Vector& e) {
  if (o.dim() != e.dim()) throw DimensionMismatch("translation_iso");
  return AffineMap(Matrix::identity(o.field(), o.dim()), e - o);
}

AffineMap interpolate_affine(
    const std::vector<std::pair<Vector, Vector>>& samples, std::size_t dim) {
  if (samples.empty()) throw InsufficientSamples("no samples");
  const Field f = samples[0].first.field();
  const Vector zero(f, dim);

  const Vector* at_zero = nullptr;
  std::vector<const Vector*> at_unit(dim, nullptr);
  for (const auto& [x, y] : samples) {
    if (x.dim() != dim || y.dim() != dim)
      throw DimensionMismatch("sample dimension");
    if (x == zero) at_zero = &y;
    for (std::size_t i = 0; i < dim; ++i)
      if (x == Vector::unit(f, dim, i)) at_unit[i] = &y;
  }
  if (!at_zero) throw InsufficientSamples("missing sample at 0");
  for (std::size_t i = 0; i < dim; ++i)
    if (!at_unit[i])
      throw InsufficientSamples("missing sample at e" + std::to_string(i));

  Matrix M(f, dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    Vector col = *at_unit[i] - *at_zero;
    for (std::size_t k = 0; k < dim; ++k) M.at(k, i) = col[k];
  }
  AffineMap interp(M, *at_zero);
  for (const auto& [x, y] : samples)
    if (interp(x) != y)
      throw NotAffine("sample at " + x.str() + " contradicts interpolant");
  return interp;
}

BiAffineMap interpolate_biaffine(const BiAffineEvaluator& eval, Field f,
                                 std::size_t dim) {
  const Vector zero(f, dim);
  const Vector c = eval(zero, zero);
  Matrix L1(f, dim, dim), L2(f, dim, dim);
  std::vector<Vector> mu_i0, mu_0j;
  for (std::size_t i = 0; i < dim; ++i) {
    Vector ei = Vector::unit(f, dim, i);
    mu_i0.push_back(eval(ei, zero));
    mu_0j.push_back(eval(zero, ei));
    Vector c1 = mu_i0.back() - c;
    Vector c2 = mu_0j.back() - c;
    for (std::size_t k = 0; k < dim; ++k) {
      L1.at(k, i) = c1[k];
      L2.at(k, i) = c2[k];
    }
  }
  std::vector<Matrix> B(dim, Matrix(f, dim, dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      Vector bij = eval(Vector::unit(f, dim, i), Vector::unit(f, dim, j)) -
                   mu_i0[i] - mu_0j[j] + c;
      for (std::size_t k = 0; k < dim; ++k) B[k].at(i, j) = bij[k];
    }
  return BiAffineMap(std::move(B), std::move(L1), std::move(L2), c);
}

ScalarSampler::ScalarSampler(Field f, std::uint64_t seed)
    : field_(f), state_(seed * 6364136223846793005ULL + 1442695040888963407ULL) {}

std::uint64_t ScalarSampler::next_raw() {
  // splitmix64
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Scalar ScalarSampler::next() {
  if (field_.is_prime())
    return Scalar(field_,
                  static_cast<long>(next_raw() % field_.characteristic()));
  long num = static_cast<long>(next_raw() % 9) - 4; // -4..4
  long den = static_cast<long>(next_raw() % 3) + 1; // 1..3
  return Scalar(field_, num, den);
}

Vector ScalarSampler::next_point(std::size_t dim) {
  Vector v(field_, dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = next();
  return v;
}

BiAffineValidation validate_biaffine(const BiAffineMap& m,
                                     const BiAffineEvaluator& eval,
                                     std::size_t trials, std::uint64_t seed) {
  const Field f = m.field();
  const std::size_t n = m.dim();
  const Vector zero(f, n);
  const Scalar two(f, 2);

  std::vector<std::pair<Vector, Vector>> probes;
  for (std::size_t i = 0; i < n && probes.size() < trials; ++i) {
    Vector p = Vector::unit(f, n, i) * two;
    probes.emplace_back(p, zero);
    probes.emplace_back(zero, p);
    probes.emplace_back(p, p);
  }
  ScalarSampler sampler(f, seed + 0xb1affe);
  while (probes.size() < trials)
    probes.emplace_back(sampler.next_point(n), sampler.next_point(n));
  if (probes.size() > trials)
    probes.erase(probes.begin() + static_cast<std::ptrdiff_t>(trials),
                 probes.end());

  for (const auto& [a, b] : probes) {
    if (m(a, b) != eval(a, b)) {
      BiAffineValidation v;
      v.ok = false;
      v.witness = std::make_pair(a, b);
      return v;
    }
  }
  return {};
}

std::vector<PolyVec> symbolic_args(Field f, std::size_t dim,
                                   std::size_t blocks) {
  if (blocks < 1 || blocks > 3)
    throw ArityMismatch("symbolic_args expects 1..3 blocks");
  const std::size_t nv = dim * blocks;
  std::vector<PolyVec> out;
  for (std::size_t k = 0; k < blocks; ++k) {
    PolyVec block;
    block.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i)
      block.push_back(MultiPoly::variable(f, nv, k * dim + i));
    out.push_back(std::move(block));
  }
  return out;
}

BiAffineMap postcompose(const AffineMap& f, const BiAffineMap& mu) {
  const std::size_t n = mu.dim();
  const Field fd = mu.field();
  std::vector<Matrix> B(n, Matrix(fd, n, n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t m = 0; m < n; ++m) {
      const Scalar& fkm = f.M.at(k, m);
      if (fkm.is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          B[k].at(i, j) += fkm * mu.B[m].at(i, j);
    }
  return BiAffineMap(std::move(B), f.M * mu.L1, f.M * mu.L2,
                     f.M * mu.c + f.t);
}

BiAffineMap precompose(const BiAffineMap& mu, const AffineMap& f,
                       const AffineMap& g) {
  const std::size_t n = mu.dim();
  const Field fd = mu.field();
  const Matrix& F = f.M;
  const Matrix& G = g.M;
  const Vector& u = f.t;
  const Vector& v = g.t;

  std::vector<Matrix> B;
  B.reserve(n);
  Matrix L1 = mu.L1 * F;
  Matrix L2 = mu.L2 * G;
  Vector c = mu.L1 * u + mu.L2 * v + mu.c;
  for (std::size_t k = 0; k < n; ++k) {
    B.push_back(F.transposed() * mu.B[k] * G);
    // B[k](F a, v) is linear in a, B[k](u, G b) linear in b, B[k](u, v)
    // constant.
    Vector bv = mu.B[k] * v;                 // row: (F a) . bv
    Vector ub = mu.B[k].transposed() * u;    // row: (G b) . ub
    for (std::size_t j = 0; j < n; ++j) {
      Scalar l1kj = Scalar::zero(fd), l2kj = Scalar::zero(fd);
      for (std::size_t i = 0; i < n; ++i) {
        l1kj += bv[i] * F.at(i, j);
        l2kj += ub[i] * G.at(i, j);
      }
      L1.at(k, j) += l1kj;
      L2.at(k, j) += l2kj;
    }
    Scalar ck = Scalar::zero(fd);
    for (std::size_t i = 0; i < n; ++i) ck += u[i] * bv[i];
    c[k] += ck;
  }
  return BiAffineMap(std::move(B), std::move(L1), std::move(L2), std::move(c));
}

BiAffineMap conjugate(const BiAffineMap& mu, const AffineMap& f,
                      const AffineMap& f_inv) {
  return postcompose(f, precompose(mu, f_inv, f_inv));
}

} // namespace affalg
