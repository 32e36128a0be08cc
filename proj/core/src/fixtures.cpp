#include "affalg/fixtures.hpp"

#include <sstream>

namespace affalg {

std::string SnaConvention::str() const {
  std::string s = full_range ? "sums over 1..n+1" : "sums over 1..n";
  s += trace_zero ? ", trace-free" : ", no trace condition";
  return s;
}

Matrix SnaSpace::embed(const Vector& x) const {
  if (x.dim() != d) throw DimensionMismatch("sna embed");
  Vector flat = base_flat;
  for (std::size_t i = 0; i < d; ++i) flat = flat + basis_flat[i] * x[i];
  return unflatten(field, n + 1, n + 1, flat);
}

namespace {

std::optional<Vector> sna_coords(const SnaSpace& s, const Matrix& a) {
  const std::size_t na = s.ambient();
  Matrix k(s.field, na, s.d);
  for (std::size_t c = 0; c < s.d; ++c)
    for (std::size_t r = 0; r < na; ++r) k.at(r, c) = s.basis_flat[c][r];
  return solve(k, flatten(a) - s.base_flat);
}

} // namespace

bool SnaSpace::contains(const Matrix& a) const {
  return sna_coords(*this, a).has_value();
}

Vector SnaSpace::section(const Matrix& a) const {
  std::optional<Vector> x = sna_coords(*this, a);
  if (!x)
    throw ClosureFailure("matrix " + a.str() + " is outside sna(" +
                         std::to_string(n) + ") [" + convention.str() + "]");
  return *x;
}

namespace {

SolutionSpace sna_constraints(std::size_t n, Field f, SnaConvention conv) {
  const std::size_t m = n + 1;
  const Scalar one = Scalar::one(f);
  std::vector<Vector> rows;
  std::vector<Scalar> rhs;
  const std::size_t top = conv.full_range ? m : n;
  for (std::size_t j = 0; j < m; ++j) { // column sums
    Vector row(f, m * m);
    for (std::size_t i = 0; i < top; ++i) row[i * m + j] = one;
    rows.push_back(std::move(row));
    rhs.push_back(one);
  }
  for (std::size_t j = 0; j < m; ++j) { // row sums
    Vector row(f, m * m);
    for (std::size_t i = 0; i < top; ++i) row[j * m + i] = one;
    rows.push_back(std::move(row));
    rhs.push_back(one);
  }
  if (conv.trace_zero) {
    Vector row(f, m * m);
    for (std::size_t i = 0; i < m; ++i) row[i * m + i] = one;
    rows.push_back(std::move(row));
    rhs.push_back(Scalar::zero(f));
  }
  Matrix a(f, rows.size(), m * m);
  Vector b(f, rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < m * m; ++c) a.at(r, c) = rows[r][c];
    b[r] = rhs[r];
  }
  return solve_affine(a, b);
}

SnaSpace make_space(std::size_t n, Field f, SnaConvention conv,
                    const SolutionSpace& sol) {
  SnaSpace s;
  s.n = n;
  s.d = sol.dim();
  s.field = f;
  s.convention = conv;
  s.base_flat = *sol.particular;
  s.basis_flat = sol.basis;
  return s;
}

bool multiplication_closes(const SnaSpace& s) {
  std::vector<Vector> grid;
  grid.push_back(Vector(s.field, s.d));
  for (std::size_t i = 0; i < s.d; ++i)
    grid.push_back(Vector::unit(s.field, s.d, i));
  for (const Vector& x : grid)
    for (const Vector& y : grid)
      if (!s.contains(s.embed(x) * s.embed(y))) return false;
  return true;
}

} // namespace

SnaSpace build_sna(std::size_t n, Field f) {
  if (n < 1) throw DimensionMismatch("sna needs n >= 1");
  // Printed reading first, then its full-range variant, then the readings
  // without the trace condition.
  const SnaConvention candidates[] = {
      {true, false}, {true, true}, {false, true}, {false, false}};
  std::vector<std::string> report;
  std::optional<SnaSpace> chosen;
  for (const SnaConvention& conv : candidates) {
    SolutionSpace sol = sna_constraints(n, f, conv);
    std::ostringstream line;
    line << "convention [" << conv.str() << "]: ";
    if (!sol.consistent()) {
      line << "inconsistent constraints";
      report.push_back(line.str());
      continue;
    }
    SnaSpace s = make_space(n, f, conv, sol);
    bool closed = multiplication_closes(s);
    line << "dim " << s.d << ", multiplication closure "
         << (closed ? "holds" : "fails");
    report.push_back(line.str());
    if (closed && !chosen) chosen = std::move(s);
  }
  if (!chosen)
    throw ClosureFailure("no sna membership convention closes under "
                         "multiplication for n = " + std::to_string(n));
  chosen->report = std::move(report);
  chosen->report.push_back("selected: [" + chosen->convention.str() + "]");

  // Heap and action on ambient matrices agree with the model through embed.
  const Field fd = chosen->field;
  std::vector<Vector> probes;
  probes.push_back(Vector(fd, chosen->d));
  for (std::size_t i = 0; i < chosen->d; ++i)
    probes.push_back(Vector::unit(fd, chosen->d, i));
  const Scalar two(fd, 2);
  for (const Vector& x : probes)
    for (const Vector& y : probes) {
      for (const Vector& z : probes)
        if (chosen->embed(heap_op(x, y, z)) !=
            chosen->embed(x) - chosen->embed(y) + chosen->embed(z))
          throw InternalInconsistency("sna heap does not commute with embed");
      if (chosen->embed(action(two, x, y)) !=
          chosen->embed(y) * two + chosen->embed(x) * (Scalar::one(fd) - two))
        throw InternalInconsistency("sna action does not commute with embed");
    }
  return *chosen;
}

namespace {

Matrix default_p(const SnaSpace& s) {
  const Field f = s.field;
  const std::size_t m = s.n + 1;
  // Identity plus a nilpotent rank-one u v^T with zero row/column sums and
  // v orthogonal to u; falls back to embedded probe points.
  if (m >= 3) {
    Vector u(f, m), v(f, m);
    u[0] = Scalar(f, 1);
    u[1] = Scalar(f, -1);
    v[0] = Scalar(f, 1);
    v[1] = Scalar(f, 1);
    v[2] = Scalar(f, -2);
    Matrix p = Matrix::identity(f, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) p.at(i, j) += u[i] * v[j];
    if (s.contains(p) && inverse(p)) return p;
  }
  std::vector<Vector> candidates;
  candidates.push_back(Vector(f, s.d));
  for (std::size_t i = 0; i < s.d; ++i)
    candidates.push_back(Vector::unit(f, s.d, i));
  for (const Vector& x : candidates) {
    Matrix p = s.embed(x);
    if (inverse(p)) return p;
  }
  throw PNotInvertible("no invertible default P found in sna(" +
                       std::to_string(s.n) + ")");
}

} // namespace

SnaBundle sna_structures(const SnaSpace& s, std::optional<Matrix> user_p) {
  const Field f = s.field;
  SnaBundle bundle{s, Matrix::identity(f, s.n + 1),
                   HomAssocAffgebra{0, BiAffineMap::zero(f, 0),
                                    AffineMap::identity(f, 0)},
                   HomLieAffgebra{0, BiAffineMap::zero(f, 0),
                                  AffineMap::identity(f, 0)},
                   std::nullopt, std::nullopt, std::nullopt, {}};
  bundle.report = s.report;

  BiAffineEvaluator mul = [&s](const Vector& x, const Vector& y) {
    return s.section(s.embed(x) * s.embed(y));
  };
  BiAffineMap mu = interpolate_biaffine(mul, f, s.d);
  BiAffineValidation val = validate_biaffine(mu, mul, 25);
  if (!val.ok)
    throw InternalInconsistency("sna multiplication is not bi-affine");
  bundle.assoc = HomAssocAffgebra{s.d, mu, AffineMap::identity(f, s.d), true};
  bundle.lie = commutator_bracket(bundle.assoc);
  bundle.lie.plain_intent = true;
  bundle.report.push_back("associative and Lie structures interpolated in " +
                          std::to_string(s.d) + " model coordinates");

  Matrix p = user_p ? *user_p : default_p(s);
  if (user_p && !s.contains(p))
    throw ClosureFailure("supplied P lies outside sna");
  std::optional<Matrix> p_inv = inverse(p);
  if (!p_inv) throw PNotInvertible("P is singular");
  bundle.P = p;

  // Closure of the conjugation structures on the probe grid; the residual
  // is affine in each slot, so grid agreement proves closure everywhere.
  std::vector<Vector> grid;
  grid.push_back(Vector(f, s.d));
  for (std::size_t i = 0; i < s.d; ++i)
    grid.push_back(Vector::unit(f, s.d, i));
  for (const Vector& x : grid) {
    Matrix img = p * s.embed(x) * *p_inv;
    if (!s.contains(img)) {
      bundle.closure_failure =
          "alpha(A) = P A P^-1 leaves sna at A = " + s.embed(x).str();
      break;
    }
  }
  if (!bundle.closure_failure) {
    for (const Vector& x : grid) {
      for (const Vector& y : grid) {
        Matrix img = p * (s.embed(x) * s.embed(y)) * *p_inv;
        if (!s.contains(img)) {
          bundle.closure_failure = "P(AB)P^-1 leaves sna at A = " +
                                   s.embed(x).str() + ", B = " +
                                   s.embed(y).str();
          break;
        }
      }
      if (bundle.closure_failure) break;
    }
  }
  if (bundle.closure_failure) {
    bundle.report.push_back("conjugation closure FAILS: " +
                            *bundle.closure_failure);
    return bundle;
  }

  BiAffineEvaluator mul_p = [&s, &p, &p_inv](const Vector& x,
                                             const Vector& y) {
    return s.section(p * (s.embed(x) * s.embed(y)) * *p_inv);
  };
  BiAffineMap mu_p = interpolate_biaffine(mul_p, f, s.d);
  BiAffineValidation val_p = validate_biaffine(mu_p, mul_p, 25);
  if (!val_p.ok)
    throw InternalInconsistency("conjugated sna multiplication is not "
                                "bi-affine");

  std::vector<std::pair<Vector, Vector>> alpha_samples;
  auto conj = [&s, &p, &p_inv](const Vector& x) {
    return s.section(p * s.embed(x) * *p_inv);
  };
  alpha_samples.emplace_back(Vector(f, s.d), conj(Vector(f, s.d)));
  Vector extra(f, s.d);
  for (std::size_t i = 0; i < s.d; ++i) {
    Vector ei = Vector::unit(f, s.d, i);
    alpha_samples.emplace_back(ei, conj(ei));
    extra = extra + ei;
  }
  alpha_samples.emplace_back(extra, conj(extra));
  AffineMap alpha = interpolate_affine(alpha_samples, s.d);

  bundle.hom_assoc = HomAssocAffgebra{s.d, mu_p, alpha};
  bundle.hom_lie = commutator_bracket(*bundle.hom_assoc);
  bundle.report.push_back("conjugation structures built with P = " + p.str());
  return bundle;
}

namespace {

HomLieAlgebra named_algebra(const std::string& name, Field f) {
  auto make = [&f](std::size_t n) {
    return HomLieAlgebra{n, std::vector<Matrix>(n, Matrix(f, n, n)),
                         Matrix::identity(f, n)};
  };
  if (name.rfind("abelian", 0) == 0) {
    std::size_t n = std::stoul(name.substr(7));
    return make(n);
  }
  if (name == "aff1") {
    HomLieAlgebra L = make(2);
    L.sc[1].at(0, 1) = Scalar(f, 1); // [e1, e2] = e2
    L.sc[1].at(1, 0) = Scalar(f, -1);
    return L;
  }
  if (name == "heisenberg3") {
    HomLieAlgebra L = make(3);
    L.sc[2].at(0, 1) = Scalar(f, 1); // [x, y] = z
    L.sc[2].at(1, 0) = Scalar(f, -1);
    return L;
  }
  if (name == "sl2") {
    HomLieAlgebra L = make(3); // basis (e, f, h)
    L.sc[2].at(0, 1) = Scalar(f, 1); // [e, f] = h
    L.sc[2].at(1, 0) = Scalar(f, -1);
    L.sc[0].at(2, 0) = Scalar(f, 2); // [h, e] = 2e
    L.sc[0].at(0, 2) = Scalar(f, -2);
    L.sc[1].at(2, 1) = Scalar(f, -2); // [h, f] = -2f
    L.sc[1].at(1, 2) = Scalar(f, 2);
    return L;
  }
  auto plus = name.find('+');
  if (plus != std::string::npos)
    return direct_sum(named_algebra(name.substr(0, plus), f),
                      named_algebra(name.substr(plus + 1), f));
  throw SchemaError("unknown fixture algebra '" + name + "'");
}

} // namespace

HomLieAlgebra classical_homlie(const std::string& name, const Matrix& alpha) {
  HomLieAlgebra L = named_algebra(name, alpha.field());
  if (alpha.rows() != L.dim || alpha.cols() != L.dim)
    throw DimensionMismatch("alpha shape for " + name);
  L.alpha = alpha;
  Verdict v = check_homlie_algebra(L);
  if (!v.pass) throw AlphaIncompatible(name + ": " + v.line());
  return L;
}

HomLieAlgebra classical_homlie(const std::string& name, Field f) {
  HomLieAlgebra L = named_algebra(name, f);
  return classical_homlie(name, L.alpha);
}

HomLieAlgebra direct_sum(const HomLieAlgebra& a, const HomLieAlgebra& b) {
  const Field f = a.field();
  const std::size_t n = a.dim + b.dim;
  HomLieAlgebra out{n, std::vector<Matrix>(n, Matrix(f, n, n)), Matrix(f, n, n)};
  for (std::size_t k = 0; k < a.dim; ++k)
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j)
        out.sc[k].at(i, j) = a.sc[k].at(i, j);
  for (std::size_t k = 0; k < b.dim; ++k)
    for (std::size_t i = 0; i < b.dim; ++i)
      for (std::size_t j = 0; j < b.dim; ++j)
        out.sc[a.dim + k].at(a.dim + i, a.dim + j) = b.sc[k].at(i, j);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      out.alpha.at(i, j) = a.alpha.at(i, j);
  for (std::size_t i = 0; i < b.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j)
      out.alpha.at(a.dim + i, a.dim + j) = b.alpha.at(i, j);
  return out;
}

Matrix fixture_alpha(const std::string& fixture, const std::string& which,
                     Field f) {
  HomLieAlgebra L = named_algebra(fixture, f);
  const std::size_t n = L.dim;
  if (which == "id") return Matrix::identity(f, n);
  if (which != "nonid")
    throw SchemaError("alpha must be 'id' or 'nonid', got '" + which + "'");
  if (fixture.rfind("abelian", 0) == 0) {
    Matrix m = Matrix::identity(f, n); // Jordan block
    for (std::size_t i = 0; i + 1 < n; ++i) m.at(i, i + 1) = Scalar(f, 1);
    if (n == 1) m.at(0, 0) = Scalar(f, 2);
    return m;
  }
  if (fixture == "aff1") {
    Matrix m = Matrix::identity(f, 2);
    m.at(1, 1) = Scalar(f, 2);
    return m;
  }
  if (fixture == "heisenberg3") {
    Matrix m = Matrix::identity(f, 3);
    m.at(1, 1) = Scalar(f, 2);
    m.at(2, 2) = Scalar(f, 2); // diag(1,2,2): multiplicative on [x,y] = z
    return m;
  }
  if (fixture == "sl2") {
    Matrix m(f, 3, 3); // e <-> f, h -> -h: an automorphism
    m.at(0, 1) = Scalar(f, 1);
    m.at(1, 0) = Scalar(f, 1);
    m.at(2, 2) = Scalar(f, -1);
    return m;
  }
  throw SchemaError("no non-identity alpha is defined for '" + fixture + "'");
}

AffgebraData sample_valid_data(const HomLieAlgebra& L, std::uint64_t seed) {
  Verdict v = check_homlie_algebra(L);
  if (!v.pass) throw PreconditionFailed(v.line());
  SolutionSpace pairs = pair_space(L);
  const Field f = L.field();
  const std::size_t n = L.dim;
  ScalarSampler sampler(f, seed ^ 0x9a17);
  Vector combo(f, 2 * n * n);
  for (const Vector& b : pairs.basis) combo = combo + b * sampler.next();
  auto [kappa, lambda] = unflatten_pair(L, combo);
  AffgebraData d{L, std::move(kappa), std::move(lambda), sampler.next_point(n)};
  validate_affgebra_data(d);
  return d;
}

} // namespace affalg
