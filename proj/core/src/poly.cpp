#include "affalg/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace affalg {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  const std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  const std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da < db;
  // Same total degree: lex with x0 most significant. a < b when a is
  // smaller in the first differing exponent.
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return a.size() < b.size();
}

MultiPoly MultiPoly::constant(Field f, std::size_t nvars, const Scalar& c) {
  MultiPoly p(f, nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(Field f, std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw ArityMismatch("variable index out of range");
  MultiPoly p(f, nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.add_term(e, Scalar::one(f));
  return p;
}

void MultiPoly::add_term(const Exponents& exp, const Scalar& coeff) {
  if (exp.size() != nvars_) throw ArityMismatch("exponent arity");
  if (!(coeff.field() == field_)) throw FieldMismatch("term coefficient");
  if (coeff.is_zero()) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw ArityMismatch("polynomial var-count");
  if (!(field_ == o.field_)) throw FieldMismatch("polynomial field");
}

std::uint32_t MultiPoly::total_degree() const {
  if (terms_.empty()) return 0;
  const Exponents& lead = terms_.rbegin()->first;
  return std::accumulate(lead.begin(), lead.end(), std::uint32_t{0});
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(field_, nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly out(field_, nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPoly MultiPoly::operator*(const Scalar& s) const {
  MultiPoly out(field_, nvars_);
  if (s.is_zero()) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
  return out;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (nvars_ != o.nvars_ || !(field_ == o.field_)) return false;
  return terms_ == o.terms_;
}

Scalar MultiPoly::eval(const Vector& point) const {
  if (point.dim() != nvars_) throw ArityMismatch("eval point arity");
  if (!(point.field() == field_)) throw FieldMismatch("eval point field");
  Scalar acc = Scalar::zero(field_);
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
    acc += term;
  }
  return acc;
}

MultiPoly MultiPoly::substitute(std::size_t var, const Scalar& value) const {
  if (var >= nvars_) throw ArityMismatch("substitute index");
  MultiPoly out(field_, nvars_);
  for (const auto& [e, c] : terms_) {
    Scalar coeff = c;
    for (std::uint32_t k = 0; k < e[var]; ++k) coeff *= value;
    Exponents ne = e;
    ne[var] = 0;
    out.add_term(ne, coeff);
  }
  return out;
}

std::optional<Vector> MultiPoly::find_nonzero_point() const {
  if (is_zero()) return std::nullopt;
  Vector point(field_, nvars_);
  MultiPoly cur = *this;
  for (std::size_t v = 0; v < nvars_; ++v) {
    std::uint32_t dv = 0;
    for (const auto& [e, c] : cur.terms()) dv = std::max(dv, e[v]);
    if (dv == 0) continue; // variable absent, keep zero
    std::uint64_t candidates = std::uint64_t{dv} + 1;
    if (field_.is_prime())
      candidates = std::min<std::uint64_t>(candidates, field_.characteristic());
    bool found = false;
    for (std::uint64_t t = 0; t < candidates; ++t) {
      Scalar val(field_, static_cast<long>(t));
      MultiPoly sub = cur.substitute(v, val);
      if (!sub.is_zero()) {
        point[v] = val;
        cur = std::move(sub);
        found = true;
        break;
      }
    }
    // A nonzero polynomial of degree d in x_v cannot vanish at d+1 distinct
    // values, so over Q this never triggers; over F_p it means the
    // polynomial vanishes as a function.
    if (!found) return std::nullopt;
  }
  return cur.is_zero() ? std::nullopt : std::optional<Vector>(point);
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Scalar coeff = c;
    if (first) {
      if (field_.is_rationals() && coeff.sign() < 0) {
        os << "-";
        coeff = -coeff;
      }
    } else {
      if (field_.is_rationals() && coeff.sign() < 0) {
        os << " - ";
        coeff = -coeff;
      } else {
        os << " + ";
      }
    }
    bool has_vars = false;
    std::ostringstream mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (has_vars) mono << "*";
      mono << "x" << i;
      if (e[i] > 1) mono << "^" << e[i];
      has_vars = true;
    }
    if (!has_vars) {
      os << coeff.str();
    } else if (coeff.is_one()) {
      os << mono.str();
    } else {
      os << coeff.str() << "*" << mono.str();
    }
    first = false;
  }
  return os.str();
}

PolyVec operator+(const PolyVec& a, const PolyVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("polyvec add");
  PolyVec out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

PolyVec operator-(const PolyVec& a, const PolyVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("polyvec sub");
  PolyVec out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
  return out;
}

bool all_zero(const PolyVec& v) {
  for (const MultiPoly& p : v)
    if (!p.is_zero()) return false;
  return true;
}

PolyVec lift(const Vector& point, std::size_t nvars) {
  PolyVec out;
  out.reserve(point.dim());
  for (std::size_t i = 0; i < point.dim(); ++i)
    out.push_back(MultiPoly::constant(point.field(), nvars, point[i]));
  return out;
}

} // namespace affalg
