#ifndef AFFALG_FIBER_HPP
#define AFFALG_FIBER_HPP

#include "affalg/constructions.hpp"

namespace affalg {

/// Solution set of alpha(x) = x, i.e. (M - I)x = -t.
SolutionSpace alpha_fixed_points(const AffineMap& alpha);
bool is_fixed_point(const AffineMap& alpha, const Vector& o);

/// Push-forward under the translation a -> a - o: the same structure in
/// coordinates where o is the origin.
HomLieAffgebra recenter(const HomLieAffgebra& s, const Vector& o);
HomAssocAffgebra recenter(const HomAssocAffgebra& s, const Vector& o);

struct FiberLieResult {
  Vector base;
  HomLieAlgebra algebra;
};

struct FiberAssocResult {
  Vector base;
  HomAssocAlgebra algebra;
};

/// Tangent Hom-Lie algebra at a fixed point o of alpha:
/// [a,b]_o = {a,b} - {a,o} + {o,o} - {o,b} read off after recentering.
/// The result is re-verified; failure means the input was not a Hom-Lie
/// affgebra.
FiberLieResult fiber_lie(const HomLieAffgebra& s, const Vector& o);

/// a ._o b = a.b - a.o + o^2 - o.b (+ o) on the tangent space at o.
FiberAssocResult fiber_assoc(const HomAssocAffgebra& s, const Vector& o);

/// Inverse of the data presentation: r = {o,o}, lambda: a -> {o,a} - {o,o},
/// kappa: a -> {a,a} - {o,o}, computed in coordinates centered at o; the
/// underlying algebra is the fiber at o.
AffgebraData extract_data(const HomLieAffgebra& s, const Vector& o);

/// Translation isomorphism between the fibers at two fixed points, with a
/// verified certificate that it intertwines brackets and twisting maps.
struct BasepointChange {
  AffineMap tau; // a -> <a, o, e>
  FiberLieResult fiber_o;
  FiberLieResult fiber_e;
  Verdict bracket_intertwine;
  Verdict alpha_intertwine;

  bool pass() const { return bracket_intertwine.pass && alpha_intertwine.pass; }
};

BasepointChange basepoint_change(const HomLieAffgebra& s, const Vector& o,
                                 const Vector& e);

} // namespace affalg

#endif
