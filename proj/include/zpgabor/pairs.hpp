#pragma once

#include "zpgabor/group.hpp"
#include "zpgabor/verdict.hpp"
#include "zpgabor/window.hpp"

namespace zpgabor {

/// (E, B) is a spectral pair iff |B| = |E| and sum_{x in E} zeta^{x.(b-b')} = 0
/// for all b != b' in B. Witness: the first violating (b, b') in canonical order.
Verdict is_spectral_pair(const PointSet& e, const PointSet& b);

/// (E, A) is a tiling pair iff every x is covered exactly once by {E + a}.
/// Certificate: cover counts; witness: first over/under-covered x.
Verdict is_tiling_pair(const PointSet& e, const PointSet& a);

/// Packing: no point covered twice.
Verdict is_packing(const PointSet& e, const PointSet& a);

/// B is a spectrum for L^2(w): pairwise orthogonality
/// sum_x zeta^{x.(b-b')} w(x) = 0 plus completeness, decided by the dimension
/// count |B| = |supp w| (orthogonal nonzero vectors span iff their number
/// equals dim L^2(w)).
Verdict weighted_spectrum_check(const WeightFn& w, const PointSet& b);

/// sum_{b in B} |w_hat(x-b)|^2 = p^{-2d} at the given x. Preconditions (mass 1,
/// weighted spectral pair) are reported as precondition verdicts, distinct
/// from an identity failure.
Verdict square_sum_identity(const WeightFn& w, const PointSet& b, const Point& x);

/// Same identity checked at every x with one transform.
Verdict square_sum_identity_all(const WeightFn& w, const PointSet& b);

}  // namespace zpgabor
