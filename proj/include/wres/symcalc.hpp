#pragma once

#include "wres/chart.hpp"

namespace wres {

// Entrywise upper principal part. Pole-free entries project to zero;
// non-decaying entries with poles raise NonDecaying.
CliffordElem piplus_elem(const CliffordElem& x);

enum class Var { XiN, XN };

CliffordElem deriv(const CliffordElem& x, Var v);
JetSym deriv(const JetSym& x, Var v);

/**
 * Symbol composition at the boundary point. Tangential x-derivatives vanish
 * by the chart axioms, so only the alpha = (0,..,0,d) multi-indices survive:
 *
 *   (a o b)_m = sum_{p+q=m} a_p b_q  +  sum_{p+q=m+1} d_{xi_n} a_p . D_{x_n} b_q
 *
 * with D_{x_n} = -i d_{x_n}. Orders are produced down to min_order; the top
 * order's normal jet is propagated by the product rule. A term that would
 * require an unavailable jet raises MissingJet.
 */
JetSym jet_compose(const JetSym& a, const JetSym& b, int min_order);

// q_{-1} = p_1^{-1} (with jet via d(p^-1) = -p^-1 (dp) p^-1) and
// q_{-2} = -q_{-1} [ p_0 q_{-1} + d_{xi_n} p_1 . D_{x_n} q_{-1} ].
JetSym invert_first_order(const OperatorSpec& spec, const BoundaryChart& chart);
JetSym invert_first_order_from(const JetSym& sym, const BoundaryChart& chart);

struct CubeSymbols {
    JetSym cube;     // orders 3 (value+jet) and 2 (value)
    JetSym inverse;  // orders -3 (value+jet) and -4 (value)
};

// Composes the three first-order factors and inverts the result:
// q_{-3} = i c(xi)/|xi|^4, q_{-4} by the same recursion at third order.
CubeSymbols cube_and_invert(const std::array<OperatorSpec, 3>& specs, const BoundaryChart& chart);
CubeSymbols cube_and_invert_from(const std::array<JetSym, 3>& f, const BoundaryChart& chart);

// Equality of elements as functions on the unit tangential sphere, decided
// at the exact rational evaluation points.
bool equal_on_sphere(const CliffordElem& x, const CliffordElem& y, int m, size_t max_points = 24);

} // namespace wres
