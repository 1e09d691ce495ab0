#ifndef WCQSYM_REGULARIZATION_HPP
#define WCQSYM_REGULARIZATION_HPP

#include <cstdint>
#include <stdexcept>

#include <wcqsym/qsym.hpp>
#include <wcqsym/series.hpp>
#include <wcqsym/word.hpp>

namespace wcqsym
{

// Laurent series in z over LWCQSym[t].
using QSeries = LaurentBlock<QSymElement>;

// A regularized value together with the directed word it came from.
struct RegularizedSeries {
    QSeries series;
    DirectedWeakComposition source;
};

// Raised when a requested z-window does not contain [-l(alpha), 0].
class WindowError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// k - j: length minus the position of the last positive upper entry.
std::size_t pole_bound(const DirectedWeakComposition &d);

// The regularization phi(d) with coefficients of z^e for e in [zmin, zmax],
// computed from the closed coefficient formulas. The window must contain
// [-l(d), 0]. Throws std::logic_error if the pole bound is violated.
RegularizedSeries phi(const DirectedWeakComposition &d, int zmin, int zmax);

// Window [-l(d), l(d)].
RegularizedSeries phi(const DirectedWeakComposition &d);

// Same series valid up to z^zmax with no lower window check (memoized).
QSeries phi_series(const DirectedWeakComposition &d, int zmax);

// phi(d) from the splitting of the trailing zero block into a pole-free
// factor at t and single-letter zero factors at t = 0.
RegularizedSeries phi_factorized(const DirectedWeakComposition &d, int zmin, int zmax);

// phi((0); (r)) evaluated at t (t_symbolic) or at t = 0, valid up to z^zmax.
LaurentBlock<Rational> phi_single_zero(const Integer &r, bool t_symbolic, int zmax);

// Largest t-degree minus exponent over the stored coefficients: the smallest
// c with deg_t(coefficient of z^m) <= m + c for all m. Returns INT_MIN for zero.
int t_degree_excess(const QSeries &s);

} // namespace wcqsym

#endif
