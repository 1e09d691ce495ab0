#ifndef WCQSYM_BIRKHOFF_HPP
#define WCQSYM_BIRKHOFF_HPP

#include <wcqsym/qsym.hpp>
#include <wcqsym/regularization.hpp>

namespace wcqsym
{

// phi = phi_plus * phi_minus^{*-1}. phi_minus is purely polar; its value on
// the empty word is the scalar minus_unit (1 there, 0 elsewhere).
struct FactorizationResult {
    QSeries phi_minus;
    Rational minus_unit;
    QSeries phi_plus;
    DirectedWeakComposition source;
};

// Bogoliubov recursion over prefix/suffix splits; phi_plus valid up to z^zmax
// (zmax >= 0). Memoized on the directed word.
FactorizationResult abf(const DirectedWeakComposition &d, int zmax);
FactorizationResult abf(const DirectedWeakComposition &d);

// Sum over compositions of l(d) of nested polar projections of block values.
FactorizationResult abf_closed_form(const DirectedWeakComposition &d, int zmax);
FactorizationResult abf_closed_form(const DirectedWeakComposition &d);

// Exact polar series phi_minus(d) for nonempty d (memoized).
QSeries phi_minus(const DirectedWeakComposition &d);

// phi_plus(d) valid up to z^zmax; the constant 1 on the empty word.
QSeries phi_plus(const DirectedWeakComposition &d, int zmax);

// Convolution inverse of phi_minus (the constant 1 on the empty word).
QSeries phi_minus_inverse(const DirectedWeakComposition &d);

// (phi_plus * phi_minus^{*-1})(d) with phi_plus taken valid up to z^zmax.
QSeries recombine(const DirectedWeakComposition &d, int zmax);

// Directional quasisymmetric function: phi_plus(d) at z = 0.
QPoly Z(const DirectedWeakComposition &d);

// Sum of Z over all permutations of the directions in the trailing zero block.
QPoly Z_symmetrized(const WeakComposition &alpha, const WeakComposition &beta);

// Renormalized M_alpha = Z(alpha; (delta, ..., delta)).
QPoly renormalized_M(const WeakComposition &alpha, std::uint32_t delta = 1);

} // namespace wcqsym

#endif
