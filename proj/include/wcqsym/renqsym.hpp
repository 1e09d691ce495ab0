#ifndef WCQSYM_RENQSYM_HPP
#define WCQSYM_RENQSYM_HPP

#include <cstdint>
#include <utility>

#include <wcqsym/qsym.hpp>
#include <wcqsym/quasi_shuffle.hpp>

namespace wcqsym
{

// Element of RenQSym in the basis M_alpha, alpha any weak composition.
using RenElement = WordComb<NatLetter>;

inline RenElement ren_basis(const WeakComposition &alpha)
{
    return RenElement(alpha);
}

RenElement ren_product(const RenElement &a, const RenElement &b);

// M_alpha as a polynomial in t over LWCQSym.
QPoly to_t_polynomial(const WeakComposition &alpha);
QPoly to_t_polynomial(const RenElement &a);

// Inverse of to_t_polynomial by elimination on the M_0-degree. Throws
// std::invalid_argument if some coefficient index is not left weak.
RenElement from_t_polynomial(const QPoly &p);

// Change of variable t = -M_0 - 1/2 and its inverse (the same substitution).
QPoly t_to_m0(const QPoly &p);
QPoly m0_to_t(const QPoly &q);

// M_alpha as a polynomial in M_0 over LWCQSym.
QPoly to_m0_polynomial(const WeakComposition &alpha);

using RenTensor = TensorComb<NatLetter>;

RenTensor ren_coproduct(const WeakComposition &alpha);
RenTensor ren_coproduct(const RenElement &a);
Rational ren_counit(const RenElement &a);

// (-1)^l sum over compositions J of l of M_{J[reversal(alpha)]}.
RenElement ren_antipode(const WeakComposition &alpha);
RenElement ren_antipode(const RenElement &a);

// x^n M_alpha.
using RBKey = std::pair<std::uint32_t, WeakComposition>;
using RBElement = LinComb<RBKey>;

inline RBElement rb_basis(std::uint32_t n, const WeakComposition &alpha)
{
    return RBElement(RBKey{n, alpha});
}

// P(x^n M_alpha) = M_{(n).alpha}.
RBElement rb_operator(const RBElement &e);

// (x^m M_a)(x^n M_b) = x^{m+n} M_{a*b}.
RBElement rb_product(const RBElement &a, const RBElement &b);

} // namespace wcqsym

#endif
