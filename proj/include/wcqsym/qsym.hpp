#ifndef WCQSYM_QSYM_HPP
#define WCQSYM_QSYM_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <wcqsym/combinatorics.hpp>
#include <wcqsym/lincomb.hpp>
#include <wcqsym/quasi_shuffle.hpp>
#include <wcqsym/series.hpp>

namespace wcqsym
{

// Element of LWCQSym written in the monomial basis M_alpha, alpha left weak.
// M_{} is the unit. Multiplication is the quasi-shuffle of indices.
class QSymElement
{
public:
    using Terms = LinComb<WeakComposition>;

    QSymElement() = default;
    // c * M_{}.
    QSymElement(const Rational &c) : terms_(WeakComposition(), c) {}

    // Throws std::invalid_argument unless alpha is left weak.
    static QSymElement monomial(const WeakComposition &alpha, const Rational &c = 1);
    // Wraps a combination; every index must be left weak.
    static QSymElement from_terms(Terms terms);

    const Terms &terms() const
    {
        return terms_;
    }
    Terms::const_iterator begin() const
    {
        return terms_.begin();
    }
    Terms::const_iterator end() const
    {
        return terms_.end();
    }
    std::size_t size() const
    {
        return terms_.size();
    }
    bool is_zero() const
    {
        return terms_.is_zero();
    }
    Rational coeff(const WeakComposition &alpha) const
    {
        return terms_.coeff(alpha);
    }
    // The constant part, i.e. the coefficient of M_{}.
    Rational constant() const
    {
        return terms_.coeff(WeakComposition());
    }

    QSymElement &operator+=(const QSymElement &o)
    {
        terms_ += o.terms_;
        return *this;
    }
    QSymElement &operator-=(const QSymElement &o)
    {
        terms_ -= o.terms_;
        return *this;
    }
    void add_scaled(const QSymElement &o, const Rational &s)
    {
        terms_.add_scaled(o.terms_, s);
    }

    friend QSymElement operator+(QSymElement a, const QSymElement &b)
    {
        a += b;
        return a;
    }
    friend QSymElement operator-(QSymElement a, const QSymElement &b)
    {
        a -= b;
        return a;
    }
    friend QSymElement operator-(QSymElement a)
    {
        a.terms_ = -a.terms_;
        return a;
    }
    friend QSymElement operator*(QSymElement a, const Rational &s)
    {
        a.terms_ *= s;
        return a;
    }
    friend QSymElement operator*(const Rational &s, QSymElement a)
    {
        a.terms_ *= s;
        return a;
    }
    friend QSymElement operator*(const QSymElement &a, const QSymElement &b);
    friend bool operator==(const QSymElement &a, const QSymElement &b)
    {
        return a.terms_ == b.terms_;
    }

private:
    Terms terms_;
};

inline bool is_zero(const QSymElement &x)
{
    return x.is_zero();
}

// Product in LWCQSym: M_a M_b = M_{a*b}.
QSymElement qsym_product(const QSymElement &a, const QSymElement &b);

using QPoly = TPoly<QSymElement>;

// Embeds a rational t-polynomial as coefficient times M_{}.
QPoly lift(const RatPoly &p);

// Rational t-polynomial if p only involves M_{}; throws std::invalid_argument otherwise.
RatPoly constant_part(const QPoly &p);
bool is_scalar(const QPoly &p);

// Sparse monomial x_{v1}^{e1} x_{v2}^{e2}..., variables increasing, exponents positive.
using Monomial = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

// Graded lexicographic order: total degree, then exponent vectors compared
// lexicographically with larger exponents on earlier variables first.
struct MonomialOrder {
    bool operator()(const Monomial &a, const Monomial &b) const;
};

// Polynomial in x_1..x_N with coefficients in Q[t].
class TruncatedSeries
{
public:
    explicit TruncatedSeries(std::uint32_t n_vars = 0) : n_vars_(n_vars) {}

    std::uint32_t n_vars() const
    {
        return n_vars_;
    }
    const std::map<Monomial, RatPoly, MonomialOrder> &terms() const
    {
        return terms_;
    }
    void add(const Monomial &m, const RatPoly &c);
    RatPoly coeff(const Monomial &m) const;
    bool is_zero() const
    {
        return terms_.empty();
    }

    TruncatedSeries &operator+=(const TruncatedSeries &o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b)
    {
        a += b;
        return a;
    }
    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b);
    friend TruncatedSeries operator*(TruncatedSeries a, const RatPoly &c);
    friend bool operator==(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        return a.n_vars_ == b.n_vars_ && a.terms_ == b.terms_;
    }

    // "(a0 + a1*t) * x_1^2*x_3 + ..." in graded lexicographic order; "0" if empty.
    std::string to_string() const;

private:
    std::uint32_t n_vars_;
    std::map<Monomial, RatPoly, MonomialOrder> terms_;
};

// M_alpha restricted to x_1..x_N. Throws std::invalid_argument unless alpha is left weak.
TruncatedSeries expand_M(const WeakComposition &alpha, std::uint32_t n_vars);

// Stirling function: sum over i_1 < ... < i_k <= N of i^beta x_I^alpha.
TruncatedSeries expand_stirling(const StirlingIndex &s, std::uint32_t n_vars);

TruncatedSeries expand(const QSymElement &x, std::uint32_t n_vars);
TruncatedSeries expand(const QPoly &p, std::uint32_t n_vars);

// Tail condition: sum_{t>=j} I_t <= sum_{t>=j} beta_t for every j.
bool satisfies_tail_condition(const WeakComposition &beta, const WeakComposition &I);

// c_{beta,I} by enumerating filtered pointed maps with prescribed images in
// the gaps between the marked values. placement selects the gap sizes and
// the position of each prescribed set inside its gap; the count must not
// depend on it.
Integer count_filtered_pointed(const WeakComposition &beta, const WeakComposition &I, unsigned placement = 0);

// c_{beta,I} by inclusion-exclusion over the prescribed sets (memoized).
Integer stirling_coefficient(const WeakComposition &beta, const WeakComposition &I);

// Stirling function in the monomial basis (memoized).
QSymElement stirling_to_M(const StirlingIndex &s);

} // namespace wcqsym

#endif
