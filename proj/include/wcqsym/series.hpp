#ifndef WCQSYM_SERIES_HPP
#define WCQSYM_SERIES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <wcqsym/rational.hpp>

namespace wcqsym
{

namespace detail
{

template <class C>
bool coeff_is_zero(const C &c)
{
    return is_zero(c);
}

} // namespace detail

// Polynomial in t with coefficients in a commutative ring C. C must provide
// +, -, *, scaling by Rational, value-initialized zero and is_zero().
template <class C>
class TPoly
{
public:
    TPoly() = default;
    TPoly(C c)
    {
        coeffs_.push_back(std::move(c));
        trim();
    }
    explicit TPoly(std::vector<C> coeffs) : coeffs_(std::move(coeffs))
    {
        trim();
    }

    static TPoly monomial(std::size_t degree, C c)
    {
        std::vector<C> v(degree + 1);
        v[degree] = std::move(c);
        return TPoly(std::move(v));
    }

    bool is_zero() const
    {
        return coeffs_.empty();
    }
    // Degree of the zero polynomial is -1.
    int degree() const
    {
        return static_cast<int>(coeffs_.size()) - 1;
    }
    C coeff(std::size_t i) const
    {
        return i < coeffs_.size() ? coeffs_[i] : C{};
    }
    const std::vector<C> &coeffs() const
    {
        return coeffs_;
    }

    TPoly &operator+=(const TPoly &o)
    {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] = coeffs_[i] + o.coeffs_[i];
        }
        trim();
        return *this;
    }
    TPoly &operator-=(const TPoly &o)
    {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] = coeffs_[i] - o.coeffs_[i];
        }
        trim();
        return *this;
    }
    TPoly &operator*=(const Rational &s)
    {
        for (auto &c : coeffs_) {
            c = c * s;
        }
        trim();
        return *this;
    }

    friend TPoly operator+(TPoly a, const TPoly &b)
    {
        a += b;
        return a;
    }
    friend TPoly operator-(TPoly a, const TPoly &b)
    {
        a -= b;
        return a;
    }
    friend TPoly operator-(TPoly a)
    {
        for (auto &c : a.coeffs_) {
            c = -c;
        }
        return a;
    }
    friend TPoly operator*(TPoly a, const Rational &s)
    {
        a *= s;
        return a;
    }
    friend TPoly operator*(const Rational &s, TPoly a)
    {
        a *= s;
        return a;
    }
    friend TPoly operator*(const TPoly &a, const TPoly &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<C> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (detail::coeff_is_zero(a.coeffs_[i])) {
                continue;
            }
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (!detail::coeff_is_zero(b.coeffs_[j])) {
                    v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
                }
            }
        }
        return TPoly(std::move(v));
    }
    friend bool operator==(const TPoly &a, const TPoly &b)
    {
        return a.coeffs_ == b.coeffs_;
    }

    // p(a*t + b).
    TPoly compose_affine(const Rational &a, const Rational &b) const
    {
        TPoly out;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            std::vector<C> v(out.coeffs_.size() + 1);
            for (std::size_t k = 0; k < out.coeffs_.size(); ++k) {
                v[k] = v[k] + out.coeffs_[k] * b;
                v[k + 1] = v[k + 1] + out.coeffs_[k] * a;
            }
            v[0] = v[0] + coeffs_[i];
            out = TPoly(std::move(v));
        }
        return out;
    }

    C eval(const Rational &t) const
    {
        C out{};
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            out = out * t + coeffs_[i];
        }
        return out;
    }

    template <class F>
    auto map(F &&f) const
    {
        using D = decltype(f(std::declval<const C &>()));
        std::vector<D> v;
        v.reserve(coeffs_.size());
        for (const auto &c : coeffs_) {
            v.push_back(f(c));
        }
        return TPoly<D>(std::move(v));
    }

private:
    void trim()
    {
        while (!coeffs_.empty() && detail::coeff_is_zero(coeffs_.back())) {
            coeffs_.pop_back();
        }
    }

    std::vector<C> coeffs_;
};

template <class C>
bool is_zero(const TPoly<C> &p)
{
    return p.is_zero();
}

using RatPoly = TPoly<Rational>;

// t as a rational polynomial.
inline RatPoly t_var()
{
    return RatPoly(std::vector<Rational>{0, 1});
}

// Rendering of a rational t-polynomial, highest degree first.
// Compact: "-1/2*t^2-1/2*t-1/12"; spaced: "1/2*t^2 + t + 3/8".
std::string format_tpoly(const RatPoly &p, bool spaced);

// Raised when a requested coefficient lies beyond the exactly known range.
class TruncationError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Truncated Laurent series sum_n c_n z^n with c_n in TPoly<C>. Coefficients
// below window_low are zero; coefficients in [window_low, valid_to] are exact;
// nothing is known above valid_to. kExact marks a series with finite support.
template <class C>
class LaurentBlock
{
public:
    using Coeff = TPoly<C>;
    static constexpr int kExact = 1 << 28;

    LaurentBlock() = default;
    LaurentBlock(int window_low, int valid_to) : low_(window_low), valid_(normalize(valid_to)) {}

    static LaurentBlock constant(Coeff c)
    {
        LaurentBlock out(0, kExact);
        out.set(0, std::move(c));
        return out;
    }

    int window_low() const
    {
        return low_;
    }
    int valid_to() const
    {
        return valid_;
    }
    bool exact() const
    {
        return valid_ == kExact;
    }
    const std::map<int, Coeff> &terms() const
    {
        return terms_;
    }

    // Stores c as the coefficient of z^n. Exponents above valid_to are ignored.
    void set(int n, Coeff c)
    {
        if (n > valid_) {
            return;
        }
        if (n < low_) {
            if (c.is_zero()) {
                return;
            }
            throw std::logic_error("coefficient below the window of a Laurent block");
        }
        if (c.is_zero()) {
            terms_.erase(n);
        } else {
            terms_[n] = std::move(c);
        }
    }

    void add_to(int n, const Coeff &c)
    {
        if (n > valid_ || c.is_zero()) {
            return;
        }
        set(n, coeff_unchecked(n) + c);
    }

    Coeff coeff(int n) const
    {
        if (n > valid_) {
            throw TruncationError("coefficient of z^" + std::to_string(n) + " is beyond the validity bound " +
                                  std::to_string(valid_));
        }
        return coeff_unchecked(n);
    }

    // Lowers the validity bound, dropping coefficients above it.
    LaurentBlock truncated(int valid_to) const
    {
        LaurentBlock out(low_, std::min(valid_, normalize(valid_to)));
        for (const auto &[n, c] : terms_) {
            out.set(n, c);
        }
        return out;
    }

    // Largest k with a nonzero coefficient of z^-k, or 0.
    int pole_order() const
    {
        if (terms_.empty() || terms_.begin()->first >= 0) {
            return 0;
        }
        return -terms_.begin()->first;
    }

    bool is_zero() const
    {
        return terms_.empty();
    }

    friend LaurentBlock operator+(const LaurentBlock &a, const LaurentBlock &b)
    {
        LaurentBlock out(std::min(a.low_, b.low_), std::min(a.valid_, b.valid_));
        for (const auto &[n, c] : a.terms_) {
            out.add_to(n, c);
        }
        for (const auto &[n, c] : b.terms_) {
            out.add_to(n, c);
        }
        return out;
    }
    friend LaurentBlock operator-(const LaurentBlock &a)
    {
        LaurentBlock out(a.low_, a.valid_);
        for (const auto &[n, c] : a.terms_) {
            out.terms_[n] = -c;
        }
        return out;
    }
    friend LaurentBlock operator-(const LaurentBlock &a, const LaurentBlock &b)
    {
        return a + (-b);
    }
    friend LaurentBlock operator*(const LaurentBlock &a, const Rational &s)
    {
        LaurentBlock out(a.low_, a.valid_);
        for (const auto &[n, c] : a.terms_) {
            out.set(n, c * s);
        }
        return out;
    }
    friend LaurentBlock operator*(const LaurentBlock &a, const LaurentBlock &b)
    {
        int low = a.low_ + b.low_;
        long long va = static_cast<long long>(a.valid_) + b.low_;
        long long vb = static_cast<long long>(b.valid_) + a.low_;
        long long valid = std::min(va, vb);
        if (valid < 0) {
            throw TruncationError("product of Laurent blocks would not determine the z^0 coefficient (valid to z^" +
                                  std::to_string(valid) + ")");
        }
        LaurentBlock out(low, static_cast<int>(std::min<long long>(valid, kExact)));
        for (const auto &[n, c] : a.terms_) {
            for (const auto &[m, d] : b.terms_) {
                if (n + m <= out.valid_) {
                    out.add_to(n + m, c * d);
                }
            }
        }
        return out;
    }
    // Same series: the storage lower bound does not take part.
    friend bool operator==(const LaurentBlock &a, const LaurentBlock &b)
    {
        return a.valid_ == b.valid_ && a.terms_ == b.terms_;
    }

    // Same coefficients on every exponent up to the smaller validity bound.
    friend bool agree(const LaurentBlock &a, const LaurentBlock &b)
    {
        int top = std::min(a.valid_, b.valid_);
        auto restrict = [top](const LaurentBlock &x) {
            std::map<int, Coeff> m;
            for (const auto &[n, c] : x.terms_) {
                if (n <= top) {
                    m.emplace(n, c);
                }
            }
            return m;
        };
        return restrict(a) == restrict(b);
    }

    template <class F>
    auto map_coeffs(F &&f) const
    {
        using D = decltype(f(std::declval<const C &>()));
        LaurentBlock<D> out(low_, valid_);
        for (const auto &[n, c] : terms_) {
            out.set(n, c.map(f));
        }
        return out;
    }

private:
    static int normalize(int v)
    {
        return v >= kExact / 2 ? kExact : v;
    }
    Coeff coeff_unchecked(int n) const
    {
        auto it = terms_.find(n);
        return it == terms_.end() ? Coeff{} : it->second;
    }

    int low_ = 0;
    int valid_ = kExact;
    std::map<int, Coeff> terms_;
};

template <class C>
LaurentBlock<C> laurent_add(const LaurentBlock<C> &a, const LaurentBlock<C> &b)
{
    return a + b;
}

template <class C>
LaurentBlock<C> laurent_mul(const LaurentBlock<C> &a, const LaurentBlock<C> &b)
{
    return a * b;
}

template <class C>
LaurentBlock<C> laurent_scale(const LaurentBlock<C> &a, const Rational &s)
{
    return a * s;
}

// Projection P onto the polar part. The polar part must be fully known
// (valid_to >= -1); the result has finite support.
template <class C>
LaurentBlock<C> polar_projection(const LaurentBlock<C> &a)
{
    if (a.valid_to() < -1) {
        throw TruncationError("polar part is not fully determined");
    }
    // The window starts at the lowest nonzero exponent, so products with the
    // projection lose no more validity than the actual pole order.
    LaurentBlock<C> out(std::min(a.terms().empty() ? 0 : a.terms().begin()->first, 0), LaurentBlock<C>::kExact);
    for (const auto &[n, c] : a.terms()) {
        if (n < 0) {
            out.set(n, c);
        }
    }
    return out;
}

// (id - P): the part with exponents >= 0.
template <class C>
LaurentBlock<C> regular_part(const LaurentBlock<C> &a)
{
    LaurentBlock<C> out(std::max(a.window_low(), 0), a.valid_to());
    for (const auto &[n, c] : a.terms()) {
        if (n >= 0) {
            out.set(n, c);
        }
    }
    return out;
}

// Coefficient of z^0 of a pole-free series.
template <class C>
TPoly<C> eval_at_zero(const LaurentBlock<C> &a)
{
    if (a.pole_order() > 0) {
        throw std::domain_error("cannot evaluate a Laurent series with a pole at z = 0");
    }
    return a.coeff(0);
}

// b_0 = -1, b_1 = -1/2, b_s = -B_s for s >= 2 (Bernoulli numbers with B_1 = -1/2).
Rational bernoulli_b(std::uint32_t s);

// Classical Bernoulli number B_s with B_1 = -1/2.
Rational bernoulli_number(std::uint32_t s);

} // namespace wcqsym

#endif
