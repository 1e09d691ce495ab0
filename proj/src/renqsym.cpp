#include <wcqsym/renqsym.hpp>

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include <wcqsym/combinatorics.hpp>

namespace wcqsym
{

RenElement ren_product(const RenElement &a, const RenElement &b)
{
    return qsh_product(a, b);
}

namespace
{

// prod_{i=1}^{m} (t + c - i) / m!
RatPoly descending_product(const Rational &c, std::uint32_t m)
{
    RatPoly out(Rational(1));
    for (std::uint32_t i = 1; i <= m; ++i) {
        out = out * RatPoly(std::vector<Rational>{c - Rational(i), 1});
    }
    return out * Rational(Integer(1), factorial(m));
}

QPoly compute_t_polynomial(const WeakComposition &alpha)
{
    const std::size_t j = last_positive_index(alpha);
    const std::uint32_t kz = static_cast<std::uint32_t>(alpha.size() - j);
    if (kz == 0) {
        return QPoly(QSymElement::monomial(alpha));
    }
    const Rational sign = kz % 2 ? -1 : 1;
    if (j == 0) {
        // (-1)^k / k! prod_{i=1}^{k} (t + i - 1/2)
        RatPoly p(Rational(1));
        for (std::uint32_t i = 1; i <= kz; ++i) {
            p = p * RatPoly(std::vector<Rational>{Rational(i) - Rational(1, 2), 1});
        }
        return lift(p * Rational(sign / Rational(factorial(kz))));
    }
    const WeakComposition head = alpha.prefix(j - 1);
    const WeakComposition last{alpha[j - 1]};
    const Rational top = Rational(static_cast<long>(alpha.size())) + Rational(1, 2);
    QPoly out;
    for (std::uint32_t p = 0; p <= kz; ++p) {
        QSymElement::Terms terms;
        for (const auto &[w, c] : shuffle_product(head, zeros(p))) {
            terms.add(concat(w, last), c);
        }
        RatPoly factor = descending_product(top, kz - p) * sign;
        out += lift(factor) * QPoly(QSymElement::from_terms(std::move(terms)));
    }
    return out;
}

} // namespace

QPoly to_t_polynomial(const WeakComposition &alpha)
{
    static std::map<WeakComposition, QPoly> cache;
    static std::mutex mutex;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(alpha);
        if (it != cache.end()) {
            return it->second;
        }
    }
    QPoly p = compute_t_polynomial(alpha);
    std::lock_guard lock(mutex);
    return cache.emplace(alpha, std::move(p)).first->second;
}

QPoly to_t_polynomial(const RenElement &a)
{
    QPoly out;
    for (const auto &[alpha, c] : a) {
        out += to_t_polynomial(alpha) * c;
    }
    return out;
}

QPoly t_to_m0(const QPoly &p)
{
    return p.compose_affine(-1, Rational(-1, 2));
}

QPoly m0_to_t(const QPoly &q)
{
    return q.compose_affine(-1, Rational(-1, 2));
}

QPoly to_m0_polynomial(const WeakComposition &alpha)
{
    return t_to_m0(to_t_polynomial(alpha));
}

RenElement from_t_polynomial(const QPoly &p)
{
    QPoly rest = t_to_m0(p);
    RenElement out;
    while (!rest.is_zero()) {
        const auto n = static_cast<std::uint32_t>(rest.degree());
        const QSymElement lead = rest.coeffs()[n];
        const Rational scale(factorial(n));
        for (const auto &[gamma, a] : lead) {
            WeakComposition alpha = concat(gamma, zeros(n));
            Rational c = scale * a;
            out.add(alpha, c);
            rest -= to_m0_polynomial(alpha) * c;
        }
        if (rest.degree() >= static_cast<int>(n)) {
            throw std::logic_error("elimination did not lower the M_0-degree");
        }
    }
    return out;
}

RenTensor ren_coproduct(const WeakComposition &alpha)
{
    return deconcat_coproduct(alpha);
}

RenTensor ren_coproduct(const RenElement &a)
{
    return deconcat_coproduct(a);
}

Rational ren_counit(const RenElement &a)
{
    return counit(a);
}

RenElement ren_antipode(const WeakComposition &alpha)
{
    const WeakComposition rev = reversal(alpha);
    const Rational sign = alpha.size() % 2 ? -1 : 1;
    RenElement out;
    for (const auto &J : enumerate_compositions(static_cast<std::uint32_t>(alpha.size()))) {
        out.add(alpha.empty() ? alpha : coarsen(J, rev), sign);
    }
    return out;
}

RenElement ren_antipode(const RenElement &a)
{
    RenElement out;
    for (const auto &[alpha, c] : a) {
        out.add_scaled(ren_antipode(alpha), c);
    }
    return out;
}

RBElement rb_operator(const RBElement &e)
{
    RBElement out;
    for (const auto &[key, c] : e) {
        out.add(RBKey{0, prepend(key.first, key.second)}, c);
    }
    return out;
}

RBElement rb_product(const RBElement &a, const RBElement &b)
{
    RBElement out;
    for (const auto &[x, cx] : a) {
        for (const auto &[y, cy] : b) {
            Rational c = cx * cy;
            for (const auto &[w, cw] : qsh_product(x.second, y.second)) {
                out.add(RBKey{x.first + y.first, w}, Rational(c * cw));
            }
        }
    }
    return out;
}

} // namespace wcqsym
