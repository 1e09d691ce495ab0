#include <wcqsym/regularization.hpp>

#include <climits>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include <wcqsym/combinatorics.hpp>

namespace wcqsym
{

std::size_t pole_bound(const DirectedWeakComposition &d)
{
    return d.size() - last_positive_index(upper_row(d));
}

namespace
{

// B_m = beta_m + ... + beta_k for m = 1..k (index m - 1), B_{k+1} = 0.
std::vector<Rational> tail_sums(const WeakComposition &beta)
{
    std::vector<Rational> out(beta.size() + 1, Rational(0));
    for (std::size_t m = beta.size(); m-- > 0;) {
        out[m] = out[m + 1] + Rational(beta[m]);
    }
    return out;
}

Rational inv_factorial(std::uint32_t n)
{
    return Rational(Integer(1), factorial(n));
}

// Coefficient of z^{n-k} when every upper entry is zero.
RatPoly zero_block_coefficient(const WeakComposition &beta, std::uint32_t n)
{
    const std::size_t k = beta.size();
    const auto B = tail_sums(beta);
    RatPoly out;
    for (const auto &s : enumerate_weak_compositions(n, static_cast<std::uint32_t>(k))) {
        Rational w = 1;
        for (std::size_t m = 1; m < k; ++m) {
            w *= bernoulli_b(s[m]) * inv_factorial(s[m]);
        }
        for (std::size_t m = 0; m < k; ++m) {
            w *= power(B[m], static_cast<std::int64_t>(s[m]) - 1);
        }
        std::vector<Rational> first(s[0] + 1);
        for (std::uint32_t i = 0; i <= s[0]; ++i) {
            first[i] = bernoulli_b(s[0] - i) * inv_factorial(i) * inv_factorial(s[0] - i) * w;
        }
        out += RatPoly(std::move(first));
    }
    return out;
}

// Inner sum over WC(r) with k parts for the case j >= 1.
QSymElement inner_sum(const WeakComposition &alpha, const WeakComposition &beta, std::size_t j, std::uint32_t r)
{
    const std::size_t k = alpha.size();
    const auto B = tail_sums(beta);
    const WeakComposition head = alpha.prefix(j);
    QSymElement out;
    for (const auto &s : enumerate_weak_compositions(r, static_cast<std::uint32_t>(k))) {
        Rational w = 1;
        for (std::size_t m = 0; m < k; ++m) {
            w *= inv_factorial(s[m]);
        }
        for (std::size_t m = 0; m + 1 < j; ++m) {
            w *= power(Rational(beta[m]), s[m]);
        }
        w *= power(B[j - 1], s[j - 1]);
        for (std::size_t m = j; m < k; ++m) {
            w *= bernoulli_b(s[m]) * power(B[m], static_cast<std::int64_t>(s[m]) - 1);
        }
        if (is_zero(w)) {
            continue;
        }
        out.add_scaled(stirling_to_M(make_stirling_index(head, s.prefix(j))), w);
    }
    return out;
}

QSeries compute_phi(const DirectedWeakComposition &d, int zmax)
{
    const WeakComposition alpha = upper_row(d);
    const WeakComposition beta = lower_row(d);
    const std::size_t k = d.size();
    const std::size_t j = last_positive_index(alpha);
    const int pb = static_cast<int>(k - j);
    QSeries out(-pb, zmax);
    if (k == 0) {
        out.set(0, QPoly(QSymElement(Rational(1))));
        return out;
    }
    if (zmax < -pb) {
        return out;
    }
    const std::uint32_t nmax = static_cast<std::uint32_t>(zmax + pb);
    if (j == 0) {
        for (std::uint32_t n = 0; n <= nmax; ++n) {
            out.set(static_cast<int>(n) - pb, lift(zero_block_coefficient(beta, n)));
        }
        return out;
    }
    const Rational total = tail_sums(beta)[0];
    std::vector<QSymElement> inner;
    for (std::uint32_t r = 0; r <= nmax; ++r) {
        inner.push_back(inner_sum(alpha, beta, j, r));
    }
    for (std::uint32_t n = 0; n <= nmax; ++n) {
        std::vector<QSymElement> coeffs(n + 1);
        for (std::uint32_t i = 0; i <= n; ++i) {
            coeffs[i] = inner[n - i] * Rational(power(total, i) * inv_factorial(i));
        }
        out.set(static_cast<int>(n) - pb, QPoly(std::move(coeffs)));
    }
    return out;
}

void check_window(const DirectedWeakComposition &d, int zmin, int zmax)
{
    const int k = static_cast<int>(d.size());
    if (zmin > -k || zmax < 0) {
        throw WindowError("window [" + std::to_string(zmin) + ", " + std::to_string(zmax) +
                          "] must contain [" + std::to_string(-k) + ", 0]");
    }
}

void check_pole_bound(const RegularizedSeries &r)
{
    if (static_cast<std::size_t>(r.series.pole_order()) > pole_bound(r.source)) {
        throw std::logic_error("pole order exceeds k - j");
    }
}

} // namespace

QSeries phi_series(const DirectedWeakComposition &d, int zmax)
{
    static std::map<DirectedWeakComposition, QSeries> cache;
    static std::mutex mutex;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(d);
        if (it != cache.end() && it->second.valid_to() >= zmax) {
            return it->second.truncated(zmax);
        }
    }
    QSeries s = compute_phi(d, zmax);
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.try_emplace(d, s);
    if (!inserted && it->second.valid_to() < s.valid_to()) {
        it->second = s;
    }
    return s;
}

RegularizedSeries phi(const DirectedWeakComposition &d, int zmin, int zmax)
{
    check_window(d, zmin, zmax);
    RegularizedSeries out{phi_series(d, zmax), d};
    check_pole_bound(out);
    return out;
}

RegularizedSeries phi(const DirectedWeakComposition &d)
{
    const int k = static_cast<int>(d.size());
    return phi(d, -k, k);
}

LaurentBlock<Rational> phi_single_zero(const Integer &r, bool t_symbolic, int zmax)
{
    LaurentBlock<Rational> out(-1, zmax);
    const Rational rr(r);
    for (int n = 0; n <= zmax + 1; ++n) {
        const auto un = static_cast<std::uint32_t>(n);
        std::vector<Rational> c;
        if (t_symbolic) {
            for (std::uint32_t i = 0; i <= un; ++i) {
                c.push_back(bernoulli_b(un - i) * inv_factorial(i) * inv_factorial(un - i));
            }
        } else {
            c.push_back(bernoulli_b(un) * inv_factorial(un));
        }
        out.set(n - 1, RatPoly(std::move(c)) * power(rr, n - 1));
    }
    return out;
}

RegularizedSeries phi_factorized(const DirectedWeakComposition &d, int zmin, int zmax)
{
    check_window(d, zmin, zmax);
    const WeakComposition alpha = upper_row(d);
    const WeakComposition beta = lower_row(d);
    const std::size_t k = d.size();
    const std::size_t j = last_positive_index(alpha);
    if (j == k) {
        return phi(d, zmin, zmax);
    }
    const auto B = tail_sums(beta);
    const int wide = zmax + static_cast<int>(k - j);
    auto to_q = [](const Rational &c) { return QSymElement(c); };
    QSeries product;
    if (j == 0) {
        product = phi_single_zero(B[0].get_num(), true, wide).map_coeffs(to_q);
    } else {
        std::vector<NatLetter> lower(beta.begin(), beta.begin() + static_cast<std::ptrdiff_t>(j));
        lower[j - 1] = static_cast<NatLetter>(B[j - 1].get_num().get_ui());
        product = phi_series(make_directed(alpha.prefix(j), WeakComposition(std::move(lower))), wide);
    }
    for (std::size_t m = std::max<std::size_t>(j, 1); m < k; ++m) {
        product = product * phi_single_zero(B[m].get_num(), false, wide).map_coeffs(to_q);
    }
    RegularizedSeries out{product.truncated(zmax), d};
    check_pole_bound(out);
    return out;
}

int t_degree_excess(const QSeries &s)
{
    int best = INT_MIN;
    for (const auto &[n, c] : s.terms()) {
        best = std::max(best, c.degree() - n);
    }
    return best;
}

} // namespace wcqsym
