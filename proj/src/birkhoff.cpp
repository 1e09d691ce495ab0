#include <wcqsym/birkhoff.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include <wcqsym/combinatorics.hpp>
#include <wcqsym/quasi_shuffle.hpp>

namespace wcqsym
{

namespace
{

QSeries unit_series()
{
    return QSeries::constant(QPoly(QSymElement(Rational(1))));
}

std::mutex abf_mutex;
std::map<std::pair<DirectedWeakComposition, int>, QSeries> bracket_cache;
std::map<DirectedWeakComposition, QSeries> minus_cache;
std::map<DirectedWeakComposition, QSeries> inverse_cache;

// phi(d) + sum over proper splits d = u.v of phi(u) phi_minus(v), valid up to z^target.
QSeries bracket(const DirectedWeakComposition &d, int target)
{
    {
        std::lock_guard lock(abf_mutex);
        auto it = bracket_cache.find({d, target});
        if (it != bracket_cache.end()) {
            return it->second;
        }
    }
    QSeries out = phi_series(d, target);
    for (std::size_t i = 1; i < d.size(); ++i) {
        QSeries minus = phi_minus(d.suffix(i));
        if (minus.is_zero()) {
            continue;
        }
        out = out + phi_series(d.prefix(i), target - minus.window_low()) * minus;
    }
    std::lock_guard lock(abf_mutex);
    return bracket_cache.emplace(std::make_pair(d, target), std::move(out)).first->second;
}

} // namespace

QSeries phi_minus(const DirectedWeakComposition &d)
{
    if (d.empty()) {
        throw std::invalid_argument("phi_minus on the empty word is the scalar 1");
    }
    {
        std::lock_guard lock(abf_mutex);
        auto it = minus_cache.find(d);
        if (it != minus_cache.end()) {
            return it->second;
        }
    }
    QSeries out = -polar_projection(bracket(d, 0));
    std::lock_guard lock(abf_mutex);
    return minus_cache.emplace(d, std::move(out)).first->second;
}

QSeries phi_plus(const DirectedWeakComposition &d, int zmax)
{
    if (d.empty()) {
        return unit_series();
    }
    return regular_part(bracket(d, zmax));
}

FactorizationResult abf(const DirectedWeakComposition &d, int zmax)
{
    if (zmax < 0) {
        throw std::invalid_argument("phi_plus must be known at least up to z^0");
    }
    if (d.empty()) {
        return {QSeries(0, QSeries::kExact), Rational(1), unit_series(), d};
    }
    return {phi_minus(d), Rational(0), phi_plus(d, zmax), d};
}

FactorizationResult abf(const DirectedWeakComposition &d)
{
    return abf(d, static_cast<int>(d.size()));
}

FactorizationResult abf_closed_form(const DirectedWeakComposition &d, int zmax)
{
    if (zmax < 0) {
        throw std::invalid_argument("phi_plus must be known at least up to z^0");
    }
    if (d.empty()) {
        return {QSeries(0, QSeries::kExact), Rational(1), unit_series(), d};
    }
    QSeries minus(0, QSeries::kExact);
    QSeries plus(0, zmax);
    for (const auto &I : enumerate_compositions(static_cast<std::uint32_t>(d.size()))) {
        auto blocks = partition_vectors(d, I);
        // Innermost first: Y = -P(phi(block_p)), then Y = -P(phi(block_m) Y).
        QSeries y;
        bool have_y = false;
        for (std::size_t m = blocks.size(); m-- > 1;) {
            QSeries inner = have_y ? phi_series(blocks[m], -y.window_low()) * y : phi_series(blocks[m], 0);
            y = -polar_projection(inner);
            have_y = true;
            if (y.is_zero()) {
                break;
            }
        }
        if (have_y && y.is_zero()) {
            continue;
        }
        QSeries x = have_y ? phi_series(blocks[0], zmax - y.window_low()) * y : phi_series(blocks[0], zmax);
        minus = minus - polar_projection(x);
        plus = plus + regular_part(x);
    }
    return {minus, Rational(0), plus, d};
}

FactorizationResult abf_closed_form(const DirectedWeakComposition &d)
{
    return abf_closed_form(d, static_cast<int>(d.size()));
}

QSeries phi_minus_inverse(const DirectedWeakComposition &d)
{
    if (d.empty()) {
        return unit_series();
    }
    {
        std::lock_guard lock(abf_mutex);
        auto it = inverse_cache.find(d);
        if (it != inverse_cache.end()) {
            return it->second;
        }
    }
    QSeries out(0, QSeries::kExact);
    for (std::size_t i = 1; i <= d.size(); ++i) {
        out = out - phi_minus(d.prefix(i)) * phi_minus_inverse(d.suffix(i));
    }
    std::lock_guard lock(abf_mutex);
    return inverse_cache.emplace(d, std::move(out)).first->second;
}

QSeries recombine(const DirectedWeakComposition &d, int zmax)
{
    return convolve([zmax](const DirectedWeakComposition &u) { return phi_plus(u, zmax); },
                    [](const DirectedWeakComposition &v) { return phi_minus_inverse(v); }, d,
                    [](const QSeries &a, const QSeries &b) { return a * b; });
}

QPoly Z(const DirectedWeakComposition &d)
{
    return eval_at_zero(phi_plus(d, 0));
}

QPoly Z_symmetrized(const WeakComposition &alpha, const WeakComposition &beta)
{
    if (alpha.size() != beta.size()) {
        throw std::invalid_argument("alpha and beta must have the same length");
    }
    const std::size_t j = last_positive_index(alpha);
    std::vector<std::size_t> perm(alpha.size() - j);
    std::iota(perm.begin(), perm.end(), j);
    QPoly out;
    do {
        std::vector<NatLetter> b(beta.begin(), beta.end());
        for (std::size_t m = 0; m < perm.size(); ++m) {
            b[j + m] = beta[perm[m]];
        }
        out += Z(make_directed(alpha, WeakComposition(std::move(b))));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

QPoly renormalized_M(const WeakComposition &alpha, std::uint32_t delta)
{
    if (delta == 0) {
        throw std::invalid_argument("delta must be positive");
    }
    return Z(make_directed(alpha, constant_composition(delta, alpha.size())));
}

} // namespace wcqsym
