#ifndef WCQSYM_QUASI_SHUFFLE_HPP
#define WCQSYM_QUASI_SHUFFLE_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include <wcqsym/lincomb.hpp>
#include <wcqsym/word.hpp>

namespace wcqsym
{

template <class Letter>
using WordComb = LinComb<Word<Letter>>;

template <class Letter>
using WordPair = std::pair<Word<Letter>, Word<Letter>>;

template <class Letter>
using TensorComb = LinComb<WordPair<Letter>>;

namespace detail
{

template <class Letter>
using CountMap = std::map<std::vector<Letter>, std::int64_t>;

// Products of all suffix pairs a[i..], b[j..] by dynamic programming over the
// three-term recursion (x.u)*(y.v) = x(u*(y.v)) + y((x.u)*v) + (x+y)(u*v).
// With merge = false the last term is dropped, giving the shuffle product.
template <class Letter>
CountMap<Letter> suffix_product(const Word<Letter> &a, const Word<Letter> &b, bool merge)
{
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    std::vector<std::vector<CountMap<Letter>>> table(n + 1, std::vector<CountMap<Letter>>(m + 1));
    auto prefixed = [](const Letter &x, const CountMap<Letter> &src, CountMap<Letter> &dst) {
        for (const auto &[w, c] : src) {
            std::vector<Letter> v;
            v.reserve(w.size() + 1);
            v.push_back(x);
            v.insert(v.end(), w.begin(), w.end());
            dst[std::move(v)] += c;
        }
    };
    for (std::size_t i = n + 1; i-- > 0;) {
        for (std::size_t j = m + 1; j-- > 0;) {
            auto &cell = table[i][j];
            if (i == n) {
                cell[std::vector<Letter>(b.begin() + static_cast<std::ptrdiff_t>(j), b.end())] = 1;
                continue;
            }
            if (j == m) {
                cell[std::vector<Letter>(a.begin() + static_cast<std::ptrdiff_t>(i), a.end())] = 1;
                continue;
            }
            prefixed(a[i], table[i + 1][j], cell);
            prefixed(b[j], table[i][j + 1], cell);
            if (merge) {
                prefixed(a[i] + b[j], table[i + 1][j + 1], cell);
            }
        }
    }
    return std::move(table[0][0]);
}

template <class Letter>
WordComb<Letter> cached_product(const Word<Letter> &a, const Word<Letter> &b, bool merge)
{
    using Key = std::pair<bool, WordPair<Letter>>;
    static std::map<Key, WordComb<Letter>> cache;
    static std::mutex mutex;
    // Both products are commutative, so the key is the unordered pair.
    Key key{merge, b < a ? WordPair<Letter>{b, a} : WordPair<Letter>{a, b}};
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) {
            return it->second;
        }
    }
    WordComb<Letter> out;
    for (auto &[w, c] : suffix_product(a, b, merge)) {
        out.add(Word<Letter>(w), Rational(static_cast<long>(c)));
    }
    std::lock_guard lock(mutex);
    return cache.emplace(std::move(key), std::move(out)).first->second;
}

} // namespace detail

// Quasi-shuffle product of two words; the empty word is the unit.
template <class Letter>
WordComb<Letter> qsh_product(const Word<Letter> &a, const Word<Letter> &b)
{
    if (a.empty()) {
        return WordComb<Letter>(b);
    }
    if (b.empty()) {
        return WordComb<Letter>(a);
    }
    return detail::cached_product(a, b, true);
}

// Shuffle product (interleavings only, no merged letters).
template <class Letter>
WordComb<Letter> shuffle_product(const Word<Letter> &a, const Word<Letter> &b)
{
    if (a.empty()) {
        return WordComb<Letter>(b);
    }
    if (b.empty()) {
        return WordComb<Letter>(a);
    }
    return detail::cached_product(a, b, false);
}

template <class Letter>
WordComb<Letter> qsh_product(const WordComb<Letter> &x, const WordComb<Letter> &y)
{
    WordComb<Letter> out;
    for (const auto &[a, ca] : x) {
        for (const auto &[b, cb] : y) {
            out.add_scaled(qsh_product(a, b), Rational(ca * cb));
        }
    }
    return out;
}

template <class Letter>
WordComb<Letter> shuffle_product(const WordComb<Letter> &x, const WordComb<Letter> &y)
{
    WordComb<Letter> out;
    for (const auto &[a, ca] : x) {
        for (const auto &[b, cb] : y) {
            out.add_scaled(shuffle_product(a, b), Rational(ca * cb));
        }
    }
    return out;
}

// Deconcatenation: sum over all splits w = u.v of u (x) v.
template <class Letter>
TensorComb<Letter> deconcat_coproduct(const Word<Letter> &w)
{
    TensorComb<Letter> out;
    for (std::size_t i = 0; i <= w.size(); ++i) {
        out.add({w.prefix(i), w.suffix(i)}, 1);
    }
    return out;
}

template <class Letter>
TensorComb<Letter> deconcat_coproduct(const WordComb<Letter> &x)
{
    TensorComb<Letter> out;
    for (const auto &[w, c] : x) {
        out.add_scaled(deconcat_coproduct(w), c);
    }
    return out;
}

// Coefficient of the empty word.
template <class Letter>
Rational counit(const WordComb<Letter> &x)
{
    return x.coeff(Word<Letter>());
}

template <class Letter>
Rational counit(const Word<Letter> &w)
{
    return w.empty() ? Rational(1) : Rational(0);
}

// Componentwise product on tensor squares: (a (x) b)(c (x) d) = ac (x) bd.
template <class Letter>
TensorComb<Letter> tensor_product(const TensorComb<Letter> &x, const TensorComb<Letter> &y)
{
    TensorComb<Letter> out;
    for (const auto &[p, cp] : x) {
        for (const auto &[q, cq] : y) {
            auto left = qsh_product(p.first, q.first);
            auto right = qsh_product(p.second, q.second);
            Rational c = cp * cq;
            for (const auto &[l, cl] : left) {
                for (const auto &[r, cr] : right) {
                    out.add({l, r}, Rational(c * cl * cr));
                }
            }
        }
    }
    return out;
}

// Antipode from S(empty) = empty and sum_{u.v = w} S(u) * v = 0 for w nonempty.
template <class Letter>
WordComb<Letter> antipode_recursive(const Word<Letter> &w)
{
    static std::map<Word<Letter>, WordComb<Letter>> cache;
    static std::mutex mutex;
    if (w.empty()) {
        return WordComb<Letter>(w);
    }
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(w);
        if (it != cache.end()) {
            return it->second;
        }
    }
    WordComb<Letter> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        out -= qsh_product(antipode_recursive(w.prefix(i)), WordComb<Letter>(w.suffix(i)));
    }
    std::lock_guard lock(mutex);
    return cache.emplace(w, std::move(out)).first->second;
}

template <class Letter>
WordComb<Letter> antipode_recursive(const WordComb<Letter> &x)
{
    WordComb<Letter> out;
    for (const auto &[w, c] : x) {
        out.add_scaled(antipode_recursive(w), c);
    }
    return out;
}

// (f * g)(w) = sum over deconcatenations w = u.v of mul(f(u), g(v)).
template <class Letter, class F, class G, class Mul>
auto convolve(F &&f, G &&g, const Word<Letter> &w, Mul &&mul)
{
    auto out = mul(f(w.prefix(0)), g(w));
    for (std::size_t i = 1; i <= w.size(); ++i) {
        out = out + mul(f(w.prefix(i)), g(w.suffix(i)));
    }
    return out;
}

// Convolution of two linear endomorphisms of the quasi-shuffle algebra.
template <class Letter, class F, class G>
WordComb<Letter> convolve(F &&f, G &&g, const Word<Letter> &w)
{
    return convolve(f, g, w, [](const WordComb<Letter> &x, const WordComb<Letter> &y) { return qsh_product(x, y); });
}

} // namespace wcqsym

#endif
