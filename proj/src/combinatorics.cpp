#include <wcqsym/combinatorics.hpp>

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include <wcqsym/rational.hpp>

namespace wcqsym
{

BiWord make_biword(const WeakComposition &upper, const WeakComposition &lower, bool require_positive_lower)
{
    if (upper.size() != lower.size()) {
        throw std::invalid_argument("upper and lower rows have different lengths");
    }
    std::vector<BiLetter> v;
    v.reserve(upper.size());
    for (std::size_t i = 0; i < upper.size(); ++i) {
        if (require_positive_lower && lower[i] == 0) {
            throw std::invalid_argument("direction entries must be positive");
        }
        v.push_back({upper[i], lower[i]});
    }
    return BiWord(std::move(v));
}

StirlingIndex make_stirling_index(const WeakComposition &upper, const WeakComposition &lower)
{
    if (!is_left_weak(upper)) {
        throw std::invalid_argument("Stirling index requires a left weak upper row");
    }
    return make_biword(upper, lower, false);
}

WeakComposition upper_row(const BiWord &w)
{
    std::vector<NatLetter> v;
    v.reserve(w.size());
    for (const auto &x : w) {
        v.push_back(x.upper);
    }
    return WeakComposition(std::move(v));
}

WeakComposition lower_row(const BiWord &w)
{
    std::vector<NatLetter> v;
    v.reserve(w.size());
    for (const auto &x : w) {
        v.push_back(x.lower);
    }
    return WeakComposition(std::move(v));
}

std::uint64_t weight(const WeakComposition &a)
{
    std::uint64_t s = 0;
    for (auto x : a) {
        s += x;
    }
    return s;
}

std::size_t zero_length(const WeakComposition &a)
{
    return static_cast<std::size_t>(std::count(a.begin(), a.end(), 0u));
}

std::uint64_t total_size(const WeakComposition &a)
{
    return weight(a) + zero_length(a);
}

bool is_left_weak(const WeakComposition &a)
{
    return a.empty() || a.back() > 0;
}

bool is_composition(const WeakComposition &a)
{
    return std::all_of(a.begin(), a.end(), [](NatLetter x) { return x > 0; });
}

std::size_t last_positive_index(const WeakComposition &a)
{
    for (std::size_t i = a.size(); i > 0; --i) {
        if (a[i - 1] > 0) {
            return i;
        }
    }
    return 0;
}

WeakComposition reversal(const WeakComposition &a)
{
    std::vector<NatLetter> v(a.begin(), a.end());
    std::reverse(v.begin(), v.end());
    return WeakComposition(std::move(v));
}

WeakComposition strip_zeros(const WeakComposition &a)
{
    std::vector<NatLetter> v;
    std::copy_if(a.begin(), a.end(), std::back_inserter(v), [](NatLetter x) { return x > 0; });
    return WeakComposition(std::move(v));
}

WeakComposition zeros(std::size_t n)
{
    return WeakComposition(std::vector<NatLetter>(n, 0));
}

WeakComposition constant_composition(std::uint32_t value, std::size_t n)
{
    return WeakComposition(std::vector<NatLetter>(n, value));
}

namespace
{

void check_cut(const Composition &J, std::size_t len)
{
    if (!is_composition(J)) {
        throw std::invalid_argument("block sizes must be positive");
    }
    if (weight(J) != len) {
        throw std::invalid_argument("block sizes do not sum to the word length");
    }
}

template <class W>
std::vector<W> cut(const W &a, const Composition &I)
{
    check_cut(I, a.size());
    std::vector<W> out;
    out.reserve(I.size());
    std::size_t pos = 0;
    for (auto len : I) {
        out.push_back(a.sub(pos, len));
        pos += len;
    }
    return out;
}

} // namespace

WeakComposition coarsen(const Composition &J, const WeakComposition &a)
{
    std::vector<NatLetter> v;
    for (const auto &block : cut(a, J)) {
        v.push_back(static_cast<NatLetter>(weight(block)));
    }
    return WeakComposition(std::move(v));
}

std::vector<WeakComposition> partition_vectors(const WeakComposition &a, const Composition &I)
{
    return cut(a, I);
}

std::vector<BiWord> partition_vectors(const BiWord &a, const Composition &I)
{
    return cut(a, I);
}

namespace
{

// Lexicographic generation of all length-k vectors with entries >= lo summing to n.
void generate(std::uint32_t n, std::uint32_t k, std::uint32_t lo, std::vector<NatLetter> &cur,
              std::vector<WeakComposition> &out)
{
    if (k == 0) {
        if (n == 0) {
            out.emplace_back(cur);
        }
        return;
    }
    if (k == 1) {
        if (n >= lo) {
            cur.push_back(n);
            out.emplace_back(cur);
            cur.pop_back();
        }
        return;
    }
    for (std::uint32_t x = lo; x + lo * (k - 1) <= n; ++x) {
        cur.push_back(x);
        generate(n - x, k - 1, lo, cur, out);
        cur.pop_back();
    }
}

std::mutex enum_mutex;

} // namespace

const std::vector<Composition> &enumerate_compositions(std::uint32_t k)
{
    static std::map<std::uint32_t, std::vector<Composition>> cache;
    std::lock_guard lock(enum_mutex);
    auto it = cache.find(k);
    if (it != cache.end()) {
        return it->second;
    }
    std::vector<Composition> out;
    if (k == 0) {
        out.emplace_back();
    } else {
        std::vector<NatLetter> cur;
        for (std::uint32_t parts = 1; parts <= k; ++parts) {
            generate(k, parts, 1, cur, out);
        }
        std::sort(out.begin(), out.end(), [](const Composition &a, const Composition &b) {
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
        });
    }
    return cache.emplace(k, std::move(out)).first->second;
}

const std::vector<WeakComposition> &enumerate_weak_compositions(std::uint32_t n, std::uint32_t k)
{
    static std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<WeakComposition>> cache;
    std::lock_guard lock(enum_mutex);
    auto it = cache.find({n, k});
    if (it != cache.end()) {
        return it->second;
    }
    std::vector<WeakComposition> out;
    std::vector<NatLetter> cur;
    generate(n, k, 0, cur, out);
    return cache.emplace(std::make_pair(n, k), std::move(out)).first->second;
}

std::vector<WeakComposition> enumerate_by_total_size(std::uint32_t max_total, std::size_t max_length)
{
    std::vector<WeakComposition> out;
    std::vector<NatLetter> cur;
    // Depth-first over words; every entry adds at least 1 to the total size.
    auto rec = [&](auto &&self, std::uint64_t budget) -> void {
        out.emplace_back(cur);
        if (cur.size() == max_length) {
            return;
        }
        for (std::uint32_t x = 0; letter_grade(x) <= budget; ++x) {
            cur.push_back(x);
            self(self, budget - letter_grade(x));
            cur.pop_back();
        }
    };
    rec(rec, max_total);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<WeakComposition> enumerate_words(std::size_t len, std::uint32_t lo, std::uint32_t hi)
{
    std::vector<WeakComposition> out;
    std::vector<NatLetter> cur(len, lo);
    if (hi < lo) {
        return out;
    }
    while (true) {
        out.emplace_back(cur);
        std::size_t i = len;
        while (i > 0 && cur[i - 1] == hi) {
            cur[i - 1] = lo;
            --i;
        }
        if (i == 0) {
            break;
        }
        ++cur[i - 1];
    }
    return out;
}

WeakComposition parse_composition(const std::string &text)
{
    std::vector<NatLetter> v;
    if (text.empty()) {
        return WeakComposition();
    }
    std::size_t pos = 0;
    while (true) {
        auto comma = text.find(',', pos);
        auto end = comma == std::string::npos ? text.size() : comma;
        const char *first = text.data() + pos;
        const char *last = text.data() + end;
        if (first == last || !std::all_of(first, last, [](char c) { return c >= '0' && c <= '9'; })) {
            throw std::invalid_argument("malformed weak composition: '" + text + "'");
        }
        NatLetter x = 0;
        auto [p, ec] = std::from_chars(first, last, x);
        if (ec != std::errc() || p != last) {
            throw std::invalid_argument("entry out of range in '" + text + "'");
        }
        v.push_back(x);
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }
    return WeakComposition(std::move(v));
}

std::string format_composition(const WeakComposition &a)
{
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) {
            s += ',';
        }
        s += std::to_string(a[i]);
    }
    return s;
}

Rational parse_rational(const std::string &text)
{
    auto slash = text.find('/');
    auto digits = [](const std::string &s, bool allow_sign) {
        std::size_t i = (allow_sign && !s.empty() && s[0] == '-') ? 1 : 0;
        return i < s.size() && std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                                            [](char c) { return c >= '0' && c <= '9'; });
    };
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!digits(num, true) || !digits(den, false)) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
    }
    Rational q(num + "/" + den);
    if (sgn(q.get_den()) == 0) {
        throw std::invalid_argument("zero denominator in '" + text + "'");
    }
    q.canonicalize();
    return q;
}

} // namespace wcqsym
