#include <wcqsym/qsym.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace wcqsym
{

QSymElement QSymElement::monomial(const WeakComposition &alpha, const Rational &c)
{
    if (!is_left_weak(alpha)) {
        throw std::invalid_argument("M_alpha is only defined for left weak alpha, got (" + format_composition(alpha) +
                                    ")");
    }
    QSymElement out;
    out.terms_.add(alpha, c);
    return out;
}

QSymElement QSymElement::from_terms(Terms terms)
{
    for (const auto &[alpha, c] : terms) {
        if (!is_left_weak(alpha)) {
            throw std::invalid_argument("index (" + format_composition(alpha) + ") is not left weak");
        }
    }
    QSymElement out;
    out.terms_ = std::move(terms);
    return out;
}

QSymElement operator*(const QSymElement &a, const QSymElement &b)
{
    QSymElement out;
    for (const auto &[x, cx] : a.terms_) {
        for (const auto &[y, cy] : b.terms_) {
            Rational c = cx * cy;
            if (x.empty()) {
                out.terms_.add(y, c);
            } else if (y.empty()) {
                out.terms_.add(x, c);
            } else {
                out.terms_.add_scaled(qsh_product(x, y), c);
            }
        }
    }
    return out;
}

QSymElement qsym_product(const QSymElement &a, const QSymElement &b)
{
    return a * b;
}

QPoly lift(const RatPoly &p)
{
    return p.map([](const Rational &c) { return QSymElement(c); });
}

bool is_scalar(const QPoly &p)
{
    for (const auto &c : p.coeffs()) {
        for (const auto &[alpha, _] : c) {
            if (!alpha.empty()) {
                return false;
            }
        }
    }
    return true;
}

RatPoly constant_part(const QPoly &p)
{
    if (!is_scalar(p)) {
        throw std::invalid_argument("t-polynomial has non-constant quasisymmetric coefficients");
    }
    return p.map([](const QSymElement &c) { return c.constant(); });
}

namespace
{

std::uint64_t degree(const Monomial &m)
{
    std::uint64_t d = 0;
    for (const auto &[v, e] : m) {
        d += e;
    }
    return d;
}

Monomial multiply(const Monomial &a, const Monomial &b)
{
    Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

std::string format_ascending(const RatPoly &p)
{
    std::string out;
    bool first = true;
    for (std::size_t d = 0; d < p.coeffs().size(); ++d) {
        const Rational &c = p.coeffs()[d];
        if (is_zero(c)) {
            continue;
        }
        bool negative = sgn(c) < 0;
        Rational mag = abs(c);
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (d == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) {
            out += mag.get_str() + "*";
        }
        out += d == 1 ? "t" : "t^" + std::to_string(d);
    }
    return out;
}

} // namespace

bool MonomialOrder::operator()(const Monomial &a, const Monomial &b) const
{
    auto da = degree(a);
    auto db = degree(b);
    if (da != db) {
        return da < db;
    }
    // Dense comparison: the first variable where exponents differ decides,
    // and the larger exponent sorts first.
    std::size_t i = 0;
    while (i < a.size() && i < b.size()) {
        if (a[i] == b[i]) {
            ++i;
            continue;
        }
        if (a[i].first != b[i].first) {
            return a[i].first < b[i].first;
        }
        return a[i].second > b[i].second;
    }
    return i == b.size() && i < a.size();
}

void TruncatedSeries::add(const Monomial &m, const RatPoly &c)
{
    if (c.is_zero()) {
        return;
    }
    for (const auto &[v, e] : m) {
        if (v < 1 || v > n_vars_ || e == 0) {
            throw std::invalid_argument("monomial outside the truncation alphabet");
        }
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

RatPoly TruncatedSeries::coeff(const Monomial &m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? RatPoly() : it->second;
}

TruncatedSeries &TruncatedSeries::operator+=(const TruncatedSeries &o)
{
    if (o.n_vars_ != n_vars_) {
        throw std::invalid_argument("series over different alphabets");
    }
    for (const auto &[m, c] : o.terms_) {
        add(m, c);
    }
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
{
    if (a.n_vars_ != b.n_vars_) {
        throw std::invalid_argument("series over different alphabets");
    }
    TruncatedSeries out(a.n_vars_);
    for (const auto &[m, c] : a.terms_) {
        for (const auto &[n, d] : b.terms_) {
            out.add(multiply(m, n), c * d);
        }
    }
    return out;
}

TruncatedSeries operator*(TruncatedSeries a, const RatPoly &c)
{
    TruncatedSeries out(a.n_vars_);
    for (const auto &[m, d] : a.terms_) {
        out.add(m, d * c);
    }
    return out;
}

std::string TruncatedSeries::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &[m, c] : terms_) {
        if (!out.empty()) {
            out += " + ";
        }
        out += "(" + format_ascending(c) + ")";
        for (std::size_t i = 0; i < m.size(); ++i) {
            out += i == 0 ? " * " : "*";
            out += "x_" + std::to_string(m[i].first);
            if (m[i].second > 1) {
                out += "^" + std::to_string(m[i].second);
            }
        }
    }
    return out;
}

namespace
{

// Calls f(i) for every strictly increasing i_1 < ... < i_k in [1, N].
template <class F>
void for_each_increasing(std::size_t k, std::uint32_t n, F &&f)
{
    std::vector<std::uint32_t> idx(k);
    auto rec = [&](auto &&self, std::size_t pos, std::uint32_t next) -> void {
        if (pos == k) {
            f(idx);
            return;
        }
        for (std::uint32_t v = next; v + (k - pos - 1) <= n; ++v) {
            idx[pos] = v;
            self(self, pos + 1, v + 1);
        }
    };
    rec(rec, 0, 1);
}

TruncatedSeries expand_weighted(const WeakComposition &alpha, const WeakComposition &beta, std::uint32_t n_vars)
{
    TruncatedSeries out(n_vars);
    for_each_increasing(alpha.size(), n_vars, [&](const std::vector<std::uint32_t> &idx) {
        Monomial m;
        Integer w = 1;
        for (std::size_t j = 0; j < idx.size(); ++j) {
            if (alpha[j] > 0) {
                m.emplace_back(idx[j], alpha[j]);
            }
            Integer p;
            mpz_ui_pow_ui(p.get_mpz_t(), idx[j], beta[j]);
            w *= p;
        }
        out.add(m, RatPoly(Rational(w)));
    });
    return out;
}

} // namespace

TruncatedSeries expand_M(const WeakComposition &alpha, std::uint32_t n_vars)
{
    if (!is_left_weak(alpha)) {
        throw std::invalid_argument("M_alpha diverges for alpha = (" + format_composition(alpha) + ")");
    }
    static std::map<std::pair<WeakComposition, std::uint32_t>, TruncatedSeries> cache;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    auto key = std::make_pair(alpha, n_vars);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, expand_weighted(alpha, zeros(alpha.size()), n_vars)).first;
    }
    return it->second;
}

TruncatedSeries expand_stirling(const StirlingIndex &s, std::uint32_t n_vars)
{
    return expand_weighted(upper_row(s), lower_row(s), n_vars);
}

TruncatedSeries expand(const QSymElement &x, std::uint32_t n_vars)
{
    return expand(QPoly(x), n_vars);
}

TruncatedSeries expand(const QPoly &p, std::uint32_t n_vars)
{
    TruncatedSeries out(n_vars);
    for (std::size_t d = 0; d < p.coeffs().size(); ++d) {
        for (const auto &[alpha, c] : p.coeffs()[d]) {
            out += expand_M(alpha, n_vars) * RatPoly::monomial(d, c);
        }
    }
    return out;
}

bool satisfies_tail_condition(const WeakComposition &beta, const WeakComposition &I)
{
    if (beta.size() != I.size()) {
        throw std::invalid_argument("c_{beta,I} needs l(beta) = l(I)");
    }
    std::uint64_t sb = 0;
    std::uint64_t si = 0;
    for (std::size_t j = beta.size(); j-- > 0;) {
        sb += beta[j];
        si += I[j];
        if (si > sb) {
            return false;
        }
    }
    return true;
}

Integer count_filtered_pointed(const WeakComposition &beta, const WeakComposition &I, unsigned placement)
{
    if (!satisfies_tail_condition(beta, I)) {
        return 0;
    }
    const std::size_t k = beta.size();
    // Marked values n_j with gaps of size I_j + placement before each; the
    // prescribed set Y_j is a window of I_j consecutive gap values.
    std::vector<std::uint32_t> n(k + 1, 0);
    // tag[v] = -1 for a gap value outside every Y, 0 for a marked value,
    // 1 + (index into Y values) otherwise.
    std::vector<int> tag(1, 0);
    int y_count = 0;
    for (std::size_t j = 1; j <= k; ++j) {
        std::uint32_t gap = I[j - 1] + placement;
        std::uint32_t offset = placement == 0 ? 0 : static_cast<std::uint32_t>((placement * j) % (placement + 1));
        for (std::uint32_t g = 0; g < gap; ++g) {
            bool in_y = g >= offset && g < offset + I[j - 1];
            tag.push_back(in_y ? 1 + y_count++ : -1);
        }
        tag.push_back(0);
        n[j] = n[j - 1] + gap + 1;
    }
    // Domain [b_k]: element e lies in block j(e) and may take values in [1, n_j].
    std::vector<std::uint32_t> bound;
    for (std::size_t j = 1; j <= k; ++j) {
        for (std::uint32_t e = 0; e < beta[j - 1]; ++e) {
            bound.push_back(n[j]);
        }
    }
    std::vector<int> hits(static_cast<std::size_t>(y_count), 0);
    int uncovered = y_count;
    Integer count = 0;
    auto rec = [&](auto &&self, std::size_t e) -> void {
        if (static_cast<std::size_t>(uncovered) > bound.size() - e) {
            return;
        }
        if (e == bound.size()) {
            count += 1;
            return;
        }
        for (std::uint32_t v = 1; v <= bound[e]; ++v) {
            int t = tag[v];
            if (t < 0) {
                continue;
            }
            if (t > 0 && hits[static_cast<std::size_t>(t - 1)]++ == 0) {
                --uncovered;
            }
            self(self, e + 1);
            if (t > 0 && --hits[static_cast<std::size_t>(t - 1)] == 0) {
                ++uncovered;
            }
        }
    };
    rec(rec, 0);
    return count;
}

Integer stirling_coefficient(const WeakComposition &beta, const WeakComposition &I)
{
    if (!satisfies_tail_condition(beta, I)) {
        return 0;
    }
    static std::map<std::pair<WeakComposition, WeakComposition>, Integer> cache;
    static std::mutex mutex;
    auto key = std::make_pair(beta, I);
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) {
            return it->second;
        }
    }
    // Maps with block j valued in {n_1..n_j} u Y_1 u ... u Y_j covering every Y;
    // inclusion-exclusion over the subsets E_m of Y_m that are missed.
    const std::size_t k = beta.size();
    std::vector<std::uint32_t> e(k, 0);
    Integer total = 0;
    while (true) {
        Integer term = 1;
        std::uint64_t avail = 0;
        int sign = 1;
        for (std::size_t j = 0; j < k; ++j) {
            avail += 1 + I[j] - e[j];
            term *= binomial(I[j], e[j]);
            if (e[j] % 2) {
                sign = -sign;
            }
            Integer p;
            mpz_ui_pow_ui(p.get_mpz_t(), avail, beta[j]);
            term *= p;
        }
        total += sign * term;
        std::size_t j = 0;
        while (j < k && e[j] == I[j]) {
            e[j++] = 0;
        }
        if (j == k) {
            break;
        }
        ++e[j];
    }
    std::lock_guard lock(mutex);
    return cache.emplace(key, total).first->second;
}

QSymElement stirling_to_M(const StirlingIndex &s)
{
    static std::map<StirlingIndex, QSymElement> cache;
    static std::mutex mutex;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(s);
        if (it != cache.end()) {
            return it->second;
        }
    }
    const WeakComposition alpha = upper_row(s);
    const WeakComposition beta = lower_row(s);
    if (!is_left_weak(alpha)) {
        throw std::invalid_argument("Stirling function needs a left weak upper row");
    }
    const std::size_t k = alpha.size();
    std::vector<std::uint64_t> tail(k + 1, 0);
    for (std::size_t j = k; j-- > 0;) {
        tail[j] = tail[j + 1] + beta[j];
    }
    QSymElement::Terms terms;
    std::vector<NatLetter> i(k, 0);
    while (true) {
        WeakComposition I(i);
        Integer c = stirling_coefficient(beta, I);
        if (!is_zero(c)) {
            std::vector<NatLetter> idx;
            for (std::size_t j = 0; j < k; ++j) {
                idx.insert(idx.end(), i[j], 0);
                idx.push_back(alpha[j]);
            }
            terms.add(WeakComposition(std::move(idx)), Rational(c));
        }
        std::size_t j = 0;
        while (j < k && i[j] == tail[j]) {
            i[j++] = 0;
        }
        if (j == k) {
            break;
        }
        ++i[j];
    }
    auto out = QSymElement::from_terms(std::move(terms));
    std::lock_guard lock(mutex);
    return cache.emplace(s, std::move(out)).first->second;
}

} // namespace wcqsym
