#include <wcqsym/series.hpp>

#include <mutex>
#include <vector>

namespace wcqsym
{

namespace
{

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_table{Rational(1)};

} // namespace

Rational bernoulli_number(std::uint32_t s)
{
    std::lock_guard lock(bernoulli_mutex);
    // sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1.
    while (bernoulli_table.size() <= s) {
        const std::size_t n = bernoulli_table.size();
        Rational acc = 0;
        for (std::size_t j = 0; j < n; ++j) {
            acc += Rational(binomial(static_cast<std::int64_t>(n + 1), static_cast<std::int64_t>(j))) *
                   bernoulli_table[j];
        }
        Rational b = -acc / Rational(static_cast<long>(n + 1));
        bernoulli_table.push_back(b);
    }
    return bernoulli_table[s];
}

Rational bernoulli_b(std::uint32_t s)
{
    if (s == 0) {
        return -1;
    }
    if (s == 1) {
        return Rational(-1) - bernoulli_number(1);
    }
    return -bernoulli_number(s);
}

std::string format_tpoly(const RatPoly &p, bool spaced)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (int d = p.degree(); d >= 0; --d) {
        const Rational &c = p.coeffs()[static_cast<std::size_t>(d)];
        if (is_zero(c)) {
            continue;
        }
        bool negative = sgn(c) < 0;
        Rational mag = abs(c);
        if (first) {
            if (negative) {
                out += '-';
            }
        } else if (spaced) {
            out += negative ? " - " : " + ";
        } else {
            out += negative ? '-' : '+';
        }
        first = false;
        if (d == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) {
            out += mag.get_str() + "*";
        }
        out += "t";
        if (d > 1) {
            out += "^" + std::to_string(d);
        }
    }
    return out;
}

} // namespace wcqsym
