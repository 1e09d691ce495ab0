#ifndef WCQSYM_LINCOMB_HPP
#define WCQSYM_LINCOMB_HPP

#include <functional>
#include <map>
#include <utility>

#include <wcqsym/rational.hpp>

namespace wcqsym
{

// Finitely supported linear combination of basis keys with rational coefficients.
// Only nonzero coefficients are stored, so equality is plain map equality.
template <class Key, class Compare = std::less<Key>>
class LinComb
{
public:
    using key_type = Key;
    using container_type = std::map<Key, Rational, Compare>;
    using const_iterator = typename container_type::const_iterator;

    LinComb() = default;

    explicit LinComb(const Key &k, const Rational &c = 1)
    {
        add(k, c);
    }

    void add(const Key &k, const Rational &c)
    {
        if (wcqsym::is_zero(c)) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (wcqsym::is_zero(it->second)) {
                terms_.erase(it);
            }
        }
    }

    Rational coeff(const Key &k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool is_zero() const
    {
        return terms_.empty();
    }
    std::size_t size() const
    {
        return terms_.size();
    }
    const_iterator begin() const
    {
        return terms_.begin();
    }
    const_iterator end() const
    {
        return terms_.end();
    }
    const container_type &terms() const
    {
        return terms_;
    }

    LinComb &operator+=(const LinComb &o)
    {
        for (const auto &[k, c] : o.terms_) {
            add(k, c);
        }
        return *this;
    }

    LinComb &operator-=(const LinComb &o)
    {
        for (const auto &[k, c] : o.terms_) {
            add(k, -c);
        }
        return *this;
    }

    LinComb &operator*=(const Rational &s)
    {
        if (wcqsym::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto &kv : terms_) {
            kv.second *= s;
        }
        return *this;
    }

    // Adds s * o without materializing the scaled copy.
    void add_scaled(const LinComb &o, const Rational &s)
    {
        if (wcqsym::is_zero(s)) {
            return;
        }
        for (const auto &[k, c] : o.terms_) {
            add(k, Rational(c * s));
        }
    }

    friend LinComb operator+(LinComb a, const LinComb &b)
    {
        a += b;
        return a;
    }
    friend LinComb operator-(LinComb a, const LinComb &b)
    {
        a -= b;
        return a;
    }
    friend LinComb operator-(LinComb a)
    {
        for (auto &kv : a.terms_) {
            kv.second = -kv.second;
        }
        return a;
    }
    friend LinComb operator*(LinComb a, const Rational &s)
    {
        a *= s;
        return a;
    }
    friend LinComb operator*(const Rational &s, LinComb a)
    {
        a *= s;
        return a;
    }
    friend bool operator==(const LinComb &a, const LinComb &b)
    {
        return a.terms_ == b.terms_;
    }

private:
    container_type terms_;
};

template <class Key, class Compare>
bool is_zero(const LinComb<Key, Compare> &x)
{
    return x.is_zero();
}

} // namespace wcqsym

#endif
