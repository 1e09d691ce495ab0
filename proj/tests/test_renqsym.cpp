#include <doctest.h>

#include <wcqsym/birkhoff.hpp>
#include <wcqsym/renqsym.hpp>

#include "oracles.hpp"

using namespace wcqsym;

namespace
{

RenElement R(const WeakComposition &a, const Rational &c = 1)
{
    return RenElement(a, c);
}

QPoly Mq(const WeakComposition &a)
{
    return QPoly(QSymElement::monomial(a));
}

// (x)_n / n! at x = -t - 1/2.
RatPoly divided_falling_factorial(std::uint32_t n)
{
    RatPoly m0(std::vector<Rational>{Rational(-1, 2), -1});
    RatPoly p(Rational(1));
    for (std::uint32_t i = 0; i < n; ++i) {
        p = p * (m0 - RatPoly(Rational(i)));
    }
    return p * Rational(Rational(1) / Rational(oracle::factorial(n)));
}

bool has_zero_entry(const WeakComposition &a)
{
    return std::find(a.letters().begin(), a.letters().end(), 0u) != a.letters().end();
}

RenElement kill_zeros(const RenElement &x)
{
    RenElement out;
    for (const auto &[a, c] : x) {
        if (!has_zero_entry(a)) {
            out.add(a, c);
        }
    }
    return out;
}

RenTensor kill_zeros(const RenTensor &x)
{
    RenTensor out;
    for (const auto &[p, c] : x) {
        if (!has_zero_entry(p.first) && !has_zero_entry(p.second)) {
            out.add(p, c);
        }
    }
    return out;
}

} // namespace

TEST_CASE("products of renormalized functions")
{
    for (std::uint32_t n = 0; n <= 4; ++n) {
        CHECK(ren_product(R({0}), R(zeros(n))) == R(zeros(n + 1), n + 1) + R(zeros(n), n));
    }
    CHECK(ren_product(R({}), R({2, 0})) == R({2, 0}));
    CHECK(ren_product(R({1}), R({0})) == R({1, 0}) + R({0, 1}) + R({1}));
}

TEST_CASE("the t-polynomial form")
{
    CHECK(to_t_polynomial(WeakComposition{0, 0}) ==
          lift(RatPoly(std::vector<Rational>{Rational(3, 8), 1, Rational(1, 2)})));
    CHECK(to_t_polynomial(WeakComposition{2, 0}) ==
          lift(RatPoly(std::vector<Rational>{Rational(-3, 2), -1})) * Mq({2}) - Mq({0, 2}));
    for (std::uint32_t n = 0; n <= 5; ++n) {
        CHECK(to_t_polynomial(zeros(n)) == lift(divided_falling_factorial(n)));
        CHECK(to_t_polynomial(zeros(n)) == lift(oracle::zeros_polynomial(n)));
    }
    for (const auto &a : enumerate_by_total_size(4, 4)) {
        if (is_left_weak(a)) {
            CHECK(to_t_polynomial(a) == Mq(a));
        }
        CHECK(to_t_polynomial(a) == renormalized_M(a));
    }
}

TEST_CASE("the t-polynomial form is multiplicative")
{
    auto all = enumerate_by_total_size(4, 4);
    for (const auto &a : all) {
        for (const auto &b : all) {
            if (total_size(a) + total_size(b) <= 4) {
                CHECK(to_t_polynomial(ren_product(R(a), R(b))) == to_t_polynomial(a) * to_t_polynomial(b));
            }
        }
    }
}

TEST_CASE("inverting the t-polynomial form")
{
    CHECK(from_t_polynomial(lift(RatPoly(std::vector<Rational>{Rational(3, 8), 1, Rational(1, 2)}))) == R({0, 0}));
    CHECK(from_t_polynomial(Mq({3})) == R({3}));
    auto all = enumerate_by_total_size(4, 4);
    for (const auto &a : all) {
        CHECK(from_t_polynomial(to_t_polynomial(a)) == R(a));
    }
    RenElement mix = R({0, 1, 0}, 3) - R({2, 0, 0}) + R({}, Rational(1, 2)) + R({0, 0, 0, 0}, 5);
    CHECK(from_t_polynomial(to_t_polynomial(mix)) == mix);
}

TEST_CASE("unitriangular change to powers of M_0")
{
    CHECK(t_to_m0(m0_to_t(Mq({1}) * lift(t_var()))) == Mq({1}) * lift(t_var()));
    for (const auto &a : enumerate_by_total_size(4, 4)) {
        QPoly q = to_m0_polynomial(a);
        const auto k = trailing_zeros(a);
        WeakComposition head(std::vector<NatLetter>(a.letters().begin(), a.letters().end() - static_cast<long>(k)));
        CHECK(q.degree() == static_cast<int>(k));
        CHECK(q.coeffs().back() == QSymElement::monomial(head, Rational(1) / Rational(oracle::factorial(k))));
        CHECK(m0_to_t(q) == to_t_polynomial(a));
    }
}

TEST_CASE("both bases span the same space")
{
    for (std::uint32_t n = 0; n <= 3; ++n) {
        for (const auto &g : enumerate_by_total_size(2, 2)) {
            if (!is_left_weak(g)) {
                continue;
            }
            // M_0^n M_g as a polynomial in t
            QPoly target = Mq(g);
            for (std::uint32_t i = 0; i < n; ++i) {
                target = target * lift(RatPoly(std::vector<Rational>{Rational(-1, 2), -1}));
            }
            RenElement pre = from_t_polynomial(target);
            CHECK(to_t_polynomial(pre) == target);
        }
    }
}

TEST_CASE("coproduct, counit and antipode")
{
    RenTensor want;
    want.add({WeakComposition(), WeakComposition{1, 0}}, 1);
    want.add({WeakComposition{1}, WeakComposition{0}}, 1);
    want.add({WeakComposition{1, 0}, WeakComposition()}, 1);
    CHECK(ren_coproduct(WeakComposition{1, 0}) == want);
    CHECK(ren_counit(R({})) == 1);
    CHECK(ren_counit(R({0}) + R({}, 4)) == 4);
    for (NatLetter n = 0; n <= 3; ++n) {
        CHECK(ren_antipode(WeakComposition{n}) == R({n}, -1));
    }
    CHECK(ren_antipode(WeakComposition{1, 0}) == R({0, 1}) + R({1}));
    for (const auto &a : enumerate_by_total_size(4, 4)) {
        CHECK(ren_antipode(a) == antipode_recursive(a));
    }
}

TEST_CASE("Hopf axioms on renormalized functions")
{
    auto all = enumerate_by_total_size(3, 3);
    for (const auto &a : all) {
        RenElement unit = R({}, ren_counit(R(a)));
        auto s_id = convolve([](const WeakComposition &u) { return ren_antipode(u); },
                             [](const WeakComposition &v) { return R(v); }, a,
                             [](const RenElement &x, const RenElement &y) { return ren_product(x, y); });
        auto id_s = convolve([](const WeakComposition &u) { return R(u); },
                             [](const WeakComposition &v) { return ren_antipode(v); }, a,
                             [](const RenElement &x, const RenElement &y) { return ren_product(x, y); });
        CHECK(s_id == unit);
        CHECK(id_s == unit);
        RenElement left, right;
        for (const auto &[p, c] : ren_coproduct(a)) {
            left.add(p.second, c * ren_counit(R(p.first)));
            right.add(p.first, c * ren_counit(R(p.second)));
        }
        CHECK(left == R(a));
        CHECK(right == R(a));
        for (const auto &b : all) {
            if (total_size(a) + total_size(b) > 3) {
                continue;
            }
            CHECK(ren_coproduct(ren_product(R(a), R(b))) == tensor_product(ren_coproduct(a), ren_coproduct(b)));
        }
    }
}

TEST_CASE("compositions span a Hopf subalgebra; dropping zero entries is a coalgebra map")
{
    auto all = enumerate_by_total_size(3, 3);
    for (const auto &a : all) {
        if (is_composition(a)) {
            for (const auto &[p, c] : ren_coproduct(a)) {
                CHECK(is_composition(p.first));
                CHECK(is_composition(p.second));
            }
        }
        CHECK(kill_zeros(ren_coproduct(kill_zeros(R(a)))) == kill_zeros(ren_coproduct(a)));
        for (const auto &b : all) {
            if (total_size(a) + total_size(b) > 3) {
                continue;
            }
            auto ab = ren_product(R(a), R(b));
            if (is_composition(a) && is_composition(b)) {
                for (const auto &[w, c] : ab) {
                    CHECK(is_composition(w));
                }
            }
        }
    }
    // Merging a zero into a positive entry leaves the kernel, so the
    // projection is not multiplicative.
    CHECK(kill_zeros(ren_product(R({0}), R({1}))) == R({1}));
    CHECK(ren_product(kill_zeros(R({0})), kill_zeros(R({1}))).is_zero());
}

TEST_CASE("free Rota-Baxter operator")
{
    CHECK(rb_operator(rb_basis(2, {})) == rb_basis(0, {2}));
    CHECK(rb_operator(rb_basis(0, {1})) == rb_basis(0, {0, 1}));
    CHECK(rb_product(rb_basis(1, {}), rb_basis(1, {})) == rb_basis(2, {}));
    auto all = enumerate_by_total_size(2, 2);
    for (std::uint32_t m = 0; m <= 2; ++m) {
        for (std::uint32_t n = 0; n <= 2; ++n) {
            for (const auto &a : all) {
                for (const auto &b : all) {
                    auto x = rb_basis(m, a), y = rb_basis(n, b);
                    CHECK(rb_product(rb_operator(x), rb_operator(y)) ==
                          rb_operator(rb_product(x, rb_operator(y))) + rb_operator(rb_product(rb_operator(x), y)) +
                              rb_operator(rb_product(x, y)));
                }
            }
        }
    }
}
