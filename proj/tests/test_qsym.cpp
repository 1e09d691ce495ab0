#include <doctest.h>

#include <wcqsym/qsym.hpp>

#include "oracles.hpp"

using namespace wcqsym;

namespace
{

QSymElement M(const WeakComposition &a, const Rational &c = 1)
{
    return QSymElement::monomial(a, c);
}

std::vector<WeakComposition> left_weak_up_to(std::uint32_t n)
{
    std::vector<WeakComposition> out;
    for (const auto &a : enumerate_by_total_size(n, n)) {
        if (is_left_weak(a)) {
            out.push_back(a);
        }
    }
    return out;
}

// Upper-left-weak bicompositions with ||upper|| + |lower| <= n.
std::vector<StirlingIndex> stirling_indices_up_to(std::uint32_t n)
{
    std::vector<StirlingIndex> out{StirlingIndex()};
    for (const auto &a : left_weak_up_to(n)) {
        if (a.empty()) {
            continue;
        }
        for (std::uint32_t w = 0; w + total_size(a) <= n; ++w) {
            for (const auto &b : enumerate_weak_compositions(w, static_cast<std::uint32_t>(a.size()))) {
                out.push_back(make_stirling_index(a, b));
            }
        }
    }
    return out;
}

} // namespace

TEST_CASE("products in the monomial basis")
{
    CHECK(M({}) * M({2}) == M({2}));
    CHECK(M({1}) * M({2}) == M({1, 2}) + M({2, 1}) + M({3}));
    auto p = M({0, 1}) * M({2});
    CHECK(p == M({0, 1, 2}) + M({0, 2, 1}) + M({2, 0, 1}) + M({0, 3}) + M({2, 1}));
    for (const auto &[a, c] : p) {
        CHECK(is_left_weak(a));
    }
    CHECK(qsym_product(M({1}), M({2})) == M({1}) * M({2}));
    CHECK_THROWS_AS(M({1, 0}), std::invalid_argument);
}

TEST_CASE("expansion of monomial functions")
{
    auto x = [](std::vector<std::pair<std::uint32_t, std::uint32_t>> m) { return Monomial(std::move(m)); };
    auto e1 = expand_M({1}, 3);
    CHECK(e1.terms().size() == 3);
    CHECK(e1.coeff(x({{1, 1}})) == RatPoly(Rational(1)));
    auto e01 = expand_M({0, 1}, 3);
    CHECK(e01.terms().size() == 2);
    CHECK(e01.coeff(x({{2, 1}})) == RatPoly(Rational(1)));
    CHECK(e01.coeff(x({{3, 1}})) == RatPoly(Rational(2)));
    auto e11 = expand_M({1, 1}, 3);
    CHECK(e11.terms().size() == 3);
    CHECK(e11.coeff(x({{1, 1}, {3, 1}})) == RatPoly(Rational(1)));
    CHECK_THROWS_AS(expand_M({1, 0}, 3), std::invalid_argument);
    for (const auto &a : left_weak_up_to(4)) {
        for (std::uint32_t n = static_cast<std::uint32_t>(a.size()); n <= 5; ++n) {
            CHECK(oracle::densify(expand_M(a, n)) == oracle::monomial_function(a.letters(), n));
        }
    }
}

TEST_CASE("truncated series text form")
{
    CHECK(expand_M({0, 1}, 3).to_string() == "(1) * x_2 + (2) * x_3");
    TruncatedSeries s(2);
    s.add({{1, 2}}, RatPoly(std::vector<Rational>{1, 1}));
    s.add({{1, 1}, {2, 1}}, RatPoly(Rational(-3)));
    s.add({}, RatPoly(Rational(1, 2)));
    CHECK(s.to_string() == "(1/2) + (1 + t) * x_1^2 + (-3) * x_1*x_2");
    CHECK(TruncatedSeries(4).to_string() == "0");
}

TEST_CASE("expansion of Stirling functions")
{
    auto s = expand_stirling(make_stirling_index({1}, {1}), 3);
    CHECK(oracle::densify(s) == oracle::Dense{{{1, 0, 0}, 1}, {{0, 1, 0}, 2}, {{0, 0, 1}, 3}});
    CHECK(expand_stirling(make_stirling_index({1}, {0}), 3) == expand_M({1}, 3));
    CHECK(oracle::densify(expand_stirling(StirlingIndex(), 3)) == oracle::Dense{{{0, 0, 0}, 1}});
    for (const auto &si : stirling_indices_up_to(3)) {
        auto a = upper_row(si).letters();
        auto b = lower_row(si).letters();
        CHECK(oracle::densify(expand_stirling(si, 6)) == oracle::stirling_function(a, b, 6));
    }
}

TEST_CASE("expansion is multiplicative in enough variables")
{
    auto all = left_weak_up_to(4);
    for (const auto &a : all) {
        for (const auto &b : all) {
            if (total_size(a) + total_size(b) > 4) {
                continue;
            }
            auto n = static_cast<std::uint32_t>(a.size() + b.size() + 2);
            CHECK(expand_M(a, n) * expand_M(b, n) == expand(M(a) * M(b), n));
        }
    }
}

TEST_CASE("Stirling functions multiply by the quasi-shuffle of bicompositions")
{
    auto all = stirling_indices_up_to(3);
    for (const auto &s : all) {
        for (const auto &u : all) {
            if (total_size(upper_row(s)) + weight(lower_row(s)) + total_size(upper_row(u)) + weight(lower_row(u)) > 3) {
                continue;
            }
            TruncatedSeries rhs(8);
            for (const auto &[w, c] : qsh_product(s, u)) {
                rhs += expand_stirling(w, 8) * RatPoly(c);
            }
            CHECK(expand_stirling(s, 8) * expand_stirling(u, 8) == rhs);
        }
    }
}

TEST_CASE("filtered pointed map counts")
{
    CHECK(count_filtered_pointed({2}, {1}) == 3);
    CHECK(count_filtered_pointed({0, 0}, {0, 0}) == 1);
    CHECK(count_filtered_pointed({1}, {2}) == 0);
    CHECK(stirling_coefficient({1}, {2}) == 0);
    CHECK_FALSE(satisfies_tail_condition({1, 0}, {0, 1}));
    CHECK(satisfies_tail_condition({0, 1}, {1, 0}));
    for (std::uint32_t m = 0; m <= 6; ++m) {
        for (std::uint32_t i = 0; i <= m; ++i) {
            Integer want = oracle::factorial(i) * oracle::stirling2(m + 1, i + 1);
            CHECK(count_filtered_pointed({m}, {i}) == want);
            CHECK(count_filtered_pointed({m}, {i}, 1) == want);
            CHECK(stirling_coefficient({m}, {i}) == want);
        }
    }
}

TEST_CASE("counting identity for filtered pointed maps")
{
    for (std::size_t k = 1; k <= 3; ++k) {
        for (const auto &beta : enumerate_words(k, 0, 3)) {
            std::vector<std::pair<WeakComposition, Integer>> counts;
            for (const auto &I : enumerate_words(k, 0, weight(beta))) {
                counts.emplace_back(I, count_filtered_pointed(beta, I));
            }
            for (const auto &n : enumerate_words(k, 1, 8)) {
                bool increasing = true;
                for (std::size_t j = 1; j < k; ++j) {
                    increasing = increasing && n[j - 1] < n[j];
                }
                if (!increasing) {
                    continue;
                }
                Integer lhs = 1;
                for (std::size_t j = 0; j < k; ++j) {
                    for (std::uint32_t p = 0; p < beta[j]; ++p) {
                        lhs *= n[j];
                    }
                }
                Integer rhs = 0;
                for (const auto &[I, count] : counts) {
                    Integer term = count;
                    std::uint32_t prev = 0;
                    for (std::size_t j = 0; j < k; ++j) {
                        term *= binomial(static_cast<std::int64_t>(n[j]) - prev - 1, I[j]);
                        prev = n[j];
                    }
                    rhs += term;
                }
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("Stirling functions in the monomial basis")
{
    for (NatLetter s = 1; s <= 2; ++s) {
        CHECK(stirling_to_M(make_stirling_index({s}, {1})) == M({0, s}) + M({s}));
        CHECK(stirling_to_M(make_stirling_index({s}, {2})) == M({s}) + M({0, s}, 3) + M({0, 0, s}, 2));
        CHECK(stirling_to_M(make_stirling_index({0, s}, {0, 1})) == M({0, s}, 2) + M({0, 0, s}, 2));
        for (NatLetter u = 1; u <= 2; ++u) {
            CHECK(stirling_to_M(make_stirling_index({s, u}, {1, 1})) ==
                  M({0, s, 0, u}) + M({0, 0, s, u}, 2) + M({0, s, u}, 4) + M({s, u}, 2) + M({s, 0, u}));
        }
    }
    CHECK(stirling_to_M(StirlingIndex()) == M({}));
    for (const auto &si : stirling_indices_up_to(3)) {
        CHECK(expand(stirling_to_M(si), 8) == expand_stirling(si, 8));
        CHECK(stirling_to_M(make_stirling_index(upper_row(si), WeakComposition(std::vector<NatLetter>(si.size(), 0)))) ==
              M(upper_row(si)));
    }
}
