#include <doctest.h>

#include <set>

#include <wcqsym/combinatorics.hpp>
#include <wcqsym/rational.hpp>

using namespace wcqsym;

TEST_CASE("statistics of a weak composition")
{
    WeakComposition a{3, 0, 1, 0};
    CHECK(length(a) == 4);
    CHECK(weight(a) == 4);
    CHECK(zero_length(a) == 2);
    CHECK(total_size(a) == 6);
    CHECK(last_positive_index(a) == 3);
    CHECK(trailing_zeros(a) == 1);
    CHECK(total_size(WeakComposition()) == 0);
    CHECK(last_positive_index(WeakComposition{0, 0}) == 0);
}

TEST_CASE("left weak compositions")
{
    CHECK(is_left_weak(WeakComposition{2, 0, 1}));
    CHECK_FALSE(is_left_weak(WeakComposition{0}));
    CHECK(is_left_weak(WeakComposition()));
    CHECK_FALSE(is_left_weak(WeakComposition{1, 0}));
    CHECK(is_composition(WeakComposition{1, 2}));
    CHECK_FALSE(is_composition(WeakComposition{1, 0, 2}));
}

TEST_CASE("reversal, strip_zeros and concatenation")
{
    WeakComposition a{3, 0, 1, 0};
    CHECK(reversal(a) == WeakComposition{0, 1, 0, 3});
    CHECK(strip_zeros(a) == WeakComposition{3, 1});
    CHECK(concat(a, WeakComposition{2, 0}) == WeakComposition{3, 0, 1, 0, 2, 0});
    for (const auto &w : enumerate_by_total_size(5, 5)) {
        CHECK(reversal(reversal(w)) == w);
        CHECK(is_composition(strip_zeros(w)));
        CHECK(weight(strip_zeros(w)) == weight(w));
    }
}

TEST_CASE("coarsening by a composition")
{
    CHECK(coarsen(Composition{2}, WeakComposition{1, 3}) == WeakComposition{4});
    CHECK(coarsen(Composition{1, 1}, WeakComposition{1, 3}) == WeakComposition{1, 3});
    CHECK(coarsen(Composition{2, 1}, WeakComposition{1, 0, 2}) == WeakComposition{1, 2});
    CHECK_THROWS_AS(coarsen(Composition{2}, WeakComposition{1, 0, 2}), std::invalid_argument);
    for (const auto &a : enumerate_words(4, 0, 2)) {
        for (const auto &J : enumerate_compositions(4)) {
            auto c = coarsen(J, a);
            CHECK(c.size() == J.size());
            CHECK(weight(c) == weight(a));
        }
    }
}

TEST_CASE("partition vectors")
{
    WeakComposition a{1, 0, 2};
    CHECK(partition_vectors(a, Composition{3}) == std::vector<WeakComposition>{{1, 0, 2}});
    CHECK(partition_vectors(a, Composition{1, 2}) == std::vector<WeakComposition>{{1}, {0, 2}});
    CHECK(partition_vectors(a, Composition{1, 1, 1}) == std::vector<WeakComposition>{{1}, {0}, {2}});
    CHECK_THROWS_AS(partition_vectors(a, Composition{1, 1}), std::invalid_argument);
    for (const auto &w : enumerate_words(4, 0, 2)) {
        for (const auto &I : enumerate_compositions(4)) {
            WeakComposition joined;
            for (const auto &p : partition_vectors(w, I)) {
                joined = concat(joined, p);
            }
            CHECK(joined == w);
        }
    }
}

TEST_CASE("enumerating compositions of k")
{
    CHECK(enumerate_compositions(0) == std::vector<Composition>{Composition()});
    CHECK(enumerate_compositions(1) == std::vector<Composition>{{1}});
    CHECK(enumerate_compositions(3) == std::vector<Composition>{{1, 1, 1}, {1, 2}, {2, 1}, {3}});
    for (std::uint32_t k = 1; k <= 8; ++k) {
        const auto &all = enumerate_compositions(k);
        CHECK(all.size() == (std::size_t{1} << (k - 1)));
        std::set<Composition> distinct(all.begin(), all.end());
        CHECK(distinct.size() == all.size());
        for (const auto &c : all) {
            CHECK(is_composition(c));
            CHECK(weight(c) == k);
        }
    }
}

TEST_CASE("enumerating weak compositions of n with k parts")
{
    CHECK(enumerate_weak_compositions(2, 2) == std::vector<WeakComposition>{{0, 2}, {1, 1}, {2, 0}});
    CHECK(enumerate_weak_compositions(0, 3) == std::vector<WeakComposition>{{0, 0, 0}});
    CHECK(enumerate_weak_compositions(2, 0).empty());
    CHECK(enumerate_weak_compositions(0, 0) == std::vector<WeakComposition>{WeakComposition()});
    for (std::uint32_t n = 0; n <= 6; ++n) {
        for (std::uint32_t k = 1; k <= 4; ++k) {
            const auto &all = enumerate_weak_compositions(n, k);
            CHECK(Integer(all.size()) == binomial(n + k - 1, k - 1));
            CHECK(std::is_sorted(all.begin(), all.end(),
                                 [](const auto &x, const auto &y) { return x.letters() < y.letters(); }));
            for (const auto &w : all) {
                CHECK(w.size() == k);
                CHECK(weight(w) == n);
            }
        }
    }
}

TEST_CASE("enumerating by total size")
{
    auto all = enumerate_by_total_size(3, 3);
    std::set<WeakComposition> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
    for (const auto &w : all) {
        CHECK(total_size(w) <= 3);
    }
    // brute force: words of length <= 3 with entries <= 3 and total size <= 3
    std::size_t count = 1;
    for (std::size_t len = 1; len <= 3; ++len) {
        for (const auto &w : enumerate_words(len, 0, 3)) {
            count += total_size(w) <= 3;
        }
    }
    CHECK(all.size() == count);
    CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("text form of weak compositions")
{
    CHECK(parse_composition("") == WeakComposition());
    CHECK(parse_composition("2,0,1") == WeakComposition{2, 0, 1});
    CHECK(format_composition(WeakComposition{2, 0, 1}) == "2,0,1");
    CHECK(format_composition(WeakComposition()) == "");
    for (const char *bad : {",", "1,", ",1", "1,,2", "-1", "a", "1 2", "1.5", "99999999999"}) {
        CHECK_THROWS_AS(parse_composition(bad), std::invalid_argument);
    }
    for (const auto &w : enumerate_by_total_size(4, 4)) {
        CHECK(parse_composition(format_composition(w)) == w);
    }
}

TEST_CASE("directed weak compositions")
{
    auto d = make_directed(WeakComposition{1, 0}, WeakComposition{2, 3});
    CHECK(upper_row(d) == WeakComposition{1, 0});
    CHECK(lower_row(d) == WeakComposition{2, 3});
    CHECK_THROWS_AS(make_directed(WeakComposition{1}, WeakComposition{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(make_directed(WeakComposition{1}, WeakComposition{0}), std::invalid_argument);
    CHECK_THROWS_AS(make_stirling_index(WeakComposition{1, 0}, WeakComposition{0, 0}), std::invalid_argument);
    CHECK_NOTHROW(make_stirling_index(WeakComposition{0, 1}, WeakComposition{0, 0}));
}
