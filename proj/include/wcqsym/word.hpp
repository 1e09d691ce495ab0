#ifndef WCQSYM_WORD_HPP
#define WCQSYM_WORD_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <utility>
#include <vector>

namespace wcqsym
{

// Letter of the semigroups N (and P, as a subset) used for weak compositions.
using NatLetter = std::uint32_t;

// Letter of N x N with componentwise addition. The directed-weak-composition
// semigroup N x P is the subset with lower >= 1.
struct BiLetter {
    std::uint32_t upper = 0;
    std::uint32_t lower = 0;

    friend BiLetter operator+(const BiLetter &a, const BiLetter &b)
    {
        return {a.upper + b.upper, a.lower + b.lower};
    }
    friend auto operator<=>(const BiLetter &, const BiLetter &) = default;
};

// Contribution of a letter to the grade used for output ordering:
// a zero part counts 1, a positive part counts its value.
inline std::uint64_t letter_grade(NatLetter a)
{
    return a == 0 ? 1 : a;
}

inline std::uint64_t letter_grade(const BiLetter &a)
{
    return letter_grade(a.upper) + a.lower;
}

// A finite word over a commutative semigroup. The empty word is the unit of
// the quasi-shuffle algebra. Words compare in graded-lexicographic order:
// total grade, then length, then letters.
template <class Letter>
class Word
{
public:
    using value_type = Letter;
    using const_iterator = typename std::vector<Letter>::const_iterator;

    Word() = default;
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    std::size_t size() const
    {
        return letters_.size();
    }
    bool empty() const
    {
        return letters_.empty();
    }
    const Letter &operator[](std::size_t i) const
    {
        return letters_[i];
    }
    const Letter &back() const
    {
        return letters_.back();
    }
    const_iterator begin() const
    {
        return letters_.begin();
    }
    const_iterator end() const
    {
        return letters_.end();
    }
    const std::vector<Letter> &letters() const
    {
        return letters_;
    }

    // Letters [first, first + count).
    Word sub(std::size_t first, std::size_t count) const
    {
        return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(first),
                                        letters_.begin() + static_cast<std::ptrdiff_t>(first + count)));
    }
    Word prefix(std::size_t n) const
    {
        return sub(0, n);
    }
    Word suffix(std::size_t from) const
    {
        return sub(from, size() - from);
    }

    std::uint64_t grade() const
    {
        std::uint64_t g = 0;
        for (const auto &a : letters_) {
            g += letter_grade(a);
        }
        return g;
    }

    friend bool operator==(const Word &, const Word &) = default;

    friend std::strong_ordering operator<=>(const Word &a, const Word &b)
    {
        if (auto c = a.grade() <=> b.grade(); c != 0) {
            return c;
        }
        if (auto c = a.size() <=> b.size(); c != 0) {
            return c;
        }
        return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                                      b.letters_.end());
    }

private:
    std::vector<Letter> letters_;
};

template <class Letter>
Word<Letter> concat(const Word<Letter> &a, const Word<Letter> &b)
{
    std::vector<Letter> v(a.begin(), a.end());
    v.insert(v.end(), b.begin(), b.end());
    return Word<Letter>(std::move(v));
}

template <class Letter>
Word<Letter> prepend(const Letter &x, const Word<Letter> &w)
{
    std::vector<Letter> v;
    v.reserve(w.size() + 1);
    v.push_back(x);
    v.insert(v.end(), w.begin(), w.end());
    return Word<Letter>(std::move(v));
}

// Vector of nonnegative integers; trailing zeros are significant.
using WeakComposition = Word<NatLetter>;

// A WeakComposition whose entries are all positive. Validated where required.
using Composition = WeakComposition;

// Words over N x N. A DirectedWeakComposition (alpha over beta) has all lower
// entries >= 1; a StirlingIndex has a left weak upper row and any lower row.
using BiWord = Word<BiLetter>;
using DirectedWeakComposition = BiWord;
using StirlingIndex = BiWord;

// Builds (upper over lower) from two rows; throws std::invalid_argument on a
// length mismatch or, when require_positive_lower is set, on a zero lower entry.
BiWord make_biword(const WeakComposition &upper, const WeakComposition &lower, bool require_positive_lower);

inline DirectedWeakComposition make_directed(const WeakComposition &upper, const WeakComposition &lower)
{
    return make_biword(upper, lower, true);
}

// Throws std::invalid_argument unless upper is left weak (or empty).
StirlingIndex make_stirling_index(const WeakComposition &upper, const WeakComposition &lower);

WeakComposition upper_row(const BiWord &w);
WeakComposition lower_row(const BiWord &w);

} // namespace wcqsym

#endif
