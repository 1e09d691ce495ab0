#ifndef WCQSYM_COMBINATORICS_HPP
#define WCQSYM_COMBINATORICS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <wcqsym/word.hpp>

namespace wcqsym
{

// Statistics of a weak composition: length l, size |a|, zero count l0 and
// total size ||a|| = |a| + l0.
inline std::size_t length(const WeakComposition &a)
{
    return a.size();
}
std::uint64_t weight(const WeakComposition &a);
std::size_t zero_length(const WeakComposition &a);
std::uint64_t total_size(const WeakComposition &a);

// True iff a is empty or ends in a positive entry.
bool is_left_weak(const WeakComposition &a);
bool is_composition(const WeakComposition &a);

// 1-based position of the last positive entry, 0 if there is none.
std::size_t last_positive_index(const WeakComposition &a);

// Number of trailing zeros.
inline std::size_t trailing_zeros(const WeakComposition &a)
{
    return a.size() - last_positive_index(a);
}

WeakComposition reversal(const WeakComposition &a);
WeakComposition strip_zeros(const WeakComposition &a);
WeakComposition zeros(std::size_t n);
WeakComposition constant_composition(std::uint32_t value, std::size_t n);

// J[a]: sums of consecutive blocks of a with block sizes J. Requires |J| = l(a).
WeakComposition coarsen(const Composition &J, const WeakComposition &a);

// Blocks of a cut according to the composition I. Requires |I| = l(a).
std::vector<WeakComposition> partition_vectors(const WeakComposition &a, const Composition &I);

// Same cut applied to a word over N x N.
std::vector<BiWord> partition_vectors(const BiWord &a, const Composition &I);

// All compositions of k in lexicographic order ({empty} for k = 0).
const std::vector<Composition> &enumerate_compositions(std::uint32_t k);

// All weak compositions of n with exactly k parts in lexicographic order.
const std::vector<WeakComposition> &enumerate_weak_compositions(std::uint32_t n, std::uint32_t k);

// All weak compositions with total size ||a|| <= max_total and length <= max_length.
std::vector<WeakComposition> enumerate_by_total_size(std::uint32_t max_total, std::size_t max_length);

// Every word of length exactly len with entries in [lo, hi].
std::vector<WeakComposition> enumerate_words(std::size_t len, std::uint32_t lo, std::uint32_t hi);

// Text form: comma-separated decimal entries, "" for the empty composition.
WeakComposition parse_composition(const std::string &text);
std::string format_composition(const WeakComposition &a);

} // namespace wcqsym

#endif
