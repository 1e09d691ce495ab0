#ifndef WCQSYM_VERIFY_HPP
#define WCQSYM_VERIFY_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <wcqsym/word.hpp>

namespace wcqsym
{

struct CheckResult {
    explicit CheckResult(std::string n = {}) : name(std::move(n)) {}

    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string counterexample;  // first failing case

    bool passed() const
    {
        return failures == 0;
    }
    // Records one case; describe() is only called for the first failure.
    void expect(bool ok, const std::function<std::string()> &describe);
};

struct SuiteResult {
    std::string suite;
    unsigned max_size = 0;
    std::vector<CheckResult> checks;

    bool passed() const;
};

const std::vector<std::string> &verify_suite_names();

// Default size bound of each suite when --max-size is not given.
unsigned default_max_size(const std::string &suite);

// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_verify_suite(const std::string &suite, std::optional<unsigned> max_size);

// Every directed word with length in [1, max_len], upper entries in
// [0, max_upper] and lower entries in [1, max_lower].
std::vector<DirectedWeakComposition> enumerate_directed(std::size_t max_len, std::uint32_t max_upper,
                                                        std::uint32_t max_lower);

} // namespace wcqsym

#endif
