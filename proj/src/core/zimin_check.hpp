#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/word.hpp"

namespace zimav {

// Half-open 0-based subword range.
struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;
    bool operator==(const Span&) const = default;
};

// True iff w = A B A with A a Z_{n-1}-instance and B nonempty (recursively;
// every nonempty word is a Z_1-instance). Scans bisecting borders of length
// >= 2^{n-1}-1 and recurses on the border. Memoizes (span, level) pairs.
bool is_zimin_instance(const Word& w, std::uint32_t n);

// First Z_n-instance subword by (smallest end, then shortest), or absent.
// Memoized recursive route; words up to 2^24 letters.
std::optional<Span> encounters_zimin(const Word& w, std::uint32_t n);

struct VerifyResult {
    bool avoids = true;
    // On failure: violating span with smallest end, then smallest start.
    std::optional<Span> violation;
};

// Naive reference verifier: tests every subword of length >= 2^n - 1 with the
// plain recursion, no memoization and no incremental machinery.
VerifyResult verify_avoids(const Word& w, std::uint32_t n);

// Incremental encounter detector for letter-by-letter search. After each
// extend() the return value says whether some Z_n-instance subword ends at
// the new final position; a word built through extend() is flagged at some
// step iff encounters_zimin finds a span.
//
// Plain value type: copy the scanner to branch a search.
class EncounterScanner {
public:
    EncounterScanner(std::uint32_t n, int alphabet_size);

    bool extend(std::uint8_t letter);
    void pop();

    std::size_t length() const { return word_.size(); }
    const std::vector<std::uint8_t>& letters() const { return word_; }
    std::uint32_t level() const { return n_; }
    int alphabet_size() const { return q_; }

    // Shortest instance ending at the current last position; only meaningful
    // when the latest extend() returned true.
    Span last_instance_span();

private:
    std::uint32_t n_;
    int q_;
    std::vector<std::uint8_t> word_;

    // scratch reused across extends
    std::vector<std::uint8_t> rev_;
    std::vector<std::size_t> z_;
    std::vector<std::size_t> maxz_;
    std::vector<int> diff_;
    std::vector<char> s_prev_;
    std::vector<char> s_cur_;

    void prepare_arrays();
    bool suffix_levels(bool want_span, Span* out);
};

// Scanner-driven scan of a whole word; returns the same canonical span as
// encounters_zimin but in O(length) memory, usable on very long words.
std::optional<Span> scan_first_encounter(const Word& w, std::uint32_t n);

} // namespace zimav
