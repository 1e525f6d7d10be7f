#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/word.hpp"

namespace zimav {

inline constexpr std::size_t kDefaultLengthCap = 64;

struct SearchReport {
    std::uint32_t n = 0;
    int q = 0;
    // Smallest length at which no avoider survives; absent if the cap was
    // reached with avoiders still alive.
    std::optional<std::uint64_t> f_value;
    // Number of avoiding words per length, 0..f-1 (or 0..cap when f absent).
    std::vector<std::uint64_t> counts;
    // All avoiders of length f-1, sorted lexicographically; empty when f is
    // absent (maximality unknown at the cap).
    std::vector<Word> maximal_avoiders;
    std::uint64_t nodes_visited = 0;
    std::uint64_t wall_time_ms = 0;
};

// Exhaustive DFS over the q-ary prefix tree, pruning every branch whose word
// contains a Z_n-instance.
SearchReport compute_f(std::uint32_t n, int q,
                       std::size_t length_cap = kDefaultLengthCap);

// Every q-ary Z_n-avoider of length <= up_to_length, in length-then-lex order.
std::vector<Word> enumerate_avoiders(std::uint32_t n, int q,
                                     std::size_t up_to_length);

// compute_f split across subtree tasks rooted at the given frontier: the
// prefixes must be exactly all q^d words of one fixed length d. The merged
// report is identical to single-threaded compute_f apart from wall time.
SearchReport parallel_partition(const std::vector<Word>& prefixes,
                                std::uint32_t n, int q,
                                std::size_t length_cap = kDefaultLengthCap,
                                int jobs = 0);

} // namespace zimav
