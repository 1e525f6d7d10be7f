#pragma once

#include <cstdint>
#include <string>

#include "core/word.hpp"

namespace zimav {

struct WitnessSearchOptions {
    std::uint32_t n = 4;
    int q = 2;
    std::size_t target_length = 0; // stop on reaching this depth; 0 = never
    std::uint64_t seed = 1;
    std::string checkpoint_path;   // empty = no checkpointing
    bool resume = false;           // load checkpoint_path before searching

    double time_budget_seconds = 0;    // 0 = unlimited
    std::uint64_t node_budget = 0;     // cumulative across resumes; 0 = unlimited
    std::uint64_t restart_after = 10'000'000; // nodes without a new best depth
    std::uint64_t checkpoint_every_nodes = 1'000'000;
    double checkpoint_every_seconds = 30.0;
};

struct WitnessResult {
    Word best;            // longest avoider seen; verified by construction
    Word current;         // word on the stack when the run stopped
    std::uint64_t nodes = 0;
    std::uint64_t restarts = 0;
    bool reached_target = false;
    bool exhausted = false; // the whole tree was searched below the target
    std::uint64_t wall_time_ms = 0;
};

// Randomized DFS for long Z_n-avoiders: letters are tried in a per-node
// order drawn from a seeded generator; a flagged extension falls through to
// the next letter, an exhausted node backtracks one position, and a restart
// fires after restart_after nodes with no progress. The full search state
// (stack, generator, counters) is periodically persisted, so a resumed run
// continues exactly the trajectory of an uninterrupted one.
WitnessResult long_witness_search(const WitnessSearchOptions& opts);

} // namespace zimav
