#include "core/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "core/errors.hpp"
#include "core/zimin_check.hpp"

namespace zimav {

namespace {

void require_search_params(std::uint32_t n, int q) {
    if (n < 1) throw domain_error("zimin index must be at least 1");
    if (q < 1 || q > kMaxAlphabet) throw domain_error("alphabet size out of range");
}

// DFS over the pruned prefix tree below the scanner's current word, calling
// visit(depth) for every surviving node strictly below the start depth.
// Returns the number of scanner extensions performed.
template <typename Visit>
std::uint64_t dfs_prune(EncounterScanner& sc, std::size_t max_depth, Visit&& visit) {
    std::uint64_t nodes = 0;
    const int q = sc.alphabet_size();
    auto rec = [&](auto&& self) -> void {
        if (sc.length() >= max_depth) return;
        for (int c = 0; c < q; ++c) {
            ++nodes;
            bool hit = sc.extend(std::uint8_t(c));
            if (!hit) {
                visit(sc);
                self(self);
            }
            sc.pop();
        }
    };
    rec(rec);
    return nodes;
}

EncounterScanner replay_prefix(std::uint32_t n, int q, const Word& prefix) {
    EncounterScanner sc(n, q);
    for (std::uint8_t c : prefix.letters) {
        if (sc.extend(c))
            throw precondition_error("prefix already contains an instance");
    }
    return sc;
}

Word snapshot(const EncounterScanner& sc, int q) {
    Word w;
    w.letters = sc.letters();
    w.alphabet_size = q;
    return w;
}

std::uint64_t now_ms_since(std::chrono::steady_clock::time_point t0) {
    return std::uint64_t(std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count());
}

// Fills counts (indexed by absolute length) and finds f within [1, cap].
void finalize_report(SearchReport& rep, std::size_t cap) {
    rep.f_value.reset();
    for (std::size_t L = 1; L <= cap; ++L) {
        if (rep.counts[L] == 0) {
            rep.f_value = L;
            rep.counts.resize(L);
            break;
        }
    }
}

} // namespace

SearchReport compute_f(std::uint32_t n, int q, std::size_t length_cap) {
    require_search_params(n, q);
    auto t0 = std::chrono::steady_clock::now();
    SearchReport rep;
    rep.n = n;
    rep.q = q;
    rep.counts.assign(length_cap + 1, 0);
    rep.counts[0] = 1; // the empty word avoids every Z_n with n >= 1

    EncounterScanner sc(n, q);
    rep.nodes_visited = dfs_prune(
        sc, length_cap, [&](const EncounterScanner& s) { ++rep.counts[s.length()]; });
    finalize_report(rep, length_cap);

    if (rep.f_value) {
        std::size_t want = std::size_t(*rep.f_value) - 1;
        if (want == 0) {
            rep.maximal_avoiders.push_back(make_word({}, q));
        } else {
            EncounterScanner sc2(n, q);
            dfs_prune(sc2, want, [&](const EncounterScanner& s) {
                if (s.length() == want) rep.maximal_avoiders.push_back(snapshot(s, q));
            });
        }
    }
    rep.wall_time_ms = now_ms_since(t0);
    return rep;
}

std::vector<Word> enumerate_avoiders(std::uint32_t n, int q,
                                     std::size_t up_to_length) {
    require_search_params(n, q);
    std::vector<std::vector<Word>> by_length(up_to_length + 1);
    by_length[0].push_back(make_word({}, q));
    EncounterScanner sc(n, q);
    dfs_prune(sc, up_to_length,
              [&](const EncounterScanner& s) { by_length[s.length()].push_back(snapshot(s, q)); });
    std::vector<Word> out;
    for (auto& level : by_length)
        for (auto& w : level) out.push_back(std::move(w));
    return out;
}

SearchReport parallel_partition(const std::vector<Word>& prefixes,
                                std::uint32_t n, int q, std::size_t length_cap,
                                int jobs) {
    require_search_params(n, q);
    if (prefixes.empty())
        throw precondition_error("empty partition");
    const std::size_t d = prefixes[0].size();
    if (d > length_cap)
        throw precondition_error("partition depth exceeds the length cap");
    for (const Word& p : prefixes) {
        if (p.size() != d)
            throw precondition_error("partition prefixes differ in length");
        for (std::uint8_t c : p.letters)
            if (int(c) >= q)
                throw precondition_error("prefix letter outside the alphabet");
    }
    {
        std::vector<Word> sorted = prefixes;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw precondition_error("partition contains duplicate prefixes");
    }
    // exactly q^d prefixes cover the frontier
    {
        std::uint64_t expect = 1;
        bool overflow = false;
        for (std::size_t i = 0; i < d; ++i) {
            if (expect > std::uint64_t(-1) / std::uint64_t(q)) {
                overflow = true;
                break;
            }
            expect *= std::uint64_t(q);
        }
        if (overflow || prefixes.size() != expect)
            throw precondition_error("partition does not cover the frontier");
    }

    auto t0 = std::chrono::steady_clock::now();
    SearchReport rep;
    rep.n = n;
    rep.q = q;
    rep.counts.assign(length_cap + 1, 0);
    rep.counts[0] = 1;

    // Short pass over depths 1..d; collects the surviving frontier words.
    std::vector<Word> alive;
    if (d == 0) {
        alive.push_back(make_word({}, q));
    } else {
        EncounterScanner sc(n, q);
        rep.nodes_visited += dfs_prune(sc, d, [&](const EncounterScanner& s) {
            ++rep.counts[s.length()];
            if (s.length() == d) alive.push_back(snapshot(s, q));
        });
    }

    // Subtree tasks, merged in lexicographic prefix order.
    if (jobs < 1) {
        unsigned hw = std::thread::hardware_concurrency();
        jobs = hw ? int(hw) : 4;
    }
    struct TaskResult {
        std::vector<std::uint64_t> counts;
        std::uint64_t nodes = 0;
    };
    std::vector<TaskResult> results(alive.size());
    {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= alive.size()) return;
                TaskResult& r = results[i];
                r.counts.assign(length_cap + 1, 0);
                EncounterScanner sc = replay_prefix(n, q, alive[i]);
                r.nodes = dfs_prune(sc, length_cap, [&](const EncounterScanner& s) {
                    ++r.counts[s.length()];
                });
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const TaskResult& r : results) {
        rep.nodes_visited += r.nodes;
        for (std::size_t L = d + 1; L <= length_cap; ++L) rep.counts[L] += r.counts[L];
    }
    finalize_report(rep, length_cap);

    if (rep.f_value) {
        std::size_t want = std::size_t(*rep.f_value) - 1;
        if (want == 0) {
            rep.maximal_avoiders.push_back(make_word({}, q));
        } else if (want <= d) {
            EncounterScanner sc(n, q);
            dfs_prune(sc, want, [&](const EncounterScanner& s) {
                if (s.length() == want) rep.maximal_avoiders.push_back(snapshot(s, q));
            });
        } else {
            std::vector<std::vector<Word>> found(alive.size());
            std::atomic<std::size_t> next{0};
            auto worker = [&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= alive.size()) return;
                    EncounterScanner sc = replay_prefix(n, q, alive[i]);
                    dfs_prune(sc, want, [&](const EncounterScanner& s) {
                        if (s.length() == want) found[i].push_back(snapshot(s, q));
                    });
                }
            };
            std::vector<std::thread> pool;
            for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
            for (auto& bucket : found)
                for (auto& w : bucket) rep.maximal_avoiders.push_back(std::move(w));
        }
    }
    rep.wall_time_ms = now_ms_since(t0);
    return rep;
}

} // namespace zimav
