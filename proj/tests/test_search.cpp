#include <algorithm>
#include <set>

#include "doctest.h"

#include "core/errors.hpp"
#include "core/search.hpp"
#include "core/zimin_check.hpp"

using namespace zimav;

namespace {

bool reports_equal_modulo_time(const SearchReport& a, const SearchReport& b) {
    return a.n == b.n && a.q == b.q && a.f_value == b.f_value &&
           a.counts == b.counts && a.maximal_avoiders == b.maximal_avoiders &&
           a.nodes_visited == b.nodes_visited;
}

std::vector<Word> all_words(int q, std::size_t len) {
    std::vector<Word> out;
    std::vector<std::uint8_t> cur(len, 0);
    for (;;) {
        out.push_back(make_word(cur, q));
        std::size_t pos = len;
        while (pos > 0) {
            if (++cur[pos - 1] < q) break;
            cur[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) break;
    }
    return out;
}

} // namespace

TEST_CASE("thresholds for the first two levels") {
    auto r1 = compute_f(1, 2);
    REQUIRE(r1.f_value.has_value());
    CHECK(*r1.f_value == 1);
    CHECK(r1.counts == std::vector<std::uint64_t>{1});
    REQUIRE(r1.maximal_avoiders.size() == 1);
    CHECK(r1.maximal_avoiders[0].empty());

    auto r2 = compute_f(2, 2);
    REQUIRE(r2.f_value.has_value());
    CHECK(*r2.f_value == 5);
    CHECK(r2.counts == std::vector<std::uint64_t>{1, 2, 4, 4, 2});
    REQUIRE(r2.maximal_avoiders.size() == 2);
    CHECK(render_word(r2.maximal_avoiders[0], WordStyle::Binary) == "0011");
    CHECK(render_word(r2.maximal_avoiders[1], WordStyle::Binary) == "1100");

    auto r23 = compute_f(2, 3);
    REQUIRE(r23.f_value.has_value());
    CHECK(*r23.f_value == 7);
    CHECK(r23.counts == std::vector<std::uint64_t>{1, 3, 9, 18, 24, 18, 6});
    CHECK(r23.maximal_avoiders.size() == 6);
}

TEST_CASE("third threshold and its maximal avoiders") {
    auto r = compute_f(3, 2);
    REQUIRE(r.f_value.has_value());
    CHECK(*r.f_value == 29);
    CHECK(r.counts.size() == 29);
    CHECK(r.counts[28] == 48);
    REQUIRE(r.maximal_avoiders.size() == 48);
    CHECK(std::is_sorted(r.maximal_avoiders.begin(), r.maximal_avoiders.end()));
    CHECK(render_word(r.maximal_avoiders.front(), WordStyle::Binary) ==
          "0010010011011011111100000011");

    std::set<Word> maximal(r.maximal_avoiders.begin(), r.maximal_avoiders.end());
    for (const Word& w : r.maximal_avoiders) {
        CHECK(w.size() == 28);
        CHECK(verify_avoids(w, 3).avoids);
        CHECK(maximal.count(complement(w)) == 1);
        CHECK(maximal.count(reverse(w)) == 1);
        // maximality: every extension hits an instance
        for (std::uint8_t c : {0, 1}) {
            Word ext = w;
            ext.letters.push_back(c);
            CHECK_FALSE(verify_avoids(ext, 3).avoids);
        }
    }

    // monotone level counts: each avoider extends an avoider
    for (std::size_t L = 0; L + 1 < r.counts.size(); ++L)
        CHECK(r.counts[L + 1] <= 2 * r.counts[L]);
}

TEST_CASE("cap reached leaves the threshold open") {
    auto r = compute_f(3, 2, 10);
    CHECK_FALSE(r.f_value.has_value());
    CHECK(r.counts.size() == 11);
    CHECK(r.maximal_avoiders.empty());
    for (std::uint64_t c : r.counts) CHECK(c > 0);
}

TEST_CASE("avoider enumeration in length-lex order") {
    auto only_empty = enumerate_avoiders(1, 2, 5);
    REQUIRE(only_empty.size() == 1);
    CHECK(only_empty[0].empty());

    auto thirteen = enumerate_avoiders(2, 2, 4);
    std::vector<std::string> expect = {"",    "0",   "1",   "00",  "01",
                                       "10",  "11",  "001", "011", "100",
                                       "110", "0011", "1100"};
    REQUIRE(thirteen.size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i)
        CHECK(render_word(thirteen[i], WordStyle::Binary) == expect[i]);

    // stable under a longer horizon: no binary Z_2-avoider beyond length 4
    CHECK(enumerate_avoiders(2, 2, 9).size() == 13);

    auto deep = enumerate_avoiders(3, 2, 28);
    std::size_t longest = 0;
    for (const Word& w : deep) longest = std::max(longest, w.size());
    CHECK(longest == 28);
    CHECK(std::count_if(deep.begin(), deep.end(),
                        [](const Word& w) { return w.size() == 28; }) == 48);
}

TEST_CASE("pruning decisions match the naive verifier exhaustively") {
    for (std::uint32_t n = 2; n <= 3; ++n) {
        std::set<Word> avoiders;
        for (const Word& w : enumerate_avoiders(n, 2, 12)) avoiders.insert(w);
        for (std::size_t len = 0; len <= 12; ++len) {
            for (const Word& w : all_words(2, len)) {
                CHECK(avoiders.count(w) == std::size_t(verify_avoids(w, n).avoids));
            }
        }
    }
}

TEST_CASE("partitioned search merges to the single-threaded report") {
    auto single22 = compute_f(2, 2);
    auto part22 = parallel_partition(all_words(2, 1), 2, 2);
    CHECK(reports_equal_modulo_time(single22, part22));

    auto single32 = compute_f(3, 2, 32);
    auto part32 = parallel_partition(all_words(2, 2), 3, 2, 32);
    CHECK(reports_equal_modulo_time(single32, part32));
    auto part32d4 = parallel_partition(all_words(2, 4), 3, 2, 32, 3);
    CHECK(reports_equal_modulo_time(single32, part32d4));

    auto trivial = parallel_partition({make_word({}, 2)}, 2, 2);
    CHECK(reports_equal_modulo_time(single22, trivial));

    auto single23 = compute_f(2, 3, 16);
    auto part23 = parallel_partition(all_words(3, 2), 2, 3, 16);
    CHECK(reports_equal_modulo_time(single23, part23));
}

TEST_CASE("partition preconditions") {
    CHECK_THROWS_AS((void)parallel_partition({}, 2, 2), precondition_error);

    auto dup = all_words(2, 1);
    dup[1] = dup[0];
    CHECK_THROWS_AS((void)parallel_partition(dup, 2, 2), precondition_error);

    auto incomplete = all_words(2, 2);
    incomplete.pop_back();
    CHECK_THROWS_AS((void)parallel_partition(incomplete, 2, 2), precondition_error);

    auto mixed = all_words(2, 1);
    mixed.push_back(make_word({0, 1}, 2));
    CHECK_THROWS_AS((void)parallel_partition(mixed, 2, 2), precondition_error);

    CHECK_THROWS_AS((void)parallel_partition(all_words(3, 1), 2, 2),
                    precondition_error);
    CHECK_THROWS_AS((void)parallel_partition(all_words(2, 6), 2, 2, 4),
                    precondition_error);
}
