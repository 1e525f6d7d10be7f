#include <algorithm>
#include <random>

#include "doctest.h"

#include "core/errors.hpp"
#include "core/word.hpp"

using namespace zimav;

namespace {

Word from_string(std::string_view s) { return parse_word(s); }

} // namespace

TEST_CASE("zimin words by doubling") {
    CHECK(zimin(0).empty());
    CHECK(zimin(0).alphabet_size == 1);
    CHECK(zimin(1).letters == std::vector<std::uint8_t>{0});
    CHECK(zimin(2).letters == std::vector<std::uint8_t>{0, 1, 0});
    CHECK(zimin(3).letters == std::vector<std::uint8_t>{0, 1, 0, 2, 0, 1, 0});
    CHECK(render_word(zimin(3), WordStyle::Letters) == "abacaba");
    CHECK(zimin(4).size() == 15);
    CHECK(zimin(4).alphabet_size == 4);
    for (std::uint32_t n = 0; n <= 16; ++n) {
        CHECK(zimin(n).size() == (std::size_t{1} << n) - 1);
    }
}

TEST_CASE("ruler construction matches the doubling recursion") {
    for (std::uint32_t n = 0; n <= 16; ++n) {
        Word a = zimin(n);
        Word b = zimin_ruler(n);
        CHECK(a == b);
        CHECK(a.alphabet_size == b.alphabet_size);
    }
}

TEST_CASE("zimin index cap") {
    CHECK_THROWS_AS((void)zimin(63), size_error);
    CHECK_THROWS_AS((void)zimin_ruler(63), size_error);
    CHECK_THROWS_AS((void)zimin(5, 4), size_error);
    CHECK_NOTHROW((void)zimin(4, 4));
}

TEST_CASE("bisecting borders, direct route") {
    CHECK(bisecting_borders(from_string("aba")) == std::vector<std::size_t>{1});
    CHECK(bisecting_borders(from_string("ab")).empty());
    CHECK(bisecting_borders(Word{}).empty());
    CHECK(bisecting_borders(from_string("aa")).empty());
    CHECK(bisecting_borders(from_string("aaa")) == std::vector<std::size_t>{1});
    // "aabaab" has the border "aab", but its copies overlap the middle.
    CHECK(bisecting_borders(from_string("aabaab")).empty());
    CHECK(bisecting_borders(from_string("abaaba")) == std::vector<std::size_t>{1});
    CHECK(bisecting_borders(zimin(3)) == std::vector<std::size_t>{1, 3});
    CHECK(bisecting_borders(zimin(4)) == std::vector<std::size_t>{1, 3, 7});
}

TEST_CASE("bisecting borders, prefix-function route agrees") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 300; ++trial) {
        int q = 1 + int(rng() % 3);
        std::size_t len = rng() % 40;
        std::vector<std::uint8_t> letters(len);
        for (auto& c : letters) c = std::uint8_t(rng() % q);
        Word w = make_word(std::move(letters), q);
        CHECK(bisecting_borders(w) == bisecting_borders_via_prefix_function(w));
    }
    for (std::uint32_t n = 0; n <= 12; ++n) {
        Word z = zimin(n);
        CHECK(bisecting_borders(z) == bisecting_borders_via_prefix_function(z));
    }
}

TEST_CASE("complement and reverse") {
    CHECK(render_word(complement(from_string("0101")), WordStyle::Binary) == "1010");
    CHECK(render_word(reverse(from_string("001")), WordStyle::Binary) == "100");
    CHECK_THROWS_AS((void)complement(from_string("abc")), domain_error);

    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t len = rng() % 30;
        std::vector<std::uint8_t> letters(len);
        for (auto& c : letters) c = std::uint8_t(rng() % 2);
        Word w = make_word(std::move(letters), 2);
        CHECK(complement(complement(w)) == w);
        CHECK(reverse(reverse(w)) == w);
        CHECK(reverse(complement(w)) == complement(reverse(w)));
    }
}

TEST_CASE("make_word validation") {
    CHECK_THROWS_AS((void)make_word({0, 2}, 2), domain_error);
    CHECK_THROWS_AS((void)make_word({}, 0), domain_error);
    CHECK_THROWS_AS((void)make_word({}, 300), domain_error);
    CHECK(make_word({0, 1, 1}, 2).size() == 3);
}

TEST_CASE("parsing and rendering") {
    auto [empty, empty_style] = parse_word_styled("");
    CHECK(empty.empty());
    CHECK(empty.alphabet_size == 2);
    CHECK(empty_style == WordStyle::Binary);

    auto [bin, bin_style] = parse_word_styled("0010");
    CHECK(bin_style == WordStyle::Binary);
    CHECK(bin.alphabet_size == 2);
    CHECK(bin.letters == std::vector<std::uint8_t>{0, 0, 1, 0});

    auto [gen, gen_style] = parse_word_styled("abacaba");
    CHECK(gen_style == WordStyle::Letters);
    CHECK(gen.alphabet_size == 3);
    CHECK(gen == zimin(3));

    auto [big, big_style] = parse_word_styled("aBc");
    CHECK(big_style == WordStyle::Letters);
    CHECK(big.alphabet_size == 28);
    CHECK(big.letters == std::vector<std::uint8_t>{0, 27, 2});

    CHECK_THROWS_AS((void)parse_word("0a"), parse_error);
    CHECK_THROWS_AS((void)parse_word("01 0"), parse_error);
    CHECK_THROWS_AS((void)parse_word("2"), parse_error);

    CHECK(render_word(from_string("0110"), WordStyle::Binary) == "0110");
    CHECK(render_word(from_string("0110"), WordStyle::Letters) == "abba");
    CHECK_THROWS_AS((void)render_word(zimin(3), WordStyle::Binary), domain_error);
    CHECK_THROWS_AS((void)render_word(make_word({60}, 61), WordStyle::Letters),
                    size_error);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        int q = 1 + int(rng() % 6);
        std::size_t len = rng() % 25;
        std::vector<std::uint8_t> letters(len);
        for (auto& c : letters) c = std::uint8_t(rng() % q);
        Word w = make_word(std::move(letters), q);
        std::string text = render_word(w, WordStyle::Letters);
        Word back = parse_word(text);
        CHECK(back.letters == w.letters);
    }
}
