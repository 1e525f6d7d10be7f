#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "zimav/zimav.h"

using json = nlohmann::json;

namespace {

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    zav_string_free(s);
    return out;
}

struct WordHandle {
    zav_word* w = nullptr;
    ~WordHandle() { zav_word_free(w); }
};

zav_word* must_parse(const char* text) {
    zav_word* w = nullptr;
    REQUIRE(zav_word_parse(text, &w) == ZAV_OK);
    return w;
}

json strip_time(const std::string& text) {
    json doc = json::parse(text);
    doc.erase("wall_time_ms");
    return doc;
}

} // namespace

TEST_CASE("version and error channel") {
    CHECK(std::string(zav_version()) == "1.0.0");

    zav_word* w = nullptr;
    CHECK(zav_word_parse("01a", &w) == ZAV_ERR_PARSE);
    CHECK(std::strlen(zav_last_error()) > 0);
    CHECK(w == nullptr);

    CHECK(zav_word_parse("0101", &w) == ZAV_OK);
    CHECK(std::string(zav_last_error()).empty());
    zav_word_free(w);

    CHECK(zav_word_parse(nullptr, &w) == ZAV_ERR_INVALID_ARGUMENT);
}

TEST_CASE("word handles round trip") {
    WordHandle h;
    h.w = must_parse("0010");
    CHECK(zav_word_length(h.w) == 4);
    CHECK(zav_word_alphabet(h.w) == 2);
    const uint8_t* data = zav_word_data(h.w);
    REQUIRE(data != nullptr);
    CHECK(data[0] == 0);
    CHECK(data[2] == 1);

    char* text = nullptr;
    REQUIRE(zav_word_render(h.w, ZAV_STYLE_BINARY, &text) == ZAV_OK);
    CHECK(take(text) == "0010");
    REQUIRE(zav_word_render(h.w, ZAV_STYLE_LETTERS, &text) == ZAV_OK);
    CHECK(take(text) == "aaba");

    WordHandle built;
    uint8_t letters[] = {0, 0, 1, 0};
    REQUIRE(zav_word_from_letters(letters, 4, 2, &built.w) == ZAV_OK);
    CHECK(zav_word_length(built.w) == 4);

    WordHandle bad;
    CHECK(zav_word_from_letters(letters, 4, 1, &bad.w) ==
          ZAV_ERR_INVALID_ARGUMENT);
}

TEST_CASE("zimin generation through the C layer") {
    WordHandle z3, r3;
    REQUIRE(zav_zimin(3, &z3.w) == ZAV_OK);
    REQUIRE(zav_zimin_ruler(3, &r3.w) == ZAV_OK);
    char* text = nullptr;
    REQUIRE(zav_word_render(z3.w, ZAV_STYLE_LETTERS, &text) == ZAV_OK);
    CHECK(take(text) == "abacaba");
    REQUIRE(zav_word_render(r3.w, ZAV_STYLE_LETTERS, &text) == ZAV_OK);
    CHECK(take(text) == "abacaba");

    WordHandle too_big;
    CHECK(zav_zimin(63, &too_big.w) == ZAV_ERR_SIZE_LIMIT);
}

TEST_CASE("encounter deciders agree through the C layer") {
    WordHandle h;
    h.w = must_parse("0010");
    int found = 0;
    size_t b = 99, e = 99;
    REQUIRE(zav_encounters_zimin(h.w, 2, &found, &b, &e) == ZAV_OK);
    CHECK(found == 1);
    CHECK(b == 1);
    CHECK(e == 4);

    int avoids = 0;
    REQUIRE(zav_verify_avoids(h.w, 2, &avoids, &b, &e) == ZAV_OK);
    CHECK(avoids == 0);
    CHECK(b == 0); // the verifier reports smallest start for the same end
    CHECK(e == 4);

    WordHandle clean;
    clean.w = must_parse("0011");
    REQUIRE(zav_verify_avoids(clean.w, 2, &avoids, nullptr, nullptr) == ZAV_OK);
    CHECK(avoids == 1);
}

TEST_CASE("scanner handle walks a word") {
    zav_scanner* sc = nullptr;
    REQUIRE(zav_scanner_new(2, 2, &sc) == ZAV_OK);

    size_t b = 0, e = 0;
    CHECK(zav_scanner_last_span(sc, &b, &e) == ZAV_ERR_INVALID_ARGUMENT);
    CHECK(zav_scanner_pop(sc) == ZAV_ERR_INVALID_ARGUMENT);

    int flagged = 0;
    for (uint8_t c : {0, 0, 1}) {
        REQUIRE(zav_scanner_extend(sc, c, &flagged) == ZAV_OK);
        CHECK(flagged == 0);
    }
    REQUIRE(zav_scanner_extend(sc, 0, &flagged) == ZAV_OK);
    CHECK(flagged == 1);
    REQUIRE(zav_scanner_last_span(sc, &b, &e) == ZAV_OK);
    CHECK(b == 1);
    CHECK(e == 4);

    REQUIRE(zav_scanner_pop(sc) == ZAV_OK);
    CHECK(zav_scanner_length(sc) == 3);
    REQUIRE(zav_scanner_extend(sc, 1, &flagged) == ZAV_OK);
    CHECK(flagged == 0);
    CHECK(zav_scanner_length(sc) == 4);

    zav_scanner_free(sc);
}

TEST_CASE("pattern matching and the published example witness") {
    zav_pattern* p = nullptr;
    REQUIRE(zav_pattern_parse("xyxzy", &p) == ZAV_OK);
    CHECK(zav_pattern_arity(p) == 3);
    char* text = nullptr;
    REQUIRE(zav_pattern_render(p, &text) == ZAV_OK);
    CHECK(take(text) == "xyxzy");

    WordHandle host;
    host.w = must_parse("abbcabbxdc");

    int found = 0;
    size_t b = 0, e = 0;
    REQUIRE(zav_encounters_pattern(host.w, p, &found, &b, &e) == ZAV_OK);
    CHECK(found == 1);
    CHECK(b == 0);
    CHECK(e == 10);

    char* witness = nullptr;
    REQUIRE(zav_pattern_witness(host.w, p, ZAV_STYLE_LETTERS, &found,
                                &witness) == ZAV_OK);
    REQUIRE(found == 1);
    json doc = json::parse(take(witness));
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["pattern"] == "xyxzy");
    CHECK(doc["span"]["begin"] == 0);
    CHECK(doc["span"]["end"] == 10);
    REQUIRE(doc["images"].size() == 3);
    CHECK(doc["images"][0]["variable"] == "x");
    CHECK(doc["images"][0]["image"] == "abb");
    CHECK(doc["images"][1]["variable"] == "y");
    CHECK(doc["images"][1]["image"] == "c");
    CHECK(doc["images"][2]["variable"] == "z");
    CHECK(doc["images"][2]["image"] == "xd");

    zav_pattern_free(p);
}

TEST_CASE("unavoidability verdicts") {
    zav_pattern* p = nullptr;
    REQUIRE(zav_pattern_parse("xyx", &p) == ZAV_OK);
    int verdict = -1;
    REQUIRE(zav_pattern_unavoidable(p, 0, &verdict) == ZAV_OK);
    CHECK(verdict == 1);
    zav_pattern_free(p);

    REQUIRE(zav_pattern_parse("xx", &p) == ZAV_OK);
    REQUIRE(zav_pattern_unavoidable(p, 0, &verdict) == ZAV_OK);
    CHECK(verdict == 0);
    zav_pattern_free(p);

    // arity 21 needs a host of 2^21 - 1 letters; a 2^20 cap refuses
    std::string wide;
    for (int i = 0; i < 21; ++i) wide += char('a' + i);
    REQUIRE(zav_pattern_parse(wide.c_str(), &p) == ZAV_OK);
    CHECK(zav_pattern_unavoidable(p, 1 << 20, &verdict) == ZAV_ERR_SIZE_LIMIT);
    zav_pattern_free(p);

    CHECK(zav_pattern_parse("x1x", &p) == ZAV_ERR_PARSE);
}

TEST_CASE("threshold search report") {
    char* out = nullptr;
    REQUIRE(zav_search_f(2, 2, 0, 1, &out) == ZAV_OK);
    json doc = json::parse(take(out));
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["n"] == 2);
    CHECK(doc["q"] == 2);
    CHECK(doc["f_value"] == 5);
    CHECK(doc["counts"] == json::array({1, 2, 4, 4, 2}));
    CHECK(doc["maximal_avoiders"] == json::array({"0011", "1100"}));
    CHECK(doc["nodes_visited"].is_number());
    CHECK(doc["wall_time_ms"].is_number());
}

TEST_CASE("parallel search matches single-threaded byte for byte") {
    char* single = nullptr;
    char* parallel = nullptr;
    REQUIRE(zav_search_f(3, 2, 0, 1, &single) == ZAV_OK);
    REQUIRE(zav_search_f(3, 2, 0, 4, &parallel) == ZAV_OK);
    json a = strip_time(take(single));
    json b = strip_time(take(parallel));
    CHECK(a.dump() == b.dump());
}

TEST_CASE("search capped below the threshold reports no f") {
    char* out = nullptr;
    REQUIRE(zav_search_f(3, 2, 10, 1, &out) == ZAV_OK);
    json doc = json::parse(take(out));
    CHECK(doc["f_value"].is_null());
    CHECK(doc["counts"].size() == 11);
    CHECK(doc["maximal_avoiders"].empty());
}

TEST_CASE("avoider enumeration lists words in length-lex order") {
    char* out = nullptr;
    REQUIRE(zav_enumerate_avoiders(2, 2, 9, &out) == ZAV_OK);
    json doc = json::parse(take(out));
    CHECK(doc["up_to_length"] == 9);
    json expected = json::array({"", "0", "1", "00", "01", "10", "11", "001",
                                 "011", "100", "110", "0011", "1100"});
    CHECK(doc["words"] == expected);
}

TEST_CASE("witness search over an exhaustible tree") {
    char* out = nullptr;
    REQUIRE(zav_witness_search(2, 2, 99, 1, nullptr, 0, 0, 0, 0, &out) ==
            ZAV_OK);
    json doc = json::parse(take(out));
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["reached_target"] == false);
    CHECK(doc["exhausted"] == true);
    CHECK(doc["best_length"] == 4);
    std::string best = doc["best"];
    CHECK((best == "0011" || best == "1100"));

    CHECK(zav_witness_search(2, 2, 99, 1, nullptr, 1, 0, 0, 0, &out) ==
          ZAV_ERR_INVALID_ARGUMENT); // resume without a checkpoint path
    CHECK(zav_witness_search(2, 2, 99, 1, "no_such_checkpoint.json", 1, 0, 0, 0,
                             &out) == ZAV_ERR_BAD_CHECKPOINT);
}

TEST_CASE("exact counting and rationals render as text") {
    char* out = nullptr;
    REQUIRE(zav_count_instances(2, 2, 3, 0, 1, &out) == ZAV_OK);
    CHECK(take(out) == "4");

    REQUIRE(zav_monotonicity(2, 2, 3, 0, 2, &out) == ZAV_OK);
    json doc = json::parse(take(out));
    CHECK(doc["count_at_M"] == "4");
    CHECK(doc["count_at_M_plus_1"] == "8");
    CHECK(doc["holds"] == true);
    CHECK(doc["equality"] == true);

    REQUIRE(zav_lemma2_bound(2, 2, 2, &out) == ZAV_OK);
    CHECK(take(out) == "4");
    REQUIRE(zav_lemma2_bound(3, 2, 1, &out) == ZAV_OK);
    CHECK(take(out) == "1/2");

    REQUIRE(zav_instance_probability(2, 2, 3, 0, 1, &out) == ZAV_OK);
    CHECK(take(out) == "1/2");

    CHECK(zav_count_instances(2, 2, 64, 0, 1, &out) == ZAV_ERR_SIZE_LIMIT);
    CHECK(zav_lemma2_bound(2, 1, 2, &out) == ZAV_ERR_INVALID_ARGUMENT);
}

TEST_CASE("bound evaluations through the C layer") {
    char* out = nullptr;
    REQUIRE(zav_tower_upper_bound(3, 2, 0, &out) == ZAV_OK);
    CHECK(take(out) == "3125");
    REQUIRE(zav_recurrence_upper_bound(3, 2, 0, &out) == ZAV_OK);
    CHECK(take(out) == "197");
    REQUIRE(zav_tower_upper_bound(5, 2, 0, &out) == ZAV_OK);
    CHECK(take(out) == "tower(base=5, height=4)");

    REQUIRE(zav_moment_expectation(3, 2, "2", &out) == ZAV_OK);
    CHECK(take(out) == "3/4");
    REQUIRE(zav_moment_expectation(3, 2, "3", &out) == ZAV_OK);
    CHECK(take(out) == "3/2");
    CHECK(zav_moment_expectation(3, 2, "12x", &out) == ZAV_ERR_PARSE);
    CHECK(zav_moment_expectation(3, 2, "-3", &out) == ZAV_ERR_INVALID_ARGUMENT);

    REQUIRE(zav_first_moment_max_length(4, 2, 0, &out) == ZAV_OK);
    CHECK(take(out) == "22");
}

TEST_CASE("composite bounds report") {
    char* out = nullptr;
    REQUIRE(zav_bounds_report(3, 2, 7, 0, 2, &out) == ZAV_OK);
    json doc = json::parse(take(out));
    CHECK(doc["tower"] == "3125");
    CHECK(doc["recurrence"] == "197");
    CHECK(doc["first_moment_max_length"] == "2");
    REQUIRE(doc["sweep"].size() == 8);
    CHECK(doc["sweep"][7]["count"] == "8");
    CHECK(doc["sweep"][7]["count_le_bound"] == true);
    CHECK(doc["sweep"][7]["monotone_from_prev"] == true);

    REQUIRE(zav_bounds_report(3, 2, -1, 0, 1, &out) == ZAV_OK);
    doc = json::parse(take(out));
    CHECK(doc["sweep"].empty());
}

TEST_CASE("bitmap rendering through handles") {
    WordHandle h;
    h.w = must_parse("0110");
    char* img = nullptr;
    REQUIRE(zav_pbm_encode(h.w, 3, &img) == ZAV_OK);
    std::string text = take(img);
    CHECK(text == "P1\n# pad=2\n3 2\n011\n000\n");

    WordHandle back;
    REQUIRE(zav_pbm_decode(text.c_str(), &back.w) == ZAV_OK);
    CHECK(zav_word_length(back.w) == 4);
    char* rendered = nullptr;
    REQUIRE(zav_word_render(back.w, ZAV_STYLE_BINARY, &rendered) == ZAV_OK);
    CHECK(take(rendered) == "0110");

    WordHandle ternary;
    uint8_t letters[] = {0, 1, 2};
    REQUIRE(zav_word_from_letters(letters, 3, 3, &ternary.w) == ZAV_OK);
    CHECK(zav_pbm_encode(ternary.w, 0, &img) == ZAV_ERR_INVALID_ARGUMENT);

    CHECK(zav_pbm_decode("P5 garbage", &back.w) == ZAV_ERR_PARSE);
}
