#include "zimav/zimav.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "core/bounds.hpp"
#include "core/errors.hpp"
#include "core/pattern.hpp"
#include "core/pbm.hpp"
#include "core/search.hpp"
#include "core/witness.hpp"
#include "core/word.hpp"
#include "core/zimin_check.hpp"

using json = nlohmann::ordered_json;

struct zav_word {
    zimav::Word w;
};
struct zav_pattern {
    zimav::Pattern p;
};
struct zav_scanner {
    zimav::EncounterScanner sc;
    explicit zav_scanner(std::uint32_t n, int q) : sc(n, q) {}
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* what) { g_last_error = what ? what : ""; }

template <typename F>
zav_status guarded(F&& body) noexcept {
    try {
        body();
        g_last_error.clear();
        return ZAV_OK;
    } catch (const zimav::parse_error& e) {
        set_error(e.what());
        return ZAV_ERR_PARSE;
    } catch (const zimav::size_error& e) {
        set_error(e.what());
        return ZAV_ERR_SIZE_LIMIT;
    } catch (const zimav::io_error& e) {
        set_error(e.what());
        return ZAV_ERR_IO;
    } catch (const zimav::checkpoint_error& e) {
        set_error(e.what());
        return ZAV_ERR_BAD_CHECKPOINT;
    } catch (const zimav::error& e) {
        // domain_error, precondition_error
        set_error(e.what());
        return ZAV_ERR_INVALID_ARGUMENT;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return ZAV_ERR_PARSE;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return ZAV_ERR_NOMEM;
    } catch (const std::exception& e) {
        set_error(e.what());
        return ZAV_ERR_INTERNAL;
    } catch (...) {
        set_error("unknown failure");
        return ZAV_ERR_INTERNAL;
    }
}

void require(bool ok, const char* message) {
    if (!ok) throw zimav::precondition_error(message);
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

zimav::WordStyle to_style(zav_style style) {
    switch (style) {
    case ZAV_STYLE_BINARY:
        return zimav::WordStyle::Binary;
    case ZAV_STYLE_LETTERS:
        return zimav::WordStyle::Letters;
    }
    throw zimav::precondition_error("unknown rendering style");
}

// reports render binary alphabets as 0/1 to match published word lists
zimav::WordStyle report_style(int q) {
    return q <= 2 ? zimav::WordStyle::Binary : zimav::WordStyle::Letters;
}

void store_span(const zimav::Span& s, size_t* begin, size_t* end) {
    if (begin) *begin = s.begin;
    if (end) *end = s.end;
}

json search_report_json(const zimav::SearchReport& rep) {
    json counts = json::array();
    for (std::uint64_t c : rep.counts) counts.push_back(c);
    json maximal = json::array();
    for (const zimav::Word& w : rep.maximal_avoiders)
        maximal.push_back(render_word(w, report_style(rep.q)));
    json doc;
    doc["schema_version"] = 1;
    doc["n"] = rep.n;
    doc["q"] = rep.q;
    if (rep.f_value)
        doc["f_value"] = *rep.f_value;
    else
        doc["f_value"] = nullptr;
    doc["counts"] = counts;
    doc["maximal_avoiders"] = maximal;
    doc["nodes_visited"] = rep.nodes_visited;
    doc["wall_time_ms"] = rep.wall_time_ms;
    return doc;
}

// all q^d words of length d in lex order, sized so every job gets work
std::vector<zimav::Word> partition_frontier(int q, std::size_t cap, int jobs,
                                            std::size_t* depth_out) {
    std::size_t d = 1;
    std::size_t leaves = std::size_t(q);
    auto enough = [&] { return leaves >= std::size_t(jobs) * 4; };
    while (!enough() && d < cap && leaves <= 4096 / std::size_t(q)) {
        ++d;
        leaves *= std::size_t(q);
    }
    std::vector<zimav::Word> out;
    out.reserve(leaves);
    std::vector<std::uint8_t> letters(d, 0);
    for (;;) {
        out.push_back(zimav::make_word(letters, q));
        std::size_t i = d;
        while (i > 0 && letters[i - 1] == q - 1) letters[--i] = 0;
        if (i == 0) break;
        ++letters[i - 1];
    }
    *depth_out = d;
    return out;
}

std::string mpq_text(const mpq_class& v) { return v.get_str(); }

} // namespace

extern "C" {

const char* zav_version(void) { return "1.0.0"; }

const char* zav_last_error(void) { return g_last_error.c_str(); }

void zav_string_free(char* s) { std::free(s); }

/* ---- words ---------------------------------------------------------- */

zav_status zav_word_parse(const char* text, zav_word** out) {
    return guarded([&] {
        require(text && out, "text and out must be non-NULL");
        auto w = new zav_word{zimav::parse_word(text)};
        *out = w;
    });
}

zav_status zav_word_from_letters(const uint8_t* letters, size_t len,
                                 int alphabet_size, zav_word** out) {
    return guarded([&] {
        require(out && (letters || len == 0), "letters and out must be non-NULL");
        std::vector<std::uint8_t> v(letters, letters + len);
        auto w = new zav_word{zimav::make_word(std::move(v), alphabet_size)};
        *out = w;
    });
}

void zav_word_free(zav_word* w) { delete w; }

size_t zav_word_length(const zav_word* w) { return w ? w->w.size() : 0; }

int zav_word_alphabet(const zav_word* w) { return w ? w->w.alphabet_size : 0; }

const uint8_t* zav_word_data(const zav_word* w) {
    return w ? w->w.letters.data() : nullptr;
}

zav_status zav_word_render(const zav_word* w, zav_style style, char** out) {
    return guarded([&] {
        require(w && out, "word and out must be non-NULL");
        *out = dup_string(render_word(w->w, to_style(style)));
    });
}

zav_status zav_zimin(uint32_t n, zav_word** out) {
    return guarded([&] {
        require(out != nullptr, "out must be non-NULL");
        *out = new zav_word{zimav::zimin(n)};
    });
}

zav_status zav_zimin_ruler(uint32_t n, zav_word** out) {
    return guarded([&] {
        require(out != nullptr, "out must be non-NULL");
        *out = new zav_word{zimav::zimin_ruler(n)};
    });
}

/* ---- encounter deciders --------------------------------------------- */

zav_status zav_encounters_zimin(const zav_word* w, uint32_t n, int* found,
                                size_t* begin, size_t* end) {
    return guarded([&] {
        require(w && found, "word and found must be non-NULL");
        auto span = zimav::encounters_zimin(w->w, n);
        *found = span.has_value() ? 1 : 0;
        if (span) store_span(*span, begin, end);
    });
}

zav_status zav_verify_avoids(const zav_word* w, uint32_t n, int* avoids,
                             size_t* begin, size_t* end) {
    return guarded([&] {
        require(w && avoids, "word and avoids must be non-NULL");
        auto res = zimav::verify_avoids(w->w, n);
        *avoids = res.avoids ? 1 : 0;
        if (res.violation) store_span(*res.violation, begin, end);
    });
}

zav_status zav_scanner_new(uint32_t n, int alphabet_size, zav_scanner** out) {
    return guarded([&] {
        require(out != nullptr, "out must be non-NULL");
        *out = new zav_scanner(n, alphabet_size);
    });
}

void zav_scanner_free(zav_scanner* sc) { delete sc; }

zav_status zav_scanner_extend(zav_scanner* sc, uint8_t letter, int* flagged) {
    return guarded([&] {
        require(sc && flagged, "scanner and flagged must be non-NULL");
        *flagged = sc->sc.extend(letter) ? 1 : 0;
    });
}

zav_status zav_scanner_pop(zav_scanner* sc) {
    return guarded([&] {
        require(sc != nullptr, "scanner must be non-NULL");
        require(sc->sc.length() > 0, "cannot pop the empty word");
        sc->sc.pop();
    });
}

size_t zav_scanner_length(const zav_scanner* sc) {
    return sc ? sc->sc.length() : 0;
}

zav_status zav_scanner_last_span(zav_scanner* sc, size_t* begin, size_t* end) {
    return guarded([&] {
        require(sc != nullptr, "scanner must be non-NULL");
        store_span(sc->sc.last_instance_span(), begin, end);
    });
}

/* ---- patterns -------------------------------------------------------- */

zav_status zav_pattern_parse(const char* text, zav_pattern** out) {
    return guarded([&] {
        require(text && out, "text and out must be non-NULL");
        *out = new zav_pattern{zimav::parse_pattern(text)};
    });
}

void zav_pattern_free(zav_pattern* p) { delete p; }

int zav_pattern_arity(const zav_pattern* p) { return p ? p->p.arity() : 0; }

zav_status zav_pattern_render(const zav_pattern* p, char** out) {
    return guarded([&] {
        require(p && out, "pattern and out must be non-NULL");
        *out = dup_string(render_pattern(p->p));
    });
}

zav_status zav_encounters_pattern(const zav_word* w, const zav_pattern* p,
                                  int* found, size_t* begin, size_t* end) {
    return guarded([&] {
        require(w && p && found, "word, pattern and found must be non-NULL");
        auto wit = zimav::encounters_pattern(w->w, p->p);
        *found = wit.has_value() ? 1 : 0;
        if (wit) store_span(wit->span, begin, end);
    });
}

zav_status zav_pattern_witness(const zav_word* w, const zav_pattern* p,
                               zav_style style, int* found, char** out_json) {
    return guarded([&] {
        require(w && p && found && out_json,
                "word, pattern, found and out must be non-NULL");
        zimav::WordStyle st = to_style(style);
        auto wit = zimav::encounters_pattern(w->w, p->p);
        *found = wit.has_value() ? 1 : 0;
        if (!wit) return;
        json images = json::array();
        for (int v = 0; v < p->p.arity(); ++v) {
            images.push_back(
                json{{"variable", std::string(1, p->p.names[std::size_t(v)])},
                     {"image", render_word(wit->images[std::size_t(v)], st)}});
        }
        json doc;
        doc["schema_version"] = 1;
        doc["pattern"] = render_pattern(p->p);
        doc["span"] = json{{"begin", wit->span.begin}, {"end", wit->span.end}};
        doc["images"] = images;
        *out_json = dup_string(doc.dump());
    });
}

zav_status zav_pattern_unavoidable(const zav_pattern* p, size_t length_cap,
                                   int* unavoidable) {
    return guarded([&] {
        require(p && unavoidable, "pattern and out must be non-NULL");
        std::size_t cap = length_cap == 0 ? (std::size_t{1} << 20) : length_cap;
        *unavoidable = zimav::is_unavoidable(p->p, cap) ? 1 : 0;
    });
}

/* ---- exhaustive search ------------------------------------------------ */

zav_status zav_search_f(uint32_t n, int q, size_t length_cap, int jobs,
                        char** out_json) {
    return guarded([&] {
        require(out_json != nullptr, "out must be non-NULL");
        std::size_t cap = length_cap == 0 ? zimav::kDefaultLengthCap : length_cap;
        zimav::SearchReport rep;
        if (jobs <= 1) {
            rep = zimav::compute_f(n, q, cap);
        } else {
            std::size_t depth = 0;
            auto frontier = partition_frontier(q, cap, jobs, &depth);
            rep = zimav::parallel_partition(frontier, n, q, cap, jobs);
        }
        *out_json = dup_string(search_report_json(rep).dump());
    });
}

zav_status zav_enumerate_avoiders(uint32_t n, int q, size_t up_to_length,
                                  char** out_json) {
    return guarded([&] {
        require(out_json != nullptr, "out must be non-NULL");
        auto words = zimav::enumerate_avoiders(n, q, up_to_length);
        json list = json::array();
        for (const zimav::Word& w : words)
            list.push_back(render_word(w, report_style(q)));
        json doc;
        doc["schema_version"] = 1;
        doc["n"] = n;
        doc["q"] = q;
        doc["up_to_length"] = up_to_length;
        doc["words"] = list;
        *out_json = dup_string(doc.dump());
    });
}

/* ---- randomized witness search ---------------------------------------- */

zav_status zav_witness_search(uint32_t n, int q, size_t target_length,
                              uint64_t seed, const char* checkpoint_path,
                              int resume, double time_budget_seconds,
                              uint64_t node_budget, uint64_t restart_after,
                              char** out_json) {
    return guarded([&] {
        require(out_json != nullptr, "out must be non-NULL");
        zimav::WitnessSearchOptions opts;
        opts.n = n;
        opts.q = q;
        opts.target_length = target_length;
        opts.seed = seed;
        opts.checkpoint_path = checkpoint_path ? checkpoint_path : "";
        opts.resume = resume != 0;
        opts.time_budget_seconds = time_budget_seconds;
        opts.node_budget = node_budget;
        opts.restart_after = restart_after;
        auto res = zimav::long_witness_search(opts);
        json doc;
        doc["schema_version"] = 1;
        doc["n"] = n;
        doc["q"] = q;
        doc["seed"] = seed;
        doc["best"] = render_word(res.best, report_style(q));
        doc["best_length"] = res.best.size();
        doc["current_length"] = res.current.size();
        doc["nodes"] = res.nodes;
        doc["restarts"] = res.restarts;
        doc["reached_target"] = res.reached_target;
        doc["exhausted"] = res.exhausted;
        doc["wall_time_ms"] = res.wall_time_ms;
        *out_json = dup_string(doc.dump());
    });
}

/* ---- exact counts and bounds ------------------------------------------ */

zav_status zav_count_instances(uint32_t n, int q, uint32_t M,
                               unsigned long budget, int jobs, char** out) {
    return guarded([&] {
        require(out != nullptr, "out must be non-NULL");
        unsigned long b = budget == 0 ? zimav::kDefaultEnumBudget : budget;
        auto res = zimav::count_instances(n, q, M, b, jobs);
        *out = dup_string(res.count.get_str());
    });
}

zav_status zav_monotonicity(uint32_t n, int q, uint32_t M,
                            unsigned long budget, int jobs, char** out_json) {
    return guarded([&] {
        require(out_json != nullptr, "out must be non-NULL");
        unsigned long b = budget == 0 ? zimav::kDefaultEnumBudget : budget;
        auto rep = zimav::check_monotonicity(n, q, M, b, jobs);
        json doc;
        doc["schema_version"] = 1;
        doc["n"] = n;
        doc["q"] = q;
        doc["M"] = M;
        doc["count_at_M"] = rep.at_M.count.get_str();
        doc["count_at_M_plus_1"] = rep.at_M_plus_1.count.get_str();
        doc["holds"] = rep.holds;
        doc["equality"] = rep.equality;
        *out_json = dup_string(doc.dump());
    });
}

zav_status zav_lemma2_bound(uint32_t n, int q, uint32_t M, char** out) {
    return guarded([&] {
        require(out != nullptr, "out must be non-NULL");
        *out = dup_string(mpq_text(zimav::lemma2_bound(n, q, M)));
    });
}

zav_status zav_instance_probability(uint32_t n, int q, uint32_t M,
                                    unsigned long budget, int jobs,
                                    char** out) {
    return guarded([&] {
        require(out != nullptr, "out must be non-NULL");
        unsigned long b = budget == 0 ? zimav::kDefaultEnumBudget : budget;
        *out = dup_string(mpq_text(zimav::instance_probability(n, q, M, b, jobs)));
    });
}

zav_status zav_tower_upper_bound(uint32_t n, int q, size_t digit_cap,
                                 char** out) {
    return guarded([&] {
        require(out != nullptr, "out must be non-NULL");
        std::size_t cap = digit_cap == 0 ? zimav::kDefaultDigitCap : digit_cap;
        *out = dup_string(render_bound(zimav::tower_upper_bound(n, q, cap)));
    });
}

zav_status zav_recurrence_upper_bound(uint32_t n, int q, size_t digit_cap,
                                      char** out) {
    return guarded([&] {
        require(out != nullptr, "out must be non-NULL");
        std::size_t cap = digit_cap == 0 ? zimav::kDefaultDigitCap : digit_cap;
        *out = dup_string(render_bound(zimav::recurrence_upper_bound(n, q, cap)));
    });
}

zav_status zav_moment_expectation(uint32_t n, int q, const char* M_decimal,
                                  char** out) {
    return guarded([&] {
        require(M_decimal && out, "M and out must be non-NULL");
        mpz_class M(M_decimal); // throws std::invalid_argument on junk
        if (M < 0) throw zimav::domain_error("word length cannot be negative");
        *out = dup_string(mpq_text(zimav::moment_expectation_upper(n, q, M)));
    });
}

zav_status zav_first_moment_max_length(uint32_t n, int q, size_t digit_cap,
                                       char** out) {
    return guarded([&] {
        require(out != nullptr, "out must be non-NULL");
        std::size_t cap = digit_cap == 0 ? zimav::kDefaultDigitCap : digit_cap;
        *out = dup_string(zimav::first_moment_max_length(n, q, cap).get_str());
    });
}

zav_status zav_bounds_report(uint32_t n, int q, long max_M,
                             unsigned long budget, int jobs, char** out_json) {
    return guarded([&] {
        require(out_json != nullptr, "out must be non-NULL");
        unsigned long b = budget == 0 ? zimav::kDefaultEnumBudget : budget;
        json doc;
        doc["schema_version"] = 1;
        doc["n"] = n;
        doc["q"] = q;
        doc["tower"] = render_bound(zimav::tower_upper_bound(n, q));
        doc["recurrence"] = render_bound(zimav::recurrence_upper_bound(n, q));
        doc["first_moment_max_length"] =
            zimav::first_moment_max_length(n, q).get_str();
        json sweep = json::array();
        mpz_class prev;
        for (long M = 0; M <= max_M; ++M) {
            auto cnt = zimav::count_instances(n, q, std::uint32_t(M), b, jobs);
            mpq_class bound = zimav::lemma2_bound(n, q, std::uint32_t(M));
            bool monotone = M == 0 || cnt.count >= prev * q;
            sweep.push_back(json{{"M", M},
                                 {"count", cnt.count.get_str()},
                                 {"lemma2_bound", mpq_text(bound)},
                                 {"count_le_bound", mpq_class(cnt.count) <= bound},
                                 {"monotone_from_prev", monotone}});
            prev = cnt.count;
        }
        doc["sweep"] = sweep;
        *out_json = dup_string(doc.dump());
    });
}

/* ---- bitmap rendering -------------------------------------------------- */

zav_status zav_pbm_encode(const zav_word* w, size_t row_width, char** out) {
    return guarded([&] {
        require(w && out, "word and out must be non-NULL");
        std::size_t width = row_width == 0 ? zimav::kDefaultRowWidth : row_width;
        *out = dup_string(zimav::pbm_encode(w->w, width));
    });
}

zav_status zav_pbm_decode(const char* text, zav_word** out) {
    return guarded([&] {
        require(text && out, "text and out must be non-NULL");
        *out = new zav_word{zimav::pbm_decode(text)};
    });
}

} // extern "C"
