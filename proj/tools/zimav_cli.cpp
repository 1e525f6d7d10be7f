// zimav command line: every library operation behind stable subcommands.
// Verdict-style commands exit 0/1; operational failures exit 2 with a
// message on stderr. Reports on stdout are deterministic; timing lines go
// to stderr.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "zimav/zimav.h"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitVerdictNo = 1;
constexpr int kExitError = 2;

[[noreturn]] void die(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    std::exit(kExitError);
}

void need(zav_status st) {
    if (st != ZAV_OK) die(zav_last_error());
}

std::string take(char* s) {
    std::string out = s ? s : "";
    zav_string_free(s);
    return out;
}

struct WordHandle {
    zav_word* w = nullptr;
    ~WordHandle() { zav_word_free(w); }
};

struct PatternHandle {
    zav_pattern* p = nullptr;
    ~PatternHandle() { zav_pattern_free(p); }
};

zav_style style_of_text(const std::string& text) {
    bool digits = text.find_first_not_of("01") == std::string::npos;
    return digits ? ZAV_STYLE_BINARY : ZAV_STYLE_LETTERS;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) die("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string first_line(const std::string& text) {
    std::size_t eol = text.find('\n');
    std::string line = eol == std::string::npos ? text : text.substr(0, eol);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) die("cannot write " + path);
    out << content;
    if (!out) die("write failed for " + path);
}

void print_report(const json& doc) {
    json copy = doc;
    if (copy.contains("wall_time_ms")) {
        std::cerr << "# wall_time_ms=" << copy["wall_time_ms"] << "\n";
        copy.erase("wall_time_ms");
    }
    std::cout << copy.dump(2) << "\n";
}

// ---- gen ----------------------------------------------------------------

int run_gen(std::uint32_t n, bool ruler) {
    WordHandle w;
    need(ruler ? zav_zimin_ruler(n, &w.w) : zav_zimin(n, &w.w));
    char* text = nullptr;
    need(zav_word_render(w.w, ZAV_STYLE_LETTERS, &text));
    std::cout << take(text) << "\n";
    return 0;
}

// ---- check ---------------------------------------------------------------

int run_check_zimin(const std::string& word_text, std::uint32_t n) {
    WordHandle w;
    need(zav_word_parse(word_text.c_str(), &w.w));
    int found = 0;
    std::size_t b = 0, e = 0;
    need(zav_encounters_zimin(w.w, n, &found, &b, &e));
    if (!found) {
        std::cout << "avoids\n";
        return 0;
    }
    std::cout << "encounters begin=" << b << " end=" << e << "\n";
    return kExitVerdictNo;
}

int run_check_pattern(const std::string& word_text, const std::string& pattern_text,
                      bool exact) {
    WordHandle w;
    need(zav_word_parse(word_text.c_str(), &w.w));
    PatternHandle p;
    need(zav_pattern_parse(pattern_text.c_str(), &p.p));

    int found = 0;
    if (!exact) {
        std::size_t b = 0, e = 0;
        need(zav_encounters_pattern(w.w, p.p, &found, &b, &e));
        if (!found) {
            std::cout << "avoids\n";
            return 0;
        }
        std::cout << "encounters begin=" << b << " end=" << e << "\n";
        return kExitVerdictNo;
    }

    char* witness = nullptr;
    need(zav_pattern_witness(w.w, p.p, style_of_text(word_text), &found, &witness));
    if (!found) {
        std::cout << "avoids\n";
        return 0;
    }
    json doc = json::parse(take(witness));
    std::cout << "encounters begin=" << doc["span"]["begin"] << " end="
              << doc["span"]["end"] << "\n";
    std::string assignment;
    for (const auto& image : doc["images"]) {
        if (!assignment.empty()) assignment += ", ";
        assignment += image["variable"].get<std::string>();
        assignment += "=";
        assignment += image["image"].get<std::string>();
    }
    std::cout << assignment << "\n";
    return kExitVerdictNo;
}

// ---- unavoidable -----------------------------------------------------------

int run_unavoidable(const std::string& pattern_text, std::size_t cap) {
    PatternHandle p;
    need(zav_pattern_parse(pattern_text.c_str(), &p.p));
    int verdict = 0;
    need(zav_pattern_unavoidable(p.p, cap, &verdict));
    std::cout << (verdict ? "unavoidable\n" : "avoidable\n");
    return verdict ? 0 : kExitVerdictNo;
}

// ---- search-f ----------------------------------------------------------------

int diff_golden(const json& report, std::uint32_t n, int q,
                const std::string& golden_path) {
    std::set<std::string> wanted;
    std::size_t max_len = 0;
    bool all_maximal_length = true;
    std::uint64_t f_value =
        report["f_value"].is_null() ? 0 : report["f_value"].get<std::uint64_t>();
    {
        std::ifstream in(golden_path);
        if (!in) die("cannot open " + golden_path);
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            wanted.insert(line);
            max_len = std::max(max_len, line.size());
            if (f_value == 0 || line.size() + 1 != f_value)
                all_maximal_length = false;
        }
    }

    std::set<std::string> produced;
    if (all_maximal_length && f_value > 0) {
        for (const auto& w : report["maximal_avoiders"])
            produced.insert(w.get<std::string>());
    } else {
        char* out = nullptr;
        need(zav_enumerate_avoiders(n, q, max_len, &out));
        json doc = json::parse(take(out));
        for (const auto& w : doc["words"]) produced.insert(w.get<std::string>());
    }

    if (produced == wanted) {
        std::cout << "golden: match (" << wanted.size() << " words)\n";
        return 0;
    }
    std::vector<std::string> missing, extra;
    std::set_difference(wanted.begin(), wanted.end(), produced.begin(),
                        produced.end(), std::back_inserter(missing));
    std::set_difference(produced.begin(), produced.end(), wanted.begin(),
                        wanted.end(), std::back_inserter(extra));
    std::cout << "golden: MISMATCH (missing " << missing.size() << ", extra "
              << extra.size() << ")\n";
    for (const auto& w : missing) std::cout << "missing: " << w << "\n";
    for (const auto& w : extra) std::cout << "extra: " << w << "\n";
    return kExitVerdictNo;
}

int run_search_f(std::uint32_t n, int q, std::size_t cap, int jobs,
                 const std::string& json_path, const std::string& golden_path) {
    char* out = nullptr;
    need(zav_search_f(n, q, cap, jobs, &out));
    json doc = json::parse(take(out));
    if (!json_path.empty()) write_output(json_path, doc.dump(2) + "\n");
    print_report(doc);
    if (!golden_path.empty()) return diff_golden(doc, n, q, golden_path);
    return 0;
}

// ---- witness -------------------------------------------------------------------

int run_witness(std::uint32_t n, int q, std::size_t target, std::uint64_t seed,
                const std::string& checkpoint, bool resume, double budget_seconds,
                std::uint64_t node_budget, std::uint64_t restart_after,
                const std::string& out_path) {
    char* out = nullptr;
    need(zav_witness_search(n, q, target, seed,
                            checkpoint.empty() ? nullptr : checkpoint.c_str(),
                            resume ? 1 : 0, budget_seconds, node_budget,
                            restart_after, &out));
    json doc = json::parse(take(out));

    // confirm the reported best independently before showing it
    std::string best = doc["best"].get<std::string>();
    WordHandle w;
    need(zav_word_parse(best.c_str(), &w.w));
    bool confirmed = false;
    if (zav_word_length(w.w) <= 4096) {
        int avoids = 0;
        need(zav_verify_avoids(w.w, n, &avoids, nullptr, nullptr));
        confirmed = avoids == 1;
    } else { // the quadratic reference check is too slow past a few thousand
        zav_scanner* sc = nullptr;
        need(zav_scanner_new(n, q, &sc));
        confirmed = true;
        const uint8_t* data = zav_word_data(w.w);
        for (std::size_t i = 0; i < zav_word_length(w.w); ++i) {
            int flagged = 0;
            need(zav_scanner_extend(sc, data[i], &flagged));
            if (flagged) {
                confirmed = false;
                break;
            }
        }
        zav_scanner_free(sc);
    }
    if (!confirmed) die("best word failed verification");
    doc["verified"] = true;

    if (!out_path.empty()) write_output(out_path, best + "\n");
    print_report(doc);
    return 0;
}

// ---- count / bounds ------------------------------------------------------------

int run_count(std::uint32_t n, int q, std::uint32_t M, unsigned long budget,
              int jobs) {
    char* out = nullptr;
    need(zav_count_instances(n, q, M, budget, jobs, &out));
    std::cout << take(out) << "\n";
    return 0;
}

int run_bounds(std::uint32_t n, int q, long max_M, unsigned long budget,
               int jobs) {
    char* out = nullptr;
    need(zav_bounds_report(n, q, max_M, budget, jobs, &out));
    std::cout << json::parse(take(out)).dump(2) << "\n";
    return 0;
}

// ---- render ---------------------------------------------------------------------

int run_render(const std::string& input_path, std::size_t width, bool decode,
               const std::string& out_path) {
    std::string content = read_file(input_path);
    if (decode) {
        WordHandle w;
        need(zav_pbm_decode(content.c_str(), &w.w));
        char* text = nullptr;
        need(zav_word_render(w.w, ZAV_STYLE_BINARY, &text));
        write_output(out_path, take(text) + "\n");
        return 0;
    }
    WordHandle w;
    need(zav_word_parse(first_line(content).c_str(), &w.w));
    char* image = nullptr;
    need(zav_pbm_encode(w.w, width, &image));
    write_output(out_path, take(image));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zimin word avoidance toolkit"};
    app.set_version_flag("--version", std::string(zav_version()));
    app.require_subcommand(1);

    // gen
    std::uint32_t gen_n = 0;
    bool gen_ruler = false;
    auto* gen = app.add_subcommand("gen", "Print the n-th Zimin word");
    gen->add_option("n", gen_n, "Zimin index")->required();
    gen->add_flag("--ruler", gen_ruler, "Use the 2-adic order construction");

    // check
    std::string check_word;
    std::uint32_t check_n = 0;
    std::string check_pattern;
    bool check_exact = false;
    auto* check = app.add_subcommand(
        "check", "Decide whether a word encounters Z_n or a pattern");
    check->add_option("word", check_word, "The word to examine")->required();
    auto* opt_zimin = check->add_option("--zimin", check_n, "Zimin index n");
    auto* opt_pattern =
        check->add_option("--pattern", check_pattern, "Pattern, e.g. xyxzy");
    auto* opt_exact = check->add_flag(
        "--exact", check_exact, "Also print one morphism witnessing the instance");
    opt_zimin->excludes(opt_pattern);
    opt_pattern->excludes(opt_zimin);
    opt_exact->needs(opt_pattern);

    // unavoidable
    std::string unav_pattern;
    std::size_t unav_cap = 0;
    auto* unav = app.add_subcommand("unavoidable",
                                    "Decide pattern unavoidability over all alphabets");
    unav->add_option("pattern", unav_pattern, "Pattern to classify")->required();
    unav->add_option("--cap", unav_cap,
                     "Host length cap for the Zimin encounter test (default 2^20)");

    // search-f
    std::uint32_t sf_n = 0;
    int sf_q = 0;
    std::size_t sf_cap = 0;
    int sf_jobs = 1;
    std::string sf_json, sf_golden;
    auto* sf = app.add_subcommand(
        "search-f", "Exhaustively compute the avoidance threshold f(n, q)");
    sf->add_option("n", sf_n, "Zimin index")->required();
    sf->add_option("q", sf_q, "Alphabet size")->required();
    sf->add_option("--cap", sf_cap, "Length cap (default 64)");
    sf->add_option("--jobs", sf_jobs, "Worker threads (default 1)");
    sf->add_option("--json", sf_json, "Also write the full report to this file");
    sf->add_option("--golden", sf_golden, "Diff the avoider set against this list");

    // witness
    std::uint32_t wit_n = 0;
    int wit_q = 0;
    std::size_t wit_target = 0;
    std::uint64_t wit_seed = 1;
    std::string wit_checkpoint, wit_out;
    bool wit_resume = false;
    double wit_budget = 0;
    std::uint64_t wit_node_budget = 0;
    std::uint64_t wit_restart_after = 10'000'000;
    auto* wit = app.add_subcommand(
        "witness", "Randomized search for long avoiding words");
    wit->add_option("n", wit_n, "Zimin index")->required();
    wit->add_option("q", wit_q, "Alphabet size")->required();
    wit->add_option("--target", wit_target, "Stop on reaching this length");
    auto* wit_seed_opt = wit->add_option("--seed", wit_seed, "Generator seed");
    auto* wit_cp_opt = wit->add_option("--checkpoint", wit_checkpoint,
                                       "Persist resumable state to this file");
    wit->add_flag("--resume", wit_resume, "Continue from the checkpoint");
    wit->add_option("--budget", wit_budget, "Wall-clock budget in seconds");
    wit->add_option("--node-budget", wit_node_budget,
                    "Total node budget, cumulative across resumes");
    wit->add_option("--restart-after", wit_restart_after,
                    "Restart after this many nodes without progress");
    wit->add_option("-o,--out", wit_out, "Also write the best word to this file");

    // count
    std::uint32_t cnt_n = 0;
    int cnt_q = 0;
    std::uint32_t cnt_M = 0;
    unsigned long cnt_budget = 0;
    int cnt_jobs = 1;
    auto* cnt = app.add_subcommand(
        "count", "Exact number of length-M q-ary words that are Z_n-instances");
    cnt->add_option("n", cnt_n, "Zimin index")->required();
    cnt->add_option("q", cnt_q, "Alphabet size")->required();
    cnt->add_option("M", cnt_M, "Word length")->required();
    cnt->add_option("--budget", cnt_budget, "Enumeration budget on q^M (default 10^8)");
    cnt->add_option("--jobs", cnt_jobs, "Worker threads (default 1)");

    // bounds
    std::uint32_t bnd_n = 0;
    int bnd_q = 0;
    long bnd_max_M = -1;
    unsigned long bnd_budget = 0;
    int bnd_jobs = 1;
    auto* bnd = app.add_subcommand(
        "bounds", "Evaluate the upper bounds and the first-moment threshold");
    bnd->add_option("n", bnd_n, "Zimin index")->required();
    bnd->add_option("q", bnd_q, "Alphabet size")->required();
    bnd->add_option("--max-M", bnd_max_M,
                    "Also sweep exact counts for M = 0..max-M");
    bnd->add_option("--budget", bnd_budget, "Enumeration budget on q^M (default 10^8)");
    bnd->add_option("--jobs", bnd_jobs, "Worker threads (default 1)");

    // render
    std::string ren_input, ren_out;
    std::size_t ren_width = 0;
    bool ren_decode = false;
    auto* ren = app.add_subcommand(
        "render", "Encode a binary word as an ASCII PBM image (or decode one)");
    ren->add_option("file", ren_input, "Word file (or PBM file with --decode)")
        ->required();
    ren->add_option("--width", ren_width, "Cells per row (default 90)");
    ren->add_flag("--decode", ren_decode, "Read a PBM image back into a word");
    ren->add_option("-o,--out", ren_out, "Output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    if (app.got_subcommand(gen)) return run_gen(gen_n, gen_ruler);
    if (app.got_subcommand(check)) {
        if (opt_zimin->count() == 0 && opt_pattern->count() == 0)
            die("check needs --zimin n or --pattern p");
        if (opt_zimin->count() > 0) return run_check_zimin(check_word, check_n);
        return run_check_pattern(check_word, check_pattern, check_exact);
    }
    if (app.got_subcommand(unav)) return run_unavoidable(unav_pattern, unav_cap);
    if (app.got_subcommand(sf))
        return run_search_f(sf_n, sf_q, sf_cap, sf_jobs, sf_json, sf_golden);
    if (app.got_subcommand(wit)) {
        if (wit_cp_opt->count() > 0 && wit_seed_opt->count() == 0)
            die("checkpointing requires an explicit --seed");
        return run_witness(wit_n, wit_q, wit_target, wit_seed, wit_checkpoint,
                           wit_resume, wit_budget, wit_node_budget,
                           wit_restart_after, wit_out);
    }
    if (app.got_subcommand(cnt))
        return run_count(cnt_n, cnt_q, cnt_M, cnt_budget, cnt_jobs);
    if (app.got_subcommand(bnd))
        return run_bounds(bnd_n, bnd_q, bnd_max_M, bnd_budget, bnd_jobs);
    if (app.got_subcommand(ren))
        return run_render(ren_input, ren_width, ren_decode, ren_out);
    return kExitError;
}
