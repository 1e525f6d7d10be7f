#include "core/witness.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "core/errors.hpp"
#include "core/zimin_check.hpp"

namespace zimav {

namespace {

using json = nlohmann::json;

constexpr int kCheckpointSchema = 1;

struct Frame {
    std::vector<std::uint8_t> perm; // letter order at this depth
    std::size_t next = 0;           // index of the next letter to try
};

struct SearchState {
    EncounterScanner sc;
    std::vector<Frame> frames;
    std::mt19937_64 rng;
    std::uint64_t nodes = 0;
    std::uint64_t restarts = 0;
    std::uint64_t since_progress = 0;
    Word best;

    SearchState(std::uint32_t n, int q) : sc(n, q) {
        best.alphabet_size = q;
    }
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t restart) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (restart + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Explicit Fisher-Yates so the order depends only on the generator stream.
Frame draw_frame(std::mt19937_64& rng, int q) {
    Frame f;
    f.perm.resize(std::size_t(q));
    for (int i = 0; i < q; ++i) f.perm[std::size_t(i)] = std::uint8_t(i);
    for (int i = q - 1; i > 0; --i) {
        auto j = std::size_t(rng() % std::uint64_t(i + 1));
        std::swap(f.perm[std::size_t(i)], f.perm[j]);
    }
    return f;
}

json letters_json(const std::vector<std::uint8_t>& letters) {
    json a = json::array();
    for (std::uint8_t c : letters) a.push_back(int(c));
    return a;
}

std::vector<std::uint8_t> letters_from_json(const json& a, int q) {
    if (!a.is_array()) throw checkpoint_error("letter list is not an array");
    std::vector<std::uint8_t> out;
    out.reserve(a.size());
    for (const auto& v : a) {
        if (!v.is_number_integer())
            throw checkpoint_error("letter list holds a non-integer");
        long long c = v.get<long long>();
        if (c < 0 || c >= q) throw checkpoint_error("letter outside the alphabet");
        out.push_back(std::uint8_t(c));
    }
    return out;
}

void save_checkpoint(const std::string& path, const WitnessSearchOptions& opts,
                     const SearchState& st) {
    json frames = json::array();
    for (const Frame& f : st.frames)
        frames.push_back(json{{"perm", letters_json(f.perm)}, {"next", f.next}});
    std::ostringstream rng_text;
    rng_text << st.rng;
    json doc{
        {"schema_version", kCheckpointSchema},
        {"n", opts.n},
        {"q", opts.q},
        {"seed", opts.seed},
        {"nodes", st.nodes},
        {"restarts", st.restarts},
        {"since_progress", st.since_progress},
        {"best", letters_json(st.best.letters)},
        {"current", letters_json(st.sc.letters())},
        {"frames", frames},
        {"rng", rng_text.str()},
    };
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw io_error("cannot write checkpoint file");
        out << doc.dump();
        out.flush();
        if (!out) throw io_error("checkpoint write failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw io_error("checkpoint rename failed: " + ec.message());
}

void load_checkpoint(const std::string& path, const WitnessSearchOptions& opts,
                     SearchState& st) {
    std::ifstream in(path);
    if (!in) throw checkpoint_error("cannot open checkpoint file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw checkpoint_error(std::string("malformed checkpoint: ") + e.what());
    }
    try {
        if (doc.at("schema_version").get<int>() != kCheckpointSchema)
            throw checkpoint_error("unsupported checkpoint schema version");
        if (doc.at("n").get<std::uint32_t>() != opts.n ||
            doc.at("q").get<int>() != opts.q ||
            doc.at("seed").get<std::uint64_t>() != opts.seed)
            throw checkpoint_error("checkpoint parameters do not match the request");
        st.nodes = doc.at("nodes").get<std::uint64_t>();
        st.restarts = doc.at("restarts").get<std::uint64_t>();
        st.since_progress = doc.at("since_progress").get<std::uint64_t>();
        st.best.letters = letters_from_json(doc.at("best"), opts.q);
        st.best.alphabet_size = opts.q;

        std::vector<std::uint8_t> current = letters_from_json(doc.at("current"), opts.q);
        st.frames.clear();
        for (const auto& fj : doc.at("frames")) {
            Frame f;
            f.perm = letters_from_json(fj.at("perm"), opts.q);
            if (f.perm.size() != std::size_t(opts.q))
                throw checkpoint_error("frame permutation has the wrong size");
            f.next = fj.at("next").get<std::size_t>();
            if (f.next > f.perm.size())
                throw checkpoint_error("frame cursor out of range");
            st.frames.push_back(std::move(f));
        }
        if (st.frames.size() != current.size() + 1)
            throw checkpoint_error("frame stack does not match the current word");
        for (std::size_t i = 0; i < current.size(); ++i) {
            const Frame& f = st.frames[i];
            if (f.next == 0 || f.perm[f.next - 1] != current[i])
                throw checkpoint_error("frame stack does not match the current word");
        }
        for (std::uint8_t c : current) {
            if (st.sc.extend(c))
                throw checkpoint_error("checkpointed word contains an instance");
        }
        std::istringstream rng_text(doc.at("rng").get<std::string>());
        rng_text >> st.rng;
        if (rng_text.fail())
            throw checkpoint_error("generator state does not parse");
    } catch (const json::exception& e) {
        throw checkpoint_error(std::string("malformed checkpoint: ") + e.what());
    }
    VerifyResult chk = verify_avoids(st.best, opts.n);
    if (!chk.avoids)
        throw checkpoint_error("checkpointed best word fails verification");
}

} // namespace

WitnessResult long_witness_search(const WitnessSearchOptions& opts) {
    if (opts.n < 1) throw domain_error("zimin index must be at least 1");
    if (opts.q < 2 || opts.q > kMaxAlphabet)
        throw domain_error("alphabet size out of range");
    if (opts.resume && opts.checkpoint_path.empty())
        throw precondition_error("resume requested without a checkpoint path");

    auto t0 = std::chrono::steady_clock::now();
    SearchState st(opts.n, opts.q);
    if (opts.resume) {
        load_checkpoint(opts.checkpoint_path, opts, st);
    } else {
        st.rng.seed(mix_seed(opts.seed, 0));
        st.frames.push_back(draw_frame(st.rng, opts.q));
    }

    auto last_save = t0;
    std::uint64_t last_save_nodes = st.nodes;
    auto maybe_checkpoint = [&](bool force) {
        if (opts.checkpoint_path.empty()) return;
        auto now = std::chrono::steady_clock::now();
        bool due_nodes = st.nodes - last_save_nodes >= opts.checkpoint_every_nodes;
        bool due_time = std::chrono::duration<double>(now - last_save).count() >=
                        opts.checkpoint_every_seconds;
        if (!force && !due_nodes && !due_time) return;
        save_checkpoint(opts.checkpoint_path, opts, st);
        last_save = now;
        last_save_nodes = st.nodes;
    };

    WitnessResult res;
    bool stop = false;
    while (!stop) {
        if (opts.target_length > 0 && st.sc.length() >= opts.target_length) {
            res.reached_target = true;
            break;
        }
        if (opts.node_budget > 0 && st.nodes >= opts.node_budget) break;
        if (opts.time_budget_seconds > 0 && (st.nodes & 63) == 0) {
            auto now = std::chrono::steady_clock::now();
            if (std::chrono::duration<double>(now - t0).count() >=
                opts.time_budget_seconds)
                break;
        }

        Frame& top = st.frames.back();
        if (top.next >= top.perm.size()) {
            if (st.frames.size() == 1) {
                res.exhausted = true;
                break;
            }
            st.frames.pop_back();
            st.sc.pop();
            continue;
        }
        std::uint8_t letter = top.perm[top.next++];
        ++st.nodes;
        ++st.since_progress;
        if (st.sc.extend(letter)) {
            st.sc.pop();
        } else {
            st.frames.push_back(draw_frame(st.rng, opts.q));
            if (st.sc.length() > st.best.size()) {
                st.best.letters = st.sc.letters();
                st.since_progress = 0;
            }
        }

        if (opts.restart_after > 0 && st.since_progress >= opts.restart_after) {
            ++st.restarts;
            st.since_progress = 0;
            while (st.sc.length() > 0) st.sc.pop();
            st.frames.clear();
            st.rng.seed(mix_seed(opts.seed, st.restarts));
            st.frames.push_back(draw_frame(st.rng, opts.q));
        }
        maybe_checkpoint(false);
    }
    maybe_checkpoint(true);

    res.best = st.best;
    res.current.letters = st.sc.letters();
    res.current.alphabet_size = opts.q;
    res.nodes = st.nodes;
    res.restarts = st.restarts;
    res.wall_time_ms = std::uint64_t(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - t0)
            .count());
    return res;
}

} // namespace zimav
