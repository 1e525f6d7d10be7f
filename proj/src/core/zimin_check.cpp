#include "core/zimin_check.hpp"

#include <algorithm>
#include <cstring>
#include <unordered_map>

#include "core/errors.hpp"
#include "core/stringops.hpp"

namespace zimav {

namespace {

constexpr std::size_t kMemoWordLimit = std::size_t{1} << 24;

// 2^n - 1 saturating at "longer than any word we accept".
std::size_t min_instance_length(std::uint32_t n) {
    if (n >= 63) return ~std::size_t{0};
    return (std::size_t{1} << n) - 1;
}

bool inst_naive(const std::uint8_t* d, std::size_t len, std::uint32_t k) {
    if (k == 0) return len == 0;
    if (k == 1) return len > 0;
    std::size_t lower = min_instance_length(k - 1);
    for (std::size_t i = lower; len > 2 * i; ++i) {
        if (std::memcmp(d, d + len - i, i) == 0 && inst_naive(d, i, k - 1))
            return true;
    }
    return false;
}

// Memoized decider over spans of one fixed word.
class ZiminMemo {
public:
    explicit ZiminMemo(const Word& w) : d_(w.data()) {
        if (w.size() >= kMemoWordLimit)
            throw size_error("word too long for the recursive route");
    }

    bool inst(std::size_t a, std::size_t b, std::uint32_t k) {
        if (k == 0) return a == b;
        if (k == 1) return b > a;
        std::uint64_t key = (std::uint64_t(a) << 32) | (std::uint64_t(b) << 8) | k;
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        std::size_t len = b - a;
        bool ok = false;
        for (std::size_t i = min_instance_length(k - 1); len > 2 * i; ++i) {
            if (std::memcmp(d_ + a, d_ + b - i, i) == 0 && inst(a, a + i, k - 1)) {
                ok = true;
                break;
            }
        }
        memo_.emplace(key, ok);
        return ok;
    }

private:
    const std::uint8_t* d_;
    std::unordered_map<std::uint64_t, bool> memo_;
};

} // namespace

bool is_zimin_instance(const Word& w, std::uint32_t n) {
    if (n <= 1 || w.size() < min_instance_length(n))
        return n == 0 ? w.empty() : n == 1 && !w.empty();
    ZiminMemo memo(w);
    return memo.inst(0, w.size(), n);
}

std::optional<Span> encounters_zimin(const Word& w, std::uint32_t n) {
    if (n == 0) return Span{0, 0};
    std::size_t minlen = min_instance_length(n);
    std::size_t L = w.size();
    if (minlen > L) return std::nullopt;
    ZiminMemo memo(w);
    for (std::size_t b = minlen; b <= L; ++b) {
        for (std::size_t len = minlen; len <= b; ++len) {
            if (memo.inst(b - len, b, n)) return Span{b - len, b};
        }
    }
    return std::nullopt;
}

VerifyResult verify_avoids(const Word& w, std::uint32_t n) {
    if (n == 0) return {false, Span{0, 0}};
    std::size_t minlen = min_instance_length(n);
    std::size_t L = w.size();
    if (minlen > L) return {true, std::nullopt};
    const std::uint8_t* d = w.data();
    for (std::size_t b = minlen; b <= L; ++b) {
        for (std::size_t a = 0; a + minlen <= b; ++a) {
            if (inst_naive(d + a, b - a, n)) return {false, Span{a, b}};
        }
    }
    return {true, std::nullopt};
}

// ---------------------------------------------------------------------------
// EncounterScanner
//
// Work on r = reverse(word) with z = z_array(r): the length-j suffix of the
// word occurs ending at word position e iff z[L-e] >= j. A length-i suffix is
// a Z_k-instance iff it has a proper border of length j in [2^{k-1}-1, i/2)
// whose border word (= length-j suffix of the whole word, by the border
// property) is a Z_{k-1}-instance; the border condition is z[i-j] >= j. This
// gives boolean level sets S_k over suffix lengths, each computable from the
// previous in one pass over z. A Z_n-instance ends at the last position iff
// some i in S_{n-1} recurs later: max z[p] over p > i is >= i.
// ---------------------------------------------------------------------------

EncounterScanner::EncounterScanner(std::uint32_t n, int alphabet_size)
    : n_(n), q_(alphabet_size) {
    if (n < 1 || n > kDefaultZiminCap)
        throw domain_error("scanner level out of range");
    if (alphabet_size < 1 || alphabet_size > kMaxAlphabet)
        throw domain_error("alphabet size out of range");
}

void EncounterScanner::prepare_arrays() {
    const std::size_t L = word_.size();
    rev_.assign(word_.rbegin(), word_.rend());
    z_array_into({rev_.data(), rev_.size()}, z_);
    maxz_.assign(L + 1, 0);
    for (std::size_t p = L; p-- > 1;)
        maxz_[p] = std::max(z_[p], maxz_[p + 1]);
}

// Builds S_2..S_{n-1} into s_prev_ and tests the final condition. With
// want_span, also recovers the shortest flagged suffix into *out.
bool EncounterScanner::suffix_levels(bool want_span, Span* out) {
    const std::size_t L = word_.size();
    if (L < min_instance_length(n_)) return false;
    if (n_ == 1) {
        if (out) *out = Span{L - 1, L};
        return true;
    }
    prepare_arrays();
    bool have_set = false;
    if (n_ >= 3) {
        // S_2 by interval marking: suffix length i has a usable border of
        // length j = i - p iff p < i <= min(2p-1, p+z[p]).
        diff_.assign(L + 2, 0);
        for (std::size_t p = 1; p < L; ++p) {
            std::size_t hi = std::min({2 * p - 1, p + z_[p], L});
            if (hi > p) {
                diff_[p + 1] += 1;
                diff_[hi + 1] -= 1;
            }
        }
        s_prev_.assign(L + 1, 0);
        int run = 0;
        for (std::size_t i = 0; i <= L; ++i) {
            run += diff_[i];
            s_prev_[i] = run > 0;
        }
        for (std::uint32_t level = 3; level < n_; ++level) {
            s_cur_.assign(L + 1, 0);
            for (std::size_t p = 1; p < L; ++p) {
                std::size_t hi = std::min({2 * p - 1, p + z_[p], L});
                for (std::size_t i = p + 1; i <= hi; ++i)
                    if (s_prev_[i - p]) s_cur_[i] = 1;
            }
            std::swap(s_prev_, s_cur_);
        }
        have_set = true;
    }
    std::size_t best = ~std::size_t{0};
    for (std::size_t i = 1; 2 * i < L; ++i) {
        if (have_set && !s_prev_[i]) continue;
        if (maxz_[i + 1] < i) continue;
        if (!want_span) return true;
        if (2 * i + 1 >= best) continue;
        // maxz_ guarantees a hit at some p < L before the bound is reached
        for (std::size_t p = i + 1; p < L && p + i < best; ++p) {
            if (z_[p] >= i) {
                best = p + i;
                break;
            }
        }
    }
    if (best == ~std::size_t{0}) return false;
    if (out) *out = Span{L - best, L};
    return true;
}

bool EncounterScanner::extend(std::uint8_t letter) {
    if (int(letter) >= q_)
        throw domain_error("letter outside scanner alphabet");
    word_.push_back(letter);
    return suffix_levels(false, nullptr);
}

void EncounterScanner::pop() {
    if (word_.empty())
        throw precondition_error("pop on empty scanner");
    word_.pop_back();
}

Span EncounterScanner::last_instance_span() {
    Span s;
    if (!suffix_levels(true, &s))
        throw precondition_error("no instance ends at the current position");
    return s;
}

std::optional<Span> scan_first_encounter(const Word& w, std::uint32_t n) {
    if (n == 0) return Span{0, 0};
    if (w.size() < min_instance_length(n)) return std::nullopt;
    EncounterScanner sc(n, w.alphabet_size);
    for (std::uint8_t c : w.letters)
        if (sc.extend(c)) return sc.last_instance_span();
    return std::nullopt;
}

} // namespace zimav
