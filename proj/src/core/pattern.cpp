#include "core/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>

#include "core/errors.hpp"

namespace zimav {

namespace {

constexpr int kMaxPatternArity = 52;

char default_name(std::size_t v) {
    return v < 26 ? char('a' + v) : char('A' + (v - 26));
}

// Backtracking matcher over one subword [a, b) of the host.
class Matcher {
public:
    Matcher(const Word& w, const Pattern& p) : d_(w.data()), p_(p) {}

    // Fills image (offset, length) slots; images reference the host word.
    bool match(std::size_t a, std::size_t b, std::vector<Span>& images) {
        b_ = b;
        images.assign(std::size_t(p_.arity()), Span{0, 0});
        assigned_.assign(std::size_t(p_.arity()), false);
        return descend(0, a, images);
    }

private:
    const std::uint8_t* d_;
    const Pattern& p_;
    std::size_t b_ = 0;
    std::vector<char> assigned_;

    bool descend(std::size_t j, std::size_t o, std::vector<Span>& images) {
        if (j == p_.size()) return o == b_;
        std::uint8_t v = p_.symbols[j];
        if (assigned_[v]) {
            std::size_t len = images[v].end - images[v].begin;
            if (o + len > b_) return false;
            if (std::memcmp(d_ + o, d_ + images[v].begin, len) != 0) return false;
            return descend(j + 1, o + len, images);
        }
        assigned_[v] = true;
        std::size_t tail_others = 0;
        for (std::size_t t = j + 1; t < p_.size(); ++t) {
            std::uint8_t u = p_.symbols[t];
            if (u != v) tail_others += assigned_[u] ? images[u].end - images[u].begin : 1;
        }
        std::size_t copies = 1;
        for (std::size_t t = j + 1; t < p_.size(); ++t)
            if (p_.symbols[t] == v) ++copies;
        // o + copies*len + tail_others <= b
        for (std::size_t len = 1; o + copies * len + tail_others <= b_; ++len) {
            images[v] = Span{o, o + len};
            if (descend(j + 1, o + len, images)) return true;
        }
        assigned_[v] = false;
        images[v] = Span{0, 0};
        return false;
    }
};

MorphismWitness build_witness(const Word& w, const Pattern& p,
                              const std::vector<Span>& images, Span span) {
    MorphismWitness wit;
    wit.span = span;
    wit.images.reserve(images.size());
    for (const Span& s : images) {
        Word im;
        im.letters.assign(w.letters.begin() + s.begin, w.letters.begin() + s.end);
        im.alphabet_size = w.alphabet_size;
        wit.images.push_back(std::move(im));
    }
    return wit;
}

} // namespace

Pattern make_pattern(const std::vector<std::uint8_t>& symbols) {
    Pattern p;
    std::vector<int> rename(256, -1);
    for (std::uint8_t s : symbols) {
        if (rename[s] < 0) {
            if (p.arity() == kMaxPatternArity)
                throw size_error("too many pattern variables");
            rename[s] = p.arity();
            p.names.push_back(default_name(p.names.size()));
        }
        p.symbols.push_back(std::uint8_t(rename[s]));
    }
    return p;
}

Pattern parse_pattern(std::string_view text) {
    Pattern p;
    std::vector<int> rename(256, -1);
    for (char c : text) {
        if (!std::isalpha(static_cast<unsigned char>(c)))
            throw parse_error("pattern variables must be letters");
        auto idx = static_cast<unsigned char>(c);
        if (rename[idx] < 0) {
            rename[idx] = p.arity();
            p.names.push_back(c);
        }
        p.symbols.push_back(std::uint8_t(rename[idx]));
    }
    return p;
}

std::string render_pattern(const Pattern& p) {
    std::string out;
    out.reserve(p.size());
    for (std::uint8_t v : p.symbols) out.push_back(p.names[v]);
    return out;
}

std::optional<MorphismWitness> instance_of_pattern(const Word& w, const Pattern& p) {
    if (p.size() == 0) {
        if (!w.empty()) return std::nullopt;
        return MorphismWitness{{}, Span{0, 0}};
    }
    if (w.size() < p.size()) return std::nullopt;
    Matcher m(w, p);
    std::vector<Span> images;
    if (!m.match(0, w.size(), images)) return std::nullopt;
    return build_witness(w, p, images, Span{0, w.size()});
}

std::optional<MorphismWitness> encounters_pattern(const Word& w, const Pattern& p) {
    if (p.size() == 0) return MorphismWitness{{}, Span{0, 0}};
    std::size_t L = w.size();
    Matcher m(w, p);
    std::vector<Span> images;
    for (std::size_t len = p.size(); len <= L; ++len) {
        for (std::size_t a = 0; a + len <= L; ++a) {
            if (m.match(a, a + len, images))
                return build_witness(w, p, images, Span{a, a + len});
        }
    }
    return std::nullopt;
}

bool witness_matches(const Word& w, const Pattern& p, const MorphismWitness& wit) {
    if (wit.images.size() != std::size_t(p.arity())) return false;
    for (const Word& im : wit.images)
        if (im.empty()) return false;
    if (wit.span.begin > wit.span.end || wit.span.end > w.size()) return false;
    std::vector<std::uint8_t> rebuilt;
    for (std::uint8_t v : p.symbols)
        rebuilt.insert(rebuilt.end(), wit.images[v].letters.begin(),
                       wit.images[v].letters.end());
    return std::equal(rebuilt.begin(), rebuilt.end(),
                      w.letters.begin() + wit.span.begin,
                      w.letters.begin() + wit.span.end);
}

bool is_unavoidable(const Pattern& p, std::size_t length_cap) {
    auto n = std::uint32_t(p.arity());
    if (n >= 63 || (std::size_t{1} << n) - 1 > length_cap)
        throw size_error("zimin host for this arity exceeds the length cap");
    return encounters_pattern(zimin(n), p).has_value();
}

} // namespace zimav
