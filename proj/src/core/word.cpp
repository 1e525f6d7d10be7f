#include "core/word.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstring>

#include "core/errors.hpp"
#include "core/stringops.hpp"

namespace zimav {

Word make_word(std::vector<std::uint8_t> letters, int alphabet_size) {
    if (alphabet_size < 1 || alphabet_size > kMaxAlphabet) {
        throw domain_error("alphabet size must be in [1, 255]");
    }
    for (std::uint8_t c : letters) {
        if (c >= alphabet_size) {
            throw domain_error("letter index " + std::to_string(int(c)) +
                               " outside alphabet of size " + std::to_string(alphabet_size));
        }
    }
    return Word{std::move(letters), alphabet_size};
}

namespace {

void check_zimin_index(std::uint32_t n, std::uint32_t cap) {
    if (n > cap) {
        throw size_error("Zimin index " + std::to_string(n) + " exceeds cap " +
                         std::to_string(cap));
    }
}

} // namespace

Word zimin(std::uint32_t n, std::uint32_t cap) {
    check_zimin_index(n, cap);
    Word w;
    w.alphabet_size = n == 0 ? 1 : static_cast<int>(std::min<std::uint32_t>(n, kMaxAlphabet));
    if (n >= 8 * sizeof(std::size_t) - 1) {
        throw size_error("Zimin word of index " + std::to_string(n) + " does not fit in memory");
    }
    w.letters.reserve((std::size_t{1} << n) - 1);
    for (std::uint32_t k = 0; k < n; ++k) {
        const std::size_t half = w.letters.size();
        w.letters.push_back(static_cast<std::uint8_t>(k));
        w.letters.insert(w.letters.end(), w.letters.begin(), w.letters.begin() + half);
    }
    return w;
}

Word zimin_ruler(std::uint32_t n, std::uint32_t cap) {
    check_zimin_index(n, cap);
    if (n >= 8 * sizeof(std::size_t) - 1) {
        throw size_error("Zimin word of index " + std::to_string(n) + " does not fit in memory");
    }
    const std::size_t len = (std::size_t{1} << n) - 1;
    Word w;
    w.alphabet_size = n == 0 ? 1 : static_cast<int>(std::min<std::uint32_t>(n, kMaxAlphabet));
    w.letters.resize(len);
    for (std::size_t i = 1; i <= len; ++i) {
        w.letters[i - 1] = static_cast<std::uint8_t>(std::countr_zero(i));
    }
    return w;
}

std::vector<std::size_t> bisecting_borders(const Word& w) {
    std::vector<std::size_t> out;
    const std::size_t len = w.size();
    if (len < 3) {
        return out;
    }
    const std::uint8_t* d = w.data();
    for (std::size_t i = 1; 2 * i < len; ++i) {
        if (std::memcmp(d, d + len - i, i) == 0) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<std::size_t> bisecting_borders_via_prefix_function(const Word& w) {
    std::vector<std::size_t> out;
    const std::size_t len = w.size();
    if (len < 3) {
        return out;
    }
    const auto pi = prefix_function(std::span(w.letters));
    for (std::size_t b = pi[len - 1]; b > 0; b = pi[b - 1]) {
        if (2 * b < len) {
            out.push_back(b);
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

Word complement(const Word& w) {
    if (w.alphabet_size != 2) {
        throw domain_error("complement requires a binary word");
    }
    Word out = w;
    for (auto& c : out.letters) {
        c ^= 1;
    }
    return out;
}

Word reverse(const Word& w) {
    Word out = w;
    std::reverse(out.letters.begin(), out.letters.end());
    return out;
}

std::string render_word(const Word& w, WordStyle style) {
    std::string out;
    out.reserve(w.size());
    switch (style) {
    case WordStyle::Binary:
        if (w.alphabet_size > 2) {
            throw domain_error("binary rendering requires alphabet size <= 2");
        }
        for (std::uint8_t c : w.letters) {
            out.push_back(static_cast<char>('0' + c));
        }
        break;
    case WordStyle::Letters:
        for (std::uint8_t c : w.letters) {
            if (c < 26) {
                out.push_back(static_cast<char>('a' + c));
            } else if (c < 52) {
                out.push_back(static_cast<char>('A' + (c - 26)));
            } else {
                throw size_error("letter index " + std::to_string(int(c)) +
                                 " beyond the 52-letter textual alphabet");
            }
        }
        break;
    }
    return out;
}

std::pair<Word, WordStyle> parse_word_styled(std::string_view line) {
    Word w;
    if (line.empty()) {
        w.alphabet_size = 2;
        return {w, WordStyle::Binary};
    }
    const bool digits = line.find_first_not_of("01") == std::string_view::npos;
    w.letters.reserve(line.size());
    if (digits) {
        for (char c : line) {
            w.letters.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        w.alphabet_size = 2;
        return {w, WordStyle::Binary};
    }
    int max_letter = 0;
    for (char c : line) {
        int idx;
        if (c >= 'a' && c <= 'z') {
            idx = c - 'a';
        } else if (c >= 'A' && c <= 'Z') {
            idx = 26 + (c - 'A');
        } else {
            throw parse_error(std::string("invalid character '") + c + "' in word");
        }
        max_letter = std::max(max_letter, idx);
        w.letters.push_back(static_cast<std::uint8_t>(idx));
    }
    w.alphabet_size = max_letter + 1;
    return {w, WordStyle::Letters};
}

Word parse_word(std::string_view line) {
    return parse_word_styled(line).first;
}

} // namespace zimav
