#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace zimav {

inline constexpr int kMaxAlphabet = 255;

// Zimin indices above this would overflow 2^n - 1 length arithmetic.
inline constexpr std::uint32_t kDefaultZiminCap = 62;

// A finite word over an alphabet of `alphabet_size` letters, stored as a
// flat byte sequence of letter indices in [0, alphabet_size).
struct Word {
    std::vector<std::uint8_t> letters;
    int alphabet_size = 1;

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    const std::uint8_t* data() const { return letters.data(); }

    bool operator==(const Word& other) const { return letters == other.letters; }

    // Lexicographic order on letter indices; used for sorted word lists.
    bool operator<(const Word& other) const { return letters < other.letters; }
};

// Validates letter range and alphabet bounds.
Word make_word(std::vector<std::uint8_t> letters, int alphabet_size);

// Z_0 = eps, Z_{n+1} = Z_n . x_n . Z_n, over alphabet max(n, 1).
Word zimin(std::uint32_t n, std::uint32_t cap = kDefaultZiminCap);

// Equivalent construction: letter at position i (1-indexed) is the 2-adic
// order of i, for 1 <= i < 2^n.
Word zimin_ruler(std::uint32_t n, std::uint32_t cap = kDefaultZiminCap);

// All i >= 1 with prefix(i) == suffix(i) and 2i < |w| (disjoint copies with a
// nonempty middle), ascending. Direct prefix/suffix comparison.
std::vector<std::size_t> bisecting_borders(const Word& w);

// Same set computed from the KMP prefix function; must agree with the direct
// route.
std::vector<std::size_t> bisecting_borders_via_prefix_function(const Word& w);

// Letterwise 0<->1 flip; requires alphabet_size == 2.
Word complement(const Word& w);

Word reverse(const Word& w);

enum class WordStyle {
    Binary,  // '0'/'1'; requires alphabet_size <= 2
    Letters, // 'a'..'z' then 'A'..'Z'
};

std::string render_word(const Word& w, WordStyle style);

// One word per line: binary words over {0,1}, general words over letters.
// An empty line is the empty word.
Word parse_word(std::string_view line);

// Parse plus the style the input was written in (empty input reports Binary).
std::pair<Word, WordStyle> parse_word_styled(std::string_view line);

} // namespace zimav
