#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/word.hpp"
#include "core/zimin_check.hpp"

namespace zimav {

// A word of variables; symbols are dense canonical indices renamed by first
// occurrence, names keep the display letter for each variable.
struct Pattern {
    std::vector<std::uint8_t> symbols;
    std::vector<char> names;

    std::size_t size() const { return symbols.size(); }
    int arity() const { return int(names.size()); }
    bool operator==(const Pattern& other) const { return symbols == other.symbols; }
};

// Canonical pattern from raw variable indices; display names assigned a, b, ...
Pattern make_pattern(const std::vector<std::uint8_t>& symbols);

// A string over letters, e.g. "xyxzy"; variables renamed by first occurrence.
Pattern parse_pattern(std::string_view text);

std::string render_pattern(const Pattern& p);

// A non-erasing substitution certifying that the subword of the host at span
// is an instance of the pattern.
struct MorphismWitness {
    std::vector<Word> images; // one nonempty word per variable
    Span span;
};

// Does some assignment of nonempty images reproduce w exactly? Backtracks
// over image lengths, earlier variables trying shorter images first, so the
// returned witness has the lexicographically least length vector.
std::optional<MorphismWitness> instance_of_pattern(const Word& w, const Pattern& p);

// instance_of_pattern over all subwords, shortest first then leftmost.
std::optional<MorphismWitness> encounters_pattern(const Word& w, const Pattern& p);

// Checks image count, nonemptiness, and that concatenating images per the
// pattern equals the host subword at the witness span.
bool witness_matches(const Word& w, const Pattern& p, const MorphismWitness& wit);

// A pattern over m variables is unavoidable iff the m-th zimin word
// encounters it. The cap bounds the host length 2^m - 1.
bool is_unavoidable(const Pattern& p, std::size_t length_cap = std::size_t{1} << 20);

} // namespace zimav
