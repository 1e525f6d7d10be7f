#pragma once

#include <cstddef>
#include <string>

#include "core/word.hpp"

namespace zimav {

inline constexpr std::size_t kDefaultRowWidth = 90;

// Render a binary word as an ASCII PBM (P1) image: bits row-major, 0 = white,
// 1 = black, height = ceil(|w| / row_width). A final partial row is padded
// with white cells and the count is recorded in a "# pad=N" comment so the
// exact word survives a round trip. Output is byte-stable.
std::string pbm_encode(const Word& w, std::size_t row_width = kDefaultRowWidth);

// Invert pbm_encode. Accepts only images this encoder produces: P1 header,
// optional "# pad=N" comment, all padding cells white.
Word pbm_decode(const std::string& text);

} // namespace zimav
