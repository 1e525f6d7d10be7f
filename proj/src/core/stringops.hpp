#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace zimav {

// Knuth-Morris-Pratt prefix function: pi[i] = length of the longest proper
// border of s[0..i].
std::vector<std::size_t> prefix_function(std::span<const std::uint8_t> s);

// Z-array: z[i] = length of the longest common prefix of s and s[i..).
// z[0] = |s|.
std::vector<std::size_t> z_array(std::span<const std::uint8_t> s);

// Same, writing into an existing buffer (resized as needed).
void z_array_into(std::span<const std::uint8_t> s, std::vector<std::size_t>& z);

} // namespace zimav
