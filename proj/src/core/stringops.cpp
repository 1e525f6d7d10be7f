#include "core/stringops.hpp"

#include <algorithm>

namespace zimav {

std::vector<std::size_t> prefix_function(std::span<const std::uint8_t> s) {
    const std::size_t n = s.size();
    std::vector<std::size_t> pi(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t k = pi[i - 1];
        while (k > 0 && s[i] != s[k]) {
            k = pi[k - 1];
        }
        if (s[i] == s[k]) {
            ++k;
        }
        pi[i] = k;
    }
    return pi;
}

std::vector<std::size_t> z_array(std::span<const std::uint8_t> s) {
    std::vector<std::size_t> z;
    z_array_into(s, z);
    return z;
}

void z_array_into(std::span<const std::uint8_t> s, std::vector<std::size_t>& z) {
    const std::size_t n = s.size();
    z.assign(n, 0);
    if (n == 0) {
        return;
    }
    z[0] = n;
    std::size_t l = 0;
    std::size_t r = 0; // [l, r) is the rightmost match window
    for (std::size_t i = 1; i < n; ++i) {
        if (i < r) {
            z[i] = std::min(r - i, z[i - l]);
        }
        while (i + z[i] < n && s[z[i]] == s[i + z[i]]) {
            ++z[i];
        }
        if (i + z[i] > r) {
            l = i;
            r = i + z[i];
        }
    }
}

} // namespace zimav
