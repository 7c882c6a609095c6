#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace toric {

inline std::size_t binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    std::size_t out = 1;
    for (std::size_t i = 1; i <= k; ++i)
        out = out * (n - k + i) / i;
    return out;
}

/// The q-element subsets of {0..m-1} as bitmasks, in colexicographic order
/// (which is increasing order of the masks).
inline std::vector<std::uint32_t> subsets_colex(std::size_t m, std::size_t q)
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask)
        if (static_cast<std::size_t>(std::popcount(mask)) == q)
            out.push_back(mask);
    return out;
}

} // namespace toric
