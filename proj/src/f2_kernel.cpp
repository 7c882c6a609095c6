#include "toric/f2.hpp"

#include <algorithm>
#include <cstdint>

namespace toric::kernel {

namespace {

// Below this many words of work per pivot the thread fork costs more than the
// XORs it spreads.
constexpr std::size_t kParallelWords = 1 << 14;

std::optional<std::size_t> find_pivot(const F2Matrix& m, std::size_t from, std::size_t col)
{
    for (std::size_t i = from; i < m.rows(); ++i)
        if (m.get(i, col))
            return i;
    return std::nullopt;
}

void swap_rows(F2Matrix& m, std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    auto ra = m.row_words(a);
    auto rb = m.row_words(b);
    std::swap_ranges(ra.begin(), ra.end(), rb.begin());
}

// Rows before the pivot row are only touched when full_reduce is set. Words
// left of the pivot word are zero in the pivot row and are skipped.
void clear_column_serial(F2Matrix& m, std::size_t pivot_row, std::size_t col, bool full_reduce)
{
    const std::size_t first_word = col / kWordBits;
    const std::size_t stride = m.stride();
    const std::uint64_t* src = m.row_words(pivot_row).data();
    const std::size_t begin = full_reduce ? 0 : pivot_row + 1;
    for (std::size_t i = begin; i < m.rows(); ++i) {
        if (i == pivot_row || !m.get(i, col))
            continue;
        std::uint64_t* dst = m.row_words(i).data();
        for (std::size_t w = first_word; w < stride; ++w)
            dst[w] ^= src[w];
    }
}

void clear_column_parallel(F2Matrix& m, std::size_t pivot_row, std::size_t col, bool full_reduce)
{
    const std::size_t first_word = col / kWordBits;
    const std::size_t stride = m.stride();
    const std::uint64_t* src = m.row_words(pivot_row).data();
    const std::int64_t begin = full_reduce ? 0 : static_cast<std::int64_t>(pivot_row) + 1;
    const auto rows = static_cast<std::int64_t>(m.rows());
    const std::size_t work = (m.rows() - static_cast<std::size_t>(begin)) * (stride - first_word);
    const std::uint64_t col_mask = std::uint64_t{1} << (col % kWordBits);

#pragma omp parallel for schedule(static) if (work >= kParallelWords)
    for (std::int64_t i = begin; i < rows; ++i) {
        if (static_cast<std::size_t>(i) == pivot_row)
            continue;
        std::uint64_t* dst = m.row_words(static_cast<std::size_t>(i)).data();
        if (!(dst[first_word] & col_mask))
            continue;
        for (std::size_t w = first_word; w < stride; ++w)
            dst[w] ^= src[w];
    }
}

} // namespace

std::vector<std::size_t> eliminate(F2Matrix& m, bool full_reduce, Exec exec)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        const auto found = find_pivot(m, r, c);
        if (!found)
            continue;
        swap_rows(m, *found, r);
        if (exec == Exec::parallel)
            clear_column_parallel(m, r, c, full_reduce);
        else
            clear_column_serial(m, r, c, full_reduce);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace toric::kernel
