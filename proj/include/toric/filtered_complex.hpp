#pragma once

#include "toric/f2.hpp"

#include <vector>

namespace toric {

/// A chain complex C_0 <- C_1 <- ... <- C_top over F2 with a decreasing
/// filtration C_p = W^0_p ⊇ W^1_p ⊇ ... that the boundary preserves.
///
/// Levels below 0 are the whole space; levels past the stored ones are zero.
class FilteredComplex {
public:
    FilteredComplex() = default;

    /// boundaries[p] : C_p -> C_{p-1} (boundaries[0] has zero rows);
    /// levels[p][q] = W^q_p with levels[p][0] the whole of C_p.
    FilteredComplex(std::vector<F2Matrix> boundaries, std::vector<std::vector<F2Subspace>> levels);

    std::size_t top_degree() const { return boundaries_.size() - 1; }
    std::size_t dim(std::size_t p) const { return boundaries_[p].cols(); }
    /// Largest stored filtration index over all degrees.
    std::size_t max_level() const { return max_level_; }

    const F2Matrix& boundary(std::size_t p) const { return boundaries_[p]; }
    const F2Subspace& level(std::size_t p, long q) const;

private:
    std::vector<F2Matrix> boundaries_;
    std::vector<std::vector<F2Subspace>> levels_;
    std::vector<F2Subspace> zeros_;
    std::size_t max_level_ = 0;
};

} // namespace toric
