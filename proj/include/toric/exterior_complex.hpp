#pragma once

// First page of the orbit spectral sequence of the complex toric variety: in
// bidegree (p, q) the sum over cones of dimension n - p of the q-th exterior
// power of the cone's quotient, with differential the exterior powers of the
// induced projections.

#include "toric/f2.hpp"
#include "toric/fan.hpp"

#include <cstdint>
#include <vector>

namespace toric {

/// q-th exterior power of f: C(rows,q) x C(cols,q), entries are the q x q
/// minors indexed by colex-ordered subsets.
F2Matrix exterior_power(const F2Matrix& f, std::size_t q);

struct ExteriorLabel {
    std::size_t cone = 0;
    std::uint32_t subset = 0; // q-subset of the quotient coordinates
    bool operator==(const ExteriorLabel&) const = default;
};

/// Dimensions indexed [p][q], 0 <= p, q <= n.
struct PageTable {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> dims;

    std::size_t at(std::size_t p, std::size_t q) const { return dims[p][q]; }
    std::size_t total() const;
    bool operator==(const PageTable&) const = default;
};

class ExteriorComplex {
public:
    std::size_t n() const { return n_; }
    std::size_t dim(std::size_t p, std::size_t q) const { return d1_[p][q].cols(); }
    const std::vector<ExteriorLabel>& labels(std::size_t p, std::size_t q) const { return labels_[p][q]; }
    /// E1[p][q] -> E1[p-1][q]; zero rows when p = 0.
    const F2Matrix& d1(std::size_t p, std::size_t q) const { return d1_[p][q]; }

private:
    friend ExteriorComplex build_exterior_complex(const Fan& f);

    std::size_t n_ = 0;
    std::vector<std::vector<std::vector<ExteriorLabel>>> labels_;
    std::vector<std::vector<F2Matrix>> d1_;
};

ExteriorComplex build_exterior_complex(const Fan& f);

PageTable e1_dims(const ExteriorComplex& x);
/// Homology of (E1, d1).
PageTable e2_dims(const ExteriorComplex& x);

} // namespace toric
