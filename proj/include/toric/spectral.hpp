#pragma once

// Spectral sequence of a filtered F2 chain complex, in the indexing where
// G^r_{pq} sits in chain degree p and filtration level q, and the
// differential of page r goes (p, q) -> (p - 1, q + r).
//
// All pages are computed inside the ambient chain groups:
//
//   Z^r_{pq}   = { x in W^q_p : D x in W^(q+r)_(p-1) }
//   B^r_{pq}   = Z^(r-1)_{p,q+1} + D Z^(r-1)_{p+1,q-r+1}
//   G^r_{pq}   = Z^r_{pq} / B^r_{pq}
//
// so G^0_{pq} = W^q_p / W^(q+1)_p and the differential is induced by D.

#include "toric/exterior_complex.hpp"
#include "toric/filtered_complex.hpp"
#include "toric/orbit_complex.hpp"

#include <span>
#include <vector>

namespace toric {

struct Page {
    std::size_t r = 0;
    std::vector<std::vector<std::size_t>> dims;       // [p][q]
    std::vector<std::vector<std::size_t>> diff_ranks; // [p][q]: rank of the differential leaving (p, q)

    std::size_t total() const;
    bool operator==(const Page&) const = default;
};

struct PageReport {
    std::size_t top_degree = 0;
    std::size_t max_level = 0;
    std::vector<Page> pages; // r = 0 .. r_max
    bool degenerate_at_one = false;
    std::vector<std::vector<bool>> s_table; // [p][q]

    const Page& page(std::size_t r) const { return pages.at(r); }
    /// The last computed page; the limit once r_max exceeds max_level.
    const Page& limit() const { return pages.back(); }
};

/// Pages 0..r_max (r_max >= 1) together with the s-condition table.
PageReport compute_pages(const FilteredComplex& c, std::size_t r_max);

/// Default page bound: past the filtration length every differential is zero.
inline std::size_t default_r_max(const FilteredComplex& c) { return c.max_level() + 2; }

/// True iff every differential on pages r >= 1 vanishes.
bool degenerates_at_one(const PageReport& pr);

/// Whether D(W^q_p) ∩ W^(q+1)_(p-1) = D(W^(q+1)_p): every level-q chain whose
/// boundary lies one level deeper has the boundary of a level-(q+1) chain.
bool check_s_condition(const FilteredComplex& c, std::size_t p, std::size_t q);
std::vector<std::vector<bool>> s_table(const FilteredComplex& c);

/// The differential D_p on W^q_p / W^(q+1)_p written in exterior coordinates
/// through psi. Empty if D psi(x) falls outside W^q + psi's span.
std::optional<F2Matrix> g0_differential_in_exterior_coords(const OrbitChainComplex& c, std::size_t p, std::size_t q);

/// Whether the induced map above equals d1 of the exterior complex in every bidegree.
bool verify_g0_matches_e1(const OrbitChainComplex& c, const ExteriorComplex& x);

/// dim G^1 = dim E^2 at every (p, q).
bool verify_g1_equals_e2(const PageReport& pr, const PageTable& e2);

/// Sum over q of dim G^limit_{pq} equals betti[p] for every p.
bool verify_convergence(const PageReport& pr, std::span<const std::size_t> betti);

} // namespace toric
