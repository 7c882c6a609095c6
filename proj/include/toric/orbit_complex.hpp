#pragma once

// The cellular chain complex of the real toric variety with Z/2 coefficients.
//
// Degree p collects the cones of dimension n - p. Each such cone contributes
// the group algebra F2[V/L] of its quotient V/L ≅ F2^p (L the cone's mod-2
// lattice), whose basis is the set of quotient elements. The boundary sends
// the element v of a cone to the image of v in each cone covering it.
//
// The powers I^q of the augmentation ideal of each group algebra give the
// filtration W^q_p; I^q is spanned by the classes [H] = sum of the elements of
// H, for q-dimensional subspaces H.

#include "toric/f2.hpp"
#include "toric/fan.hpp"
#include "toric/filtered_complex.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace toric {

/// Quotient elements are little-endian bit masks over the quotient coordinates.
using QuotientElement = std::uint32_t;

std::uint32_t to_mask(const F2Vector& v);
F2Vector from_mask(std::uint32_t mask, std::size_t len);

/// An element of the group algebra of F2^quot_dim attached to one cone.
struct GroupAlgebraChain {
    std::size_t cone = 0;
    std::size_t quot_dim = 0;
    F2Vector coeffs; // 2^quot_dim entries, indexed by QuotientElement

    static GroupAlgebraChain zero(std::size_t m, std::size_t cone = 0);
    /// [v]
    static GroupAlgebraChain element(std::size_t m, QuotientElement v, std::size_t cone = 0);

    /// Sum of coefficients; the chain lies in the augmentation ideal iff false.
    bool augmentation() const { return coeffs.popcount() & 1U; }

    /// Convolution: [u] * [v] = [u + v].
    GroupAlgebraChain operator*(const GroupAlgebraChain& other) const;
    GroupAlgebraChain& operator+=(const GroupAlgebraChain& other);
    friend GroupAlgebraChain operator+(GroupAlgebraChain a, const GroupAlgebraChain& b) { return a += b; }

    bool operator==(const GroupAlgebraChain&) const = default;
};

/// [H] = sum of the elements of h, h ⊆ F2^m.
GroupAlgebraChain class_of_subspace(const F2Subspace& h, std::size_t cone = 0);

/// Class of the coordinate subspace spanned by the e_i with i in `subset`.
GroupAlgebraChain coordinate_class(std::size_t m, std::uint32_t subset, std::size_t cone = 0);

/// I^q inside F2[F2^m], as a subspace of F2^(2^m). Cached.
const F2Subspace& local_ideal_power(std::size_t m, std::size_t q);

/// The identification of the q-th exterior power with I^q / I^(q+1): sends a
/// q-vector w (coordinates over the q-subsets of {0..m-1} in colex order) to
/// the representative sum_I w_I [span{e_i : i in I}].
GroupAlgebraChain psi(std::size_t q, std::size_t m, const F2Vector& w, std::size_t cone = 0);

/// 2^m x C(m,q) matrix whose columns are psi of the basis q-vectors.
F2Matrix psi_matrix(std::size_t m, std::size_t q);

/// Lift of a q-vector written in the basis `basis` of F2^m: the sum of the
/// classes of the coordinate subspaces of that basis.
GroupAlgebraChain section_map(std::size_t q, std::span<const F2Vector> basis, const F2Vector& w);

/// Reduction of c ∈ I^q modulo I^(q+1), as a q-vector in standard
/// coordinates; empty when c is not in I^q.
std::optional<F2Vector> reduce_to_exterior(std::size_t q, const GroupAlgebraChain& c);

struct ChainLabel {
    std::size_t cone = 0;
    QuotientElement element = 0;
    bool operator==(const ChainLabel&) const = default;
};

class OrbitChainComplex {
public:
    std::size_t n() const { return n_; }
    std::size_t dim(std::size_t p) const { return complex_.dim(p); }

    /// Cones of dimension n - p, increasing id.
    const std::vector<std::size_t>& cones(std::size_t p) const { return cones_[p]; }
    /// Basis of A_p: cone id ascending, then element ascending.
    std::vector<ChainLabel> labels(std::size_t p) const;
    /// Position of the first basis vector of `cone` in A_p.
    std::size_t offset(std::size_t p, std::size_t cone) const;

    const F2Matrix& boundary(std::size_t p) const { return complex_.boundary(p); }
    /// W^q_p; zero for q > p.
    const F2Subspace& ideal_power(std::size_t p, std::size_t q) const
    {
        return complex_.level(p, static_cast<long>(q));
    }

    const FilteredComplex& filtered() const { return complex_; }

    /// Places a cone-local chain into A_p.
    F2Vector embed(std::size_t p, const GroupAlgebraChain& c) const;

private:
    friend OrbitChainComplex build_orbit_complex(const Fan& f);

    std::size_t n_ = 0;
    std::vector<std::vector<std::size_t>> cones_;
    FilteredComplex complex_;
};

OrbitChainComplex build_orbit_complex(const Fan& f);

/// Mod-2 Borel-Moore Betti numbers b_0..b_n.
std::vector<std::size_t> betti_real(const OrbitChainComplex& c);

/// dim A_p x dim E1[p][q] matrix: psi_matrix(p, q) repeated down the diagonal,
/// one block per cone of degree p.
F2Matrix assembled_psi(const OrbitChainComplex& c, std::size_t p, std::size_t q);

} // namespace toric
