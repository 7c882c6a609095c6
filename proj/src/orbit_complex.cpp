#include "toric/orbit_complex.hpp"

#include "toric/combinatorics.hpp"

#include <map>
#include <mutex>

namespace toric {

std::uint32_t to_mask(const F2Vector& v)
{
    if (v.size() > 32)
        throw DimensionError("to_mask: vector longer than 32");
    return v.size() == 0 ? 0U : static_cast<std::uint32_t>(v.words()[0]);
}

F2Vector from_mask(std::uint32_t mask, std::size_t len)
{
    F2Vector v(len);
    for (std::size_t i = 0; i < len; ++i)
        if (mask >> i & 1U)
            v.set(i);
    return v;
}

// ------------------------------------------------------- GroupAlgebraChain

GroupAlgebraChain GroupAlgebraChain::zero(std::size_t m, std::size_t cone)
{
    return {cone, m, F2Vector(std::size_t{1} << m)};
}

GroupAlgebraChain GroupAlgebraChain::element(std::size_t m, QuotientElement v, std::size_t cone)
{
    auto c = zero(m, cone);
    c.coeffs.set(v);
    return c;
}

GroupAlgebraChain GroupAlgebraChain::operator*(const GroupAlgebraChain& other) const
{
    if (quot_dim != other.quot_dim)
        throw DimensionError("GroupAlgebraChain product: different quotients");
    auto out = zero(quot_dim, cone);
    const std::size_t size = std::size_t{1} << quot_dim;
    for (std::size_t u = 0; u < size; ++u) {
        if (!coeffs.get(u))
            continue;
        for (std::size_t v = 0; v < size; ++v)
            if (other.coeffs.get(v))
                out.coeffs.flip(u ^ v);
    }
    return out;
}

GroupAlgebraChain& GroupAlgebraChain::operator+=(const GroupAlgebraChain& other)
{
    if (quot_dim != other.quot_dim)
        throw DimensionError("GroupAlgebraChain sum: different quotients");
    coeffs ^= other.coeffs;
    return *this;
}

GroupAlgebraChain class_of_subspace(const F2Subspace& h, std::size_t cone)
{
    const std::size_t m = h.ambient_dim();
    std::vector<std::uint32_t> rows;
    for (const auto& b : h.basis_vectors())
        rows.push_back(to_mask(b));
    auto out = GroupAlgebraChain::zero(m, cone);
    for (std::uint32_t combo = 0; combo < (std::uint32_t{1} << rows.size()); ++combo) {
        std::uint32_t v = 0;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (combo >> i & 1U)
                v ^= rows[i];
        out.coeffs.set(v);
    }
    return out;
}

GroupAlgebraChain coordinate_class(std::size_t m, std::uint32_t subset, std::size_t cone)
{
    auto out = GroupAlgebraChain::zero(m, cone);
    // Enumerate the submasks of `subset`.
    std::uint32_t s = subset;
    for (;;) {
        out.coeffs.set(s);
        if (s == 0)
            break;
        s = (s - 1) & subset;
    }
    return out;
}

namespace {

// Above this the q-subspaces are too many to enumerate; the coordinate
// classes of dimension >= q span the same ideal.
constexpr std::size_t kEnumerateUpTo = 6;

// Classes of every q-dimensional subspace of F2^m, one per reduced echelon basis.
std::vector<F2Vector> all_subspace_classes(std::size_t m, std::size_t q)
{
    std::vector<F2Vector> out;
    for (auto pivot_mask : subsets_colex(m, q)) {
        std::vector<std::size_t> pivots;
        for (std::size_t i = 0; i < m; ++i)
            if (pivot_mask >> i & 1U)
                pivots.push_back(i);
        // Free positions of row i: non-pivot columns after its pivot.
        std::vector<std::pair<std::size_t, std::size_t>> free_slots;
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t c = pivots[i] + 1; c < m; ++c)
                if (!(pivot_mask >> c & 1U))
                    free_slots.emplace_back(i, c);
        for (std::uint64_t fill = 0; fill < (std::uint64_t{1} << free_slots.size()); ++fill) {
            std::vector<F2Vector> rows;
            for (std::size_t i = 0; i < q; ++i)
                rows.push_back(F2Vector::unit(m, pivots[i]));
            for (std::size_t k = 0; k < free_slots.size(); ++k)
                if (fill >> k & 1U)
                    rows[free_slots[k].first].set(free_slots[k].second);
            out.push_back(class_of_subspace(F2Subspace::span(m, rows)).coeffs);
        }
    }
    return out;
}

F2Subspace compute_ideal_power(std::size_t m, std::size_t q)
{
    const std::size_t size = std::size_t{1} << m;
    if (q == 0)
        return F2Subspace::full(size);
    if (q > m)
        return F2Subspace::zero(size);
    if (m <= kEnumerateUpTo)
        return F2Subspace::span(size, all_subspace_classes(m, q));
    std::vector<F2Vector> gens;
    for (std::size_t k = q; k <= m; ++k)
        for (auto subset : subsets_colex(m, k))
            gens.push_back(coordinate_class(m, subset).coeffs);
    return F2Subspace::span(size, gens);
}

} // namespace

const F2Subspace& local_ideal_power(std::size_t m, std::size_t q)
{
    static std::mutex lock;
    static std::map<std::pair<std::size_t, std::size_t>, F2Subspace> cache;
    std::lock_guard guard(lock);
    auto it = cache.find({m, q});
    if (it == cache.end())
        it = cache.emplace(std::pair{m, q}, compute_ideal_power(m, q)).first;
    return it->second;
}

GroupAlgebraChain psi(std::size_t q, std::size_t m, const F2Vector& w, std::size_t cone)
{
    const auto subsets = subsets_colex(m, q);
    if (w.size() != subsets.size())
        throw DimensionError("psi: q-vector has wrong length");
    auto out = GroupAlgebraChain::zero(m, cone);
    for (std::size_t j = 0; j < subsets.size(); ++j)
        if (w.get(j))
            out += coordinate_class(m, subsets[j], cone);
    return out;
}

F2Matrix psi_matrix(std::size_t m, std::size_t q)
{
    const auto subsets = subsets_colex(m, q);
    std::vector<F2Vector> cols;
    cols.reserve(subsets.size());
    for (auto s : subsets)
        cols.push_back(coordinate_class(m, s).coeffs);
    return F2Matrix::from_columns(std::size_t{1} << m, cols);
}

GroupAlgebraChain section_map(std::size_t q, std::span<const F2Vector> basis, const F2Vector& w)
{
    const std::size_t m = basis.size();
    for (const auto& b : basis)
        if (b.size() != m)
            throw DimensionError("section_map: basis vectors must have length m");
    if (F2Subspace::span(m, basis).dim() != m)
        throw std::invalid_argument("section_map: vectors do not form a basis");
    const auto subsets = subsets_colex(m, q);
    if (w.size() != subsets.size())
        throw DimensionError("section_map: q-vector has wrong length");

    auto out = GroupAlgebraChain::zero(m);
    for (std::size_t j = 0; j < subsets.size(); ++j) {
        if (!w.get(j))
            continue;
        std::vector<F2Vector> gens;
        for (std::size_t i = 0; i < m; ++i)
            if (subsets[j] >> i & 1U)
                gens.push_back(basis[i]);
        out += class_of_subspace(F2Subspace::span(m, gens));
    }
    return out;
}

std::optional<F2Vector> reduce_to_exterior(std::size_t q, const GroupAlgebraChain& c)
{
    const std::size_t m = c.quot_dim;
    if (!local_ideal_power(m, q).contains(c.coeffs))
        return std::nullopt;
    const auto lift = psi_matrix(m, q);
    const auto& next = local_ideal_power(m, q + 1);
    auto system = lift.transpose().stacked(next.basis()).transpose();
    const auto x = solve(system, c.coeffs);
    if (!x)
        return std::nullopt;
    F2Vector w(lift.cols());
    for (std::size_t j = 0; j < lift.cols(); ++j)
        if (x->get(j))
            w.set(j);
    return w;
}

// ------------------------------------------------------- OrbitChainComplex

std::vector<ChainLabel> OrbitChainComplex::labels(std::size_t p) const
{
    std::vector<ChainLabel> out;
    const std::uint32_t size = std::uint32_t{1} << p;
    for (auto cone : cones_[p])
        for (std::uint32_t v = 0; v < size; ++v)
            out.push_back({cone, v});
    return out;
}

std::size_t OrbitChainComplex::offset(std::size_t p, std::size_t cone) const
{
    const auto& list = cones_[p];
    for (std::size_t k = 0; k < list.size(); ++k)
        if (list[k] == cone)
            return k << p;
    throw std::invalid_argument("OrbitChainComplex::offset: cone not in this degree");
}

F2Vector OrbitChainComplex::embed(std::size_t p, const GroupAlgebraChain& c) const
{
    if (c.quot_dim != p)
        throw DimensionError("OrbitChainComplex::embed: chain has the wrong quotient dimension");
    F2Vector out(dim(p));
    const std::size_t base = offset(p, c.cone);
    for (std::size_t v = 0; v < c.coeffs.size(); ++v)
        if (c.coeffs.get(v))
            out.set(base + v);
    return out;
}

namespace {

F2Subspace block_diagonal(const F2Subspace& block, std::size_t copies)
{
    const std::size_t width = block.ambient_dim();
    F2Matrix basis(block.dim() * copies, width * copies);
    for (std::size_t k = 0; k < copies; ++k)
        for (std::size_t r = 0; r < block.dim(); ++r)
            for (std::size_t c = 0; c < width; ++c)
                if (block.basis().get(r, c))
                    basis.set(k * block.dim() + r, k * width + c);
    return F2Subspace::row_space(basis);
}

} // namespace

OrbitChainComplex build_orbit_complex(const Fan& f)
{
    OrbitChainComplex out;
    const std::size_t n = f.n;
    out.n_ = n;
    out.cones_.resize(n + 1);
    std::vector<std::size_t> offset(f.cones.size(), 0);
    for (std::size_t p = 0; p <= n; ++p) {
        out.cones_[p] = f.cones_of_dim(n - p);
        for (std::size_t k = 0; k < out.cones_[p].size(); ++k)
            offset[out.cones_[p][k]] = k << p;
    }
    const auto dim_of = [&](std::size_t p) { return out.cones_[p].size() << p; };

    std::vector<F2Matrix> boundaries;
    boundaries.emplace_back(0, dim_of(0));
    for (std::size_t p = 1; p <= n; ++p)
        boundaries.emplace_back(dim_of(p - 1), dim_of(p));

    for (const auto& [lo, hi] : f.covers) {
        const Cone& face = f.cones[lo];
        const Cone& coface = f.cones[hi];
        const std::size_t p = n - face.dim;
        const F2Matrix map = induced_map(face.mod2, coface.mod2);
        std::vector<std::uint32_t> image_of_unit(p);
        for (std::size_t j = 0; j < p; ++j)
            image_of_unit[j] = to_mask(map.column(j));
        auto& d = boundaries[p];
        for (std::uint32_t v = 0; v < (std::uint32_t{1} << p); ++v) {
            std::uint32_t w = 0;
            for (std::size_t j = 0; j < p; ++j)
                if (v >> j & 1U)
                    w ^= image_of_unit[j];
            d.flip(offset[hi] + w, offset[lo] + v);
        }
    }

    std::vector<std::vector<F2Subspace>> levels(n + 1);
    for (std::size_t p = 0; p <= n; ++p)
        for (std::size_t q = 0; q <= p; ++q)
            levels[p].push_back(block_diagonal(local_ideal_power(p, q), out.cones_[p].size()));

    out.complex_ = FilteredComplex(std::move(boundaries), std::move(levels));
    return out;
}

std::vector<std::size_t> betti_real(const OrbitChainComplex& c)
{
    std::vector<std::size_t> ranks(c.n() + 2, 0);
    for (std::size_t p = 1; p <= c.n(); ++p)
        ranks[p] = rank(c.boundary(p));
    std::vector<std::size_t> betti(c.n() + 1);
    for (std::size_t p = 0; p <= c.n(); ++p)
        betti[p] = c.dim(p) - ranks[p] - ranks[p + 1];
    return betti;
}

F2Matrix assembled_psi(const OrbitChainComplex& c, std::size_t p, std::size_t q)
{
    const auto block = psi_matrix(p, q);
    const std::size_t copies = c.cones(p).size();
    F2Matrix out(c.dim(p), copies * block.cols());
    for (std::size_t k = 0; k < copies; ++k)
        for (std::size_t r = 0; r < block.rows(); ++r)
            for (std::size_t j = 0; j < block.cols(); ++j)
                if (block.get(r, j))
                    out.set((k << p) + r, k * block.cols() + j);
    return out;
}

} // namespace toric
