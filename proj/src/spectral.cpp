#include "toric/spectral.hpp"

#include <map>
#include <numeric>
#include <tuple>

namespace toric {

// --------------------------------------------------------- FilteredComplex

FilteredComplex::FilteredComplex(std::vector<F2Matrix> boundaries, std::vector<std::vector<F2Subspace>> levels)
    : boundaries_(std::move(boundaries)), levels_(std::move(levels))
{
    if (boundaries_.empty() || boundaries_.size() != levels_.size())
        throw DimensionError("FilteredComplex: need one boundary and one level list per degree");
    if (boundaries_[0].rows() != 0)
        throw DimensionError("FilteredComplex: boundary out of degree 0 must have zero rows");
    for (std::size_t p = 0; p < boundaries_.size(); ++p) {
        if (p > 0 && boundaries_[p].rows() != boundaries_[p - 1].cols())
            throw DimensionError("FilteredComplex: boundary shapes do not chain");
        if (levels_[p].empty())
            levels_[p].push_back(F2Subspace::full(dim(p)));
        for (const auto& w : levels_[p])
            if (w.ambient_dim() != dim(p))
                throw DimensionError("FilteredComplex: filtration level in the wrong space");
        if (levels_[p][0].dim() != dim(p))
            throw DimensionError("FilteredComplex: level 0 must be the whole space");
        max_level_ = std::max(max_level_, levels_[p].size() - 1);
        zeros_.push_back(F2Subspace::zero(dim(p)));
    }
}

const F2Subspace& FilteredComplex::level(std::size_t p, long q) const
{
    if (q <= 0)
        return levels_[p][0];
    if (static_cast<std::size_t>(q) >= levels_[p].size())
        return zeros_[p];
    return levels_[p][static_cast<std::size_t>(q)];
}

// ------------------------------------------------------------------- pages

std::size_t Page::total() const
{
    std::size_t sum = 0;
    for (const auto& row : dims)
        sum = std::accumulate(row.begin(), row.end(), sum);
    return sum;
}

namespace {

class PageCalculator {
public:
    explicit PageCalculator(const FilteredComplex& c) : c_(c) {}

    // Z^r_{pq}
    const F2Subspace& cycles(std::size_t p, long q, long r)
    {
        const auto key = std::make_tuple(p, q, r);
        if (auto it = cache_.find(key); it != cache_.end())
            return it->second;
        const F2Subspace& w = c_.level(p, q);
        F2Subspace z = (p == 0 || w.dim() == 0)
                           ? w
                           : subspace_intersect(w, preimage_subspace(c_.boundary(p), c_.level(p - 1, q + r)));
        return cache_.emplace(key, std::move(z)).first->second;
    }

    // B^r_{pq}
    F2Subspace boundaries(std::size_t p, long q, long r)
    {
        F2Subspace b = cycles(p, q + 1, r - 1);
        if (p < c_.top_degree())
            b = subspace_sum(b, image_subspace(c_.boundary(p + 1), cycles(p + 1, q - r + 1, r - 1)));
        return b;
    }

    Page page(std::size_t r)
    {
        const std::size_t top = c_.top_degree();
        const std::size_t levels = c_.max_level() + 1;
        const long rr = static_cast<long>(r);
        Page pg;
        pg.r = r;
        pg.dims.assign(top + 1, std::vector<std::size_t>(levels, 0));
        pg.diff_ranks.assign(top + 1, std::vector<std::size_t>(levels, 0));
        for (std::size_t p = 0; p <= top; ++p)
            for (std::size_t q = 0; q < levels; ++q) {
                const long qq = static_cast<long>(q);
                const auto& z = cycles(p, qq, rr);
                pg.dims[p][q] = z.dim() - boundaries(p, qq, rr).dim();
                if (p == 0 || q + r >= levels || z.dim() == 0)
                    continue;
                const auto target = boundaries(p - 1, qq + rr, rr);
                const auto hit = subspace_sum(image_subspace(c_.boundary(p), z), target);
                pg.diff_ranks[p][q] = hit.dim() - target.dim();
            }
        return pg;
    }

private:
    const FilteredComplex& c_;
    std::map<std::tuple<std::size_t, long, long>, F2Subspace> cache_;
};

} // namespace

PageReport compute_pages(const FilteredComplex& c, std::size_t r_max)
{
    if (r_max < 1)
        throw std::invalid_argument("compute_pages: r_max must be at least 1");
    PageReport pr;
    pr.top_degree = c.top_degree();
    pr.max_level = c.max_level();
    PageCalculator calc(c);
    for (std::size_t r = 0; r <= r_max; ++r)
        pr.pages.push_back(calc.page(r));
    pr.degenerate_at_one = degenerates_at_one(pr);
    pr.s_table = s_table(c);
    return pr;
}

bool degenerates_at_one(const PageReport& pr)
{
    for (std::size_t r = 1; r < pr.pages.size(); ++r)
        for (const auto& row : pr.pages[r].diff_ranks)
            for (auto rk : row)
                if (rk != 0)
                    return false;
    return true;
}

bool check_s_condition(const FilteredComplex& c, std::size_t p, std::size_t q)
{
    if (p == 0)
        return true;
    const long qq = static_cast<long>(q);
    const auto& d = c.boundary(p);
    const auto lhs = subspace_intersect(image_subspace(d, c.level(p, qq)), c.level(p - 1, qq + 1));
    return lhs == image_subspace(d, c.level(p, qq + 1));
}

std::vector<std::vector<bool>> s_table(const FilteredComplex& c)
{
    std::vector<std::vector<bool>> t(c.top_degree() + 1, std::vector<bool>(c.max_level() + 1, true));
    for (std::size_t p = 0; p <= c.top_degree(); ++p)
        for (std::size_t q = 0; q <= c.max_level(); ++q)
            t[p][q] = check_s_condition(c, p, q);
    return t;
}

// ------------------------------------------------------------ cross-checks

std::optional<F2Matrix> g0_differential_in_exterior_coords(const OrbitChainComplex& c, std::size_t p, std::size_t q)
{
    if (p == 0 || p > c.n())
        throw std::invalid_argument("g0_differential_in_exterior_coords: p out of range");
    const auto src = assembled_psi(c, p, q);
    const auto dst = assembled_psi(c, p - 1, q);
    const auto& deeper = c.ideal_power(p - 1, q + 1);
    // Columns: psi of the target basis, then a basis of the next level.
    const auto system = dst.transpose().stacked(deeper.basis()).transpose();

    F2Matrix out(dst.cols(), src.cols());
    for (std::size_t j = 0; j < src.cols(); ++j) {
        const auto image = c.boundary(p) * src.column(j);
        const auto coords = solve(system, image);
        if (!coords)
            return std::nullopt;
        for (std::size_t i = 0; i < dst.cols(); ++i)
            if (coords->get(i))
                out.set(i, j);
    }
    return out;
}

bool verify_g0_matches_e1(const OrbitChainComplex& c, const ExteriorComplex& x)
{
    if (c.n() != x.n())
        return false;
    for (std::size_t p = 1; p <= c.n(); ++p)
        for (std::size_t q = 0; q <= c.n(); ++q) {
            const auto induced = g0_differential_in_exterior_coords(c, p, q);
            if (!induced || !(*induced == x.d1(p, q)))
                return false;
        }
    return true;
}

bool verify_g1_equals_e2(const PageReport& pr, const PageTable& e2)
{
    if (pr.pages.size() < 2)
        return false;
    return pr.page(1).dims == e2.dims;
}

bool verify_convergence(const PageReport& pr, std::span<const std::size_t> betti)
{
    const auto& lim = pr.limit();
    if (lim.dims.size() != betti.size())
        return false;
    for (std::size_t p = 0; p < betti.size(); ++p)
        if (std::accumulate(lim.dims[p].begin(), lim.dims[p].end(), std::size_t{0}) != betti[p])
            return false;
    return true;
}

} // namespace toric
