#include "toric/exterior_complex.hpp"

#include "toric/combinatorics.hpp"

#include <numeric>

namespace toric {

F2Matrix exterior_power(const F2Matrix& f, std::size_t q)
{
    const auto row_sets = subsets_colex(f.rows(), q);
    const auto col_sets = subsets_colex(f.cols(), q);
    F2Matrix out(row_sets.size(), col_sets.size());
    F2Matrix minor(q, q);
    for (std::size_t j = 0; j < col_sets.size(); ++j)
        for (std::size_t i = 0; i < row_sets.size(); ++i) {
            std::size_t r = 0;
            for (std::size_t a = 0; a < f.rows(); ++a) {
                if (!(row_sets[i] >> a & 1U))
                    continue;
                std::size_t c = 0;
                for (std::size_t b = 0; b < f.cols(); ++b)
                    if (col_sets[j] >> b & 1U)
                        minor.set(r, c++, f.get(a, b));
                ++r;
            }
            if (determinant(minor))
                out.set(i, j);
        }
    return out;
}

std::size_t PageTable::total() const
{
    std::size_t sum = 0;
    for (const auto& row : dims)
        sum = std::accumulate(row.begin(), row.end(), sum);
    return sum;
}

ExteriorComplex build_exterior_complex(const Fan& f)
{
    ExteriorComplex x;
    const std::size_t n = f.n;
    x.n_ = n;
    x.labels_.assign(n + 1, std::vector<std::vector<ExteriorLabel>>(n + 1));

    std::vector<std::vector<std::size_t>> cones(n + 1);
    // Position of each cone inside its degree.
    std::vector<std::size_t> slot(f.cones.size(), 0);
    for (std::size_t p = 0; p <= n; ++p) {
        cones[p] = f.cones_of_dim(n - p);
        for (std::size_t k = 0; k < cones[p].size(); ++k)
            slot[cones[p][k]] = k;
        for (std::size_t q = 0; q <= n; ++q)
            for (auto c : cones[p])
                for (auto s : subsets_colex(p, q))
                    x.labels_[p][q].push_back({c, s});
    }

    x.d1_.resize(n + 1);
    for (std::size_t q = 0; q <= n; ++q)
        x.d1_[0].emplace_back(0, x.labels_[0][q].size());
    for (std::size_t p = 1; p <= n; ++p)
        for (std::size_t q = 0; q <= n; ++q)
            x.d1_[p].emplace_back(x.labels_[p - 1][q].size(), x.labels_[p][q].size());

    for (const auto& [lo, hi] : f.covers) {
        const std::size_t p = n - f.cones[lo].dim;
        const F2Matrix map = induced_map(f.cones[lo].mod2, f.cones[hi].mod2);
        for (std::size_t q = 0; q <= p; ++q) {
            const auto block = exterior_power(map, q);
            const std::size_t row0 = slot[hi] * block.rows();
            const std::size_t col0 = slot[lo] * block.cols();
            auto& d = x.d1_[p][q];
            for (std::size_t i = 0; i < block.rows(); ++i)
                for (std::size_t j = 0; j < block.cols(); ++j)
                    if (block.get(i, j))
                        d.flip(row0 + i, col0 + j);
        }
    }
    return x;
}

PageTable e1_dims(const ExteriorComplex& x)
{
    PageTable t{x.n(), std::vector<std::vector<std::size_t>>(x.n() + 1, std::vector<std::size_t>(x.n() + 1, 0))};
    for (std::size_t p = 0; p <= x.n(); ++p)
        for (std::size_t q = 0; q <= x.n(); ++q)
            t.dims[p][q] = x.dim(p, q);
    return t;
}

PageTable e2_dims(const ExteriorComplex& x)
{
    PageTable t = e1_dims(x);
    for (std::size_t q = 0; q <= x.n(); ++q) {
        std::vector<std::size_t> ranks(x.n() + 2, 0);
        for (std::size_t p = 1; p <= x.n(); ++p)
            ranks[p] = rank(x.d1(p, q));
        for (std::size_t p = 0; p <= x.n(); ++p)
            t.dims[p][q] -= ranks[p] + ranks[p + 1];
    }
    return t;
}

} // namespace toric
