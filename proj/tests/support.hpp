#pragma once

#include "oracle.hpp"

#include "toric/f2.hpp"

#include <map>
#include <random>
#include <string>

namespace testing_support {

inline oracle::Dense to_dense(const toric::F2Matrix& m)
{
    oracle::Dense d(m.rows(), std::vector<int>(m.cols(), 0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            d[i][j] = m.get(i, j);
    return d;
}

inline std::uint32_t mask_of(const toric::F2Vector& v)
{
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v.get(i))
            m |= std::uint32_t{1} << i;
    return m;
}

inline toric::F2Vector vector_of_mask(std::uint32_t m, std::size_t len)
{
    toric::F2Vector v(len);
    for (std::size_t i = 0; i < len; ++i)
        if (m >> i & 1U)
            v.set(i);
    return v;
}

inline oracle::Set to_set(const toric::F2Subspace& s)
{
    std::vector<std::uint32_t> gens;
    for (const auto& v : s.basis_vectors())
        gens.push_back(mask_of(v));
    return oracle::span(gens);
}

inline toric::F2Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density = 0.5)
{
    std::bernoulli_distribution bit(density);
    toric::F2Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (bit(rng))
                m.set(i, j);
    return m;
}

inline toric::F2Subspace random_subspace(std::mt19937_64& rng, std::size_t ambient, std::size_t gens)
{
    return toric::F2Subspace::row_space(random_matrix(rng, gens, ambient));
}

/// Every subspace of F2^m, each once (m <= 4).
inline std::vector<toric::F2Subspace> all_subspaces(std::size_t m)
{
    std::map<std::string, toric::F2Subspace> seen;
    const std::uint32_t size = std::uint32_t{1} << m;
    std::uint64_t tuples = 1;
    for (std::size_t i = 0; i < m; ++i)
        tuples *= size;
    for (std::uint64_t t = 0; t < tuples; ++t) {
        std::vector<toric::F2Vector> gens;
        for (std::uint64_t x = t, i = 0; i < m; ++i, x /= size)
            gens.push_back(vector_of_mask(static_cast<std::uint32_t>(x % size), m));
        const auto s = toric::F2Subspace::span(m, gens);
        seen.emplace(s.basis().to_string(), s);
    }
    std::vector<toric::F2Subspace> out;
    for (auto& [key, s] : seen)
        out.push_back(s);
    return out;
}

} // namespace testing_support
