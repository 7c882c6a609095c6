#include "support.hpp"

#include "toric/lattice.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace toric;
using namespace testing_support;

namespace {

IntegerMatrix mat(std::initializer_list<IntVector> rows)
{
    std::vector<IntVector> r(rows);
    return IntegerMatrix::from_rows(r.empty() ? 0 : r[0].size(), r);
}

std::vector<std::vector<std::int64_t>> to_nested(const IntegerMatrix& m)
{
    std::vector<std::vector<std::int64_t>> out(m.rows(), std::vector<std::int64_t>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i][j] = m(i, j);
    return out;
}

std::vector<std::int64_t> diagonal(const IntegerMatrix& d, std::size_t rank)
{
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < rank; ++i)
        out.push_back(d(i, i));
    return out;
}

void check_smith(const IntegerMatrix& a)
{
    const auto s = smith_normal_form(a);
    CHECK(s.u * a * s.v == s.d);
    CHECK(std::llabs(determinant(s.u)) == 1);
    CHECK(std::llabs(determinant(s.v)) == 1);
    CHECK(s.v * s.v_inverse == IntegerMatrix::identity(a.cols()));
    for (std::size_t i = 0; i < s.d.rows(); ++i)
        for (std::size_t j = 0; j < s.d.cols(); ++j)
            if (i != j)
                CHECK(s.d(i, j) == 0);
    for (std::size_t i = 0; i + 1 < s.rank; ++i)
        CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
    for (std::size_t i = s.rank; i < std::min(a.rows(), a.cols()); ++i)
        CHECK(s.d(i, i) == 0);
    CHECK(diagonal(s.d, s.rank) == oracle::invariant_factors(to_nested(a)));
}

// The rows of b are a basis of a saturated lattice with the same rational span as gens.
void check_saturation(std::span<const IntVector> gens, std::size_t n, const IntegerMatrix& b)
{
    const std::size_t r = rational_rank(gens, n);
    REQUIRE(b.rows() == r);
    std::vector<IntVector> both(gens.begin(), gens.end());
    for (std::size_t i = 0; i < b.rows(); ++i)
        both.push_back(b.row(i));
    CHECK(rational_rank(both, n) == r);
    for (auto f : oracle::invariant_factors(to_nested(b)))
        CHECK(f == 1);
}

} // namespace

TEST_CASE("smith normal form examples")
{
    CHECK(smith_normal_form(mat({{2, 0}, {0, 3}})).d == mat({{1, 0}, {0, 6}}));
    CHECK(smith_normal_form(IntegerMatrix::identity(3)).d == IntegerMatrix::identity(3));
    CHECK(smith_normal_form(mat({{2, 4}})).d == mat({{2, 0}}));
    check_smith(mat({{2, 0}, {0, 3}}));
    check_smith(mat({{2, 4}}));
    check_smith(mat({{0, 0}, {0, 0}}));
    check_smith(mat({{-3, 6, 9}, {4, -2, 0}}));
}

TEST_CASE("smith normal form invariants on random matrices")
{
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int t = 0; t < 150; ++t) {
        const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        IntegerMatrix a(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                a(i, j) = t % 4 == 0 ? 2 * entry(rng) : entry(rng);
        check_smith(a);
    }
}

TEST_CASE("checked arithmetic refuses to wrap")
{
    const std::int64_t big = std::int64_t{1} << 62;
    CHECK_THROWS_AS(checked_mul(big, 4), OverflowError);
    CHECK_THROWS_AS(checked_add(big, big), OverflowError);
    CHECK_THROWS_AS(checked_sub(-big - big, 1), OverflowError);
    CHECK_THROWS_AS(determinant(mat({{big, 0}, {0, big}})), OverflowError);
    CHECK(checked_mul(-3, 7) == -21);
}

TEST_CASE("saturation examples")
{
    const std::vector<IntVector> doubled{{2, 0}};
    const auto s = saturate_span(doubled, 2);
    REQUIRE(s.rows() == 1);
    CHECK(std::llabs(s(0, 0)) == 1);
    CHECK(s(0, 1) == 0);

    CHECK(saturate_span({}, 3).rows() == 0);

    const std::vector<IntVector> index_two{{1, 1}, {1, -1}};
    const auto full = saturate_span(index_two, 2);
    REQUIRE(full.rows() == 2);
    CHECK(std::llabs(determinant(full)) == 1);
}

TEST_CASE("saturation is saturated, idempotent and rank-preserving")
{
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + rng() % 4;
        std::vector<IntVector> gens(rng() % 4, IntVector(n));
        for (auto& g : gens)
            for (auto& x : g)
                x = entry(rng) * (t % 3 == 0 ? 2 : 1);
        const auto b = saturate_span(gens, n);
        check_saturation(gens, n, b);
        std::vector<IntVector> rows;
        for (std::size_t i = 0; i < b.rows(); ++i)
            rows.push_back(b.row(i));
        const auto again = saturate_span(rows, n);
        check_saturation(rows, n, again);
        CHECK(mod2_cone_subspace(gens, n).dim() == rational_rank(gens, n));
        CHECK(mod2_cone_subspace(rows, n) == mod2_cone_subspace(gens, n));
    }
}

TEST_CASE("mod-2 cone subspaces")
{
    const std::vector<IntVector> diag{{1, 1}};
    CHECK(mod2_cone_subspace(diag, 2) == F2Subspace::span(2, std::vector{F2Vector::from_bits({1, 1})}));
    const std::vector<IntVector> index_two{{1, 1}, {1, -1}};
    CHECK(mod2_cone_subspace(index_two, 2) == F2Subspace::full(2));
    CHECK(mod2_cone_subspace({}, 2) == F2Subspace::zero(2));
}

TEST_CASE("quotient data examples")
{
    CHECK(quotient_data(F2Subspace::zero(2)).proj == F2Matrix::identity(2));
    const auto full = quotient_data(F2Subspace::full(2));
    CHECK(full.proj.rows() == 0);
    CHECK(full.quot_dim == 0);
    const auto line = quotient_data(F2Subspace::span(2, std::vector{F2Vector::from_bits({1, 0})}));
    CHECK(line.proj == F2Matrix::from_bits({{0, 1}}));
    CHECK(kernel_basis(line.proj) == line.sub);
}

TEST_CASE("induced maps")
{
    const auto zero = quotient_data(F2Subspace::zero(2));
    const auto line = quotient_data(F2Subspace::span(2, std::vector{F2Vector::from_bits({1, 0})}));
    const auto full = quotient_data(F2Subspace::full(2));
    CHECK(induced_map(zero, zero) == F2Matrix::identity(2));
    CHECK(induced_map(line, full).rows() == 0);
    CHECK(induced_map(zero, line) == F2Matrix::from_bits({{0, 1}}));
    CHECK_THROWS_AS(induced_map(full, line), std::invalid_argument);
}

TEST_CASE("induced maps compose along chains of subspaces")
{
    std::mt19937_64 rng(23);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + rng() % 7;
        const auto a = random_subspace(rng, n, rng() % (n + 1));
        const auto b = subspace_sum(a, random_subspace(rng, n, rng() % 3));
        const auto c = subspace_sum(b, random_subspace(rng, n, rng() % 3));
        const auto qa = quotient_data(a), qb = quotient_data(b), qc = quotient_data(c);
        const auto ab = induced_map(qa, qb);
        CHECK(ab * qa.proj == qb.proj);
        CHECK(induced_map(qa, qc) == induced_map(qb, qc) * ab);
    }
}
