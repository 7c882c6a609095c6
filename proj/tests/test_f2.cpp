#include "support.hpp"

#include "toric/f2.hpp"

#include <doctest.h>

using namespace toric;
using namespace testing_support;

namespace {

F2Subspace span_of(std::size_t n, std::initializer_list<std::initializer_list<int>> rows)
{
    std::vector<F2Vector> gens;
    for (auto r : rows) {
        F2Vector v(n);
        std::size_t i = 0;
        for (int b : r)
            v.set(i++, b);
        gens.push_back(v);
    }
    return F2Subspace::span(n, gens);
}

} // namespace

TEST_CASE("rref examples")
{
    CHECK(rref(F2Matrix::from_bits({{1, 1}, {0, 1}})) == F2Matrix::from_bits({{1, 0}, {0, 1}}));
    CHECK(rref(F2Matrix::from_bits({{1, 1}, {1, 1}})) == F2Matrix::from_bits({{1, 1}, {0, 0}}));
    CHECK(rref(F2Matrix(3, 4)) == F2Matrix(3, 4));
}

TEST_CASE("kernel examples")
{
    CHECK(kernel_basis(F2Matrix::from_bits({{1, 1}})) == span_of(2, {{1, 1}}));
    CHECK(kernel_basis(F2Matrix::identity(3)) == F2Subspace::zero(3));
    CHECK(kernel_basis(F2Matrix::from_bits({{1, 0, 1}, {0, 1, 1}})) == span_of(3, {{1, 1, 1}}));
}

TEST_CASE("sum and intersection examples")
{
    const auto x = span_of(2, {{1, 0}});
    const auto y = span_of(2, {{0, 1}});
    CHECK(subspace_sum(x, y) == F2Subspace::full(2));
    CHECK(subspace_sum(x, F2Subspace::zero(2)) == x);
    CHECK(subspace_sum(span_of(3, {{1, 1, 0}}), span_of(3, {{0, 1, 1}})).dim() == 2);

    CHECK(subspace_intersect(x, y) == F2Subspace::zero(2));
    CHECK(subspace_intersect(x, x) == x);
    CHECK(subspace_intersect(F2Subspace::full(2), span_of(2, {{1, 1}})) == span_of(2, {{1, 1}}));

    CHECK_THROWS_AS(subspace_sum(x, F2Subspace::zero(3)), DimensionError);
    CHECK_THROWS_AS(subspace_intersect(x, F2Subspace::zero(3)), DimensionError);
}

TEST_CASE("preimage and image examples")
{
    const auto s = span_of(3, {{1, 0, 1}});
    CHECK(preimage_subspace(F2Matrix::identity(3), s) == s);
    CHECK(preimage_subspace(F2Matrix::from_bits({{1, 0, 1}, {1, 1, 0}}), F2Subspace::full(2)) == F2Subspace::full(3));
    CHECK(preimage_subspace(F2Matrix::from_bits({{1, 1}}), F2Subspace::zero(1)) == span_of(2, {{1, 1}}));

    CHECK(image_subspace(F2Matrix::identity(3), s) == s);
    CHECK(image_subspace(F2Matrix::from_bits({{1, 1}, {0, 1}}), F2Subspace::zero(2)) == F2Subspace::zero(2));
    CHECK(image_subspace(F2Matrix::from_bits({{1, 1}, {0, 0}}), F2Subspace::full(2)) == span_of(2, {{1, 0}}));

    CHECK_THROWS_AS(preimage_subspace(F2Matrix::identity(2), s), DimensionError);
    CHECK_THROWS_AS(image_subspace(F2Matrix::identity(2), s), DimensionError);
}

TEST_CASE("rref is idempotent, keeps the row space and agrees across execution modes")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 60; ++t) {
        const std::size_t rows = 1 + rng() % 140, cols = 1 + rng() % 140;
        const auto m = random_matrix(rng, rows, cols, t % 3 == 0 ? 0.05 : 0.5);
        const auto r = rref(m, Exec::serial);
        CHECK(rref(r, Exec::serial) == r);
        CHECK(rref(m, Exec::parallel) == r);
        const auto a = F2Subspace::row_space(m), b = F2Subspace::row_space(r);
        CHECK(a.contains(b));
        CHECK(b.contains(a));
        CHECK(rank(m, Exec::serial) == rank(m, Exec::parallel));
    }
}

TEST_CASE("large eliminations agree across execution modes")
{
    std::mt19937_64 rng(12);
    const auto m = random_matrix(rng, 700, 900);
    CHECK(rref(m, Exec::serial) == rref(m, Exec::parallel));
}

TEST_CASE("rank matches a dense oracle")
{
    std::mt19937_64 rng(13);
    for (int t = 0; t < 100; ++t) {
        const auto m = random_matrix(rng, rng() % 20, 1 + rng() % 20, 0.3);
        CHECK(rank(m) == oracle::rank_mod2(to_dense(m)));
    }
}

TEST_CASE("subspace calculus matches set enumeration")
{
    std::mt19937_64 rng(14);
    for (int t = 0; t < 80; ++t) {
        const std::size_t n = 1 + rng() % 9;
        const auto a = random_subspace(rng, n, rng() % (n + 1));
        const auto b = random_subspace(rng, n, rng() % (n + 1));
        const auto sa = to_set(a), sb = to_set(b);
        CHECK(to_set(subspace_sum(a, b)) == oracle::sum(sa, sb));
        CHECK(to_set(subspace_intersect(a, b)) == oracle::intersect(sa, sb));
        CHECK(subspace_sum(a, b).dim() + subspace_intersect(a, b).dim() == a.dim() + b.dim());

        const auto m = random_matrix(rng, 1 + rng() % 8, n, 0.4);
        const auto s = random_subspace(rng, m.rows(), rng() % (m.rows() + 1));
        CHECK(to_set(preimage_subspace(m, s)) == oracle::preimage(to_dense(m), n, to_set(s)));
        CHECK(to_set(image_subspace(m, a)) == oracle::image(to_dense(m), sa));
        CHECK(preimage_subspace(m, image_subspace(m, F2Subspace::full(n))) == F2Subspace::full(n));
        CHECK(preimage_subspace(m, s).contains(kernel_basis(m)));
    }
}

TEST_CASE("canonical form does not depend on generator order")
{
    std::mt19937_64 rng(15);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + rng() % 70;
        std::vector<F2Vector> gens;
        for (std::size_t i = 0; i < 1 + rng() % 10; ++i)
            gens.push_back(random_matrix(rng, 1, n).row(0));
        const auto a = F2Subspace::span(n, gens);
        std::shuffle(gens.begin(), gens.end(), rng);
        gens.push_back(gens[0] ^ gens.back());
        CHECK(F2Subspace::span(n, gens) == a);
    }
}

TEST_CASE("quotient projection, solve and determinant")
{
    std::mt19937_64 rng(16);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + rng() % 10;
        const auto s = random_subspace(rng, n, rng() % (n + 1));
        const auto p = quotient_projection(s);
        CHECK(p.rows() == n - s.dim());
        CHECK(kernel_basis(p) == s);
        CHECK(rank(p) == p.rows());

        const auto a = random_matrix(rng, 1 + rng() % 8, 1 + rng() % 8);
        const auto x = random_matrix(rng, 1, a.cols()).row(0);
        const auto b = a * x;
        const auto sol = solve(a, b);
        REQUIRE(sol);
        CHECK(a * *sol == b);

        const std::size_t k = 1 + rng() % 6;
        const auto sq = random_matrix(rng, k, k);
        CHECK(static_cast<int>(determinant(sq)) == oracle::permanent_mod2(to_dense(sq)));
    }
    CHECK_FALSE(solve(F2Matrix::from_bits({{1, 1}, {1, 1}}), F2Vector::from_bits({1, 0})));
}

TEST_CASE("vector basics")
{
    auto v = F2Vector::from_bits({1, 0, 1, 1});
    CHECK(v.popcount() == 3);
    CHECK(v.lowest_set() == 0);
    CHECK(v.dot(F2Vector::from_bits({1, 1, 1, 0})) == false);
    v ^= F2Vector::from_bits({1, 0, 0, 0});
    CHECK(v.to_string() == "0011");
    CHECK_THROWS_AS(v ^= F2Vector(3), DimensionError);
    CHECK(F2Vector(130).is_zero());
    CHECK_FALSE(F2Vector(130).lowest_set());
}
