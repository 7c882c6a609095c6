#pragma once

// Integer lattice computations: Smith normal form, saturation of sublattices
// of Z^n, and reduction of a cone's lattice modulo 2.

#include "toric/f2.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace toric {

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

using IntVector = std::vector<std::int64_t>;

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Dense row-major matrix of 64-bit integers. Products and determinants throw
/// OverflowError rather than wrap.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix from_rows(std::size_t cols, std::span<const IntVector> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector row(std::size_t r) const;
    IntegerMatrix operator*(const IntegerMatrix& other) const;
    bool operator==(const IntegerMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// Exact determinant (fraction-free Bareiss elimination).
std::int64_t determinant(const IntegerMatrix& m);

/// u * a * v = d with u, v unimodular, d diagonal, nonnegative, and each
/// nonzero diagonal entry dividing the next. v_inverse is tracked alongside v.
struct SmithDecomposition {
    IntegerMatrix u;
    IntegerMatrix d;
    IntegerMatrix v;
    IntegerMatrix v_inverse;
    std::size_t rank = 0;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& a);

/// Rational rank of a set of integer vectors of length n.
std::size_t rational_rank(std::span<const IntVector> gens, std::size_t n);

/// Basis (as rows) of Q-span(gens) ∩ Z^n.
IntegerMatrix saturate_span(std::span<const IntVector> gens, std::size_t n);

/// The saturated lattice of gens reduced mod 2, as a subspace of F2^n.
F2Subspace mod2_cone_subspace(std::span<const IntVector> gens, std::size_t n);

/// A subspace S of F2^n together with the projection onto F2^n / S, written in
/// the coordinates given by the non-pivot columns of S's canonical basis.
struct QuotientData {
    std::size_t ambient_dim = 0;
    F2Subspace sub;
    std::size_t quot_dim = 0;
    F2Matrix proj;

    bool operator==(const QuotientData&) const = default;
};

QuotientData quotient_data(const F2Subspace& sub);

/// The map f between quotients with f * src.proj = dst.proj. Requires
/// src.sub ⊆ dst.sub; throws std::invalid_argument otherwise.
F2Matrix induced_map(const QuotientData& src, const QuotientData& dst);

} // namespace toric
