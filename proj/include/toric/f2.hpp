#pragma once

// Linear algebra over the two-element field.
//
// Vectors and matrix rows are bit-packed into 64-bit words. A subspace is
// always stored by its reduced row-echelon basis, so two subspaces are equal
// exactly when their bases are equal row by row.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Selects the elimination kernel. Both produce identical results.
enum class Exec { serial, parallel };

inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

class F2Vector {
public:
    F2Vector() = default;
    explicit F2Vector(std::size_t len) : len_(len), words_(words_for(len), 0) {}

    static F2Vector from_bits(std::initializer_list<int> bits);
    static F2Vector unit(std::size_t len, std::size_t i);

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i, bool value = true)
    {
        const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
        if (value)
            words_[i / kWordBits] |= mask;
        else
            words_[i / kWordBits] &= ~mask;
    }
    void flip(std::size_t i) { words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits); }

    F2Vector& operator^=(const F2Vector& other);
    friend F2Vector operator^(F2Vector a, const F2Vector& b) { return a ^= b; }

    /// Parity of the componentwise product.
    bool dot(const F2Vector& other) const;

    bool is_zero() const;
    std::size_t popcount() const;
    std::optional<std::size_t> lowest_set() const;

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    bool operator==(const F2Vector&) const = default;

    /// "0110..." with index 0 first.
    std::string to_string() const;

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0)
    {
    }

    static F2Matrix identity(std::size_t n);
    static F2Matrix from_rows(std::size_t cols, std::span<const F2Vector> rows);
    static F2Matrix from_columns(std::size_t rows, std::span<const F2Vector> columns);
    static F2Matrix from_bits(std::initializer_list<std::initializer_list<int>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t stride() const { return stride_; }

    bool get(std::size_t r, std::size_t c) const
    {
        return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
    }
    void set(std::size_t r, std::size_t c, bool value = true)
    {
        const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
        auto& w = data_[r * stride_ + c / kWordBits];
        w = value ? (w | mask) : (w & ~mask);
    }
    void flip(std::size_t r, std::size_t c)
    {
        data_[r * stride_ + c / kWordBits] ^= std::uint64_t{1} << (c % kWordBits);
    }

    F2Vector row(std::size_t r) const;
    F2Vector column(std::size_t c) const;
    void set_row(std::size_t r, const F2Vector& v);

    std::span<std::uint64_t> row_words(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
    std::span<const std::uint64_t> row_words(std::size_t r) const
    {
        return {data_.data() + r * stride_, stride_};
    }

    F2Matrix transpose() const;
    bool is_zero() const;

    F2Vector operator*(const F2Vector& x) const;
    F2Matrix operator*(const F2Matrix& other) const;
    F2Matrix& operator+=(const F2Matrix& other);

    /// Rows of *this followed by rows of other.
    F2Matrix stacked(const F2Matrix& other) const;

    bool operator==(const F2Matrix&) const = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> data_;
};

/// Reduced row-echelon form; same shape as the input, zero rows last.
F2Matrix rref(const F2Matrix& m, Exec exec = Exec::parallel);
std::size_t rank(const F2Matrix& m, Exec exec = Exec::parallel);

class F2Subspace {
public:
    F2Subspace() = default;

    static F2Subspace zero(std::size_t ambient);
    static F2Subspace full(std::size_t ambient);
    static F2Subspace span(std::size_t ambient, std::span<const F2Vector> generators);
    /// Row space of m.
    static F2Subspace row_space(const F2Matrix& m);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }

    /// Reduced row-echelon basis without zero rows.
    const F2Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::vector<F2Vector> basis_vectors() const;

    /// v minus its component along the pivots; zero iff v lies in the subspace.
    F2Vector reduce(F2Vector v) const;
    bool contains(const F2Vector& v) const;
    bool contains(const F2Subspace& other) const;

    bool operator==(const F2Subspace&) const = default;

private:
    std::size_t ambient_ = 0;
    F2Matrix basis_;
    std::vector<std::size_t> pivots_;
};

F2Subspace kernel_basis(const F2Matrix& m);
F2Subspace subspace_sum(const F2Subspace& a, const F2Subspace& b);
F2Subspace subspace_intersect(const F2Subspace& a, const F2Subspace& b);
/// {x : m x in s}
F2Subspace preimage_subspace(const F2Matrix& m, const F2Subspace& s);
/// {m x : x in s}
F2Subspace image_subspace(const F2Matrix& m, const F2Subspace& s);

/// Surjection F2^n -> F2^(n - dim s) whose kernel is exactly s. Coordinates of
/// the target are the non-pivot columns of s's basis, in increasing order.
F2Matrix quotient_projection(const F2Subspace& s);

/// Some x with a x = b, if one exists.
std::optional<F2Vector> solve(const F2Matrix& a, const F2Vector& b);

/// Determinant of a square matrix.
bool determinant(const F2Matrix& m);

namespace kernel {

/// Gaussian elimination in place. Pivot rows end up first, in increasing pivot
/// column order; returns the pivot columns. With full_reduce the result is the
/// reduced row-echelon form, otherwise only entries below pivots are cleared.
std::vector<std::size_t> eliminate(F2Matrix& m, bool full_reduce, Exec exec);

} // namespace kernel

} // namespace toric
