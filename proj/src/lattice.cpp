#include "toric/lattice.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <utility>

namespace toric {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw OverflowError("integer overflow in addition");
    return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out))
        throw OverflowError("integer overflow in subtraction");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw OverflowError("integer overflow in multiplication");
    return out;
}

IntegerMatrix IntegerMatrix::identity(std::size_t n)
{
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(std::size_t cols, std::span<const IntVector> rows)
{
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("IntegerMatrix::from_rows: row length mismatch");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

IntVector IntegerMatrix::row(std::size_t r) const
{
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const
{
    if (cols_ != other.rows_)
        throw std::invalid_argument("IntegerMatrix product: inner dimension mismatch");
    IntegerMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const auto a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                out(i, j) = checked_add(out(i, j), checked_mul(a, other(k, j)));
        }
    return out;
}

std::int64_t determinant(const IntegerMatrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntegerMatrix a = m;
    std::int64_t sign = 1;
    std::int64_t prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k) == 0)
                ++swap;
            if (swap == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(swap, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = checked_sub(checked_mul(a(i, j), a(k, k)), checked_mul(a(i, k), a(k, j))) / prev;
        prev = a(k, k);
    }
    return checked_mul(sign, a(n - 1, n - 1));
}

namespace {

class SmithReducer {
public:
    explicit SmithReducer(const IntegerMatrix& a)
        : d_(a), u_(IntegerMatrix::identity(a.rows())), v_(IntegerMatrix::identity(a.cols())),
          vinv_(IntegerMatrix::identity(a.cols()))
    {
    }

    SmithDecomposition run()
    {
        const std::size_t limit = std::min(d_.rows(), d_.cols());
        std::size_t t = 0;
        for (; t < limit; ++t) {
            if (!move_smallest_to(t))
                break;
            reduce_pivot(t);
            if (d_(t, t) < 0)
                row_neg(t);
        }
        return {u_, d_, v_, vinv_, t};
    }

private:
    // Moves the nonzero entry of least absolute value in [t,rows)x[t,cols) to
    // (t,t); false if that block is zero.
    bool move_smallest_to(std::size_t t)
    {
        const std::size_t rows = d_.rows();
        const std::size_t cols = d_.cols();
        std::size_t bi = rows, bj = cols;
        std::int64_t best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                const auto x = d_(i, j);
                if (x != 0 && (best == 0 || abs_checked(x) < best)) {
                    best = abs_checked(x);
                    bi = i;
                    bj = j;
                }
            }
        if (best == 0)
            return false;
        row_swap(t, bi);
        col_swap(t, bj);
        return true;
    }

    void reduce_pivot(std::size_t t)
    {
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < d_.rows(); ++i)
                if (d_(i, t) != 0) {
                    row_add(i, t, -(d_(i, t) / d_(t, t)));
                    clean = clean && d_(i, t) == 0;
                }
            for (std::size_t j = t + 1; j < d_.cols(); ++j)
                if (d_(t, j) != 0) {
                    col_add(j, t, -(d_(t, j) / d_(t, t)));
                    clean = clean && d_(t, j) == 0;
                }
            if (!clean) {
                move_smallest_in_cross(t);
                continue;
            }
            const auto bad = find_non_multiple(t);
            if (!bad)
                return;
            row_add(t, *bad, 1);
        }
    }

    void move_smallest_in_cross(std::size_t t)
    {
        std::size_t bi = t, bj = t;
        std::int64_t best = abs_checked(d_(t, t));
        for (std::size_t i = t + 1; i < d_.rows(); ++i)
            if (d_(i, t) != 0 && abs_checked(d_(i, t)) < best) {
                best = abs_checked(d_(i, t));
                bi = i;
                bj = t;
            }
        for (std::size_t j = t + 1; j < d_.cols(); ++j)
            if (d_(t, j) != 0 && abs_checked(d_(t, j)) < best) {
                best = abs_checked(d_(t, j));
                bi = t;
                bj = j;
            }
        row_swap(t, bi);
        col_swap(t, bj);
    }

    std::optional<std::size_t> find_non_multiple(std::size_t t) const
    {
        for (std::size_t i = t + 1; i < d_.rows(); ++i)
            for (std::size_t j = t + 1; j < d_.cols(); ++j)
                if (d_(i, j) % d_(t, t) != 0)
                    return i;
        return std::nullopt;
    }

    static std::int64_t abs_checked(std::int64_t x)
    {
        if (x == std::numeric_limits<std::int64_t>::min())
            throw OverflowError("integer overflow in absolute value");
        return x < 0 ? -x : x;
    }

    static void add_row(IntegerMatrix& m, std::size_t dst, std::size_t src, std::int64_t k)
    {
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(dst, j) = checked_add(m(dst, j), checked_mul(k, m(src, j)));
    }
    static void add_col(IntegerMatrix& m, std::size_t dst, std::size_t src, std::int64_t k)
    {
        for (std::size_t i = 0; i < m.rows(); ++i)
            m(i, dst) = checked_add(m(i, dst), checked_mul(k, m(i, src)));
    }
    static void swap_row(IntegerMatrix& m, std::size_t a, std::size_t b)
    {
        for (std::size_t j = 0; j < m.cols(); ++j)
            std::swap(m(a, j), m(b, j));
    }
    static void swap_col(IntegerMatrix& m, std::size_t a, std::size_t b)
    {
        for (std::size_t i = 0; i < m.rows(); ++i)
            std::swap(m(i, a), m(i, b));
    }

    void row_add(std::size_t dst, std::size_t src, std::int64_t k)
    {
        add_row(d_, dst, src, k);
        add_row(u_, dst, src, k);
    }
    void row_swap(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        swap_row(d_, a, b);
        swap_row(u_, a, b);
    }
    void row_neg(std::size_t i)
    {
        for (std::size_t j = 0; j < d_.cols(); ++j)
            d_(i, j) = checked_mul(-1, d_(i, j));
        for (std::size_t j = 0; j < u_.cols(); ++j)
            u_(i, j) = -u_(i, j);
    }
    // col_dst += k col_src, so v <- v E and v^-1 <- E^-1 v^-1, where E^-1
    // subtracts k times row dst from row src.
    void col_add(std::size_t dst, std::size_t src, std::int64_t k)
    {
        add_col(d_, dst, src, k);
        add_col(v_, dst, src, k);
        add_row(vinv_, src, dst, checked_mul(-1, k));
    }
    void col_swap(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        swap_col(d_, a, b);
        swap_col(v_, a, b);
        swap_row(vinv_, a, b);
    }

    IntegerMatrix d_, u_, v_, vinv_;
};

} // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& a) { return SmithReducer(a).run(); }

std::size_t rational_rank(std::span<const IntVector> gens, std::size_t n)
{
    if (gens.empty())
        return 0;
    return smith_normal_form(IntegerMatrix::from_rows(n, gens)).rank;
}

IntegerMatrix saturate_span(std::span<const IntVector> gens, std::size_t n)
{
    if (gens.empty())
        return IntegerMatrix(0, n);
    // a = u^-1 d v^-1, so the rational span of a's rows is spanned by the first
    // rank rows of v^-1, which extend to a basis of Z^n.
    const auto snf = smith_normal_form(IntegerMatrix::from_rows(n, gens));
    IntegerMatrix basis(snf.rank, n);
    for (std::size_t r = 0; r < snf.rank; ++r)
        for (std::size_t c = 0; c < n; ++c)
            basis(r, c) = snf.v_inverse(r, c);
    return basis;
}

F2Subspace mod2_cone_subspace(std::span<const IntVector> gens, std::size_t n)
{
    const auto basis = saturate_span(gens, n);
    std::vector<F2Vector> rows;
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        F2Vector v(n);
        for (std::size_t c = 0; c < n; ++c)
            if (basis(r, c) % 2 != 0)
                v.set(c);
        rows.push_back(std::move(v));
    }
    return F2Subspace::span(n, rows);
}

QuotientData quotient_data(const F2Subspace& sub)
{
    QuotientData q;
    q.ambient_dim = sub.ambient_dim();
    q.sub = sub;
    q.quot_dim = sub.ambient_dim() - sub.dim();
    q.proj = quotient_projection(sub);
    return q;
}

F2Matrix induced_map(const QuotientData& src, const QuotientData& dst)
{
    if (src.ambient_dim != dst.ambient_dim)
        throw DimensionError("induced_map: ambient mismatch");
    if (!dst.sub.contains(src.sub))
        throw std::invalid_argument("induced_map: source subspace is not contained in target subspace");

    // The j-th source quotient coordinate is the j-th free column of src.sub;
    // its unit vector lifts to that standard basis vector of F2^n.
    std::vector<bool> is_pivot(src.ambient_dim, false);
    for (auto c : src.sub.pivots())
        is_pivot[c] = true;
    F2Matrix f(dst.quot_dim, src.quot_dim);
    std::size_t j = 0;
    for (std::size_t c = 0; c < src.ambient_dim; ++c) {
        if (is_pivot[c])
            continue;
        for (std::size_t r = 0; r < dst.quot_dim; ++r)
            if (dst.proj.get(r, c))
                f.set(r, j);
        ++j;
    }
    return f;
}

} // namespace toric
