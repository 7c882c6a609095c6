#include "toric/f2.hpp"

#include <algorithm>
#include <bit>

namespace toric {

namespace {

void require(bool ok, const char* what)
{
    if (!ok)
        throw DimensionError(what);
}

} // namespace

// ---------------------------------------------------------------- F2Vector

F2Vector F2Vector::from_bits(std::initializer_list<int> bits)
{
    F2Vector v(bits.size());
    std::size_t i = 0;
    for (int b : bits)
        v.set(i++, b & 1);
    return v;
}

F2Vector F2Vector::unit(std::size_t len, std::size_t i)
{
    F2Vector v(len);
    v.set(i);
    return v;
}

F2Vector& F2Vector::operator^=(const F2Vector& other)
{
    require(len_ == other.len_, "F2Vector: length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] ^= other.words_[w];
    return *this;
}

bool F2Vector::dot(const F2Vector& other) const
{
    require(len_ == other.len_, "F2Vector: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w)
        acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
}

bool F2Vector::is_zero() const
{
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t F2Vector::popcount() const
{
    std::size_t n = 0;
    for (auto w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::optional<std::size_t> F2Vector::lowest_set() const
{
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w])
            return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return std::nullopt;
}

std::string F2Vector::to_string() const
{
    std::string s;
    s.reserve(len_);
    for (std::size_t i = 0; i < len_; ++i)
        s.push_back(get(i) ? '1' : '0');
    return s;
}

// ---------------------------------------------------------------- F2Matrix

F2Matrix F2Matrix::identity(std::size_t n)
{
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i);
    return m;
}

F2Matrix F2Matrix::from_rows(std::size_t cols, std::span<const F2Vector> rows)
{
    F2Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        m.set_row(r, rows[r]);
    return m;
}

F2Matrix F2Matrix::from_columns(std::size_t rows, std::span<const F2Vector> columns)
{
    F2Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        require(columns[c].size() == rows, "F2Matrix::from_columns: column length mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            if (columns[c].get(r))
                m.set(r, c);
    }
    return m;
}

F2Matrix F2Matrix::from_bits(std::initializer_list<std::initializer_list<int>> rows)
{
    const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
    F2Matrix m(rows.size(), cols);
    std::size_t r = 0;
    for (const auto& row : rows) {
        require(row.size() == cols, "F2Matrix::from_bits: ragged rows");
        std::size_t c = 0;
        for (int b : row)
            m.set(r, c++, b & 1);
        ++r;
    }
    return m;
}

F2Vector F2Matrix::row(std::size_t r) const
{
    F2Vector v(cols_);
    auto src = row_words(r);
    std::copy(src.begin(), src.end(), v.words().begin());
    return v;
}

F2Vector F2Matrix::column(std::size_t c) const
{
    F2Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (get(r, c))
            v.set(r);
    return v;
}

void F2Matrix::set_row(std::size_t r, const F2Vector& v)
{
    require(v.size() == cols_, "F2Matrix::set_row: length mismatch");
    auto src = v.words();
    std::copy(src.begin(), src.end(), row_words(r).begin());
}

F2Matrix F2Matrix::transpose() const
{
    F2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c))
                t.set(c, r);
    return t;
}

bool F2Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](std::uint64_t w) { return w == 0; });
}

F2Vector F2Matrix::operator*(const F2Vector& x) const
{
    require(x.size() == cols_, "F2Matrix * F2Vector: dimension mismatch");
    F2Vector y(rows_);
    auto xw = x.words();
    for (std::size_t r = 0; r < rows_; ++r) {
        auto rw = row_words(r);
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < stride_; ++w)
            acc ^= rw[w] & xw[w];
        if (std::popcount(acc) & 1)
            y.set(r);
    }
    return y;
}

F2Matrix F2Matrix::operator*(const F2Matrix& other) const
{
    require(cols_ == other.rows_, "F2Matrix * F2Matrix: inner dimension mismatch");
    F2Matrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto dst = out.row_words(r);
        for (std::size_t k = 0; k < cols_; ++k) {
            if (!get(r, k))
                continue;
            auto src = other.row_words(k);
            for (std::size_t w = 0; w < dst.size(); ++w)
                dst[w] ^= src[w];
        }
    }
    return out;
}

F2Matrix& F2Matrix::operator+=(const F2Matrix& other)
{
    require(rows_ == other.rows_ && cols_ == other.cols_, "F2Matrix += : shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] ^= other.data_[i];
    return *this;
}

F2Matrix F2Matrix::stacked(const F2Matrix& other) const
{
    require(cols_ == other.cols_, "F2Matrix::stacked: column mismatch");
    F2Matrix out(rows_ + other.rows_, cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(other.data_.begin(), other.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return out;
}

std::string F2Matrix::to_string() const
{
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
        s += row(r).to_string();
        s.push_back('\n');
    }
    return s;
}

F2Matrix rref(const F2Matrix& m, Exec exec)
{
    F2Matrix out = m;
    kernel::eliminate(out, true, exec);
    return out;
}

std::size_t rank(const F2Matrix& m, Exec exec)
{
    F2Matrix work = m;
    return kernel::eliminate(work, false, exec).size();
}

// -------------------------------------------------------------- F2Subspace

F2Subspace F2Subspace::zero(std::size_t ambient)
{
    F2Subspace s;
    s.ambient_ = ambient;
    s.basis_ = F2Matrix(0, ambient);
    return s;
}

F2Subspace F2Subspace::full(std::size_t ambient)
{
    F2Subspace s;
    s.ambient_ = ambient;
    s.basis_ = F2Matrix::identity(ambient);
    s.pivots_.resize(ambient);
    for (std::size_t i = 0; i < ambient; ++i)
        s.pivots_[i] = i;
    return s;
}

F2Subspace F2Subspace::span(std::size_t ambient, std::span<const F2Vector> generators)
{
    for (const auto& g : generators)
        require(g.size() == ambient, "F2Subspace::span: generator length mismatch");
    return row_space(F2Matrix::from_rows(ambient, generators));
}

F2Subspace F2Subspace::row_space(const F2Matrix& m)
{
    F2Matrix work = m;
    auto pivots = kernel::eliminate(work, true, Exec::parallel);
    F2Subspace s;
    s.ambient_ = m.cols();
    s.basis_ = F2Matrix(pivots.size(), m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        auto src = work.row_words(r);
        std::copy(src.begin(), src.end(), s.basis_.row_words(r).begin());
    }
    s.pivots_ = std::move(pivots);
    return s;
}

std::vector<F2Vector> F2Subspace::basis_vectors() const
{
    std::vector<F2Vector> out;
    out.reserve(dim());
    for (std::size_t r = 0; r < dim(); ++r)
        out.push_back(basis_.row(r));
    return out;
}

F2Vector F2Subspace::reduce(F2Vector v) const
{
    require(v.size() == ambient_, "F2Subspace::reduce: length mismatch");
    auto vw = v.words();
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        if (!v.get(pivots_[r]))
            continue;
        auto bw = basis_.row_words(r);
        for (std::size_t w = pivots_[r] / kWordBits; w < vw.size(); ++w)
            vw[w] ^= bw[w];
    }
    return v;
}

bool F2Subspace::contains(const F2Vector& v) const { return reduce(v).is_zero(); }

bool F2Subspace::contains(const F2Subspace& other) const
{
    require(ambient_ == other.ambient_, "F2Subspace::contains: ambient mismatch");
    for (std::size_t r = 0; r < other.dim(); ++r)
        if (!contains(other.basis_.row(r)))
            return false;
    return true;
}

// ------------------------------------------------------- subspace calculus

F2Subspace kernel_basis(const F2Matrix& m)
{
    F2Matrix work = m;
    const auto pivots = kernel::eliminate(work, true, Exec::parallel);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots)
        is_pivot[c] = true;

    std::vector<F2Vector> gens;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        F2Vector x = F2Vector::unit(m.cols(), f);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (work.get(r, f))
                x.set(pivots[r]);
        gens.push_back(std::move(x));
    }
    return F2Subspace::span(m.cols(), gens);
}

F2Subspace subspace_sum(const F2Subspace& a, const F2Subspace& b)
{
    require(a.ambient_dim() == b.ambient_dim(), "subspace_sum: ambient mismatch");
    return F2Subspace::row_space(a.basis().stacked(b.basis()));
}

F2Subspace subspace_intersect(const F2Subspace& a, const F2Subspace& b)
{
    require(a.ambient_dim() == b.ambient_dim(), "subspace_intersect: ambient mismatch");
    const std::size_t n = a.ambient_dim();
    if (a.dim() == 0 || b.dim() == 0)
        return F2Subspace::zero(n);

    // Zassenhaus: rows [a | a] over [b | 0]; after reduction the rows whose
    // left half vanished carry a basis of the intersection on the right.
    F2Matrix z(a.dim() + b.dim(), 2 * n);
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (a.basis().get(r, c)) {
                z.set(r, c);
                z.set(r, n + c);
            }
    for (std::size_t r = 0; r < b.dim(); ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (b.basis().get(r, c))
                z.set(a.dim() + r, c);

    const auto pivots = kernel::eliminate(z, true, Exec::parallel);
    std::vector<F2Vector> gens;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] < n)
            continue;
        F2Vector v(n);
        for (std::size_t c = 0; c < n; ++c)
            if (z.get(r, n + c))
                v.set(c);
        gens.push_back(std::move(v));
    }
    return F2Subspace::span(n, gens);
}

F2Subspace preimage_subspace(const F2Matrix& m, const F2Subspace& s)
{
    require(s.ambient_dim() == m.rows(), "preimage_subspace: dimension mismatch");
    if (s.dim() == s.ambient_dim())
        return F2Subspace::full(m.cols());
    return kernel_basis(quotient_projection(s) * m);
}

F2Subspace image_subspace(const F2Matrix& m, const F2Subspace& s)
{
    require(s.ambient_dim() == m.cols(), "image_subspace: dimension mismatch");
    // Rows of (m * basis^T)^T = basis * m^T are the images of the basis vectors.
    return F2Subspace::row_space(s.basis() * m.transpose());
}

F2Matrix quotient_projection(const F2Subspace& s)
{
    const std::size_t n = s.ambient_dim();
    std::vector<bool> is_pivot(n, false);
    for (auto c : s.pivots())
        is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);

    F2Matrix proj(free_cols.size(), n);
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        proj.set(j, free_cols[j]);
        // A pivot coordinate maps to minus (= plus) the free part of its row.
        for (std::size_t r = 0; r < s.dim(); ++r)
            if (s.basis().get(r, free_cols[j]))
                proj.set(j, s.pivots()[r]);
    }
    return proj;
}

std::optional<F2Vector> solve(const F2Matrix& a, const F2Vector& b)
{
    require(b.size() == a.rows(), "solve: right-hand side length mismatch");
    const std::size_t c = a.cols();
    F2Matrix aug(a.rows(), c + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t j = 0; j < c; ++j)
            if (a.get(r, j))
                aug.set(r, j);
        if (b.get(r))
            aug.set(r, c);
    }
    const auto pivots = kernel::eliminate(aug, true, Exec::parallel);
    if (!pivots.empty() && pivots.back() == c)
        return std::nullopt;
    F2Vector x(c);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        if (aug.get(r, c))
            x.set(pivots[r]);
    return x;
}

bool determinant(const F2Matrix& m)
{
    require(m.rows() == m.cols(), "determinant: matrix not square");
    return rank(m, Exec::serial) == m.rows();
}

} // namespace toric
