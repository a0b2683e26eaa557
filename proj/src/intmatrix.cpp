#include "tcbound/intmatrix.hpp"

#include "tcbound/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace tcb {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw ResourceError("integer overflow in addition");
    return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ResourceError("integer overflow in multiplication");
    return r;
}

} // namespace checked

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0)
{
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw ValidationError("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::column(std::span<const std::int64_t> v)
{
    IntMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        m(i, 0) = v[i];
    return m;
}

IntVector IntMatrix::col(std::size_t c) const
{
    IntVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

IntVector IntMatrix::row(std::size_t r) const
{
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const
{
    if (cols_ != o.rows_)
        throw ValidationError("matrix product shape mismatch");
    IntMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const std::int64_t a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                out(i, j) = checked::add(out(i, j), checked::mul(a, o(k, j)));
        }
    return out;
}

IntVector IntMatrix::operator*(std::span<const std::int64_t> v) const
{
    if (cols_ != v.size())
        throw ValidationError("matrix-vector shape mismatch");
    IntVector out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            out[i] = checked::add(out[i], checked::mul((*this)(i, k), v[k]));
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw ValidationError("matrix sum shape mismatch");
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = checked::add(data_[i], o.data_[i]);
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const
{
    return *this + o.scaled(-1);
}

IntMatrix IntMatrix::scaled(std::int64_t s) const
{
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = checked::mul(data_[i], s);
    return out;
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(j, i) = (*this)(i, j);
    return out;
}

IntMatrix IntMatrix::pow(unsigned e) const
{
    if (rows_ != cols_)
        throw ValidationError("power of a non-square matrix");
    IntMatrix result = identity(rows_);
    IntMatrix base = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1u)
            result = result * base;
        if (e > 1)
            base = base * base;
    }
    return result;
}

bool IntMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](std::int64_t x) { return x == 0; });
}

std::string IntMatrix::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << (*this)(i, j);
    }
    os << ']';
    return os.str();
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = checked::mul(a(i, j), b(k, l));
    return out;
}

IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom)
{
    if (top.cols() != bottom.cols())
        throw ValidationError("vstack column mismatch");
    IntMatrix out(top.rows() + bottom.rows(), top.cols());
    for (std::size_t i = 0; i < top.rows(); ++i)
        for (std::size_t j = 0; j < top.cols(); ++j)
            out(i, j) = top(i, j);
    for (std::size_t i = 0; i < bottom.rows(); ++i)
        for (std::size_t j = 0; j < bottom.cols(); ++j)
            out(top.rows() + i, j) = bottom(i, j);
    return out;
}

namespace {

// Column operations on `work` are mirrored on `transform`, so that
// A * transform == work holds throughout. `transform` stays unimodular.
struct ColumnReducer {
    IntMatrix work;
    IntMatrix transform;

    void swap_cols(std::size_t a, std::size_t b)
    {
        for (auto* m : {&work, &transform})
            for (std::size_t r = 0; r < m->rows(); ++r)
                std::swap((*m)(r, a), (*m)(r, b));
    }

    // col[dst] -= q * col[src]
    void axpy(std::size_t dst, std::size_t src, std::int64_t q)
    {
        for (auto* m : {&work, &transform})
            for (std::size_t r = 0; r < m->rows(); ++r)
                (*m)(r, dst) = checked::add((*m)(r, dst), checked::mul(-q, (*m)(r, src)));
    }

    void negate(std::size_t c)
    {
        for (auto* m : {&work, &transform})
            for (std::size_t r = 0; r < m->rows(); ++r)
                (*m)(r, c) = checked::mul(-1, (*m)(r, c));
    }
};

void normalize_sign(IntVector& v)
{
    for (std::int64_t x : v) {
        if (x == 0)
            continue;
        if (x < 0)
            for (auto& y : v)
                y = -y;
        return;
    }
}

} // namespace

std::vector<IntVector> integer_kernel(const IntMatrix& a)
{
    const std::size_t n = a.cols();
    ColumnReducer red{a, IntMatrix::identity(n)};

    // Column echelon form: each processed row gets a single pivot column,
    // pivot columns are moved to the front.
    std::size_t pivot_col = 0;
    for (std::size_t r = 0; r < a.rows() && pivot_col < n; ++r) {
        // Euclid on the entries of row r in columns [pivot_col, n).
        for (;;) {
            std::size_t best = n;
            for (std::size_t c = pivot_col; c < n; ++c) {
                const std::int64_t x = red.work(r, c);
                if (x != 0 && (best == n || std::llabs(x) < std::llabs(red.work(r, best))))
                    best = c;
            }
            if (best == n)
                break;
            red.swap_cols(pivot_col, best);
            bool done = true;
            for (std::size_t c = pivot_col + 1; c < n; ++c) {
                const std::int64_t x = red.work(r, c);
                if (x == 0)
                    continue;
                red.axpy(c, pivot_col, x / red.work(r, pivot_col));
                if (red.work(r, c) != 0)
                    done = false;
            }
            if (done) {
                if (red.work(r, pivot_col) < 0)
                    red.negate(pivot_col);
                ++pivot_col;
                break;
            }
        }
    }

    std::vector<IntVector> basis;
    for (std::size_t c = pivot_col; c < n; ++c) {
        IntVector v = red.transform.col(c);
        normalize_sign(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const IntMatrix& a)
{
    return a.cols() - integer_kernel(a).size();
}

} // namespace tcb
