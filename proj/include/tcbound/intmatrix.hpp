#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace tcb {

using IntVector = std::vector<std::int64_t>;

// Dense row-major integer matrix. Arithmetic is overflow-checked and throws
// ResourceError rather than wrapping.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix column(std::span<const std::int64_t> v);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector col(std::size_t c) const;
    IntVector row(std::size_t r) const;

    IntMatrix operator*(const IntMatrix& o) const;
    IntVector operator*(std::span<const std::int64_t> v) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix scaled(std::int64_t s) const;
    IntMatrix transposed() const;
    IntMatrix pow(unsigned e) const;

    bool is_zero() const;
    bool operator==(const IntMatrix&) const = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

// Rows of `top` followed by rows of `bottom`.
IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom);

// Z-basis of the integer kernel {x in Z^n : A x = 0}. Computed by unimodular
// column reduction, so the basis spans the full lattice (it is saturated).
// Each vector is sign-normalized: first nonzero entry positive.
std::vector<IntVector> integer_kernel(const IntMatrix& a);

// Rank over Q.
std::size_t rank(const IntMatrix& a);

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
} // namespace checked

} // namespace tcb
