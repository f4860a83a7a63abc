#ifndef STATESUM_INT_MATRIX_HPP
#define STATESUM_INT_MATRIX_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <vector>

namespace statesum {

using Int = boost::multiprecision::cpp_int;

/// Dense integer matrix with arbitrary-precision entries. Row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const IntMatrix& other) const = default;

    std::vector<Int> column(std::size_t j) const;

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    std::vector<Int> apply(const std::vector<Int>& x) const;       // A * x
    std::vector<Int> apply_left(const std::vector<Int>& x) const;  // x^T * A

    bool is_zero() const;

    /// Exact determinant (square matrices) by fraction-free elimination.
    Int determinant() const;

    /// Rank over the rationals by fraction-free elimination.
    std::size_t rank() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

}  // namespace statesum

#endif
