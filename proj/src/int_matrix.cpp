#include "statesum/int_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace statesum {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
    std::vector<Int> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("IntMatrix: vector size mismatch");
    std::vector<Int> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) y[i] += at(i, j) * x[j];
    return y;
}

std::vector<Int> IntMatrix::apply_left(const std::vector<Int>& x) const {
    if (x.size() != rows_) throw std::invalid_argument("IntMatrix: vector size mismatch");
    std::vector<Int> y(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) y[j] += x[i] * at(i, j);
    }
    return y;
}

bool IntMatrix::is_zero() const {
    for (const Int& v : data_)
        if (v != 0) return false;
    return true;
}

namespace {

// Bareiss fraction-free elimination. Returns rank; fills det for square input.
std::size_t bareiss(IntMatrix m, Int* det_out) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Int prev = 1;
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m.at(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m.at(i, j) = (m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j)) / prev;
            m.at(i, c) = 0;
        }
        prev = m.at(r, c);
        ++r;
    }
    if (det_out) {
        if (r < rows)
            *det_out = 0;
        else
            *det_out = sign * prev;
    }
    return r;
}

}  // namespace

Int IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("IntMatrix: determinant of non-square matrix");
    if (rows_ == 0) return 1;
    Int det;
    bareiss(*this, &det);
    return det;
}

std::size_t IntMatrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    return bareiss(*this, nullptr);
}

}  // namespace statesum
