#ifndef STATESUM_SMITH_HPP
#define STATESUM_SMITH_HPP

#include <vector>

#include "statesum/int_matrix.hpp"

namespace statesum {

/// Smith normal form U * A * V = D with U, V unimodular and the diagonal of
/// D a divisibility chain d1 | d2 | ... of nonnegative integers. The inverse
/// transforms are tracked alongside so callers can change basis both ways.
struct SmithForm {
    IntMatrix d;
    IntMatrix u, v;
    IntMatrix u_inv, v_inv;

    std::size_t rank() const;
    std::vector<Int> diagonal() const;  // min(rows, cols) entries, chain order
};

/// Diagonalize by unimodular row/column operations. Pivot rule: smallest
/// nonzero |entry| of the working submatrix, ties broken row-major.
SmithForm smith_normal_form(const IntMatrix& a);

}  // namespace statesum

#endif
