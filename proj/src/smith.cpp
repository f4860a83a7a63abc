#include "statesum/smith.hpp"

#include <cstdlib>
#include <utility>

namespace statesum {

std::size_t SmithForm::rank() const {
    std::size_t r = 0;
    const std::size_t n = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < n; ++i)
        if (d.at(i, i) != 0) ++r;
    return r;
}

std::vector<Int> SmithForm::diagonal() const {
    const std::size_t n = std::min(d.rows(), d.cols());
    std::vector<Int> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = d.at(i, i);
    return out;
}

namespace {

// Mutable state for the reduction. Invariant maintained throughout:
// d == u * a * v, u * u_inv == I, v * v_inv == I.
struct Reducer {
    IntMatrix d, u, v, u_inv, v_inv;
    std::size_t m, n;

    explicit Reducer(const IntMatrix& a)
        : d(a),
          u(IntMatrix::identity(a.rows())),
          v(IntMatrix::identity(a.cols())),
          u_inv(IntMatrix::identity(a.rows())),
          v_inv(IntMatrix::identity(a.cols())),
          m(a.rows()),
          n(a.cols()) {}

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < n; ++k) std::swap(d.at(i, k), d.at(j, k));
        for (std::size_t k = 0; k < m; ++k) std::swap(u.at(i, k), u.at(j, k));
        for (std::size_t k = 0; k < m; ++k) std::swap(u_inv.at(k, i), u_inv.at(k, j));
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < m; ++k) std::swap(d.at(k, i), d.at(k, j));
        for (std::size_t k = 0; k < n; ++k) std::swap(v.at(k, i), v.at(k, j));
        for (std::size_t k = 0; k < n; ++k) std::swap(v_inv.at(i, k), v_inv.at(j, k));
    }

    // row_i += q * row_j
    void add_row(std::size_t i, std::size_t j, const Int& q) {
        if (q == 0) return;
        for (std::size_t k = 0; k < n; ++k) d.at(i, k) += q * d.at(j, k);
        for (std::size_t k = 0; k < m; ++k) u.at(i, k) += q * u.at(j, k);
        for (std::size_t k = 0; k < m; ++k) u_inv.at(k, j) -= q * u_inv.at(k, i);
    }

    // col_i += q * col_j
    void add_col(std::size_t i, std::size_t j, const Int& q) {
        if (q == 0) return;
        for (std::size_t k = 0; k < m; ++k) d.at(k, i) += q * d.at(k, j);
        for (std::size_t k = 0; k < n; ++k) v.at(k, i) += q * v.at(k, j);
        for (std::size_t k = 0; k < n; ++k) v_inv.at(j, k) -= q * v_inv.at(i, k);
    }

    void negate_row(std::size_t i) {
        for (std::size_t k = 0; k < n; ++k) d.at(i, k) = -d.at(i, k);
        for (std::size_t k = 0; k < m; ++k) u.at(i, k) = -u.at(i, k);
        for (std::size_t k = 0; k < m; ++k) u_inv.at(k, i) = -u_inv.at(k, i);
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
    Reducer r(a);
    const std::size_t m = r.m, n = r.n;
    std::size_t t = 0;
    while (t < m && t < n) {
        // Pivot: smallest nonzero |entry| in the submatrix, ties row-major.
        std::size_t pi = 0, pj = 0;
        bool found = false;
        Int best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                const Int& e = r.d.at(i, j);
                if (e == 0) continue;
                Int mag = abs(e);
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        r.swap_rows(t, pi);
        r.swap_cols(t, pj);
        if (r.d.at(t, t) < 0) r.negate_row(t);

        bool shrank = false;
        for (std::size_t i = t + 1; i < m; ++i) {
            if (r.d.at(i, t) == 0) continue;
            Int q = r.d.at(i, t) / r.d.at(t, t);
            r.add_row(i, t, -q);
            if (r.d.at(i, t) != 0) shrank = true;  // remainder smaller than pivot
        }
        for (std::size_t j = t + 1; j < n; ++j) {
            if (r.d.at(t, j) == 0) continue;
            Int q = r.d.at(t, j) / r.d.at(t, t);
            r.add_col(j, t, -q);
            if (r.d.at(t, j) != 0) shrank = true;
        }
        if (shrank) continue;  // re-pivot on the smaller leftovers

        // Divisibility: the pivot must divide the rest of the submatrix.
        bool fixed = true;
        for (std::size_t i = t + 1; i < m && fixed; ++i)
            for (std::size_t j = t + 1; j < n && fixed; ++j)
                if (r.d.at(i, j) % r.d.at(t, t) != 0) {
                    r.add_row(t, i, 1);  // drags the offending row into play
                    fixed = false;
                }
        if (fixed) ++t;
    }
    return SmithForm{std::move(r.d), std::move(r.u), std::move(r.v), std::move(r.u_inv),
                     std::move(r.v_inv)};
}

}  // namespace statesum
