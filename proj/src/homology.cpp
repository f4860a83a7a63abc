#include "statesum/homology.hpp"

#include "statesum/errors.hpp"

namespace statesum {

ChainQuotient::ChainQuotient(IntMatrix out, IntMatrix in) {
    if (out.cols() != in.rows()) throw PreconditionError("chain maps do not compose");
    if (!(out * in).is_zero()) throw PreconditionError("composite of chain maps is nonzero");
    n_ = out.cols();

    snf_out_ = smith_normal_form(out);
    r_out_ = snf_out_.rank();
    s_ = n_ - r_out_;

    // Kernel coordinates of the incoming map: the first r_out rows of
    // V_out^{-1}·in vanish because out·in = 0; the remaining rows express
    // each column of `in` in the kernel basis (trailing columns of V_out).
    IntMatrix y = snf_out_.v_inv * in;
    IntMatrix x(s_, in.cols());
    for (std::size_t r = 0; r < s_; ++r) {
        for (std::size_t c = 0; c < in.cols(); ++c) x.at(r, c) = y.at(r_out_ + r, c);
    }
    snf_x_ = smith_normal_form(x);
    r_x_ = snf_x_.rank();

    // Adapted kernel basis L = K·Ux^{-1}: the image of `in` is spanned by
    // d_i·L_i for the SNF diagonal entries d_i.
    IntMatrix kernel_basis(n_, s_);
    for (std::size_t r = 0; r < n_; ++r) {
        for (std::size_t c = 0; c < s_; ++c) kernel_basis.at(r, c) = snf_out_.v.at(r, r_out_ + c);
    }
    basis_ = kernel_basis * snf_x_.u_inv;

    ones_ = 0;
    std::vector<Int> torsion;
    for (std::size_t i = 0; i < r_x_; ++i) {
        const Int& d = snf_x_.d.at(i, i);
        if (d == 1) {
            ++ones_;
        } else {
            torsion.push_back(d);
        }
    }
    group_ = FinAbelianGroup::from_factors(torsion, static_cast<int>(s_ - r_x_));
}

std::vector<Int> ChainQuotient::torsion_generator(std::size_t i) const {
    if (i >= torsion_count()) throw PreconditionError("torsion generator index out of range");
    return basis_.column(ones_ + i);
}

std::vector<Int> ChainQuotient::free_generator(std::size_t i) const {
    if (i >= free_count()) throw PreconditionError("free generator index out of range");
    return basis_.column(r_x_ + i);
}

bool ChainQuotient::in_kernel(const std::vector<Int>& v) const {
    if (v.size() != n_) throw PreconditionError("vector has wrong dimension");
    std::vector<Int> y = snf_out_.v_inv.apply(v);
    for (std::size_t i = 0; i < r_out_; ++i) {
        if (y[i] != 0) return false;
    }
    return true;
}

std::vector<Int> ChainQuotient::coords(const std::vector<Int>& v) const {
    if (v.size() != n_) throw PreconditionError("vector has wrong dimension");
    std::vector<Int> y = snf_out_.v_inv.apply(v);
    for (std::size_t i = 0; i < r_out_; ++i) {
        if (y[i] != 0) throw PreconditionError("vector is not in the kernel");
    }
    std::vector<Int> k(y.begin() + static_cast<std::ptrdiff_t>(r_out_), y.end());
    std::vector<Int> a = snf_x_.u.apply(k);
    std::vector<Int> cls;
    for (std::size_t i = ones_; i < r_x_; ++i) {
        const Int& d = snf_x_.d.at(i, i);
        Int r = a[i] % d;
        if (r < 0) r += d;
        cls.push_back(r);
    }
    for (std::size_t i = r_x_; i < s_; ++i) cls.push_back(a[i]);
    return cls;
}

std::vector<Int> ChainQuotient::representative(const std::vector<Int>& cls) const {
    if (cls.size() != torsion_count() + free_count()) {
        throw PreconditionError("class coordinate vector has wrong length");
    }
    std::vector<Int> v(n_, Int(0));
    for (std::size_t i = 0; i < cls.size(); ++i) {
        std::size_t col = i < torsion_count() ? ones_ + i : r_x_ + (i - torsion_count());
        for (std::size_t r = 0; r < n_; ++r) v[r] += cls[i] * basis_.at(r, col);
    }
    return v;
}

IntMatrix ChainQuotient::adapted_inverse() const {
    // The adapted basis is A = V_out·diag(I, Ux^{-1}), so
    // A^{-1} = diag(I, Ux)·V_out^{-1}.
    IntMatrix inv(n_, n_);
    for (std::size_t j = 0; j < n_; ++j) {
        for (std::size_t r = 0; r < r_out_; ++r) inv.at(r, j) = snf_out_.v_inv.at(r, j);
        for (std::size_t r = 0; r < s_; ++r) {
            Int acc = 0;
            for (std::size_t t = 0; t < s_; ++t) {
                acc += snf_x_.u.at(r, t) * snf_out_.v_inv.at(r_out_ + t, j);
            }
            inv.at(r_out_ + r, j) = acc;
        }
    }
    return inv;
}

bool ChainQuotient::is_trivial_class(const std::vector<Int>& v) const {
    for (const Int& c : coords(v)) {
        if (c != 0) return false;
    }
    return true;
}

namespace {

void check_dim(const SimplicialComplex& k, int d) {
    if (d < 0 || d > k.dimension()) {
        throw PreconditionError("dimension " + std::to_string(d) + " outside 0.." +
                                std::to_string(k.dimension()));
    }
}

}  // namespace

ChainQuotient homology_quotient(const SimplicialComplex& k, int d) {
    check_dim(k, d);
    IntMatrix out = d >= 1 ? boundary_matrix(k, d) : IntMatrix(0, k.count(0));
    IntMatrix in = d + 1 <= k.dimension() ? boundary_matrix(k, d + 1) : IntMatrix(k.count(d), 0);
    return ChainQuotient(std::move(out), std::move(in));
}

ChainQuotient cohomology_quotient(const SimplicialComplex& k, int d) {
    check_dim(k, d);
    IntMatrix out = d + 1 <= k.dimension() ? boundary_matrix(k, d + 1).transposed()
                                           : IntMatrix(0, k.count(d));
    IntMatrix in = d >= 1 ? boundary_matrix(k, d).transposed() : IntMatrix(k.count(d), 0);
    return ChainQuotient(std::move(out), std::move(in));
}

FinAbelianGroup homology(const SimplicialComplex& k, int d) {
    return homology_quotient(k, d).group();
}

}  // namespace statesum
