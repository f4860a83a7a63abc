#ifndef STATESUM_HOMOLOGY_HPP
#define STATESUM_HOMOLOGY_HPP

#include <vector>

#include "statesum/abelian.hpp"
#include "statesum/simplicial_complex.hpp"
#include "statesum/smith.hpp"

namespace statesum {

/// The subquotient ker(out)/im(in) of ℤ^n for integer matrices with
/// out·in = 0, presented through Smith normal form. Provides an adapted
/// basis of the kernel in which the image is spanned by multiples of basis
/// vectors, hence explicit generators, coordinates and representatives for
/// the quotient group.
class ChainQuotient {
public:
    ChainQuotient(IntMatrix out, IntMatrix in);

    const FinAbelianGroup& group() const { return group_; }
    std::size_t ambient_dim() const { return n_; }

    std::size_t torsion_count() const { return group_.factors().size(); }
    std::size_t free_count() const { return static_cast<std::size_t>(group_.free_rank()); }

    /// Ambient representative of the i-th torsion (resp. free) generator.
    std::vector<Int> torsion_generator(std::size_t i) const;
    std::vector<Int> free_generator(std::size_t i) const;

    bool in_kernel(const std::vector<Int>& v) const;

    /// Class coordinates of a kernel vector: torsion coordinates first
    /// (reduced to [0, d_i)), then free coordinates. Throws
    /// PreconditionError when v is not in ker(out).
    std::vector<Int> coords(const std::vector<Int>& v) const;

    /// Canonical ambient representative of a class given by coordinates.
    std::vector<Int> representative(const std::vector<Int>& cls) const;

    bool is_trivial_class(const std::vector<Int>& v) const;

    std::size_t complement_dim() const { return r_out_; }
    std::size_t kernel_dim() const { return s_; }
    std::size_t image_rank() const { return r_x_; }
    std::size_t killed_count() const { return ones_; }

    /// Inverse of the adapted ambient basis [complement | L] as an n×n
    /// matrix: row j is the integer functional extracting adapted
    /// coordinate j. Rows complement_dim()+killed_count().. give torsion
    /// coordinates, rows complement_dim()+image_rank().. free ones.
    IntMatrix adapted_inverse() const;

private:
    std::size_t n_ = 0;      // ambient dimension
    std::size_t r_out_ = 0;  // rank of out
    std::size_t s_ = 0;      // kernel dimension
    std::size_t r_x_ = 0;    // rank of the image inside the kernel
    std::size_t ones_ = 0;   // leading SNF entries equal to 1 (killed generators)
    SmithForm snf_out_;
    SmithForm snf_x_;
    IntMatrix basis_;  // n × s adapted kernel basis L
    FinAbelianGroup group_;
};

/// H_d(K; ℤ) machinery: ker ∂_d / im ∂_{d+1} in the canonical simplex basis.
ChainQuotient homology_quotient(const SimplicialComplex& k, int d);

/// H^d(K; ℤ) machinery: ker δ_d / im δ_{d-1} with δ_d = transpose of ∂_{d+1}.
ChainQuotient cohomology_quotient(const SimplicialComplex& k, int d);

FinAbelianGroup homology(const SimplicialComplex& k, int d);

}  // namespace statesum

#endif
