#ifndef STATESUM_ABELIAN_HPP
#define STATESUM_ABELIAN_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "statesum/int_matrix.hpp"

namespace statesum {

using Rational = boost::multiprecision::cpp_rational;

/// Representative of q + ℤ in [0, 1).
Rational mod1(const Rational& q);

/// Finitely generated abelian group in invariant-factor form:
/// ℤ^rank ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/d_k with d₁ | d₂ | … | d_k, every d_i ≥ 2.
class FinAbelianGroup {
public:
    FinAbelianGroup() = default;  // trivial group

    /// Normalize an arbitrary list of cyclic orders (plus a free rank) to the
    /// invariant-factor chain. Factors equal to 1 are dropped; e.g. {2,3}
    /// becomes {6} and {2,2,4} stays {2,2,4}.
    static FinAbelianGroup from_factors(const std::vector<Int>& factors, int free_rank = 0);

    const std::vector<Int>& factors() const { return factors_; }
    int free_rank() const { return free_rank_; }
    bool is_finite() const { return free_rank_ == 0; }
    bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }

    /// Order of a finite group; throws PreconditionError when free rank > 0.
    Int order() const;

    /// Human-readable form, e.g. "Z^2 + Z/2 + Z/4"; "0" for the trivial group.
    std::string describe() const;

    bool operator==(const FinAbelianGroup&) const = default;

private:
    std::vector<Int> factors_;
    int free_rank_ = 0;
};

/// |Hom(A, H)| = |H|^rank(A) · Π gcd(d_i, e_j) for finite H.
Int count_abelian_homs(const FinAbelianGroup& a, const FinAbelianGroup& h);

/// Element of a CoeffGroup: one rational per component, each in [0, 1).
using AbValue = std::vector<Rational>;

/// Coefficient group for gerbe data: either ℚ/ℤ (the exact model of U(1)) or
/// a finite abelian group ℤ/m₁ ⊕ … ⊕ ℤ/m_k embedded in (ℚ/ℤ)^k as the
/// multiples of 1/m_i. A modulus of 0 marks a ℚ/ℤ component.
class CoeffGroup {
public:
    CoeffGroup() = default;  // trivial group

    static CoeffGroup qmodz();
    static CoeffGroup from_group(const FinAbelianGroup& h);  // h must be finite

    /// Build from an explicit component list (each modulus >= 1, or 0 for a
    /// ℚ/ℤ component). Unlike from_group this keeps the component structure
    /// as given rather than normalizing to invariant factors.
    static CoeffGroup from_moduli(std::vector<Int> moduli);

    std::size_t components() const { return moduli_.size(); }
    const std::vector<Int>& moduli() const { return moduli_; }
    bool is_pure_qmodz() const { return moduli_.size() == 1 && moduli_[0] == 0; }
    bool is_finite() const;
    Int order() const;  // throws PreconditionError when infinite

    AbValue zero() const { return AbValue(moduli_.size(), Rational(0)); }
    bool is_zero(const AbValue& v) const;

    /// Canonicalize: reduce each component mod 1 and check membership of the
    /// ℤ/m components. Throws MalformedInputError on wrong arity or values
    /// outside the group.
    AbValue reduce(AbValue v) const;

    AbValue add(const AbValue& a, const AbValue& b) const;
    AbValue sub(const AbValue& a, const AbValue& b) const;
    AbValue negate(const AbValue& a) const;
    AbValue scale(const Int& n, const AbValue& a) const;

    /// Solve d·x = c componentwise; returns false when the torsion
    /// constraint has no solution. The solution chosen is canonical
    /// (smallest representative), so the result is deterministic.
    bool try_solve_scale(const Int& d, const AbValue& c, AbValue* out) const;

    /// All elements, last component fastest. Finite groups only.
    std::vector<AbValue> elements() const;

    /// Spec-string form: "u1", "cyclic:m", "abelian:m1,m2,...", "abelian:1".
    std::string describe() const;

    bool operator==(const CoeffGroup&) const = default;

private:
    std::vector<Int> moduli_;
};

/// Parse "u1" / "qmodz" / "cyclic:n" / "abelian:d1,d2,..." into a CoeffGroup.
CoeffGroup parse_coeff_spec(const std::string& spec);

/// Render one AbValue component as "p/q" ("0", "1/2", ...).
std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

}  // namespace statesum

#endif
