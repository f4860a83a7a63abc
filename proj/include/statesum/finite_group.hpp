#ifndef STATESUM_FINITE_GROUP_HPP
#define STATESUM_FINITE_GROUP_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "statesum/abelian.hpp"

namespace statesum {

/// Finite group given by its Cayley table. Elements are 0-based indices.
/// Construction verifies the identity, inverse, and associativity laws
/// (O(n³), acceptable at the supported scale); orders above 5000 are
/// rejected before verification.
class FiniteGroup {
public:
    static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                  std::string name = "table");

    int order() const { return n_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) *
                                                static_cast<std::size_t>(n_) +
                                                static_cast<std::size_t>(b)]; }
    int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }

    bool is_abelian() const;
    int element_order(int a) const;
    int conjugacy_class_count() const;

    /// The spec string this group was built from ("sym:3", "table", ...).
    const std::string& name() const { return name_; }

    /// Present for "cyclic:n" and "abelian:..." specs: the same group in
    /// invariant-factor form, with element index i ↔ mixed-radix tuple over
    /// the factors (last coordinate fastest).
    const std::optional<FinAbelianGroup>& abelian_view() const { return abelian_view_; }

    bool operator==(const FiniteGroup& other) const {
        return n_ == other.n_ && table_ == other.table_;
    }

private:
    FiniteGroup() = default;

    int n_ = 1;
    int identity_ = 0;
    std::vector<int> table_;  // row-major n×n
    std::vector<int> inverse_;
    std::string name_;
    std::optional<FinAbelianGroup> abelian_view_;

    friend FiniteGroup group_from_spec(const std::string& spec);
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Build a group from a spec string:
///   "cyclic:n"          ℤ/n
///   "sym:n"             symmetric group on n letters (n! ≤ 5000)
///   "dihedral:n"        dihedral group of order 2n
///   "abelian:d1,d2,..." direct sum of cyclic groups
///   "table:<path>"      JSON n×n array of 0-based element indices
FiniteGroup group_from_spec(const std::string& spec);

/// Permutation helpers behind "sym:n": elements are ranked lexicographically
/// among all permutations of {0..n-1}.
std::vector<int> permutation_of_rank(int n, int rank);
int rank_of_permutation(const std::vector<int>& perm);

}  // namespace statesum

#endif
