#pragma once

// Arthur parameters ψ = ⊕ ρ_i ⊗ R[a_i] for Sp(2n,ℝ), SO(p,q): dimension and
// parity, infinitesimal characters, domination, the component group A(ψ),
// the quotient A(ψ₊) → A(ψ) and elliptic endoscopic splittings.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "aptrans/rational.hpp"
#include "aptrans/weyl.hpp"

namespace aptrans {

/// Malformed or inconsistent mathematical input (bad dimension, bad parity,
/// invalid offsets, ...). The CLI maps it to exit code 2.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class GroupKind { Sp, SOodd, SOeven };

/// Sp(2n,ℝ) or SO(P,Q) with P+Q = 2n+1 / 2n.
class ClassicalGroup {
public:
    /// Signature is ignored for Sp. For SO kinds it defaults to the
    /// quasi-split form with a compact Cartan: (n+1,n), (n,n) or (n+1,n-1).
    ClassicalGroup(GroupKind kind, int rank, std::optional<std::pair<int, int>> signature = {});

    GroupKind kind() const { return kind_; }
    int rank() const { return rank_; }
    int p() const { return p_; }
    int q() const { return q_; }
    bool quasi_split() const;

    /// Dimension of the standard representation of the dual group.
    int nstar() const { return kind_ == GroupKind::Sp ? 2 * rank_ + 1 : 2 * rank_; }
    bool dual_symplectic() const { return kind_ == GroupKind::SOodd; }
    /// Dual group is SO(n*) (as opposed to Sp(n*)).
    bool dual_special_orthogonal() const { return !dual_symplectic(); }
    /// Root system of G(ℂ); SOeven uses the extended D convention.
    GroupType root_type() const;
    /// 0, 1/2, 1 for SOeven, SOodd, Sp.
    HalfInt epsilon() const;

    /// Same kind and rank `rank`, with the given signature.
    ClassicalGroup with_rank(int rank, std::optional<std::pair<int, int>> signature = {}) const;

    std::string kind_name() const;
    std::string name() const;

    friend bool operator==(const ClassicalGroup&, const ClassicalGroup&) = default;

private:
    GroupKind kind_;
    int rank_;
    int p_ = 0;
    int q_ = 0;
};

/// ρ ⊗ R[a] with multiplicity. ρ is 1-dimensional (t = 0, sign η) or the
/// 2-dimensional discrete-series parameter with t > 0.
struct Block {
    HalfInt t;
    int eta = 1;  // ±1, only meaningful when t = 0
    int a = 1;
    int mult = 1;

    int rho_dim() const { return t == HalfInt(0) ? 1 : 2; }
    /// dim ρ · a (one copy).
    int copy_dim() const { return rho_dim() * a; }
    int total_dim() const { return copy_dim() * mult; }
    bool same_isotype(const Block& o) const { return t == o.t && a == o.a && eta == o.eta; }
    std::string str() const;

    friend bool operator==(const Block&, const Block&) = default;
};

class ArthurParameter {
public:
    /// Normalizes (η forced to + for t>0, identical blocks merged, sorted by
    /// t descending then a descending) and checks the dimension.
    /// Throws InputError on mismatch or malformed blocks.
    ArthurParameter(ClassicalGroup group, std::vector<Block> blocks);

    const ClassicalGroup& group() const { return group_; }
    const std::vector<Block>& blocks() const { return blocks_; }

    /// Σ dim(ρ)·a·mult.
    int dimension() const;
    /// t > 0 blocks expanded to single copies, t descending.
    std::vector<Block> discrete_copies() const;
    /// The t = 0 sub-multiset ψ_u.
    std::vector<Block> unipotent_part() const;
    int unipotent_dim() const;
    /// Σ a_i over discrete copies.
    int unitary_rank() const;

    std::string str() const;

    friend bool operator==(const ArthurParameter&, const ArthurParameter&) = default;

private:
    ClassicalGroup group_;
    std::vector<Block> blocks_;
};

/// Σ dim(ρ)·a·mult over a raw block list.
int blocks_dimension(std::span<const Block> blocks);

// ---------------------------------------------------------------- parity

struct BlockParity {
    Block block;
    bool good = false;
    std::string reason;
};

struct ParityReport {
    bool good = true;
    std::vector<BlockParity> blocks;
};

/// t>0 blocks: t+(a-1)/2 ∈ ℤ (dual orthogonal) or ∈ ½+ℤ (dual symplectic).
/// t=0 blocks: a odd (dual orthogonal) or even (dual symplectic).
ParityReport good_parity(const ArthurParameter& psi);
bool block_good_parity(const ClassicalGroup& g, const Block& b);

// ------------------------------------------------- infinitesimal characters

enum class Side { G, GL };

/// Gside: dominant weight of length n (root type of G, extended D for
/// SOeven). GLside: the negation-symmetric multiset of size n*, stored as a
/// non-increasing coordinate vector.
struct InfChar {
    Side side = Side::G;
    Weight data;
    friend bool operator==(const InfChar&, const InfChar&) = default;
};

InfChar inf_char(const ArthurParameter& psi, Side side);

/// The aligned GL-side tuple: for each discrete copy t+(a-1)/2,…,t-(a-1)/2,
/// then ν_{ψ_u} (non-increasing), then for copies in reverse order
/// -t+(a-1)/2,…,-t-(a-1)/2.
Weight aligned_gl_layout(const ArthurParameter& psi);

// ------------------------------------------------------------- domination

/// Minimum gap between consecutive dominated t' (and floor for the last);
/// std::nullopt means n*.
using Threshold = std::optional<std::int64_t>;

/// ψ₊: discrete copies get t'_i = t_i + T_i. Requires good parity,
/// integer T_1 ≥ … ≥ T_v ≥ 0 and t'_i − t'_{i+1} ≥ threshold, t'_v ≥ threshold.
ArthurParameter dominate(const ArthurParameter& psi, std::span<const std::int64_t> offsets,
                         Threshold threshold = {});
/// Same, but validates that every offset is an integer first.
ArthurParameter dominate(const ArthurParameter& psi, std::span<const Rational> offsets,
                         Threshold threshold = {});

/// Smallest non-increasing non-negative integer offsets meeting the threshold.
std::vector<std::int64_t> canonical_offsets(const ArthurParameter& psi, Threshold threshold = {});

/// T_i recovered from a domination pair. Throws InputError if psi_plus
/// does not dominate psi.
std::vector<std::int64_t> domination_offsets(const ArthurParameter& psi, const ArthurParameter& psi_plus);

// --------------------------------------------------------- component group

/// ±1 per distinct block.
using SignVector = std::vector<int>;

/// A(ψ) = π₀ of the centralizer: ε_j ∈ {±1} is the determinant on the
/// multiplicity space of block j. When the dual group is SO(n*) the
/// relation Π ε_j^{dim ρ_j · a_j} = 1 is imposed.
class ComponentGroup {
public:
    explicit ComponentGroup(const ArthurParameter& psi);

    const std::vector<Block>& basis() const { return basis_; }
    std::size_t rank() const { return basis_.size(); }
    /// Exponent parities of the determinant relation, if imposed.
    const std::optional<std::vector<int>>& relation() const { return relation_; }
    bool relation_nontrivial() const;
    const std::vector<SignVector>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }
    bool contains(const SignVector& s) const;
    const SignVector& s_psi() const { return s_psi_; }
    /// Image of the centre of the dual group, if it is non-trivial.
    const std::optional<SignVector>& center() const { return center_; }
    SignVector identity() const { return SignVector(basis_.size(), 1); }

    /// Image in A(ψ) of the involution acting by s_j on the whole isotypic
    /// component of block j: ε_j = s_j^{mult_j}.
    SignVector component_of(const SignVector& isotypic) const;

private:
    std::vector<Block> basis_;
    std::optional<std::vector<int>> relation_;
    std::vector<SignVector> elements_;
    SignVector s_psi_;
    std::optional<SignVector> center_;
};

/// Throws InputError if ψ is not of good parity.
ComponentGroup component_group(const ArthurParameter& psi);

/// A character of A(ψ), given by its values on the basis sign vectors.
struct Character {
    std::vector<int> values;
    int operator()(const SignVector& s) const;
    std::string str() const;
    friend bool operator==(const Character&, const Character&) = default;
    friend auto operator<=>(const Character&, const Character&) = default;
};

/// Representative with the first relation-carrying coordinate set to +1,
/// so equal characters of A(ψ) compare equal.
Character canonical_character(const ComponentGroup& g, Character c);
/// All |A(ψ)| characters, canonical and sorted.
std::vector<Character> characters(const ComponentGroup& g);
bool trivial_on_center(const ComponentGroup& g, const Character& c);

/// A(ψ₊) → A(ψ): signs of ψ₊-blocks merging onto one ψ-block multiply.
class QuotientMap {
public:
    QuotientMap(const ArthurParameter& psi_plus, const ArthurParameter& psi);

    const ComponentGroup& source() const { return source_; }
    const ComponentGroup& target() const { return target_; }
    /// block_map()[j] = index of the ψ-block receiving ψ₊-block j.
    const std::vector<int>& block_map() const { return block_map_; }
    SignVector apply(const SignVector& s) const;
    const std::vector<SignVector>& kernel() const { return kernel_; }
    bool is_isomorphism() const { return kernel_.size() == 1; }
    /// Exhaustive checks over the source group.
    bool is_homomorphism() const;
    bool is_surjective() const;

    bool trivial_on_kernel(const Character& plus) const;
    /// The character of A(ψ) whose pull-back is `plus`, if it factors.
    std::optional<Character> descend(const Character& plus) const;
    Character pull_back(const Character& c) const;

private:
    ComponentGroup source_;
    ComponentGroup target_;
    std::vector<int> block_map_;
    std::vector<SignVector> kernel_;
};

QuotientMap quotient_map(const ArthurParameter& psi_plus, const ArthurParameter& psi);

// --------------------------------------------------------------- endoscopy

/// Splitting of ψ along the ±1 eigenspaces of an involution s of the
/// centralizer (s_j acting on the whole isotypic component of block j).
struct EndoscopicSplit {
    SignVector s;
    int n_minus = 0;  // dimension of the −1 eigenspace
    int n_plus = 0;
    ArthurParameter psi_minus;
    ArthurParameter psi_plus;
};

/// Throws InputError if s has the wrong length, non-±1 entries, or
/// determinant −1 in a special orthogonal dual group.
EndoscopicSplit endoscopic_split(const ArthurParameter& psi, const SignVector& s);

/// Group whose dual has standard representation of dimension m and the
/// given type: odd orthogonal → Sp, even orthogonal → SOeven, symplectic → SOodd.
ClassicalGroup group_with_dual(int m, bool dual_symplectic);

}  // namespace aptrans
