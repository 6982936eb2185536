#pragma once

// W-invariant integer combinations of torus characters, tensor-product
// support of infinitesimal characters, the translation weight of a
// domination pair and the rearrangement-uniqueness check for it, and the
// transfer of infinitesimal characters from G to GL(n*).

#include <cstdint>
#include <map>
#include <vector>

#include "aptrans/arthur.hpp"
#include "aptrans/weyl.hpp"

namespace aptrans {

/// Σ mult · (Σ over the orbit of key), keys dominant for `type`.
struct CharacterCombination {
    GroupType type;
    std::map<Weight, std::int64_t> terms;

    /// Number of characters counted with multiplicity.
    std::int64_t total_terms() const;
    /// Every weight occurring with nonzero coefficient, sorted.
    std::vector<Weight> weights() const;
};

/// The trivial character e^0.
CharacterCombination trivial_combination(const GroupType& t);

/// Σ_{w ∈ W} e^{−wλ}.
CharacterCombination symmetrize(const GroupType& t, const Weight& lambda);

/// Dominant representatives of ν + μ over the weights μ of E, sorted.
std::vector<Weight> tensor_infchar_support(const Weight& nu, const CharacterCombination& e);

/// Elements of the support whose norm is strictly below |ν_π|².
std::vector<Weight> weak_unipotence_norm_test(const Weight& nu_pi, const CharacterCombination& e);

struct TranslationDatum {
    Weight lambda_gl;  // length n*
    Weight lambda_g;   // first n coordinates
    std::vector<std::int64_t> offsets;
};

/// T_i repeated a_i times, zeros, then −T_i repeated a_i times in reverse
/// block order. Throws InputError if psi_plus does not dominate psi.
TranslationDatum translation_weight(const ArthurParameter& psi, const ArthurParameter& psi_plus);

struct UniquenessReport {
    Weight nu_plus;                // aligned layout of ψ₊
    Weight expected;               // −λ, the aligned subtraction
    std::vector<Weight> matches;   // sorted
    std::uint64_t rearrangements = 0;  // distinct rearrangements of λ
    bool unique = false;
};

/// Every distinct rearrangement μ of the coordinates of λ with ν₊ + μ equal
/// to ν_ψ as a multiset. Pruned search.
UniquenessReport uniqueness_check(const ArthurParameter& psi, const ArthurParameter& psi_plus);

/// Same result by visiting every rearrangement; slow, kept for testing.
UniquenessReport uniqueness_check_reference(const ArthurParameter& psi, const ArthurParameter& psi_plus);

/// ν ↦ (ν, [0 if n* odd], −ν) as a non-increasing multiset.
Weight transfer_infchar(const Weight& nu, const ClassicalGroup& g);

}  // namespace aptrans
