#pragma once

// Cohomological induction data A_q(λ×σ) for Levi subgroups
// L = U(p_1,q_1)×…×U(p_v,q_v)×G₀: character shifts, range conditions,
// the norm-increase check behind the vanishing of higher filtration steps,
// and transport of packet data along a domination pair.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aptrans/arthur.hpp"
#include "aptrans/weyl.hpp"

namespace aptrans {

struct LeviDatum {
    std::vector<std::pair<int, int>> unitary;  // (p_i, q_i), one per discrete copy
    ClassicalGroup g0;

    std::vector<int> sizes() const;
    int unitary_rank() const;
    std::string str() const;
    friend bool operator==(const LeviDatum&, const LeviDatum&) = default;
};

/// Every Levi datum compatible with the real form of psi.group(), p_i
/// descending lexicographically. Throws InputError if psi is not of good
/// parity or no datum fits the signature.
std::vector<LeviDatum> enumerate_levis(const ArthurParameter& psi);

/// t̃_i = t_i + (a_i-1)/2 + ε_G + Σ_{j>i} a_j + n₀ over the discrete copies.
std::vector<HalfInt> lambda_tilde_values(const ArthurParameter& psi);
/// Same, as integers. Throws InputError if some t̃_i is not an integer.
std::vector<std::int64_t> lambda_tilde(const ArthurParameter& psi);

/// Opaque unipotent representation of G₀, known through its infinitesimal character.
struct Sigma {
    std::string label;
    Weight nu;
    bool weakly_unipotent = true;
    friend bool operator==(const Sigma&, const Sigma&) = default;
};

/// σ attached to the t = 0 part of psi, viewed as a parameter of G₀.
Sigma unipotent_sigma(const ArthurParameter& psi, const ClassicalGroup& g0);

struct AqDatum {
    ClassicalGroup group;
    LeviDatum levi;
    std::vector<std::int64_t> t_tilde;
    Sigma sigma;
    Weight lambda_l;  // t̃_i repeated a_i times, then zeros on G₀

    std::string label() const;
    friend bool operator==(const AqDatum&, const AqDatum&) = default;
};

/// Datum for psi on the given Levi, σ from the t = 0 part unless supplied.
AqDatum make_datum(const ArthurParameter& psi, const LeviDatum& levi, std::optional<Sigma> sigma = {});

/// Roots and half-sums of the θ-stable parabolic with unitary blocks first
/// (in block order), then G₀ coordinates.
struct ParabolicData {
    GroupType type;
    std::vector<Weight> u_roots;
    Weight delta_u;   // ρ(𝔤) − ρ(𝔩)
    Weight delta_l1;  // ρ of the unitary factors, zero on G₀
    std::vector<int> sizes;
    int n0 = 0;
};

ParabolicData parabolic_data(const ClassicalGroup& g, const std::vector<int>& sizes);

enum class Range { good, weakly_fair, neither };
const char* range_name(Range r);

/// good: ⟨λ_L − δ(𝔲) + δ_{L₁} + ν_σ, α⟩ > 0 on Δ(𝔲);
/// weakly_fair: ⟨λ_L − δ(𝔲), α⟩ ≥ 0 on Δ(𝔲).
Range range_check(const AqDatum& d);

/// ⟨μ, ρ^∨⟩: the height of μ in the root lattice.
Rational root_height(const GroupType& t, const Weight& mu);

/// Sums of roots of 𝔲 with height ≤ bound that are dominant for L, sorted.
std::vector<Weight> filtration_weights(const ParabolicData& pd, std::int64_t height_bound);

struct FiltrationViolation {
    Weight mu;
    std::string reason;
};

struct FiltrationReport {
    Weight lambda;    // unitary coordinates of λ for psi
    Weight delta_l1;  // same coordinates
    std::size_t enumerated = 0;
    std::size_t nonzero_mu1 = 0;
    std::vector<FiltrationViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// For every enumerated μ = μ₁×μ₀: μ₁ ≠ 0 ⇒ |λ+μ₁+δ_{L₁}|² > |λ+δ_{L₁}|²
/// with ⟨λ,μ₁⟩ ≥ 0 and ⟨δ_{L₁},μ₁⟩ ≥ 0; μ₁ = 0 ⇒ μ = 0. λ is the character
/// of the datum translated to psi. Throws InputError unless d_plus is in the
/// good range and dominates psi.
FiltrationReport filtration_vanishing(const AqDatum& d_plus, const ArthurParameter& psi, std::int64_t height_bound);
/// Same with the μ list supplied (it depends only on the Levi shape).
FiltrationReport filtration_vanishing(const AqDatum& d_plus, const ArthurParameter& psi,
                                      const std::vector<Weight>& weights);

struct PacketEntry {
    AqDatum datum;
    Character eps;
    std::string label() const;
    friend bool operator==(const PacketEntry&, const PacketEntry&) = default;
};

struct VanishingEntry {
    std::string label;
    std::string note;
};

struct PacketData {
    ArthurParameter psi;
    std::vector<PacketEntry> entries;
    std::vector<VanishingEntry> vanishing;
};

/// Moves every entry from ψ₊ to psi: t̃ shifts down by T, characters descend
/// through A(ψ₊) → A(ψ); entries nontrivial on the kernel are moved to
/// `vanishing`. Throws InputError for an entry outside the good range or
/// whose Levi does not match.
PacketData translate_packet(const PacketData& plus, const ArthurParameter& psi);

/// Inverse direction: data for psi_plus with characters pulled back.
PacketData lift_packet(const PacketData& packet, const ArthurParameter& psi_plus);

/// Σ ε(s)·label. Throws InputError unless s ∈ A(ψ).
std::map<std::string, int> evaluate_at(const PacketData& packet, const SignVector& s);

}  // namespace aptrans
