#pragma once

// GL(n) with the pinned outer automorphism θ(g) = J ᵗg⁻¹ J⁻¹: the θ-fixed
// part of S_n, the norm map on the torus, traces of t⋊θ on extremal weight
// lines, and numerical checks of the twisted transfer identity.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "aptrans/weyl.hpp"

namespace aptrans {

using Complex = std::complex<double>;
using TorusElement = std::vector<Complex>;

/// Permutation σ of {0..n-1} acting by (σx)_{σ(i)} = x_i.
using Permutation = std::vector<int>;

struct ThetaFixedWeyl {
    int n = 0;
    /// σ with w₀σw₀ = σ, sorted.
    std::vector<Permutation> elements;
    /// Image of each element as a signed permutation of ⌊n/2⌋ letters.
    std::vector<WeylElement> as_signed;
};

ThetaFixedWeyl theta_fixed_weyl(int n);

/// w₀σw₀.
Permutation theta_conjugate(const Permutation& sigma);

/// θ(t)_i = 1/t_{n+1-i}.
TorusElement theta(const TorusElement& t);
/// N(t)_i = t_i / t_{n+1-i}, i ≤ ⌊n/2⌋. Throws std::invalid_argument on a zero entry.
TorusElement norm_map(const TorusElement& t);
/// N(t)_i ≠ ±1 and N(t)_i ≠ N(t)_j^{±1} for i ≠ j, with margin `tol`.
bool is_regular(const TorusElement& t, double tol = 1e-6);
/// Action of σ on torus coordinates.
TorusElement permute(const Permutation& sigma, const TorusElement& t);

/// Unit-circle entries, resampled until regular.
TorusElement random_regular_torus(int n, std::mt19937_64& rng);

/// μ(t) = Π t_i^{μ_i}, μ integral.
Complex evaluate_character(const Weight& mu, const TorusElement& t);

/// θ-invariant dominant integral μ: μ_i = −μ_{n+1-i}, non-increasing.
bool is_theta_invariant(const Weight& mu);

class ExtremalRep {
public:
    /// Throws std::invalid_argument unless μ is integral, dominant and θ-invariant.
    explicit ExtremalRep(Weight mu);

    const Weight& mu() const { return mu_; }
    int n() const { return static_cast<int>(mu_.size()); }
    /// Kostant representatives w of W/W_μ with θ(wμ) = wμ, and their weights.
    const std::vector<Permutation>& fixed_cosets() const { return fixed_reps_; }
    const std::vector<Weight>& fixed_weights() const { return fixed_weights_; }
    /// |W/W_μ|.
    std::size_t coset_count() const { return coset_count_; }

private:
    Weight mu_;
    std::vector<Permutation> fixed_reps_;
    std::vector<Weight> fixed_weights_;
    std::size_t coset_count_ = 0;
};

/// Σ over θ-fixed extremal weights ν of ν(t).
Complex twisted_trace_extremal(const ExtremalRep& rep, const TorusElement& t);

/// Σ over the distinct W(B_r)×W(B_{m-r}) orbits covering W(B_m)·ν of the
/// orbit sums evaluated at s, ν = first m coordinates of μ. r = m is the
/// principal case.
Complex endoscopic_side(const Weight& mu, int endo_rank, const TorusElement& s);

/// |twisted trace − endoscopic side| at one torus element.
double transfer_residual(const ExtremalRep& rep, int endo_rank, const TorusElement& t);

/// The torus element used for trial `k` under `seed`.
TorusElement trial_torus(int n, std::uint64_t seed, std::uint64_t k);

/// Max residual over `trials` seeded regular torus elements. Throws
/// std::invalid_argument for a non-θ-invariant μ or endo_rank outside [0, ⌊n/2⌋].
double verify_transfer_identity(const Weight& mu, int endo_rank, int trials, std::uint64_t seed);

struct KostantThetaReport {
    std::size_t stable_cosets = 0;
    std::size_t fixed_reps = 0;
    bool ok() const { return stable_cosets == fixed_reps; }
};

/// For each θ-stable coset of W/W_μ, whether its Kostant representative is θ-fixed.
KostantThetaReport kostant_theta_invariance(const Weight& mu);

/// All θ-invariant dominant integral μ of length n with |μ_i| ≤ bound.
std::vector<Weight> theta_invariant_weights(int n, int bound);

}  // namespace aptrans
