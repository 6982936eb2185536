#pragma once

// Corpus-wide verification sweeps. Each has an OpenMP version taking a
// worker count and a serial reference; results are stored by input index
// so they do not depend on scheduling.

#include <cstdint>
#include <string>
#include <vector>

#include "aptrans/aq.hpp"
#include "aptrans/arthur.hpp"
#include "aptrans/torus.hpp"
#include "aptrans/twisted.hpp"

namespace aptrans {

struct UniquenessRow {
    std::string psi;
    std::vector<std::int64_t> offsets;
    std::uint64_t rearrangements = 0;
    std::size_t matches = 0;
    bool unique = false;
    friend bool operator==(const UniquenessRow&, const UniquenessRow&) = default;
};

/// Canonical offsets for `threshold`, then the pruned uniqueness check.
std::vector<UniquenessRow> sweep_uniqueness(const std::vector<ArthurParameter>& corpus, Threshold threshold,
                                            int workers);
/// Same rows from the exhaustive check, one thread.
std::vector<UniquenessRow> sweep_uniqueness_serial(const std::vector<ArthurParameter>& corpus, Threshold threshold);

struct FiltrationRow {
    std::string psi;
    std::int64_t height_bound = 0;
    std::size_t levis = 0;
    std::size_t enumerated = 0;  // summed over Levi data
    std::size_t nonzero_mu1 = 0;
    std::vector<std::string> violations;
    friend bool operator==(const FiltrationRow&, const FiltrationRow&) = default;
};

/// Every Levi datum of the canonical ψ₊, height bound 2·max T_i (or
/// `height_bound` when non-negative).
std::vector<FiltrationRow> sweep_filtration(const std::vector<ArthurParameter>& corpus, std::int64_t height_bound,
                                            int workers);
std::vector<FiltrationRow> sweep_filtration_serial(const std::vector<ArthurParameter>& corpus,
                                                   std::int64_t height_bound);

struct TwistedRow {
    Weight mu;
    int endo_rank = 0;
    int trials = 0;
    double max_residual = 0.0;
    std::size_t stable_cosets = 0;
    std::size_t fixed_reps = 0;
    friend bool operator==(const TwistedRow&, const TwistedRow&) = default;
};

/// θ-invariant dominant μ of length n ≤ max_n with entries ≤ bound,
/// principal endoscopic rank, `trials` seeded tori each.
std::vector<TwistedRow> sweep_twisted(int max_n, int bound, int trials, std::uint64_t seed, int workers);
std::vector<TwistedRow> sweep_twisted_serial(int max_n, int bound, int trials, std::uint64_t seed);

/// Worker count actually available to OpenMP.
/// Outcome of a seeded random sweep: how many cases ran and which failed.
struct RandomSweep {
    std::size_t trials = 0;
    std::vector<std::string> failures;
    friend bool operator==(const RandomSweep&, const RandomSweep&) = default;
};

/// Random parameters of the given kind built from t > 0 blocks (plus one
/// trivial R[1] for Sp): good parity holds exactly when every t̃ᵢ is an integer.
RandomSweep sweep_parity(GroupKind kind, std::size_t count, std::uint64_t seed);
/// Random G-side ν: the transferred GL-side tuple has twice the norm.
RandomSweep sweep_norms(GroupKind kind, std::size_t count, std::uint64_t seed);

int available_workers();

}  // namespace aptrans
