#include "aptrans/sweeps.hpp"

#include <algorithm>
#include <random>

#include <omp.h>

namespace aptrans {

int available_workers() { return omp_get_max_threads(); }

namespace {

template <class Check>
UniquenessRow uniqueness_row(const ArthurParameter& psi, Threshold threshold, Check&& check) {
    UniquenessRow row;
    row.psi = psi.str();
    row.offsets = canonical_offsets(psi, threshold);
    const auto r = check(psi, dominate(psi, row.offsets, threshold));
    row.rearrangements = r.rearrangements;
    row.matches = r.matches.size();
    row.unique = r.unique;
    return row;
}

std::int64_t default_height(const std::vector<std::int64_t>& offsets) {
    std::int64_t m = 0;
    for (auto x : offsets) m = std::max(m, x);
    return 2 * m;
}

FiltrationRow filtration_row(const ArthurParameter& psi, std::int64_t height_bound) {
    FiltrationRow row;
    row.psi = psi.str();
    const auto offsets = canonical_offsets(psi);
    row.height_bound = height_bound >= 0 ? height_bound : default_height(offsets);
    const auto plus = dominate(psi, offsets);
    const auto levis = enumerate_levis(plus);
    row.levis = levis.size();
    // μ depends only on the Levi shape, which all data share.
    const auto weights = filtration_weights(parabolic_data(psi.group(), levis.front().sizes()), row.height_bound);
    for (const auto& l : levis) {
        const auto rep = filtration_vanishing(make_datum(plus, l), psi, weights);
        row.enumerated += rep.enumerated;
        row.nonzero_mu1 += rep.nonzero_mu1;
        for (const auto& v : rep.violations) row.violations.push_back(l.str() + " mu=" + v.mu.str() + ": " + v.reason);
    }
    return row;
}

std::vector<TwistedRow> twisted_grid(int max_n, int bound, int trials) {
    std::vector<TwistedRow> rows;
    for (int n = 1; n <= max_n; ++n)
        for (auto& mu : theta_invariant_weights(n, bound)) rows.push_back(TwistedRow{std::move(mu), n / 2, trials, 0.0, 0, 0});
    return rows;
}

}  // namespace

std::vector<UniquenessRow> sweep_uniqueness(const std::vector<ArthurParameter>& corpus, Threshold threshold,
                                            int workers) {
    std::vector<UniquenessRow> rows(corpus.size());
    const auto n = static_cast<std::int64_t>(corpus.size());
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (std::int64_t i = 0; i < n; ++i)
        rows[i] = uniqueness_row(corpus[i], threshold, [](const auto& a, const auto& b) { return uniqueness_check(a, b); });
    return rows;
}

std::vector<UniquenessRow> sweep_uniqueness_serial(const std::vector<ArthurParameter>& corpus, Threshold threshold) {
    std::vector<UniquenessRow> rows;
    for (const auto& psi : corpus)
        rows.push_back(uniqueness_row(psi, threshold, [](const auto& a, const auto& b) {
            return uniqueness_check_reference(a, b);
        }));
    return rows;
}

std::vector<FiltrationRow> sweep_filtration(const std::vector<ArthurParameter>& corpus, std::int64_t height_bound,
                                            int workers) {
    std::vector<FiltrationRow> rows(corpus.size());
    const auto n = static_cast<std::int64_t>(corpus.size());
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (std::int64_t i = 0; i < n; ++i) rows[i] = filtration_row(corpus[i], height_bound);
    return rows;
}

std::vector<FiltrationRow> sweep_filtration_serial(const std::vector<ArthurParameter>& corpus,
                                                   std::int64_t height_bound) {
    std::vector<FiltrationRow> rows;
    for (const auto& psi : corpus) rows.push_back(filtration_row(psi, height_bound));
    return rows;
}

std::vector<TwistedRow> sweep_twisted(int max_n, int bound, int trials, std::uint64_t seed, int workers) {
    auto rows = twisted_grid(max_n, bound, trials);
    const auto n = static_cast<std::int64_t>(rows.size());
    std::vector<ExtremalRep> reps;
    for (const auto& r : rows) reps.emplace_back(r.mu);
    // One task per (μ, trial); per-task residuals keep the max exact.
    std::vector<double> residual(static_cast<std::size_t>(n * trials));
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (std::int64_t k = 0; k < n * trials; ++k) {
        const auto i = k / trials;
        const auto t = trial_torus(reps[i].n(), seed, static_cast<std::uint64_t>(k % trials));
        residual[k] = transfer_residual(reps[i], rows[i].endo_rank, t);
    }
    for (std::int64_t i = 0; i < n; ++i) {
        const auto first = residual.begin() + i * trials;
        rows[i].max_residual = trials > 0 ? *std::max_element(first, first + trials) : 0.0;
        const auto k = kostant_theta_invariance(rows[i].mu);
        rows[i].stable_cosets = k.stable_cosets;
        rows[i].fixed_reps = k.fixed_reps;
    }
    return rows;
}

std::vector<TwistedRow> sweep_twisted_serial(int max_n, int bound, int trials, std::uint64_t seed) {
    auto rows = twisted_grid(max_n, bound, trials);
    for (auto& r : rows) {
        r.max_residual = verify_transfer_identity(r.mu, r.endo_rank, trials, seed);
        const auto k = kostant_theta_invariance(r.mu);
        r.stable_cosets = k.stable_cosets;
        r.fixed_reps = k.fixed_reps;
    }
    return rows;
}

namespace {

std::mt19937_64 sweep_rng(GroupKind kind, std::uint64_t seed, std::uint64_t salt) {
    std::seed_seq seq{seed, static_cast<std::uint64_t>(kind), salt};
    return std::mt19937_64(seq);
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

RandomSweep sweep_parity(GroupKind kind, std::size_t count, std::uint64_t seed) {
    auto rng = sweep_rng(kind, seed, 4);
    RandomSweep out{count, {}};
    for (std::size_t k = 0; k < count; ++k) {
        std::vector<Block> blocks;
        const int m = uniform(rng, 1, 3);
        for (int i = 0; i < m; ++i) blocks.push_back(Block{HalfInt::from_twice(uniform(rng, 1, 9)), 1, uniform(rng, 1, 4), 1});
        const int dim = blocks_dimension(blocks);
        if (kind == GroupKind::Sp) blocks.push_back(Block{HalfInt(0), 1, 1, 1});
        const ArthurParameter psi(ClassicalGroup(kind, dim / 2), std::move(blocks));
        const bool good = good_parity(psi).good;
        bool integral = true;
        for (const auto& x : lambda_tilde_values(psi)) integral = integral && x.is_integer();
        if (good != integral)
            out.failures.push_back(psi.str() + ": parity " + (good ? "good" : "bad") + ", t~ " +
                                   (integral ? "integral" : "not integral"));
    }
    return out;
}

RandomSweep sweep_norms(GroupKind kind, std::size_t count, std::uint64_t seed) {
    auto rng = sweep_rng(kind, seed, 5);
    RandomSweep out{count, {}};
    for (std::size_t k = 0; k < count; ++k) {
        const ClassicalGroup g(kind, uniform(rng, 1, 8));
        std::vector<std::int64_t> twice;
        for (int i = 0; i < g.rank(); ++i) twice.push_back(uniform(rng, -40, 40));
        const auto nu = Weight::from_twice(twice);
        const auto gl = transfer_infchar(nu, g);
        if (norm_sq(gl) != Rational(2) * norm_sq(nu))
            out.failures.push_back(g.name() + " nu=" + nu.str() + ": |GL|^2=" + norm_sq(gl).str());
    }
    return out;
}

}  // namespace aptrans
