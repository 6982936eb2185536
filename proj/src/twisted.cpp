#include "aptrans/twisted.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace aptrans {

Permutation theta_conjugate(const Permutation& sigma) {
    const int n = static_cast<int>(sigma.size());
    Permutation out(sigma.size());
    for (int i = 0; i < n; ++i) out[i] = n - 1 - sigma[n - 1 - i];
    return out;
}

ThetaFixedWeyl theta_fixed_weyl(int n) {
    if (n < 1) throw std::invalid_argument("theta_fixed_weyl: n must be positive");
    ThetaFixedWeyl out;
    out.n = n;
    const int m = n / 2;
    Permutation sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        if (theta_conjugate(sigma) != sigma) continue;
        out.elements.push_back(sigma);
        WeylElement w{std::vector<int>(m), std::vector<int>(m)};
        for (int i = 0; i < m; ++i) {
            const int j = sigma[i];
            w.perm[i] = j < m ? j : n - 1 - j;
            w.signs[i] = j < m ? 1 : -1;
        }
        out.as_signed.push_back(std::move(w));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

TorusElement theta(const TorusElement& t) {
    const std::size_t n = t.size();
    TorusElement out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = 1.0 / t[n - 1 - i];
    return out;
}

TorusElement norm_map(const TorusElement& t) {
    const std::size_t n = t.size();
    for (const auto& x : t)
        if (x == Complex(0)) throw std::invalid_argument("norm_map: zero entry");
    TorusElement out(n / 2);
    for (std::size_t i = 0; i < n / 2; ++i) out[i] = t[i] / t[n - 1 - i];
    return out;
}

bool is_regular(const TorusElement& t, double tol) {
    const auto s = norm_map(t);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (std::abs(s[i] - 1.0) < tol || std::abs(s[i] + 1.0) < tol) return false;
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (std::abs(s[i] - s[j]) < tol || std::abs(s[i] * s[j] - 1.0) < tol) return false;
    }
    return true;
}

TorusElement permute(const Permutation& sigma, const TorusElement& t) {
    TorusElement out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) out[sigma[i]] = t[i];
    return out;
}

TorusElement random_regular_torus(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    TorusElement t(n);
    do {
        for (auto& x : t) x = std::polar(1.0, angle(rng));
    } while (!is_regular(t));
    return t;
}

TorusElement trial_torus(int n, std::uint64_t seed, std::uint64_t k) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
    std::mt19937_64 rng(seq);
    return random_regular_torus(n, rng);
}

Complex evaluate_character(const Weight& mu, const TorusElement& t) {
    if (mu.size() != t.size()) throw std::invalid_argument("evaluate_character: length mismatch");
    Complex v = 1.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!mu[i].is_integer()) throw std::invalid_argument("evaluate_character: non-integral weight");
        const std::int64_t e = mu[i].twice() / 2;
        const Complex base = e >= 0 ? t[i] : 1.0 / t[i];
        for (std::int64_t k = 0; k < (e >= 0 ? e : -e); ++k) v *= base;
    }
    return v;
}

bool is_theta_invariant(const Weight& mu) {
    const std::size_t n = mu.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!mu[i].is_integer()) return false;
        if (mu[i] != -mu[n - 1 - i]) return false;
        if (i + 1 < n && mu[i] < mu[i + 1]) return false;
    }
    return true;
}

namespace {

Weight theta_weight(const Weight& nu) {
    std::vector<HalfInt> out(nu.size());
    for (std::size_t i = 0; i < nu.size(); ++i) out[i] = -nu[nu.size() - 1 - i];
    return Weight(std::move(out));
}

}  // namespace

ExtremalRep::ExtremalRep(Weight mu) : mu_(std::move(mu)) {
    if (mu_.empty()) throw std::invalid_argument("ExtremalRep: empty weight");
    if (!is_theta_invariant(mu_))
        throw std::invalid_argument("weight " + mu_.str() + " is not dominant, integral and theta-invariant");
    const int n = this->n();
    if (n == 1) {
        fixed_reps_.push_back(Permutation{0});
        fixed_weights_.push_back(mu_);
        coset_count_ = 1;
        return;
    }
    const GroupType a(Family::A, n - 1);
    std::vector<int> levi;
    for (int i = 0; i + 1 < n; ++i)
        if (mu_[i] == mu_[i + 1]) levi.push_back(i);
    const auto reps = kostant_reps(a, levi);
    coset_count_ = reps.size();
    for (const auto& w : reps) {
        const Weight nu = w.apply(mu_);
        if (theta_weight(nu) != nu) continue;
        fixed_reps_.push_back(w.perm);
        fixed_weights_.push_back(nu);
    }
}

Complex twisted_trace_extremal(const ExtremalRep& rep, const TorusElement& t) {
    if (static_cast<int>(t.size()) != rep.n()) throw std::invalid_argument("twisted_trace_extremal: length mismatch");
    Complex sum = 0.0;
    for (const auto& nu : rep.fixed_weights()) sum += evaluate_character(nu, t);
    return sum;
}

namespace {

std::vector<std::vector<HalfInt>> block_orbit(const std::vector<HalfInt>& x) {
    if (x.empty()) return {{}};
    std::vector<std::vector<HalfInt>> out;
    for (const auto& w : orbit(GroupType(Family::B, static_cast<int>(x.size())), Weight(x)).weights)
        out.push_back(w.coords());
    return out;
}

}  // namespace

Complex endoscopic_side(const Weight& mu, int endo_rank, const TorusElement& s) {
    const int m = static_cast<int>(mu.size()) / 2;
    if (endo_rank < 0 || endo_rank > m) throw std::invalid_argument("endoscopic rank out of range");
    if (static_cast<int>(s.size()) != m) throw std::invalid_argument("endoscopic_side: length mismatch");
    if (m == 0) return 1.0;
    const Weight nu(std::vector<HalfInt>(mu.begin(), mu.begin() + m));
    const GroupType bm(Family::B, m);
    // Group the W(B_m)-orbit by W_G-orbit, keyed by the blockwise dominant representative.
    std::map<std::pair<Weight, Weight>, bool> classes;
    for (const auto& w : orbit(bm, nu).weights) {
        std::vector<HalfInt> head(w.begin(), w.begin() + endo_rank), tail(w.begin() + endo_rank, w.end());
        const Weight h = head.empty() ? Weight() : dominant_rep(GroupType(Family::B, endo_rank), Weight(head));
        const Weight tl = tail.empty() ? Weight() : dominant_rep(GroupType(Family::B, m - endo_rank), Weight(tail));
        classes[{h, tl}] = true;
    }
    Complex sum = 0.0;
    for (const auto& [key, _] : classes) {
        const auto heads = block_orbit(key.first.coords());
        const auto tails = block_orbit(key.second.coords());
        for (const auto& h : heads) {
            for (const auto& tl : tails) {
                std::vector<HalfInt> c(h);
                c.insert(c.end(), tl.begin(), tl.end());
                sum += evaluate_character(Weight(std::move(c)), s);
            }
        }
    }
    return sum;
}

double transfer_residual(const ExtremalRep& rep, int endo_rank, const TorusElement& t) {
    return std::abs(twisted_trace_extremal(rep, t) - endoscopic_side(rep.mu(), endo_rank, norm_map(t)));
}

double verify_transfer_identity(const Weight& mu, int endo_rank, int trials, std::uint64_t seed) {
    const ExtremalRep rep(mu);
    if (endo_rank < 0 || endo_rank > rep.n() / 2) throw std::invalid_argument("endoscopic rank out of range");
    double worst = 0.0;
    for (int k = 0; k < trials; ++k)
        worst = std::max(worst, transfer_residual(rep, endo_rank, trial_torus(rep.n(), seed, static_cast<std::uint64_t>(k))));
    return worst;
}

KostantThetaReport kostant_theta_invariance(const Weight& mu) {
    const ExtremalRep rep(mu);
    KostantThetaReport r;
    for (const auto& w : rep.fixed_cosets()) {
        ++r.stable_cosets;
        if (theta_conjugate(w) == w) ++r.fixed_reps;
    }
    return r;
}

std::vector<Weight> theta_invariant_weights(int n, int bound) {
    if (n < 1 || bound < 0) throw std::invalid_argument("theta_invariant_weights: bad arguments");
    const int m = n / 2;
    std::vector<Weight> out;
    std::vector<std::int64_t> nu(m);
    auto emit = [&] {
        std::vector<HalfInt> c;
        for (auto x : nu) c.emplace_back(x);
        if (n % 2) c.emplace_back(0);
        for (auto it = nu.rbegin(); it != nu.rend(); ++it) c.emplace_back(-*it);
        out.emplace_back(std::move(c));
    };
    auto rec = [&](auto&& self, int i, std::int64_t hi) -> void {
        if (i == m) {
            emit();
            return;
        }
        for (std::int64_t x = 0; x <= hi; ++x) {
            nu[i] = x;
            self(self, i + 1, x);
        }
    };
    rec(rec, 0, bound);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace aptrans
