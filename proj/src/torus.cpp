#include "aptrans/torus.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace aptrans {

std::int64_t CharacterCombination::total_terms() const {
    std::int64_t total = 0;
    for (const auto& [w, m] : terms) total += m * static_cast<std::int64_t>(orbit(type, w).weights.size());
    return total;
}

std::vector<Weight> CharacterCombination::weights() const {
    std::set<Weight> out;
    for (const auto& [w, m] : terms) {
        if (m == 0) continue;
        for (auto& x : orbit(type, w).weights) out.insert(std::move(x));
    }
    return {out.begin(), out.end()};
}

CharacterCombination trivial_combination(const GroupType& t) {
    CharacterCombination e{t, {}};
    e.terms[Weight(static_cast<std::size_t>(t.dim()))] = 1;
    return e;
}

CharacterCombination symmetrize(const GroupType& t, const Weight& lambda) {
    const auto o = orbit(t, -lambda);
    CharacterCombination e{t, {}};
    e.terms[dominant_rep(t, -lambda)] = static_cast<std::int64_t>(o.stabilizer_order);
    return e;
}

std::vector<Weight> tensor_infchar_support(const Weight& nu, const CharacterCombination& e) {
    if (nu.size() != static_cast<std::size_t>(e.type.dim()))
        throw std::invalid_argument("tensor_infchar_support: rank mismatch");
    std::set<Weight> out;
    for (const auto& mu : e.weights()) out.insert(dominant_rep(e.type, nu + mu));
    return {out.begin(), out.end()};
}

std::vector<Weight> weak_unipotence_norm_test(const Weight& nu_pi, const CharacterCombination& e) {
    const Rational bound = norm_sq(nu_pi);
    std::vector<Weight> out;
    for (auto& w : tensor_infchar_support(nu_pi, e))
        if (norm_sq(w) < bound) out.push_back(std::move(w));
    return out;
}

TranslationDatum translation_weight(const ArthurParameter& psi, const ArthurParameter& psi_plus) {
    TranslationDatum d;
    d.offsets = domination_offsets(psi, psi_plus);
    const auto copies = psi.discrete_copies();
    std::vector<HalfInt> gl;
    for (std::size_t i = 0; i < copies.size(); ++i)
        for (int k = 0; k < copies[i].a; ++k) gl.emplace_back(d.offsets[i]);
    const std::size_t zeros = static_cast<std::size_t>(psi.unipotent_dim());
    gl.insert(gl.end(), zeros, HalfInt(0));
    for (std::size_t i = copies.size(); i-- > 0;)
        for (int k = 0; k < copies[i].a; ++k) gl.emplace_back(-d.offsets[i]);
    d.lambda_gl = Weight(gl);
    gl.resize(static_cast<std::size_t>(psi.group().rank()));
    d.lambda_g = Weight(std::move(gl));
    return d;
}

namespace {

struct UniquenessInput {
    std::vector<std::int64_t> nu_plus;  // doubled
    std::vector<std::int64_t> lambda;   // doubled
    std::vector<std::int64_t> target;   // doubled, sorted
    UniquenessReport report;
};

UniquenessInput prepare(const ArthurParameter& psi, const ArthurParameter& psi_plus) {
    if (!good_parity(psi).good) throw InputError("uniqueness_check: parameter is not of good parity");
    UniquenessInput in;
    const auto datum = translation_weight(psi, psi_plus);
    in.report.nu_plus = aligned_gl_layout(psi_plus);
    in.report.expected = -datum.lambda_gl;
    for (const auto& x : in.report.nu_plus) in.nu_plus.push_back(x.twice());
    for (const auto& x : datum.lambda_gl) in.lambda.push_back(x.twice());
    for (const auto& x : aligned_gl_layout(psi)) in.target.push_back(x.twice());
    std::sort(in.target.begin(), in.target.end());
    return in;
}

std::uint64_t multinomial(std::vector<std::int64_t> xs) {
    std::sort(xs.begin(), xs.end());
    std::uint64_t r = 1;
    std::uint64_t placed = 0;
    std::size_t i = 0;
    while (i < xs.size()) {
        std::size_t j = i;
        while (j < xs.size() && xs[j] == xs[i]) ++j;
        for (std::size_t k = 1; k <= j - i; ++k) {
            ++placed;
            r = r * placed / k;  // stays integral: running product of binomials
        }
        i = j;
    }
    return r;
}

Weight to_weight(const std::vector<std::int64_t>& twice) { return Weight::from_twice(twice); }

void finish(UniquenessReport& r) {
    std::sort(r.matches.begin(), r.matches.end());
    r.unique = r.matches.size() == 1 && r.matches.front() == r.expected;
}

}  // namespace

UniquenessReport uniqueness_check_reference(const ArthurParameter& psi, const ArthurParameter& psi_plus) {
    auto in = prepare(psi, psi_plus);
    auto mu = in.lambda;
    std::sort(mu.begin(), mu.end());
    std::vector<std::int64_t> sum(mu.size());
    std::uint64_t count = 0;
    do {
        ++count;
        for (std::size_t i = 0; i < mu.size(); ++i) sum[i] = in.nu_plus[i] + mu[i];
        std::sort(sum.begin(), sum.end());
        if (sum == in.target) in.report.matches.push_back(to_weight(mu));
    } while (std::next_permutation(mu.begin(), mu.end()));
    in.report.rearrangements = count;
    finish(in.report);
    return in.report;
}

UniquenessReport uniqueness_check(const ArthurParameter& psi, const ArthurParameter& psi_plus) {
    auto in = prepare(psi, psi_plus);
    in.report.rearrangements = multinomial(in.lambda);

    // Distinct values with remaining counts, for both λ and the target.
    std::map<std::int64_t, int> lam_left, tgt_left;
    for (auto x : in.lambda) ++lam_left[x];
    for (auto x : in.target) ++tgt_left[x];
    std::vector<std::int64_t> mu(in.lambda.size());

    std::function<void(std::size_t)> place = [&](std::size_t i) {
        if (i == mu.size()) {
            in.report.matches.push_back(to_weight(mu));
            return;
        }
        for (auto& [v, c] : lam_left) {
            if (c == 0) continue;
            const auto it = tgt_left.find(in.nu_plus[i] + v);
            if (it == tgt_left.end() || it->second == 0) continue;
            --c;
            --it->second;
            mu[i] = v;
            place(i + 1);
            ++it->second;
            ++c;
        }
    };
    place(0);
    finish(in.report);
    return in.report;
}

Weight transfer_infchar(const Weight& nu, const ClassicalGroup& g) {
    if (nu.size() != static_cast<std::size_t>(g.rank()))
        throw InputError("transfer_infchar: expected " + std::to_string(g.rank()) + " coordinates");
    std::vector<HalfInt> out;
    for (const auto& x : nu) {
        out.push_back(x);
        out.push_back(-x);
    }
    if (g.nstar() % 2) out.emplace_back(0);
    std::sort(out.begin(), out.end(), std::greater<>());
    return Weight(std::move(out));
}

}  // namespace aptrans
