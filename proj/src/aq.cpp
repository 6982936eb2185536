#include "aptrans/aq.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace aptrans {

// ------------------------------------------------------------------ Levis

std::vector<int> LeviDatum::sizes() const {
    std::vector<int> out;
    for (const auto& [p, q] : unitary) out.push_back(p + q);
    return out;
}

int LeviDatum::unitary_rank() const {
    int r = 0;
    for (const auto& [p, q] : unitary) r += p + q;
    return r;
}

std::string LeviDatum::str() const {
    std::string s;
    for (const auto& [p, q] : unitary) s += "U(" + std::to_string(p) + "," + std::to_string(q) + ")x";
    return s + g0.name();
}

std::vector<LeviDatum> enumerate_levis(const ArthurParameter& psi) {
    if (!good_parity(psi).good) throw InputError("enumerate_levis: parameter is not of good parity");
    const auto& g = psi.group();
    const auto copies = psi.discrete_copies();
    const int n0 = g.rank() - psi.unitary_rank();
    std::vector<LeviDatum> out;
    std::vector<std::pair<int, int>> cur;
    auto rec = [&](auto&& self, std::size_t i, int sum_p, int sum_q) -> void {
        if (i == copies.size()) {
            if (g.kind() == GroupKind::Sp) {
                out.push_back(LeviDatum{cur, ClassicalGroup(GroupKind::Sp, n0)});
                return;
            }
            const int p0 = g.p() - 2 * sum_p, q0 = g.q() - 2 * sum_q;
            if (p0 < 0 || q0 < 0) return;
            out.push_back(LeviDatum{cur, ClassicalGroup(g.kind(), n0, std::pair{p0, q0})});
            return;
        }
        const int a = copies[i].a;
        for (int p = a; p >= 0; --p) {
            cur.emplace_back(p, a - p);
            self(self, i + 1, sum_p + p, sum_q + a - p);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0, 0);
    if (out.empty()) throw InputError("enumerate_levis: no Levi datum fits the signature of " + g.name());
    return out;
}

// ------------------------------------------------------------- t̃ and σ

std::vector<HalfInt> lambda_tilde_values(const ArthurParameter& psi) {
    const auto& g = psi.group();
    const auto copies = psi.discrete_copies();
    const int n0 = g.rank() - psi.unitary_rank();
    std::vector<HalfInt> out;
    int later = psi.unitary_rank();
    for (const auto& c : copies) {
        later -= c.a;
        out.push_back(c.t + HalfInt::from_twice(c.a - 1) + g.epsilon() + HalfInt(later + n0));
    }
    return out;
}

std::vector<std::int64_t> lambda_tilde(const ArthurParameter& psi) {
    std::vector<std::int64_t> out;
    for (const auto& x : lambda_tilde_values(psi)) {
        if (!x.is_integer()) throw InputError("lambda_tilde: " + x.str() + " is not an integer (bad parity)");
        out.push_back(x.twice() / 2);
    }
    return out;
}

Sigma unipotent_sigma(const ArthurParameter& psi, const ClassicalGroup& g0) {
    const ArthurParameter u(g0, psi.unipotent_part());
    std::string label = "sigma[";
    for (std::size_t i = 0; i < u.blocks().size(); ++i) label += (i ? "+" : "") + u.blocks()[i].str();
    label += "]";
    Weight nu = g0.rank() > 0 ? inf_char(u, Side::G).data : Weight();
    return Sigma{std::move(label), std::move(nu), true};
}

std::string AqDatum::label() const {
    std::string s = "Aq(" + levi.str() + "; t~=";
    for (std::size_t i = 0; i < t_tilde.size(); ++i) s += (i ? "," : "") + std::to_string(t_tilde[i]);
    return s + "; " + sigma.label + ")";
}

AqDatum make_datum(const ArthurParameter& psi, const LeviDatum& levi, std::optional<Sigma> sigma) {
    const auto copies = psi.discrete_copies();
    if (levi.unitary.size() != copies.size())
        throw InputError("Levi datum has " + std::to_string(levi.unitary.size()) + " unitary factors, parameter has " +
                         std::to_string(copies.size()) + " discrete blocks");
    for (std::size_t i = 0; i < copies.size(); ++i)
        if (levi.unitary[i].first + levi.unitary[i].second != copies[i].a)
            throw InputError("Levi factor " + std::to_string(i + 1) + " has the wrong size");
    if (levi.g0.kind() != psi.group().kind() || levi.g0.rank() != psi.group().rank() - psi.unitary_rank())
        throw InputError("Levi datum does not match " + psi.group().name());
    AqDatum d{psi.group(), levi, lambda_tilde(psi), sigma ? *sigma : unipotent_sigma(psi, levi.g0), Weight()};
    std::vector<HalfInt> lam;
    for (std::size_t i = 0; i < copies.size(); ++i) lam.insert(lam.end(), copies[i].a, HalfInt(d.t_tilde[i]));
    lam.insert(lam.end(), static_cast<std::size_t>(levi.g0.rank()), HalfInt(0));
    d.lambda_l = Weight(std::move(lam));
    return d;
}

// ------------------------------------------------------------ parabolics

ParabolicData parabolic_data(const ClassicalGroup& g, const std::vector<int>& sizes) {
    ParabolicData pd{g.root_type(), {}, Weight(), Weight(), sizes, 0};
    const int n = g.rank();
    std::vector<int> block(n, -1);
    int pos = 0;
    for (std::size_t b = 0; b < sizes.size(); ++b)
        for (int k = 0; k < sizes[b]; ++k) block.at(pos++) = static_cast<int>(b);
    pd.n0 = n - pos;

    std::vector<HalfInt> du(n), dl(n);
    for (const auto& r : positive_roots(pd.type)) {
        std::vector<int> support;
        for (int i = 0; i < n; ++i)
            if (r[i] != HalfInt(0)) support.push_back(i);
        bool in_l = false;
        if (std::all_of(support.begin(), support.end(), [&](int i) { return block[i] == -1; })) {
            in_l = true;
        } else if (support.size() == 2 && block[support[0]] >= 0 && block[support[0]] == block[support[1]] &&
                   r[support[0]] == -r[support[1]]) {
            in_l = true;
        }
        if (in_l) continue;
        pd.u_roots.push_back(r);
        for (int i = 0; i < n; ++i) du[i] += HalfInt::from_twice(r[i].twice());
    }
    for (auto& x : du) x = HalfInt::from_twice(x.twice() / 2);  // halve
    pos = 0;
    for (int a : sizes)
        for (int k = 0; k < a; ++k) dl[pos++] = HalfInt::from_twice(a - 1 - 2 * k);
    pd.delta_u = Weight(std::move(du));
    pd.delta_l1 = Weight(std::move(dl));
    return pd;
}

const char* range_name(Range r) {
    switch (r) {
    case Range::good:
        return "good";
    case Range::weakly_fair:
        return "weakly_fair";
    case Range::neither:
        return "neither";
    }
    return "?";
}

Range range_check(const AqDatum& d) {
    const auto pd = parabolic_data(d.group, d.levi.sizes());
    const Weight fair = d.lambda_l - pd.delta_u;
    std::vector<HalfInt> nu(static_cast<std::size_t>(d.group.rank()));
    if (d.sigma.nu.size() != static_cast<std::size_t>(pd.n0))
        throw InputError("sigma has " + std::to_string(d.sigma.nu.size()) + " coordinates, G0 has rank " +
                         std::to_string(pd.n0));
    for (int i = 0; i < pd.n0; ++i) nu[d.group.rank() - pd.n0 + i] = d.sigma.nu[i];
    const Weight good = fair + pd.delta_l1 + Weight(std::move(nu));
    bool is_good = true, is_fair = true;
    for (const auto& a : pd.u_roots) {
        if (pairing(good, a) <= Rational(0)) is_good = false;
        if (pairing(fair, a) < Rational(0)) is_fair = false;
    }
    return is_good ? Range::good : is_fair ? Range::weakly_fair : Range::neither;
}

// -------------------------------------------------------------- filtration

Rational root_height(const GroupType& t, const Weight& mu) {
    const int n = t.dim();
    std::vector<HalfInt> rc(n);
    for (int i = 0; i < n; ++i) {
        switch (t.family()) {
        case Family::C:
            rc[i] = HalfInt::from_twice(2 * (n - i) - 1);
            break;
        case Family::B:
            rc[i] = HalfInt(n - i);
            break;
        case Family::D:
            rc[i] = HalfInt(n - 1 - i);
            break;
        case Family::A:
            rc[i] = HalfInt::from_twice(n - 1 - 2 * i);
            break;
        }
    }
    return pairing(mu, Weight(std::move(rc)));
}

namespace {

bool levi_dominant(const std::vector<int>& mu, const ParabolicData& pd) {
    std::size_t pos = 0;
    for (int a : pd.sizes) {
        for (int k = 1; k < a; ++k)
            if (mu[pos + k - 1] < mu[pos + k]) return false;
        pos += static_cast<std::size_t>(a);
    }
    const int n0 = pd.n0;
    if (n0 == 0) return true;
    for (int k = 1; k < n0 - (pd.type.family() == Family::D ? 1 : 0); ++k)
        if (mu[pos + k - 1] < mu[pos + k]) return false;
    if (pd.type.family() == Family::D) {
        if (n0 >= 2 && mu[pos + n0 - 2] < std::abs(mu[pos + n0 - 1])) return false;
    } else if (mu[pos + n0 - 1] < 0) {
        return false;
    }
    return true;
}

// Breadth-first walk of the monoid spanned by `roots`, level by height.
template <class F>
void enumerate_generic(const std::vector<std::vector<int>>& roots, const std::vector<std::int64_t>& heights,
                       std::size_t top, int n, F&& visit) {
    std::vector<std::vector<std::vector<int>>> level(top + 1);
    level[0].push_back(std::vector<int>(n, 0));
    for (std::size_t h = 0; h <= top; ++h) {
        auto& cur = level[h];
        std::sort(cur.begin(), cur.end());
        cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
        for (const auto& mu : cur) {
            for (std::size_t r = 0; r < roots.size(); ++r) {
                const auto h2 = h + static_cast<std::size_t>(heights[r]);
                if (h2 > top) continue;
                std::vector<int> next(mu);
                for (int i = 0; i < n; ++i) next[i] += roots[r][i];
                level[h2].push_back(std::move(next));
            }
            visit(mu);
        }
        std::vector<std::vector<int>>().swap(cur);
    }
}

// Same walk with up to four coordinates packed as biased 16-bit fields.
template <class F>
void enumerate_packed(const std::vector<std::vector<int>>& roots, const std::vector<std::int64_t>& heights,
                      std::size_t top, std::size_t n, F&& visit) {
    constexpr int bias = 1 << 15;
    const auto pack = [&](const std::vector<int>& v) {
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < v.size(); ++i) k |= static_cast<std::uint64_t>(v[i] + bias) << (16 * i);
        return k;
    };
    // Packed addition is exact because no field leaves [0, 2^16).
    std::vector<std::uint64_t> step;
    for (const auto& r : roots) step.push_back(pack(r) - pack(std::vector<int>(n, 0)));
    std::vector<std::vector<std::uint64_t>> level(top + 1);
    level[0].push_back(pack(std::vector<int>(n, 0)));
    std::vector<int> mu(n);
    for (std::size_t h = 0; h <= top; ++h) {
        auto& cur = level[h];
        std::sort(cur.begin(), cur.end());
        cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
        for (const auto k : cur) {
            for (std::size_t r = 0; r < roots.size(); ++r) {
                const auto h2 = h + static_cast<std::size_t>(heights[r]);
                if (h2 <= top) level[h2].push_back(k + step[r]);
            }
            for (std::size_t i = 0; i < n; ++i) mu[i] = static_cast<int>((k >> (16 * i)) & 0xffff) - bias;
            visit(mu);
        }
        std::vector<std::uint64_t>().swap(cur);
    }
}

}  // namespace

std::vector<Weight> filtration_weights(const ParabolicData& pd, std::int64_t height_bound) {
    const int n = pd.type.dim();
    std::vector<std::vector<int>> roots;
    std::vector<std::int64_t> heights;
    for (const auto& r : pd.u_roots) {
        std::vector<int> c(n);
        for (int i = 0; i < n; ++i) c[i] = static_cast<int>(r[i].twice() / 2);
        roots.push_back(std::move(c));
        heights.push_back(root_height(pd.type, r).num());
    }
    const auto top = static_cast<std::size_t>(std::max<std::int64_t>(height_bound, 0));
    std::vector<Weight> out;
    // Each root moves a coordinate by at most 2 per unit of height.
    if (n <= 4 && 2 * top < 32000) {
        enumerate_packed(roots, heights, top, static_cast<std::size_t>(n), [&](const std::vector<int>& mu) {
            if (levi_dominant(mu, pd)) out.push_back(Weight::from_ints(std::vector<std::int64_t>(mu.begin(), mu.end())));
        });
    } else {
        enumerate_generic(roots, heights, top, n, [&](const std::vector<int>& mu) {
            if (levi_dominant(mu, pd)) out.push_back(Weight::from_ints(std::vector<std::int64_t>(mu.begin(), mu.end())));
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct FiltrationSetup {
    Weight lambda;
    Weight delta;
    std::size_t unitary = 0;
};

FiltrationSetup filtration_setup(const AqDatum& d_plus, const ArthurParameter& psi) {
    if (!(d_plus.group == psi.group())) throw InputError("filtration: datum and parameter live on different groups");
    if (range_check(d_plus) != Range::good) throw InputError("filtration: datum is not in the good range");
    const auto d = make_datum(psi, d_plus.levi, d_plus.sigma);
    for (std::size_t i = 0; i < d.t_tilde.size(); ++i)
        if (d_plus.t_tilde[i] < d.t_tilde[i]) throw InputError("filtration: datum does not dominate the parameter");
    const auto pd = parabolic_data(psi.group(), d.levi.sizes());
    FiltrationSetup s;
    s.unitary = static_cast<std::size_t>(d.levi.unitary_rank());
    s.lambda = Weight(std::vector<HalfInt>(d.lambda_l.begin(), d.lambda_l.begin() + s.unitary));
    s.delta = Weight(std::vector<HalfInt>(pd.delta_l1.begin(), pd.delta_l1.begin() + s.unitary));
    return s;
}

}  // namespace

FiltrationReport filtration_vanishing(const AqDatum& d_plus, const ArthurParameter& psi,
                                      const std::vector<Weight>& weights) {
    const auto s = filtration_setup(d_plus, psi);
    FiltrationReport rep{s.lambda, s.delta, weights.size(), 0, {}};
    // Doubled coordinates; every product below is 4× the rational value.
    const std::size_t u = s.unitary;
    std::vector<std::int64_t> lam(u), base(u);
    std::int64_t base_norm = 0;
    for (std::size_t i = 0; i < u; ++i) {
        lam[i] = s.lambda[i].twice();
        base[i] = lam[i] + s.delta[i].twice();
        base_norm += base[i] * base[i];
    }
    const auto q = [](std::int64_t x4) { return Rational(x4, 4).str(); };
    for (const auto& mu : weights) {
        bool mu1_zero = true;
        std::int64_t p_lambda = 0, p_delta = 0, grown = 0, mu_norm = 0;
        for (std::size_t i = 0; i < u; ++i) {
            const std::int64_t m = mu[i].twice();
            mu1_zero = mu1_zero && m == 0;
            p_lambda += lam[i] * m;
            p_delta += (base[i] - lam[i]) * m;
            grown += (base[i] + m) * (base[i] + m);
            mu_norm += m * m;
        }
        if (mu1_zero) {
            if (!mu.is_zero()) rep.violations.push_back({mu, "mu1 = 0 but mu != 0"});
            continue;
        }
        ++rep.nonzero_mu1;
        if (p_lambda < 0) rep.violations.push_back({mu, "<lambda,mu1> = " + q(p_lambda) + " < 0"});
        if (p_delta < 0) rep.violations.push_back({mu, "<delta_L1,mu1> = " + q(p_delta) + " < 0"});
        if (grown != base_norm + mu_norm + 2 * (p_lambda + p_delta))
            rep.violations.push_back({mu, "norm expansion mismatch"});
        if (grown <= base_norm)
            rep.violations.push_back({mu, "norm " + q(grown) + " does not exceed " + q(base_norm)});
    }
    return rep;
}

FiltrationReport filtration_vanishing(const AqDatum& d_plus, const ArthurParameter& psi, std::int64_t height_bound) {
    const auto pd = parabolic_data(psi.group(), d_plus.levi.sizes());
    return filtration_vanishing(d_plus, psi, filtration_weights(pd, height_bound));
}

// ----------------------------------------------------------------- packets

std::string PacketEntry::label() const { return datum.label() + " eps=" + eps.str(); }

PacketData translate_packet(const PacketData& plus, const ArthurParameter& psi) {
    const auto T = domination_offsets(psi, plus.psi);
    const auto q = quotient_map(plus.psi, psi);
    PacketData out{psi, {}, plus.vanishing};
    for (const auto& e : plus.entries) {
        if (!(e.datum.group == psi.group())) throw InputError("translate_packet: entry on another group");
        if (e.datum.levi.unitary.size() != T.size())
            throw InputError("translate_packet: entry " + e.label() + " has the wrong number of unitary factors");
        if (e.eps.values.size() != q.source().rank())
            throw InputError("translate_packet: character of " + e.label() + " has the wrong length");
        if (range_check(e.datum) != Range::good)
            throw InputError("translate_packet: entry " + e.label() + " is not in the good range");
        const auto eps = q.descend(e.eps);
        if (!eps) {
            out.vanishing.push_back({e.label(), "character nontrivial on ker(A(psi+) -> A(psi))"});
            continue;
        }
        auto d = make_datum(psi, e.datum.levi, e.datum.sigma);
        for (std::size_t i = 0; i < T.size(); ++i)
            if (d.t_tilde[i] + T[i] != e.datum.t_tilde[i])
                throw InputError("translate_packet: entry " + e.label() + " does not belong to the dominating parameter");
        out.entries.push_back({std::move(d), *eps});
    }
    return out;
}

PacketData lift_packet(const PacketData& packet, const ArthurParameter& psi_plus) {
    const auto q = quotient_map(psi_plus, packet.psi);
    PacketData out{psi_plus, {}, {}};
    for (const auto& e : packet.entries)
        out.entries.push_back({make_datum(psi_plus, e.datum.levi, e.datum.sigma), q.pull_back(e.eps)});
    return out;
}

std::map<std::string, int> evaluate_at(const PacketData& packet, const SignVector& s) {
    const auto a = component_group(packet.psi);
    if (!a.contains(s)) throw InputError("evaluate_at: sign vector is not in A(psi)");
    std::map<std::string, int> out;
    for (const auto& e : packet.entries) out[e.label()] += e.eps(s);
    return out;
}

}  // namespace aptrans
