#include "aptrans/arthur.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace aptrans {

// -------------------------------------------------------- ClassicalGroup

ClassicalGroup::ClassicalGroup(GroupKind kind, int rank, std::optional<std::pair<int, int>> signature)
    : kind_(kind), rank_(rank) {
    if (rank < 0) throw InputError("ClassicalGroup: negative rank");
    if (kind == GroupKind::Sp) return;
    const int total = kind == GroupKind::SOodd ? 2 * rank + 1 : 2 * rank;
    if (signature) {
        p_ = signature->first;
        q_ = signature->second;
        if (p_ < 0 || q_ < 0 || p_ + q_ != total)
            throw InputError("ClassicalGroup: signature (" + std::to_string(p_) + "," +
                             std::to_string(q_) + ") does not sum to " + std::to_string(total));
    } else if (kind == GroupKind::SOeven && rank % 2) {
        // quasi-split with a compact Cartan subgroup
        p_ = rank + 1;
        q_ = rank - 1;
    } else {
        q_ = rank;
        p_ = total - rank;
    }
}

bool ClassicalGroup::quasi_split() const {
    switch (kind_) {
    case GroupKind::Sp:
        return true;
    case GroupKind::SOodd:
        return std::abs(p_ - q_) == 1;
    case GroupKind::SOeven:
        return std::abs(p_ - q_) <= 2;
    }
    return false;
}

GroupType ClassicalGroup::root_type() const {
    switch (kind_) {
    case GroupKind::Sp:
        return GroupType(Family::C, rank_);
    case GroupKind::SOodd:
        return GroupType(Family::B, rank_);
    case GroupKind::SOeven:
        return GroupType(Family::D, rank_, true);
    }
    throw InputError("unreachable");
}

HalfInt ClassicalGroup::epsilon() const {
    switch (kind_) {
    case GroupKind::Sp:
        return HalfInt(1);
    case GroupKind::SOodd:
        return HalfInt::from_twice(1);
    case GroupKind::SOeven:
        return HalfInt(0);
    }
    return HalfInt(0);
}

ClassicalGroup ClassicalGroup::with_rank(int rank, std::optional<std::pair<int, int>> signature) const {
    return ClassicalGroup(kind_, rank, signature);
}

std::string ClassicalGroup::kind_name() const {
    switch (kind_) {
    case GroupKind::Sp:
        return "Sp";
    case GroupKind::SOodd:
        return "SOodd";
    case GroupKind::SOeven:
        return "SOeven";
    }
    return "?";
}

std::string ClassicalGroup::name() const {
    if (kind_ == GroupKind::Sp) return "Sp(" + std::to_string(2 * rank_) + ",R)";
    return "SO(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
}

// ------------------------------------------------------ ArthurParameter

std::string Block::str() const {
    std::string s;
    if (t == HalfInt(0))
        s = eta > 0 ? "triv" : "sgn";
    else
        s = "I(" + t.str() + ")";
    s += "xR[" + std::to_string(a) + "]";
    if (mult != 1) s += "^" + std::to_string(mult);
    return s;
}

int blocks_dimension(std::span<const Block> blocks) {
    int d = 0;
    for (const auto& b : blocks) d += b.total_dim();
    return d;
}

ArthurParameter::ArthurParameter(ClassicalGroup group, std::vector<Block> blocks)
    : group_(std::move(group)) {
    for (auto& b : blocks) {
        if (b.t < HalfInt(0)) throw InputError("block with negative t");
        if (b.a < 1) throw InputError("block with a < 1");
        if (b.mult < 1) throw InputError("block with mult < 1");
        if (b.eta != 1 && b.eta != -1) throw InputError("block eta must be +1 or -1");
        if (b.t != HalfInt(0)) b.eta = 1;
    }
    std::sort(blocks.begin(), blocks.end(), [](const Block& x, const Block& y) {
        if (x.t != y.t) return x.t > y.t;
        if (x.a != y.a) return x.a > y.a;
        return x.eta > y.eta;
    });
    for (const auto& b : blocks) {
        if (!blocks_.empty() && blocks_.back().same_isotype(b))
            blocks_.back().mult += b.mult;
        else
            blocks_.push_back(b);
    }
    const int d = dimension();
    if (d != group_.nstar())
        throw InputError("dimension mismatch: parameter has dimension " + std::to_string(d) + ", " +
                         group_.name() + " needs " + std::to_string(group_.nstar()));
}

int ArthurParameter::dimension() const { return blocks_dimension(blocks_); }

std::vector<Block> ArthurParameter::discrete_copies() const {
    std::vector<Block> out;
    for (const auto& b : blocks_) {
        if (b.t == HalfInt(0)) continue;
        for (int k = 0; k < b.mult; ++k) out.push_back(Block{b.t, 1, b.a, 1});
    }
    return out;
}

std::vector<Block> ArthurParameter::unipotent_part() const {
    std::vector<Block> out;
    for (const auto& b : blocks_)
        if (b.t == HalfInt(0)) out.push_back(b);
    return out;
}

int ArthurParameter::unipotent_dim() const { return blocks_dimension(unipotent_part()); }

int ArthurParameter::unitary_rank() const {
    int r = 0;
    for (const auto& c : discrete_copies()) r += c.a;
    return r;
}

std::string ArthurParameter::str() const {
    std::string s = group_.name() + ": ";
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i) s += " + ";
        s += blocks_[i].str();
    }
    if (blocks_.empty()) s += "0";
    return s;
}

// ---------------------------------------------------------------- parity

bool block_good_parity(const ClassicalGroup& g, const Block& b) {
    if (b.t == HalfInt(0)) return (b.a % 2 == 1) != g.dual_symplectic();
    const HalfInt center = b.t + HalfInt::from_twice(b.a - 1);
    return center.is_integer() != g.dual_symplectic();
}

ParityReport good_parity(const ArthurParameter& psi) {
    ParityReport rep;
    const auto& g = psi.group();
    for (const auto& b : psi.blocks()) {
        BlockParity bp{b, block_good_parity(g, b), {}};
        if (!bp.good) {
            if (b.t == HalfInt(0))
                bp.reason = std::string("t=0 block needs a ") + (g.dual_symplectic() ? "even" : "odd");
            else
                bp.reason = "t+(a-1)/2 = " + (b.t + HalfInt::from_twice(b.a - 1)).str() + " should be " +
                            (g.dual_symplectic() ? "a half-odd integer" : "an integer");
        }
        rep.good = rep.good && bp.good;
        rep.blocks.push_back(std::move(bp));
    }
    return rep;
}

// ------------------------------------------------- infinitesimal characters

namespace {

void push_segment(std::vector<HalfInt>& out, HalfInt center, int a) {
    for (int k = 0; k < a; ++k) out.push_back(center + HalfInt::from_twice(a - 1 - 2 * k));
}

std::vector<HalfInt> unipotent_gl(const ArthurParameter& psi) {
    std::vector<HalfInt> out;
    for (const auto& b : psi.unipotent_part())
        for (int m = 0; m < b.mult; ++m) push_segment(out, HalfInt(0), b.a);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace

Weight aligned_gl_layout(const ArthurParameter& psi) {
    std::vector<HalfInt> out;
    const auto copies = psi.discrete_copies();
    for (const auto& c : copies) push_segment(out, c.t, c.a);
    for (auto x : unipotent_gl(psi)) out.push_back(x);
    for (auto it = copies.rbegin(); it != copies.rend(); ++it) push_segment(out, -it->t, it->a);
    return Weight(std::move(out));
}

InfChar inf_char(const ArthurParameter& psi, Side side) {
    auto coords = aligned_gl_layout(psi).coords();
    std::sort(coords.begin(), coords.end(), std::greater<>());
    if (side == Side::GL) return InfChar{Side::GL, Weight(std::move(coords))};
    coords.resize(static_cast<std::size_t>(psi.group().rank()));
    return InfChar{Side::G, Weight(std::move(coords))};
}

// ------------------------------------------------------------- domination

namespace {

std::int64_t resolve_threshold(const ArthurParameter& psi, Threshold thr) {
    const std::int64_t v = thr.value_or(psi.group().nstar());
    if (v < 0) throw InputError("threshold must be non-negative");
    return v;
}

std::int64_t ceil_half(std::int64_t twice) {
    // ceil(twice / 2)
    return twice >= 0 ? (twice + 1) / 2 : -((-twice) / 2);
}

}  // namespace

ArthurParameter dominate(const ArthurParameter& psi, std::span<const std::int64_t> offsets, Threshold threshold) {
    if (!good_parity(psi).good) throw InputError("dominate: parameter is not of good parity");
    const auto thr = HalfInt(resolve_threshold(psi, threshold));
    const auto copies = psi.discrete_copies();
    if (offsets.size() != copies.size())
        throw InputError("dominate: expected " + std::to_string(copies.size()) + " offsets, got " +
                         std::to_string(offsets.size()));
    std::vector<Block> blocks = psi.unipotent_part();
    HalfInt prev;
    for (std::size_t i = 0; i < copies.size(); ++i) {
        if (offsets[i] < 0) throw InputError("dominate: negative offset");
        if (i > 0 && offsets[i] > offsets[i - 1]) throw InputError("dominate: offsets must be non-increasing");
        const HalfInt tp = copies[i].t + HalfInt(offsets[i]);
        if (i > 0) {
            const HalfInt gap = prev - tp;
            if (gap < thr || gap <= HalfInt(0))
                throw InputError("dominate: gap t'_" + std::to_string(i) + " - t'_" + std::to_string(i + 1) +
                                 " = " + gap.str() + " below threshold " + thr.str());
        }
        prev = tp;
        blocks.push_back(Block{tp, 1, copies[i].a, 1});
    }
    if (!copies.empty() && prev < thr)
        throw InputError("dominate: last t' = " + prev.str() + " below threshold " + thr.str());
    return ArthurParameter(psi.group(), std::move(blocks));
}

ArthurParameter dominate(const ArthurParameter& psi, std::span<const Rational> offsets, Threshold threshold) {
    std::vector<std::int64_t> ints;
    for (const auto& r : offsets) {
        if (!r.is_integer()) throw InputError("dominate: offset " + r.str() + " is not an integer");
        ints.push_back(r.num());
    }
    return dominate(psi, ints, threshold);
}

std::vector<std::int64_t> canonical_offsets(const ArthurParameter& psi, Threshold threshold) {
    const std::int64_t thr = resolve_threshold(psi, threshold);
    const auto copies = psi.discrete_copies();
    std::vector<std::int64_t> T(copies.size(), 0);
    if (copies.empty()) return T;
    const std::size_t v = copies.size();
    T[v - 1] = std::max<std::int64_t>(0, ceil_half(2 * thr - copies[v - 1].t.twice()));
    HalfInt next = copies[v - 1].t + HalfInt(T[v - 1]);
    for (std::size_t k = v - 1; k-- > 0;) {
        // smallest integer x with t_k + x - next >= max(thr, 1/2)
        const std::int64_t need_twice = std::max<std::int64_t>(2 * thr, 1);
        std::int64_t x = ceil_half(need_twice + next.twice() - copies[k].t.twice());
        T[k] = std::max({x, T[k + 1], std::int64_t{0}});
        next = copies[k].t + HalfInt(T[k]);
    }
    return T;
}

std::vector<std::int64_t> domination_offsets(const ArthurParameter& psi, const ArthurParameter& psi_plus) {
    if (!(psi.group() == psi_plus.group())) throw InputError("not a domination pair: groups differ");
    if (psi.unipotent_part() != psi_plus.unipotent_part())
        throw InputError("not a domination pair: unipotent parts differ");
    const auto c = psi.discrete_copies();
    const auto cp = psi_plus.discrete_copies();
    if (c.size() != cp.size()) throw InputError("not a domination pair: block counts differ");
    std::vector<std::int64_t> T;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const HalfInt d = cp[i].t - c[i].t;
        if (c[i].a != cp[i].a || !d.is_integer() || d < HalfInt(0))
            throw InputError("not a domination pair at block " + std::to_string(i + 1));
        T.push_back(d.twice() / 2);
    }
    return T;
}

// --------------------------------------------------------- component group

ComponentGroup::ComponentGroup(const ArthurParameter& psi) : basis_(psi.blocks()) {
    const auto& g = psi.group();
    const std::size_t k = basis_.size();
    if (g.dual_special_orthogonal()) {
        std::vector<int> r;
        for (const auto& b : basis_) r.push_back(b.copy_dim() % 2);
        relation_ = std::move(r);
    }
    for (std::uint32_t m = 0; m < (1u << k); ++m) {
        SignVector s(k);
        for (std::size_t j = 0; j < k; ++j) s[j] = (m >> j) & 1u ? -1 : 1;
        if (contains(s)) elements_.push_back(std::move(s));
    }
    std::sort(elements_.begin(), elements_.end(), std::greater<>());
    s_psi_.resize(k);
    for (std::size_t j = 0; j < k; ++j)
        s_psi_[j] = ((basis_[j].a - 1) * basis_[j].mult) % 2 ? -1 : 1;
    if (g.kind() != GroupKind::Sp) {
        SignVector z(k);
        for (std::size_t j = 0; j < k; ++j) z[j] = basis_[j].mult % 2 ? -1 : 1;
        center_ = std::move(z);
    }
}

bool ComponentGroup::relation_nontrivial() const {
    return relation_ && std::any_of(relation_->begin(), relation_->end(), [](int r) { return r != 0; });
}

bool ComponentGroup::contains(const SignVector& s) const {
    if (s.size() != basis_.size()) return false;
    int prod = 1;
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (s[j] != 1 && s[j] != -1) return false;
        if (relation_ && (*relation_)[j]) prod *= s[j];
    }
    return prod == 1;
}

SignVector ComponentGroup::component_of(const SignVector& isotypic) const {
    if (isotypic.size() != basis_.size()) throw InputError("component_of: length mismatch");
    SignVector e(isotypic.size());
    for (std::size_t j = 0; j < e.size(); ++j) e[j] = basis_[j].mult % 2 ? isotypic[j] : 1;
    return e;
}

ComponentGroup component_group(const ArthurParameter& psi) {
    if (!good_parity(psi).good) throw InputError("component_group: parameter is not of good parity");
    return ComponentGroup(psi);
}

int Character::operator()(const SignVector& s) const {
    if (s.size() != values.size()) throw InputError("character: length mismatch");
    int v = 1;
    for (std::size_t j = 0; j < s.size(); ++j)
        if (s[j] < 0) v *= values[j];
    return v;
}

std::string Character::str() const {
    std::string s;
    for (int v : values) s += v > 0 ? '+' : '-';
    return s;
}

Character canonical_character(const ComponentGroup& g, Character c) {
    if (!g.relation_nontrivial()) return c;
    const auto& r = *g.relation();
    const auto first = std::find(r.begin(), r.end(), 1) - r.begin();
    if (c.values[first] < 0)
        for (std::size_t j = 0; j < r.size(); ++j)
            if (r[j]) c.values[j] = -c.values[j];
    return c;
}

std::vector<Character> characters(const ComponentGroup& g) {
    std::set<Character> out;
    const std::size_t k = g.rank();
    for (std::uint32_t m = 0; m < (1u << k); ++m) {
        Character c{std::vector<int>(k)};
        for (std::size_t j = 0; j < k; ++j) c.values[j] = (m >> j) & 1u ? -1 : 1;
        out.insert(canonical_character(g, std::move(c)));
    }
    return {out.rbegin(), out.rend()};
}

bool trivial_on_center(const ComponentGroup& g, const Character& c) {
    return !g.center() || c(*g.center()) == 1;
}

// ------------------------------------------------------------ quotient map

QuotientMap::QuotientMap(const ArthurParameter& psi_plus, const ArthurParameter& psi)
    : source_(component_group(psi_plus)), target_(component_group(psi)) {
    (void)domination_offsets(psi, psi_plus);
    const auto copies = psi.discrete_copies();
    const auto& tb = target_.basis();
    std::size_t copy = 0;
    for (const auto& b : source_.basis()) {
        Block key = b;
        if (b.t != HalfInt(0)) key = copies.at(copy++);
        const auto it = std::find_if(tb.begin(), tb.end(), [&](const Block& x) { return x.same_isotype(key); });
        if (it == tb.end()) throw InputError("quotient_map: block " + b.str() + " has no image");
        block_map_.push_back(static_cast<int>(it - tb.begin()));
    }
    for (const auto& s : source_.elements())
        if (apply(s) == target_.identity()) kernel_.push_back(s);
}

SignVector QuotientMap::apply(const SignVector& s) const {
    SignVector r = target_.identity();
    for (std::size_t j = 0; j < s.size(); ++j) r[block_map_[j]] *= s[j];
    return r;
}

bool QuotientMap::is_homomorphism() const {
    for (const auto& x : source_.elements()) {
        if (!target_.contains(apply(x))) return false;
        for (const auto& y : source_.elements()) {
            SignVector xy(x.size());
            for (std::size_t j = 0; j < x.size(); ++j) xy[j] = x[j] * y[j];
            SignVector img = apply(x);
            const SignVector iy = apply(y);
            for (std::size_t j = 0; j < img.size(); ++j) img[j] *= iy[j];
            if (apply(xy) != img) return false;
        }
    }
    return true;
}

bool QuotientMap::is_surjective() const {
    std::set<SignVector> image;
    for (const auto& s : source_.elements()) image.insert(apply(s));
    return image.size() == target_.order();
}

bool QuotientMap::trivial_on_kernel(const Character& plus) const {
    return std::all_of(kernel_.begin(), kernel_.end(), [&](const SignVector& s) { return plus(s) == 1; });
}

Character QuotientMap::pull_back(const Character& c) const {
    Character r{std::vector<int>(block_map_.size())};
    for (std::size_t j = 0; j < block_map_.size(); ++j) r.values[j] = c.values[block_map_[j]];
    return canonical_character(source_, std::move(r));
}

std::optional<Character> QuotientMap::descend(const Character& plus) const {
    if (!trivial_on_kernel(plus)) return std::nullopt;
    for (const auto& c : characters(target_)) {
        const auto back = pull_back(c);
        const bool same = std::all_of(source_.elements().begin(), source_.elements().end(),
                                      [&](const SignVector& s) { return back(s) == plus(s); });
        if (same) return c;
    }
    return std::nullopt;
}

QuotientMap quotient_map(const ArthurParameter& psi_plus, const ArthurParameter& psi) {
    return QuotientMap(psi_plus, psi);
}

// --------------------------------------------------------------- endoscopy

ClassicalGroup group_with_dual(int m, bool dual_symplectic) {
    if (m < 0) throw InputError("negative dual dimension");
    if (dual_symplectic) {
        if (m % 2) throw InputError("symplectic dual of odd dimension");
        return ClassicalGroup(GroupKind::SOodd, m / 2);
    }
    if (m % 2) return ClassicalGroup(GroupKind::Sp, (m - 1) / 2);
    return ClassicalGroup(GroupKind::SOeven, m / 2);
}

EndoscopicSplit endoscopic_split(const ArthurParameter& psi, const SignVector& s) {
    const auto& blocks = psi.blocks();
    if (s.size() != blocks.size())
        throw InputError("endoscopic_split: sign vector has length " + std::to_string(s.size()) + ", expected " +
                         std::to_string(blocks.size()));
    if (!good_parity(psi).good) throw InputError("endoscopic_split: parameter is not of good parity");
    std::vector<Block> minus, plus;
    int n_minus = 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (s[j] == -1) {
            minus.push_back(blocks[j]);
            n_minus += blocks[j].total_dim();
        } else if (s[j] == 1) {
            plus.push_back(blocks[j]);
        } else {
            throw InputError("endoscopic_split: entries must be +1 or -1");
        }
    }
    const bool dual_sp = psi.group().dual_symplectic();
    if (!dual_sp && n_minus % 2)
        throw InputError("endoscopic_split: s has determinant -1, not in the dual group");
    const int n_plus = psi.group().nstar() - n_minus;
    return EndoscopicSplit{s, n_minus, n_plus,
                           ArthurParameter(group_with_dual(n_minus, dual_sp), std::move(minus)),
                           ArthurParameter(group_with_dual(n_plus, dual_sp), std::move(plus))};
}

}  // namespace aptrans
