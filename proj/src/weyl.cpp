#include "aptrans/weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace aptrans {

GroupType::GroupType(Family family, int rank, bool extended)
    : family_(family), rank_(rank), extended_(extended) {
    if (rank < 1) throw std::invalid_argument("GroupType: rank must be >= 1");
    if (extended && family != Family::D)
        throw std::invalid_argument("GroupType: only type D can be extended");
}

std::string GroupType::name() const {
    static const char* letters = "ABCD";
    std::string s(1, letters[static_cast<int>(family_)]);
    s += std::to_string(rank_);
    if (extended_) s += "+";
    return s;
}

// ---------------------------------------------------------------- Weight

Weight Weight::from_ints(std::initializer_list<std::int64_t> xs) {
    return from_ints(std::span<const std::int64_t>(xs.begin(), xs.size()));
}

Weight Weight::from_ints(std::span<const std::int64_t> xs) {
    std::vector<HalfInt> c;
    c.reserve(xs.size());
    for (auto x : xs) c.emplace_back(x);
    return Weight(std::move(c));
}

Weight Weight::from_twice(std::span<const std::int64_t> twice) {
    std::vector<HalfInt> c;
    c.reserve(twice.size());
    for (auto x : twice) c.push_back(HalfInt::from_twice(x));
    return Weight(std::move(c));
}

bool Weight::is_integral() const {
    return std::all_of(coords_.begin(), coords_.end(), [](HalfInt h) { return h.is_integer(); });
}

bool Weight::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](HalfInt h) { return h == HalfInt(0); });
}

Weight Weight::operator-() const {
    Weight r(*this);
    for (auto& x : r.coords_) x = -x;
    return r;
}

Weight operator+(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) throw std::invalid_argument("Weight: length mismatch");
    Weight r(a);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
    return r;
}

Weight operator-(const Weight& a, const Weight& b) { return a + (-b); }

std::string Weight::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += ",";
        s += coords_[i].str();
    }
    return s + ")";
}

// ----------------------------------------------------------- WeylElement

WeylElement WeylElement::identity(int n) {
    WeylElement e;
    e.perm.resize(n);
    std::iota(e.perm.begin(), e.perm.end(), 0);
    e.signs.assign(n, 1);
    return e;
}

bool WeylElement::is_identity() const { return *this == identity(size()); }

Weight WeylElement::apply(const Weight& w) const {
    if (static_cast<int>(w.size()) != size())
        throw std::invalid_argument("WeylElement::apply: length mismatch");
    Weight r(w.size());
    for (int i = 0; i < size(); ++i) r[perm[i]] = signs[i] > 0 ? w[i] : -w[i];
    return r;
}

WeylElement WeylElement::inverse() const {
    WeylElement r;
    r.perm.resize(size());
    r.signs.resize(size());
    for (int i = 0; i < size(); ++i) {
        r.perm[perm[i]] = i;
        r.signs[perm[i]] = signs[i];
    }
    return r;
}

WeylElement WeylElement::operator*(const WeylElement& rhs) const {
    WeylElement r;
    r.perm.resize(size());
    r.signs.resize(size());
    for (int i = 0; i < size(); ++i) {
        r.perm[i] = perm[rhs.perm[i]];
        r.signs[i] = rhs.signs[i] * signs[rhs.perm[i]];
    }
    return r;
}

// ------------------------------------------------------------ group data

std::uint64_t weyl_order(const GroupType& t) {
    std::uint64_t fact = 1;
    for (int i = 2; i <= t.dim(); ++i) fact *= static_cast<std::uint64_t>(i);
    switch (t.family()) {
    case Family::A:
        return fact;
    case Family::B:
    case Family::C:
        return fact << t.rank();
    case Family::D:
        return t.extended() ? fact << t.rank() : fact << (t.rank() - 1);
    }
    return 0;
}

namespace {

void check_len(const GroupType& t, const Weight& w) {
    if (static_cast<int>(w.size()) != t.dim())
        throw std::invalid_argument("weight length " + std::to_string(w.size()) +
                                    " does not match " + t.name());
}

// Images of w under the generators used for orbit closure.
template <class F>
void for_each_generator_image(const GroupType& t, const Weight& w, F&& f) {
    const int n = t.dim();
    for (int i = 0; i + 1 < n; ++i) {
        if (w[i] == w[i + 1]) continue;
        Weight r(w);
        std::swap(r[i], r[i + 1]);
        f(std::move(r));
    }
    switch (t.family()) {
    case Family::A:
        break;
    case Family::B:
    case Family::C:
        if (w[n - 1] != HalfInt(0)) {
            Weight r(w);
            r[n - 1] = -r[n - 1];
            f(std::move(r));
        }
        break;
    case Family::D:
        if (n >= 2) {
            Weight r(w);
            const HalfInt a = r[n - 2];
            r[n - 2] = -r[n - 1];
            r[n - 1] = -a;
            if (r != w) f(std::move(r));
        }
        if (t.extended() && w[n - 1] != HalfInt(0)) {
            Weight r(w);
            r[n - 1] = -r[n - 1];
            f(std::move(r));
        }
        break;
    }
}

}  // namespace

Weight dominant_rep(const GroupType& t, const Weight& w) {
    check_len(t, w);
    Weight r(w);
    if (t.family() == Family::A) {
        std::sort(r.begin(), r.end(), std::greater<>());
        return r;
    }
    int negatives = 0;
    bool has_zero = false;
    for (auto& x : r) {
        if (x < HalfInt(0)) {
            ++negatives;
            x = -x;
        }
        if (x == HalfInt(0)) has_zero = true;
    }
    std::sort(r.begin(), r.end(), std::greater<>());
    if (t.family() == Family::D && !t.extended() && !has_zero && negatives % 2 == 1)
        r[r.size() - 1] = -r[r.size() - 1];
    return r;
}

Orbit orbit(const GroupType& t, const Weight& w) {
    check_len(t, w);
    std::set<Weight> seen;
    std::deque<Weight> queue;
    Weight start = dominant_rep(t, w);
    seen.insert(start);
    queue.push_back(std::move(start));
    while (!queue.empty()) {
        Weight cur = std::move(queue.front());
        queue.pop_front();
        for_each_generator_image(t, cur, [&](Weight&& img) {
            if (seen.insert(img).second) queue.push_back(std::move(img));
        });
    }
    Orbit o;
    o.weights.assign(seen.begin(), seen.end());
    o.stabilizer_order = weyl_order(t) / o.weights.size();
    return o;
}

Rational pairing(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) throw std::invalid_argument("pairing: length mismatch");
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].twice() * b[i].twice();
    return Rational(acc, 4);
}

Rational norm_sq(const Weight& a) { return pairing(a, a); }

std::vector<Weight> positive_roots(const GroupType& t) {
    const int n = t.dim();
    std::vector<Weight> roots;
    auto unit = [n](int i, std::int64_t ci, int j = -1, std::int64_t cj = 0) {
        Weight r(static_cast<std::size_t>(n));
        r[i] = HalfInt(ci);
        if (j >= 0) r[j] = HalfInt(cj);
        return r;
    };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            roots.push_back(unit(i, 1, j, -1));
            if (t.family() != Family::A) roots.push_back(unit(i, 1, j, 1));
        }
        if (t.family() == Family::B) roots.push_back(unit(i, 1));
        if (t.family() == Family::C) roots.push_back(unit(i, 2));
    }
    return roots;
}

std::vector<Weight> simple_roots(const GroupType& t) {
    const int n = t.dim();
    std::vector<Weight> roots;
    for (int i = 0; i + 1 < n; ++i) {
        Weight r(static_cast<std::size_t>(n));
        r[i] = HalfInt(1);
        r[i + 1] = HalfInt(-1);
        roots.push_back(std::move(r));
    }
    Weight last(static_cast<std::size_t>(n));
    switch (t.family()) {
    case Family::A:
        return roots;
    case Family::B:
        last[n - 1] = HalfInt(1);
        break;
    case Family::C:
        last[n - 1] = HalfInt(2);
        break;
    case Family::D:
        if (n < 2) return roots;
        last[n - 2] = HalfInt(1);
        last[n - 1] = HalfInt(1);
        break;
    }
    roots.push_back(std::move(last));
    return roots;
}

bool is_positive_root(const Weight& root) {
    for (auto x : root)
        if (x != HalfInt(0)) return x > HalfInt(0);
    return false;
}

Weight half_sum_positive_roots(const GroupType& t) {
    Weight sum(static_cast<std::size_t>(t.dim()));
    for (const auto& r : positive_roots(t)) sum = sum + r;
    Weight half(sum.size());
    for (std::size_t i = 0; i < sum.size(); ++i) {
        // every coordinate of the root sum is an integer
        half[i] = HalfInt::from_twice(sum[i].twice() / 2);
    }
    return half;
}

std::vector<WeylElement> weyl_elements(const GroupType& t) {
    const int n = t.dim();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    const bool signed_group = t.family() != Family::A;
    const bool even_only = t.family() == Family::D && !t.extended();
    std::vector<WeylElement> out;
    out.reserve(weyl_order(t));
    do {
        const std::uint32_t masks = signed_group ? (1u << n) : 1u;
        for (std::uint32_t m = 0; m < masks; ++m) {
            if (even_only && __builtin_popcount(m) % 2) continue;
            WeylElement e;
            e.perm = perm;
            e.signs.resize(n);
            for (int i = 0; i < n; ++i) e.signs[i] = (m >> i) & 1u ? -1 : 1;
            out.push_back(std::move(e));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<Weight> levi_roots(const GroupType& t, std::span<const int> idx) {
    const auto simple = simple_roots(t);
    std::set<int> seen;
    std::vector<Weight> out;
    for (int i : idx) {
        if (i < 0 || i >= static_cast<int>(simple.size()))
            throw std::invalid_argument("Levi: simple root index " + std::to_string(i) +
                                        " out of range for " + t.name());
        if (!seen.insert(i).second)
            throw std::invalid_argument("Levi: repeated simple root index " + std::to_string(i));
        out.push_back(simple[i]);
    }
    return out;
}

WeylElement reflection(const Weight& root) {
    // Roots of A-D are ±e_i ± e_j, e_i, 2e_i.
    const int n = static_cast<int>(root.size());
    WeylElement s = WeylElement::identity(n);
    std::vector<int> support;
    for (int i = 0; i < n; ++i)
        if (root[i] != HalfInt(0)) support.push_back(i);
    if (support.size() == 1) {
        s.signs[support[0]] = -1;
    } else {
        const int i = support[0], j = support[1];
        const int sign = (root[i] > HalfInt(0)) == (root[j] > HalfInt(0)) ? -1 : 1;
        s.perm[i] = j;
        s.perm[j] = i;
        s.signs[i] = sign;
        s.signs[j] = sign;
    }
    return s;
}

}  // namespace

std::vector<WeylElement> levi_weyl_elements(const GroupType& t, std::span<const int> idx) {
    const auto roots = levi_roots(t, idx);
    std::vector<WeylElement> gens;
    for (const auto& r : roots) gens.push_back(reflection(r));
    std::set<WeylElement> seen{WeylElement::identity(t.dim())};
    std::deque<WeylElement> queue(seen.begin(), seen.end());
    while (!queue.empty()) {
        auto cur = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            auto next = cur * g;
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<WeylElement> kostant_reps(const GroupType& t, std::span<const int> idx) {
    const auto roots = levi_roots(t, idx);
    std::vector<WeylElement> out;
    for (auto& w : weyl_elements(t)) {
        const bool keeps = std::all_of(roots.begin(), roots.end(),
                                       [&](const Weight& a) { return is_positive_root(w.apply(a)); });
        if (keeps) out.push_back(std::move(w));
    }
    return out;
}

}  // namespace aptrans
