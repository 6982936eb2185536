#pragma once

// Root systems of types A, B, C, D in the standard coordinates e_1..e_n,
// their Weyl groups as signed permutation groups, orbits of half-integral
// weights, and Kostant coset representatives.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "aptrans/rational.hpp"

namespace aptrans {

enum class Family { A, B, C, D };

/// A classical root system. For family A, `rank` r means A_r acting on
/// r+1 coordinates; for B, C, D the number of coordinates equals the rank.
/// `extended` (D only) adds the outer automorphism, i.e. the full signed
/// permutation group acts.
class GroupType {
public:
    GroupType(Family family, int rank, bool extended = false);

    Family family() const { return family_; }
    int rank() const { return rank_; }
    bool extended() const { return extended_; }
    /// Number of coordinates a weight carries.
    int dim() const { return family_ == Family::A ? rank_ + 1 : rank_; }
    std::string name() const;

    friend bool operator==(const GroupType&, const GroupType&) = default;

private:
    Family family_;
    int rank_;
    bool extended_;
};

/// Coordinate vector in (½ℤ)^n.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<HalfInt> coords) : coords_(std::move(coords)) {}
    explicit Weight(std::size_t n) : coords_(n) {}
    static Weight from_ints(std::initializer_list<std::int64_t> xs);
    static Weight from_ints(std::span<const std::int64_t> xs);
    static Weight from_twice(std::span<const std::int64_t> twice);

    std::size_t size() const { return coords_.size(); }
    bool empty() const { return coords_.empty(); }
    HalfInt& operator[](std::size_t i) { return coords_[i]; }
    const HalfInt& operator[](std::size_t i) const { return coords_[i]; }
    auto begin() { return coords_.begin(); }
    auto end() { return coords_.end(); }
    auto begin() const { return coords_.begin(); }
    auto end() const { return coords_.end(); }
    const std::vector<HalfInt>& coords() const { return coords_; }

    bool is_integral() const;
    bool is_zero() const;

    Weight operator-() const;
    friend Weight operator+(const Weight& a, const Weight& b);
    friend Weight operator-(const Weight& a, const Weight& b);

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;

    /// "(a,b,...)" with rationals printed as p/q.
    std::string str() const;

private:
    std::vector<HalfInt> coords_;
};

/// Signed permutation: e_i ↦ signs[i]·e_{perm[i]}.
struct WeylElement {
    std::vector<int> perm;
    std::vector<int> signs;

    static WeylElement identity(int n);
    int size() const { return static_cast<int>(perm.size()); }
    bool is_identity() const;

    Weight apply(const Weight& w) const;
    WeylElement inverse() const;
    /// (*this ∘ rhs): apply rhs first.
    WeylElement operator*(const WeylElement& rhs) const;

    friend bool operator==(const WeylElement&, const WeylElement&) = default;
    friend auto operator<=>(const WeylElement&, const WeylElement&) = default;
};

std::uint64_t weyl_order(const GroupType& t);

struct Orbit {
    std::vector<Weight> weights;  // sorted, no duplicates
    std::uint64_t stabilizer_order = 0;
};

/// Full W-orbit by closure under simple reflections starting at the
/// dominant representative. Throws std::invalid_argument on length mismatch.
Orbit orbit(const GroupType& t, const Weight& w);

/// Canonical orbit representative: coordinates non-increasing and
/// non-negative; for non-extended D the last coordinate carries the
/// residual sign.
Weight dominant_rep(const GroupType& t, const Weight& w);

/// Standard coordinate dot product. Throws on length mismatch.
Rational pairing(const Weight& a, const Weight& b);
Rational norm_sq(const Weight& a);

Weight half_sum_positive_roots(const GroupType& t);

/// Simple roots in the standard order: e_i - e_{i+1}, then the family's
/// last root (e_n, 2e_n, e_{n-1}+e_n; none extra for A).
std::vector<Weight> simple_roots(const GroupType& t);
std::vector<Weight> positive_roots(const GroupType& t);
/// A root is positive iff its first nonzero coordinate is positive.
bool is_positive_root(const Weight& root);

/// Every element of W (extended-D included), in lexicographic order.
std::vector<WeylElement> weyl_elements(const GroupType& t);

/// Minimal-length representatives of the cosets wW_L, where W_L is
/// generated by the simple roots indexed by `levi_simple_roots`.
/// Throws std::invalid_argument for an out-of-range or repeated index.
std::vector<WeylElement> kostant_reps(const GroupType& t, std::span<const int> levi_simple_roots);

/// Elements of W_L (the parabolic subgroup fixed by the same index set).
std::vector<WeylElement> levi_weyl_elements(const GroupType& t, std::span<const int> levi_simple_roots);

}  // namespace aptrans
