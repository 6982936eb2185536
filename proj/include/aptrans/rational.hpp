#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace aptrans {

/// Exact rational with 64-bit numerator/denominator, always normalized
/// (gcd 1, positive denominator).
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(implicit)
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const { return Rational(-num_, den_); }
    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// "p" or "p/q".
    std::string str() const {
        return den_ == 1 ? std::to_string(num_)
                         : std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parses "p" or "p/q" (optional sign). Throws std::invalid_argument.
    static Rational parse(const std::string& s);

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// A number in ½ℤ, stored doubled so that all arithmetic stays in integers.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr HalfInt(std::int64_t whole) : twice_(2 * whole) {}  // NOLINT(implicit)

    static constexpr HalfInt from_twice(std::int64_t twice) {
        HalfInt h;
        h.twice_ = twice;
        return h;
    }
    /// Throws std::invalid_argument unless r has denominator 1 or 2.
    static HalfInt from_rational(const Rational& r);
    /// Accepts "k" or "k/2".
    static HalfInt parse(const std::string& s) { return from_rational(Rational::parse(s)); }

    constexpr std::int64_t twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    Rational to_rational() const { return Rational(twice_, 2); }
    double to_double() const { return static_cast<double>(twice_) / 2.0; }
    std::string str() const { return to_rational().str(); }

    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
    constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
    constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }
    friend constexpr HalfInt abs(HalfInt a) { return from_twice(a.twice_ < 0 ? -a.twice_ : a.twice_); }

    friend constexpr bool operator==(HalfInt, HalfInt) = default;
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

private:
    std::int64_t twice_ = 0;
};

}  // namespace aptrans
