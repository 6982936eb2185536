#include "aptrans/rational.hpp"

#include <charconv>

namespace aptrans {

namespace {

std::int64_t parse_int(std::string_view s) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || s.empty())
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    return v;
}

}  // namespace

Rational Rational::parse(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_int(s));
    const std::string_view sv(s);
    const auto den = parse_int(sv.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return Rational(parse_int(sv.substr(0, slash)), den);
}

HalfInt HalfInt::from_rational(const Rational& r) {
    if (r.den() == 1) return HalfInt(r.num());
    if (r.den() == 2) return from_twice(r.num());
    throw std::invalid_argument("not a half-integer: " + r.str());
}

}  // namespace aptrans
