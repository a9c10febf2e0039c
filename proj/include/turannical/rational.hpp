#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace turannical {

// Exact rational with 64-bit numerator/denominator. Arithmetic goes through
// 128-bit intermediates and throws OverflowError if the reduced result does
// not fit. Used for every threshold comparison so that boundary cases such as
// deg >= (1 - 1/3) * 3 are decided exactly.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit from integers is intended
    Rational(std::int64_t num, std::int64_t den);

    // Accepts "3", "-2", "0.05", "1e-3", "1/3". Decimal input is converted exactly.
    static Rational parse(std::string_view text);
    // Converts via the shortest round-trip decimal representation, so 0.05 becomes 1/20.
    static Rational from_double(double value);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string to_string() const;

    // Largest integer <= value.
    std::int64_t floor() const;
    std::int64_t ceil() const;

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return Rational(-num_, den_); }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const;

private:
    static Rational from_wide(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace turannical
