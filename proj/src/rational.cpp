#include "turannical/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>

#include "turannical/errors.hpp"

namespace turannical {

namespace {

__int128 gcd_wide(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(__int128 v) {
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw ParameterError("rational with zero denominator");
    *this = from_wide(num, den);
}

Rational Rational::from_wide(__int128 num, __int128 den) {
    if (den == 0) throw ParameterError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const __int128 g = gcd_wide(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (!fits(num) || !fits(den)) throw OverflowError("rational value exceeds 64-bit range");
    Rational out;
    out.num_ = static_cast<std::int64_t>(num);
    out.den_ = static_cast<std::int64_t>(den);
    return out;
}

Rational Rational::parse(std::string_view text) {
    auto fail = [&] { return ParameterError("cannot parse '" + std::string(text) + "' as a number"); };
    if (text.empty()) throw fail();

    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        std::int64_t a = 0;
        std::int64_t b = 0;
        const auto lhs = text.substr(0, slash);
        const auto rhs = text.substr(slash + 1);
        auto r1 = std::from_chars(lhs.data(), lhs.data() + lhs.size(), a);
        auto r2 = std::from_chars(rhs.data(), rhs.data() + rhs.size(), b);
        if (r1.ec != std::errc{} || r1.ptr != lhs.data() + lhs.size() || r2.ec != std::errc{} ||
            r2.ptr != rhs.data() + rhs.size())
            throw fail();
        return Rational(a, b);
    }

    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    __int128 mantissa = 0;
    int scale = 0;
    bool any_digit = false;
    bool seen_point = false;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (c >= '0' && c <= '9') {
            mantissa = mantissa * 10 + (c - '0');
            if (mantissa > std::numeric_limits<std::int64_t>::max()) throw OverflowError("number has too many digits");
            if (seen_point) ++scale;
            any_digit = true;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!any_digit) throw fail();
    int exponent = 0;
    if (i < text.size()) {
        if (text[i] != 'e' && text[i] != 'E') throw fail();
        ++i;
        const auto rest = text.substr(i);
        const char* begin = rest.data();
        if (!rest.empty() && rest[0] == '+') ++begin;
        auto res = std::from_chars(begin, rest.data() + rest.size(), exponent);
        if (res.ec != std::errc{} || res.ptr != rest.data() + rest.size()) throw fail();
    }
    exponent -= scale;
    __int128 num = negative ? -mantissa : mantissa;
    __int128 den = 1;
    if (exponent > 0) {
        for (int k = 0; k < exponent; ++k) {
            num *= 10;
            if (!fits(num)) throw OverflowError("number exceeds 64-bit range");
        }
    } else {
        for (int k = 0; k < -exponent; ++k) {
            den *= 10;
            if (!fits(den)) throw OverflowError("number has too many decimal places");
        }
    }
    return from_wide(num, den);
}

Rational Rational::from_double(double value) {
    char buffer[64];
    auto res = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (res.ec != std::errc{}) throw ParameterError("cannot convert double to rational");
    return parse(std::string_view(buffer, static_cast<std::size_t>(res.ptr - buffer)));
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::int64_t Rational::floor() const {
    std::int64_t q = num_ / den_;
    if ((num_ % den_ != 0) && (num_ < 0)) --q;
    return q;
}

std::int64_t Rational::ceil() const {
    std::int64_t q = num_ / den_;
    if ((num_ % den_ != 0) && (num_ > 0)) ++q;
    return q;
}

Rational Rational::operator+(const Rational& o) const {
    return from_wide(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                     static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    return from_wide(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw ParameterError("division by zero rational");
    return from_wide(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    const __int128 lhs = static_cast<__int128>(num_) * o.den_;
    const __int128 rhs = static_cast<__int128>(o.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace turannical
