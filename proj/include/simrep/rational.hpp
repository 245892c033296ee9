#ifndef SIMREP_RATIONAL_HPP
#define SIMREP_RATIONAL_HPP

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <ostream>

namespace simrep {

/// Exact rational coordinate. Wraps boost::rational and only exposes
/// same-type operators: Boost 1.74's mixed rational/integer operator==
/// recurses forever under C++20 rewritten comparisons. Integers convert
/// implicitly, so `r == 3` goes through the Rational overload.
class Rational {
public:
    using Int = std::int64_t;

    Rational() = default;
    Rational(Int value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(Int num, Int den) : value_(num, den) {}

    Int numerator() const noexcept { return value_.numerator(); }
    Int denominator() const noexcept { return value_.denominator(); }
    double to_double() const { return boost::rational_cast<double>(value_); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.value_ + b.value_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.value_ - b.value_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.value_ * b.value_); }
    friend Rational operator/(const Rational& a, const Rational& b) { return Rational(a.value_ / b.value_); }
    Rational operator-() const { return Rational(-value_); }
    Rational& operator+=(const Rational& b) { value_ += b.value_; return *this; }
    Rational& operator-=(const Rational& b) { value_ -= b.value_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (b.value_ < a.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.value_; }

private:
    explicit Rational(boost::rational<Int> v) : value_(v) {}

    boost::rational<Int> value_;
};

}  // namespace simrep

#endif
