#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nodal {

using Integer = mpz_class;

/*
 * Exact rational number backed by GMP.
 *
 * The stored fraction is always canonical: the denominator is positive and
 * gcd(|numerator|, denominator) = 1. Values are immutable once built; every
 * operator returns a fresh canonical value.
 */
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n);  // NOLINT: implicit from integers is intended
    Rational(std::int64_t num, std::int64_t den);
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const Integer& n);

    // Accepts "p/q" or "p" with an optional leading '-'. No decimals, no '+'.
    static Rational parse(std::string_view text);

    const Integer& numerator() const { return value_.get_num(); }
    const Integer& denominator() const { return value_.get_den(); }

    bool is_integer() const { return denominator() == 1; }
    int sign() const { return sgn(value_); }
    Integer floor() const;
    Integer ceil() const;

    // "p/q", or "p" when q = 1.
    std::string str() const;

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    // Throws DivisionByZero when b == 0.
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

enum class ArithOp { add, sub, mul, div };

Rational apply(ArithOp op, const Rational& a, const Rational& b);
std::strong_ordering compare(const Rational& a, const Rational& b);

// Converts to int64, throwing Overflow when the value does not fit.
std::int64_t to_int64(const Integer& z);

/*
 * Interval of the rational line with independently open or closed ends.
 *
 * A missing endpoint means -inf / +inf; infinite ends are always open. Every
 * empty interval is normalised to the single canonical value (0, 0) with both
 * ends open, so equality is structural.
 */
class RationalInterval {
public:
    using Bound = std::optional<Rational>;

    // The whole line.
    RationalInterval() = default;
    RationalInterval(Bound lower, Bound upper, bool lower_open, bool upper_open);

    static RationalInterval empty();
    static RationalInterval closed(const Rational& lo, const Rational& hi);
    static RationalInterval open(const Rational& lo, const Rational& hi);
    static RationalInterval whole() { return {}; }

    const Bound& lower() const { return lower_; }
    const Bound& upper() const { return upper_; }
    bool lower_open() const { return lower_open_; }
    bool upper_open() const { return upper_open_; }

    bool is_empty() const;
    bool contains(const Rational& x) const;

    // Interval notation such as "[1/3, 2/3]", "(-inf, 1/4)" or "empty".
    std::string str() const;

    friend bool operator==(const RationalInterval&, const RationalInterval&) = default;

private:
    void canonicalize();

    Bound lower_;
    Bound upper_;
    bool lower_open_ = true;
    bool upper_open_ = true;
};

std::ostream& operator<<(std::ostream& os, const RationalInterval& iv);

// Exact intersection. On a shared endpoint the more open side wins.
RationalInterval intersect(const RationalInterval& a, const RationalInterval& b);

/*
 * A point of a nonempty interval: the midpoint when both ends are finite,
 * one unit inside a half-infinite interval, 0 on the whole line. A closed
 * degenerate interval [a, a] yields a.
 */
std::optional<Rational> sample(const RationalInterval& iv);

} // namespace nodal
