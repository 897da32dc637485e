#include "nodal/exact.hpp"

#include <sstream>

#include "nodal/error.hpp"

namespace nodal {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

Integer integer_from(std::int64_t v) {
    // LP64 assumed: long holds int64_t.
    Integer z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
    return z;
}

} // namespace

Rational::Rational(std::int64_t n) : value_(integer_from(n)) {}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(integer_from(num), integer_from(den)) {}

Rational::Rational(const Integer& n) : value_(n) {}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZero();
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    std::string_view num = body;
    std::string_view den = "1";
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("malformed rational '" + std::string(text) + "', expected p/q or p");
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    if (negative) n = -n;
    return Rational(n, d);
}

Integer Rational::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), numerator().get_mpz_t(), denominator().get_mpz_t());
    return q;
}

Integer Rational::ceil() const {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), numerator().get_mpz_t(), denominator().get_mpz_t());
    return q;
}

std::string Rational::str() const {
    if (is_integer()) return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }

Rational operator/(const Rational& a, const Rational& b) {
    if (b.sign() == 0) throw DivisionByZero();
    return Rational(mpq_class(a.value_ / b.value_));
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational apply(ArithOp op, const Rational& a, const Rational& b) {
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
    }
    throw InvalidArgument("unknown arithmetic operation");
}

std::strong_ordering compare(const Rational& a, const Rational& b) { return a <=> b; }

std::int64_t to_int64(const Integer& z) {
    if (!z.fits_slong_p()) throw Overflow("integer " + z.get_str() + " exceeds 64 bits");
    return static_cast<std::int64_t>(z.get_si());
}

// ---------------------------------------------------------------------------

RationalInterval::RationalInterval(Bound lower, Bound upper, bool lower_open, bool upper_open)
    : lower_(std::move(lower)), upper_(std::move(upper)), lower_open_(lower_open), upper_open_(upper_open) {
    canonicalize();
}

RationalInterval RationalInterval::empty() { return {Rational(0), Rational(0), true, true}; }

RationalInterval RationalInterval::closed(const Rational& lo, const Rational& hi) { return {lo, hi, false, false}; }

RationalInterval RationalInterval::open(const Rational& lo, const Rational& hi) { return {lo, hi, true, true}; }

void RationalInterval::canonicalize() {
    if (!lower_) lower_open_ = true;
    if (!upper_) upper_open_ = true;
    if (lower_ && upper_) {
        const bool disjoint = *lower_ > *upper_ || (*lower_ == *upper_ && (lower_open_ || upper_open_));
        if (disjoint) {
            lower_ = Rational(0);
            upper_ = Rational(0);
            lower_open_ = upper_open_ = true;
        }
    }
}

bool RationalInterval::is_empty() const {
    return lower_ && upper_ && *lower_ == *upper_ && (lower_open_ || upper_open_);
}

bool RationalInterval::contains(const Rational& x) const {
    if (lower_) {
        if (x < *lower_ || (lower_open_ && x == *lower_)) return false;
    }
    if (upper_) {
        if (x > *upper_ || (upper_open_ && x == *upper_)) return false;
    }
    return true;
}

std::string RationalInterval::str() const {
    if (is_empty()) return "empty";
    std::ostringstream os;
    os << (lower_open_ ? '(' : '[') << (lower_ ? lower_->str() : "-inf") << ", "
       << (upper_ ? upper_->str() : "+inf") << (upper_open_ ? ')' : ']');
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RationalInterval& iv) { return os << iv.str(); }

RationalInterval intersect(const RationalInterval& a, const RationalInterval& b) {
    if (a.is_empty() || b.is_empty()) return RationalInterval::empty();

    RationalInterval::Bound lo = a.lower();
    bool lo_open = a.lower_open();
    if (b.lower()) {
        if (!lo || *b.lower() > *lo) {
            lo = b.lower();
            lo_open = b.lower_open();
        } else if (*b.lower() == *lo) {
            lo_open = lo_open || b.lower_open();
        }
    }

    RationalInterval::Bound hi = a.upper();
    bool hi_open = a.upper_open();
    if (b.upper()) {
        if (!hi || *b.upper() < *hi) {
            hi = b.upper();
            hi_open = b.upper_open();
        } else if (*b.upper() == *hi) {
            hi_open = hi_open || b.upper_open();
        }
    }
    return {lo, hi, lo_open, hi_open};
}

std::optional<Rational> sample(const RationalInterval& iv) {
    if (iv.is_empty()) return std::nullopt;
    const auto& lo = iv.lower();
    const auto& hi = iv.upper();
    if (lo && hi) return (*lo + *hi) / Rational(2);
    if (lo) return *lo + Rational(1);
    if (hi) return *hi - Rational(1);
    return Rational(0);
}

} // namespace nodal
