#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "coopint/errors.hpp"
#include "coopint/rational.hpp"

namespace coopint {

class Interval;

std::string to_string(const Interval& x);

// Closed real interval with exact rational endpoints, lower <= upper.
class Interval {
public:
    Interval() : lo_(0), hi_(0) {}

    Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (lo_ > hi_)
            throw InvalidParameter("interval with lower > upper: [" +
                                   to_fraction_string(lo_) + ", " +
                                   to_fraction_string(hi_) + "]");
    }

    static Interval point(Rational v) { return Interval(v, v); }

    const Rational& lower() const { return lo_; }
    const Rational& upper() const { return hi_; }

    bool is_point() const { return lo_ == hi_; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }
    friend bool operator!=(const Interval& a, const Interval& b) {
        return !(a == b);
    }

private:
    Rational lo_, hi_;
};

// Partial subtraction requires the subtrahend to be no wider than the
// minuend; the error carries both operands for reporting.
struct PartialSubtractionUndefined : CoopError {
    Interval minuend, subtrahend;
    PartialSubtractionUndefined(const Interval& x, const Interval& y)
        : CoopError("partial subtraction undefined: " + to_string(x) + " - " +
                    to_string(y)),
          minuend(x),
          subtrahend(y) {}
};

inline std::string to_string(const Interval& x) {
    return "[" + to_fraction_string(x.lower()) + ", " +
           to_fraction_string(x.upper()) + "]";
}

inline Rational length(const Interval& x) { return x.upper() - x.lower(); }

inline Rational midpoint(const Interval& x) {
    return (x.lower() + x.upper()) / 2;
}

inline bool contains(const Interval& x, const Rational& v) {
    return x.lower() <= v && v <= x.upper();
}

inline Interval operator+(const Interval& x, const Interval& y) {
    return Interval(x.lower() + y.lower(), x.upper() + y.upper());
}

// Moore's subtraction; widths add.
inline Interval moore_sub(const Interval& x, const Interval& y) {
    return Interval(x.lower() - y.upper(), x.upper() - y.lower());
}

// Endpointwise subtraction, defined only when length(y) <= length(x).
inline Interval partial_sub(const Interval& x, const Interval& y) {
    if (x.lower() - y.lower() > x.upper() - y.upper())
        throw PartialSubtractionUndefined(x, y);
    return Interval(x.lower() - y.lower(), x.upper() - y.upper());
}

inline Interval operator*(const Interval& x, const Interval& y) {
    const Rational p1 = x.lower() * y.lower();
    const Rational p2 = x.lower() * y.upper();
    const Rational p3 = x.upper() * y.lower();
    const Rational p4 = x.upper() * y.upper();
    return Interval(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}

inline Interval operator/(const Interval& x, const Interval& z) {
    if (contains(z, Rational(0)))
        throw DivisionByZeroInterval("division by interval containing zero: " +
                                     to_string(z));
    const Rational q1 = x.lower() / z.lower();
    const Rational q2 = x.lower() / z.upper();
    const Rational q3 = x.upper() / z.lower();
    const Rational q4 = x.upper() / z.upper();
    return Interval(std::min({q1, q2, q3, q4}), std::max({q1, q2, q3, q4}));
}

// Scalar scaling; the sign of the scalar may swap the endpoints.
inline Interval operator*(const Rational& a, const Interval& x) {
    Rational p = a * x.lower();
    Rational q = a * x.upper();
    if (p > q) std::swap(p, q);
    return Interval(std::move(p), std::move(q));
}

// I is weakly better than J when both endpoints dominate.
inline bool weakly_better(const Interval& i, const Interval& j) {
    return i.lower() >= j.lower() && i.upper() >= j.upper();
}

inline bool strictly_better(const Interval& i, const Interval& j) {
    return weakly_better(i, j) && i != j;
}

// Equal midpoints, exactly.
inline bool indifferent(const Interval& i, const Interval& j) {
    return i.lower() + i.upper() == j.lower() + j.upper();
}

using IntervalVector = std::vector<Interval>;

inline Interval sum(const IntervalVector& iv) {
    Interval acc;
    for (const Interval& x : iv) acc = acc + x;
    return acc;
}

} // namespace coopint
