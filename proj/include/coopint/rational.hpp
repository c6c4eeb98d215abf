#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <string>

#include "coopint/errors.hpp"

// NumTraits for the exact rational scalar; must precede any use of
// Eigen types over mpq_class.
namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;

    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }

    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 100,
        MulCost = 80
    };
};

} // namespace Eigen

namespace coopint {

// Exact rational scalar. All arithmetic in the library is exact; no
// floating point appears in any computation path.
using Rational = mpq_class;

using RVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw InvalidParameter("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Canonical textual form "p/q" with q > 0, e.g. "-1/2", "6/1".
inline std::string to_fraction_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Accepts "p/q", integer literals, and decimal literals with optional
// exponent ("0.5", "-3", "1.25e2"); decimals convert exactly.
Rational parse_rational(const std::string& text);

inline bool lex_less(const RVec& a, const RVec& b) {
    for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
        if (a(i) != b(i)) return a(i) < b(i);
    }
    return a.size() < b.size();
}

} // namespace coopint
