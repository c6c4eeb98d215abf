#pragma once

#include <initializer_list>
#include <string>

#include "coopint/intgame.hpp"
#include "coopint/rational.hpp"
#include "coopint/tugame.hpp"

namespace testutil {

using coopint::Interval;
using coopint::Rational;

inline Rational R(const std::string& s) { return coopint::parse_rational(s); }

inline Interval I(const std::string& lo, const std::string& hi) {
    return Interval(R(lo), R(hi));
}

// Values for coalitions 1 .. 2^n-1 in increasing bitmask order.
inline coopint::IntervalGame make_game(int n,
                                       std::initializer_list<Interval> vals) {
    coopint::IntervalGame w(n);
    std::uint32_t s = 1;
    for (const Interval& v : vals) w.set_value(coopint::Coalition(s++), v);
    return w;
}

inline coopint::TuGame make_tu(int n,
                               std::initializer_list<std::string> vals) {
    coopint::TuGame v(n);
    std::uint32_t s = 1;
    for (const auto& t : vals) v.set_value(coopint::Coalition(s++), R(t));
    return v;
}

// The three-player reference game used throughout the suite.
// Bitmask order: {1},{2},{1,2},{3},{1,3},{2,3},{1,2,3}.
inline coopint::IntervalGame ex3() {
    return make_game(3, {I("0", "2"), I("1/2", "3/2"), I("2", "3"),
                         I("1", "2"), I("3", "4"), I("4", "4"), I("6", "7")});
}

inline coopint::PayoffVector vec(std::initializer_list<std::string> vals) {
    coopint::PayoffVector x(static_cast<Eigen::Index>(vals.size()));
    Eigen::Index i = 0;
    for (const auto& t : vals) x(i++) = R(t);
    return x;
}

inline bool same_vec(const coopint::RVec& a, const coopint::RVec& b) {
    if (a.size() != b.size()) return false;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a(i) != b(i)) return false;
    return true;
}

} // namespace testutil
