#pragma once

#include <optional>
#include <vector>

#include "coopint/coalition.hpp"
#include "coopint/errors.hpp"
#include "coopint/exactgeom.hpp"
#include "coopint/rational.hpp"

namespace coopint {

using PayoffVector = RVec;

// Classical TU cooperative game: total mapping from the 2^n coalitions
// to exact rational worths, with v(empty) = 0.
class TuGame {
public:
    explicit TuGame(int n);
    TuGame(int n, std::vector<Rational> values);

    int players() const { return n_; }
    Coalition grand() const { return Coalition::full(n_); }

    const Rational& value(Coalition s) const { return values_[s.bits()]; }
    void set_value(Coalition s, Rational v);

    friend bool operator==(const TuGame& a, const TuGame& b) {
        return a.n_ == b.n_ && a.values_ == b.values_;
    }

private:
    int n_;
    std::vector<Rational> values_; // indexed by bitmask, size 1 << n
};

// Pointwise game addition; player counts must match.
TuGame operator+(const TuGame& a, const TuGame& b);

// v(S) = sum of a_i over S.
TuGame additive_game(const std::vector<Rational>& per_player);

struct PairWitness {
    Coalition s, t;
};

// Lexicographically first violating pair, or nullopt when the predicate
// holds. Pairs iterate in increasing bitmask order.
std::optional<PairWitness> monotonicity_violation(const TuGame& v);
std::optional<PairWitness> supermodularity_violation(const TuGame& v);
std::optional<PairWitness> superadditivity_violation(const TuGame& v);

inline bool is_monotonic(const TuGame& v) {
    return !monotonicity_violation(v);
}
inline bool is_supermodular(const TuGame& v) {
    return !supermodularity_violation(v);
}
inline bool is_superadditive(const TuGame& v) {
    return !superadditivity_violation(v);
}

Rational coalition_sum(const PayoffVector& x, Coalition s);

// Exact Shapley value via the marginal-contribution formula.
PayoffVector shapley(const TuGame& v);

// x(S) - v(S).
Rational excess(const PayoffVector& x, Coalition s, const TuGame& v);

bool core_membership(const PayoffVector& x, const TuGame& v);

// H-representation of the core: x(N) = v(N), x(S) >= v(S) for all
// nonempty proper S.
ConstraintSystem core_system(const TuGame& v);

bool core_is_empty(const TuGame& v);

// Complete vertex list of the core polytope, lexicographically sorted.
// Throws EmptyPolytope when the core is empty.
std::vector<PayoffVector> core_vertices(const TuGame& v);

// |S|!(n-|S|-1)!/n! as an exact rational.
Rational shapley_weight(int coalition_size, int n);

} // namespace coopint
