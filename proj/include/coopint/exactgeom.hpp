#pragma once

#include <optional>
#include <vector>

#include "coopint/errors.hpp"
#include "coopint/rational.hpp"

namespace coopint {

// Linear (in)equality system over exact rationals. Rows are either
// "coeffs . x >= rhs" or "coeffs . x == rhs".
struct ConstraintRow {
    enum class Relation { GreaterEqual, Equal };

    RVec coeffs;
    Relation relation = Relation::GreaterEqual;
    Rational rhs;
};

class ConstraintSystem {
public:
    explicit ConstraintSystem(int dimension) : dim_(dimension) {
        if (dimension < 0) throw InvalidParameter("negative dimension");
    }

    int dimension() const { return dim_; }
    const std::vector<ConstraintRow>& rows() const { return rows_; }

    void add_ge(RVec coeffs, Rational rhs) {
        add(std::move(coeffs), ConstraintRow::Relation::GreaterEqual,
            std::move(rhs));
    }
    void add_eq(RVec coeffs, Rational rhs) {
        add(std::move(coeffs), ConstraintRow::Relation::Equal, std::move(rhs));
    }

    bool satisfied_by(const RVec& x) const;

private:
    void add(RVec coeffs, ConstraintRow::Relation rel, Rational rhs) {
        if (coeffs.size() != dim_)
            throw InvalidParameter("constraint row of wrong dimension");
        rows_.push_back({std::move(coeffs), rel, std::move(rhs)});
    }

    int dim_;
    std::vector<ConstraintRow> rows_;
};

inline constexpr int kFeasibleMaxDim = 64;
inline constexpr int kFeasibleMaxRows = 2048;
inline constexpr int kVerticesMaxDim = 8;
inline constexpr int kVerticesMaxRows = 300;

// Exact feasibility via phase-one simplex with Bland's rule. Returns a
// rational witness satisfying every row exactly, or nullopt.
std::optional<RVec> feasible(const ConstraintSystem& sys);

// All vertices of a bounded feasible region, as basic feasible solutions,
// lexicographically sorted and duplicate-free. Empty list when infeasible.
// Throws Unbounded when the recession cone is nontrivial.
std::vector<RVec> vertices(const ConstraintSystem& sys);

} // namespace coopint
