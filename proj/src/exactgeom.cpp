#include "coopint/exactgeom.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace coopint {

namespace {

Rational dot(const RVec& a, const RVec& b) {
    Rational acc(0);
    for (Eigen::Index i = 0; i < a.size(); ++i) acc += a(i) * b(i);
    return acc;
}

// Phase-one simplex on the equality form A y = b, y >= 0, obtained by
// splitting x into positive and negative parts and adding one slack per
// inequality. Bland's rule; terminates on any input.
class PhaseOneSimplex {
public:
    explicit PhaseOneSimplex(const ConstraintSystem& sys) : dim_(sys.dimension()) {
        const auto& rows = sys.rows();
        const int m = static_cast<int>(rows.size());
        int num_slacks = 0;
        for (const auto& row : rows)
            if (row.relation == ConstraintRow::Relation::GreaterEqual)
                ++num_slacks;

        cols_ = 2 * dim_ + num_slacks + m;
        tableau_ = RMat::Zero(m + 1, cols_ + 1);
        basis_.resize(m);

        int slack = 0;
        for (int i = 0; i < m; ++i) {
            const auto& row = rows[i];
            const Rational sign = row.rhs < 0 ? Rational(-1) : Rational(1);
            for (int j = 0; j < dim_; ++j) {
                tableau_(i, j) = sign * row.coeffs(j);
                tableau_(i, dim_ + j) = -sign * row.coeffs(j);
            }
            if (row.relation == ConstraintRow::Relation::GreaterEqual) {
                tableau_(i, 2 * dim_ + slack) = -sign;
                ++slack;
            }
            tableau_(i, 2 * dim_ + num_slacks + i) = 1; // artificial
            tableau_(i, cols_) = sign * row.rhs;
            basis_[i] = 2 * dim_ + num_slacks + i;
        }

        // Objective row: price out the basic artificials.
        for (int j = 0; j < 2 * dim_ + num_slacks; ++j) {
            Rational acc(0);
            for (int i = 0; i < m; ++i) acc += tableau_(i, j);
            tableau_(m, j) = acc;
        }
        Rational total(0);
        for (int i = 0; i < m; ++i) total += tableau_(i, cols_);
        tableau_(m, cols_) = total;
    }

    std::optional<RVec> solve() {
        const int m = static_cast<int>(basis_.size());
        for (;;) {
            int entering = -1;
            for (int j = 0; j < cols_; ++j) {
                if (tableau_(m, j) > 0) {
                    entering = j;
                    break;
                }
            }
            if (entering < 0) break;

            int leaving = -1;
            Rational best_ratio(0);
            for (int i = 0; i < m; ++i) {
                if (tableau_(i, entering) <= 0) continue;
                Rational ratio = tableau_(i, cols_) / tableau_(i, entering);
                if (leaving < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leaving])) {
                    leaving = i;
                    best_ratio = ratio;
                }
            }
            if (leaving < 0) {
                // Phase-one objective is bounded below by zero; a missing
                // ratio row cannot happen with artificials present.
                throw CoopError("phase-one simplex: unbounded pivot column");
            }
            pivot(leaving, entering);
        }

        if (tableau_(m, cols_) != 0) return std::nullopt;

        RVec y = RVec::Zero(cols_);
        for (int i = 0; i < m; ++i) y(basis_[i]) = tableau_(i, cols_);
        RVec x(dim_);
        for (int j = 0; j < dim_; ++j) x(j) = y(j) - y(dim_ + j);
        return x;
    }

private:
    void pivot(int row, int col) {
        const Rational p = tableau_(row, col);
        tableau_.row(row) /= p;
        for (Eigen::Index i = 0; i < tableau_.rows(); ++i) {
            if (i == row) continue;
            const Rational factor = tableau_(i, col);
            if (factor == 0) continue;
            tableau_.row(i) -= factor * tableau_.row(row);
        }
        basis_[row] = col;
    }

    int dim_;
    int cols_;
    RMat tableau_;
    std::vector<int> basis_;
};

ConstraintSystem recession_cone(const ConstraintSystem& sys) {
    ConstraintSystem cone(sys.dimension());
    for (const auto& row : sys.rows()) {
        if (row.relation == ConstraintRow::Relation::Equal)
            cone.add_eq(row.coeffs, Rational(0));
        else
            cone.add_ge(row.coeffs, Rational(0));
    }
    return cone;
}

bool has_nonzero_ray(const ConstraintSystem& sys) {
    const int d = sys.dimension();
    for (int j = 0; j < d; ++j) {
        for (int sign : {1, -1}) {
            ConstraintSystem probe = recession_cone(sys);
            RVec e = RVec::Zero(d);
            e(j) = sign;
            probe.add_ge(std::move(e), Rational(1));
            if (feasible(probe)) return true;
        }
    }
    return false;
}

std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<std::uint64_t>(n - k + i) /
                 static_cast<std::uint64_t>(i);
        if (result > cap) return cap + 1;
    }
    return result;
}

} // namespace

bool ConstraintSystem::satisfied_by(const RVec& x) const {
    if (x.size() != dim_) return false;
    for (const auto& row : rows_) {
        const Rational lhs = dot(row.coeffs, x);
        if (row.relation == ConstraintRow::Relation::Equal) {
            if (lhs != row.rhs) return false;
        } else {
            if (lhs < row.rhs) return false;
        }
    }
    return true;
}

std::optional<RVec> feasible(const ConstraintSystem& sys) {
    if (sys.dimension() > kFeasibleMaxDim ||
        static_cast<int>(sys.rows().size()) > kFeasibleMaxRows)
        throw BudgetExceeded("feasibility budget exceeded");

    PhaseOneSimplex simplex(sys);
    auto witness = simplex.solve();
    if (witness && !sys.satisfied_by(*witness))
        throw CoopError("simplex produced an invalid witness");
    return witness;
}

std::vector<RVec> vertices(const ConstraintSystem& sys) {
    const int d = sys.dimension();
    const int m = static_cast<int>(sys.rows().size());
    if (d > kVerticesMaxDim || m > kVerticesMaxRows)
        throw BudgetExceeded("vertex enumeration budget exceeded");
    if (m < d) {
        if (feasible(sys)) throw Unbounded("fewer rows than dimensions");
        return {};
    }
    constexpr std::uint64_t kMaxBases = 5'000'000;
    if (binomial_capped(m, d, kMaxBases) > kMaxBases)
        throw BudgetExceeded("too many candidate bases");

    if (!feasible(sys)) return {};
    if (has_nonzero_ray(sys)) throw Unbounded("recession cone is nontrivial");

    std::vector<RVec> out;
    std::vector<int> idx(d);
    std::iota(idx.begin(), idx.end(), 0);

    const auto& rows = sys.rows();
    for (;;) {
        RMat basis(d, d);
        RVec rhs(d);
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) basis(i, j) = rows[idx[i]].coeffs(j);
            rhs(i) = rows[idx[i]].rhs;
        }
        Eigen::FullPivLU<RMat> lu(basis);
        if (lu.rank() == d) {
            RVec point = lu.solve(rhs);
            if (sys.satisfied_by(point)) out.push_back(std::move(point));
        }

        // Next d-combination of {0..m-1}.
        int pos = d - 1;
        while (pos >= 0 && idx[pos] == m - d + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < d; ++i) idx[i] = idx[i - 1] + 1;
    }

    std::sort(out.begin(), out.end(), lex_less);
    auto same = [](const RVec& a, const RVec& b) {
        if (a.size() != b.size()) return false;
        for (Eigen::Index i = 0; i < a.size(); ++i)
            if (a(i) != b(i)) return false;
        return true;
    };
    out.erase(std::unique(out.begin(), out.end(), same), out.end());
    return out;
}

} // namespace coopint
