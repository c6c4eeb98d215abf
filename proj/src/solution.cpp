#include "coopint/solution.hpp"

#include <algorithm>

namespace coopint {

namespace {

RVec indicator(std::uint32_t mask, int n) {
    RVec row = RVec::Zero(n);
    for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1u) row(i) = 1;
    return row;
}

} // namespace

bool selection_imputation_membership(const PayoffVector& x,
                                     const IntervalGame& w) {
    if (static_cast<int>(x.size()) != w.players()) return false;
    const Rational total = coalition_sum(x, w.grand());
    if (!contains(w.value(w.grand()), total)) return false;
    for (int i = 0; i < w.players(); ++i)
        if (x(i) < w.value(Coalition::single(i)).lower()) return false;
    return true;
}

bool selection_core_membership(const PayoffVector& x, const IntervalGame& w) {
    if (static_cast<int>(x.size()) != w.players()) return false;
    const Rational total = coalition_sum(x, w.grand());
    if (!contains(w.value(w.grand()), total)) return false;
    const std::uint32_t full = w.grand().bits();
    for (std::uint32_t s = 1; s < full; ++s) {
        Coalition c(s);
        if (coalition_sum(x, c) < w.value(c).lower()) return false;
    }
    return true;
}

bool interval_imputation_membership(const IntervalVector& iv,
                                    const IntervalGame& w) {
    if (static_cast<int>(iv.size()) != w.players()) return false;
    if (sum(iv) != w.value(w.grand())) return false;
    for (int i = 0; i < w.players(); ++i)
        if (!weakly_better(iv[i], w.value(Coalition::single(i)))) return false;
    return true;
}

bool interval_core_membership(const IntervalVector& iv, const IntervalGame& w) {
    if (!interval_imputation_membership(iv, w)) return false;
    const std::uint32_t full = w.grand().bits();
    for (std::uint32_t s = 1; s <= full; ++s) {
        Coalition c(s);
        Interval acc;
        for (int i = 0; i < w.players(); ++i)
            if (c.contains(i)) acc = acc + iv[i];
        if (!weakly_better(acc, w.value(c))) return false;
    }
    return true;
}

ConstraintSystem selection_core_system(const IntervalGame& w) {
    const int n = w.players();
    ConstraintSystem sys(n);
    const std::uint32_t full = w.grand().bits();
    sys.add_ge(indicator(full, n), w.value(w.grand()).lower());
    sys.add_ge(-indicator(full, n), -w.value(w.grand()).upper());
    for (std::uint32_t s = 1; s < full; ++s)
        sys.add_ge(indicator(s, n), w.value(Coalition(s)).lower());
    return sys;
}

bool selection_core_is_empty(const IntervalGame& w) {
    return !feasible(selection_core_system(w)).has_value();
}

std::vector<PayoffVector> selection_core_vertices(const IntervalGame& w) {
    auto out = vertices(selection_core_system(w));
    if (out.empty()) throw EmptyPolytope("selection core is empty");
    return out;
}

namespace {

// Variables (l_1..l_n, u_1..u_n) of the slack-vector system.
ConstraintSystem gen_system(const PayoffVector& x, const IntervalGame& w) {
    const int n = w.players();
    ConstraintSystem sys(2 * n);
    const std::uint32_t full = w.grand().bits();
    const Interval& grand = w.value(w.grand());

    auto lu_row = [&](std::uint32_t mask, bool upper_part) {
        RVec row = RVec::Zero(2 * n);
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1u) row(upper_part ? n + i : i) = 1;
        return row;
    };

    // x(N) - l(N) = lower(w(N)), x(N) + u(N) = upper(w(N)).
    sys.add_eq(-lu_row(full, false), grand.lower() - coalition_sum(x, w.grand()));
    sys.add_eq(lu_row(full, true), grand.upper() - coalition_sum(x, w.grand()));
    for (std::uint32_t s = 1; s <= full; ++s) {
        Coalition c(s);
        const Rational xs = coalition_sum(x, c);
        sys.add_ge(-lu_row(s, false), w.value(c).lower() - xs);
        sys.add_ge(lu_row(s, true), w.value(c).upper() - xs);
    }
    for (int j = 0; j < 2 * n; ++j) {
        RVec e = RVec::Zero(2 * n);
        e(j) = 1;
        sys.add_ge(std::move(e), Rational(0));
    }
    return sys;
}

} // namespace

bool verify_gen_certificate(const PayoffVector& x, const IntervalGame& w,
                            const GenCertificate& cert) {
    const int n = w.players();
    if (static_cast<int>(cert.l.size()) != n ||
        static_cast<int>(cert.u.size()) != n)
        return false;
    for (int i = 0; i < n; ++i)
        if (cert.l(i) < 0 || cert.u(i) < 0) return false;

    const std::uint32_t full = w.grand().bits();
    const Rational xn = coalition_sum(x, w.grand());
    if (xn - coalition_sum(cert.l, w.grand()) != w.value(w.grand()).lower())
        return false;
    if (xn + coalition_sum(cert.u, w.grand()) != w.value(w.grand()).upper())
        return false;
    for (std::uint32_t s = 1; s <= full; ++s) {
        Coalition c(s);
        const Rational xs = coalition_sum(x, c);
        if (xs - coalition_sum(cert.l, c) < w.value(c).lower()) return false;
        if (xs + coalition_sum(cert.u, c) < w.value(c).upper()) return false;
    }
    return true;
}

std::pair<bool, std::optional<GenCertificate>> gen_membership(
    const PayoffVector& x, const IntervalGame& w) {
    if (static_cast<int>(x.size()) != w.players())
        throw PlayerCountMismatch("payoff vector of wrong length");
    auto witness = feasible(gen_system(x, w));
    if (!witness) return {false, std::nullopt};

    const int n = w.players();
    GenCertificate cert{witness->head(n), witness->tail(n)};
    if (!verify_gen_certificate(x, w, cert))
        throw CoopError("gen certificate failed re-verification");
    return {true, std::move(cert)};
}

bool gen_membership_via_interval_core(const PayoffVector& x,
                                      const IntervalGame& w) {
    // Variables (lo_1..lo_n, hi_1..hi_n) of a candidate interval-core
    // element containing x componentwise.
    const int n = w.players();
    ConstraintSystem sys(2 * n);
    const std::uint32_t full = w.grand().bits();

    auto part_row = [&](std::uint32_t mask, int offset, int sign) {
        RVec row = RVec::Zero(2 * n);
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1u) row(offset + i) = sign;
        return row;
    };

    sys.add_eq(part_row(full, 0, 1), w.value(w.grand()).lower());
    sys.add_eq(part_row(full, n, 1), w.value(w.grand()).upper());
    for (std::uint32_t s = 1; s < full; ++s) {
        Coalition c(s);
        sys.add_ge(part_row(s, 0, 1), w.value(c).lower());
        sys.add_ge(part_row(s, n, 1), w.value(c).upper());
    }
    for (int i = 0; i < n; ++i) {
        RVec lo = RVec::Zero(2 * n), hi = RVec::Zero(2 * n);
        lo(i) = -1;
        hi(n + i) = 1;
        sys.add_ge(std::move(lo), -x(i)); // lo_i <= x_i
        sys.add_ge(std::move(hi), x(i));  // hi_i >= x_i
    }
    return feasible(sys).has_value();
}

bool thm_noncoincidence_test(const IntervalGame& w) {
    TuGame u = border_games(w).first;
    u.set_value(w.grand(), w.value(w.grand()).upper());
    if (core_is_empty(u)) return false;
    return !core_is_empty(border_games(w).second);
}

CoincidenceVerdict decide_core_coincidence(const IntervalGame& w) {
    CoincidenceVerdict verdict;
    try {
        if (selection_core_is_empty(w)) {
            verdict.outcome = CoincidenceVerdict::Outcome::Coincident;
            verdict.reason = CoincidenceVerdict::Reason::EmptySC;
            return verdict;
        }
        if (is_degenerate(w)) {
            verdict.outcome = CoincidenceVerdict::Outcome::Coincident;
            verdict.reason = CoincidenceVerdict::Reason::Degenerate;
            return verdict;
        }

        auto verts = selection_core_vertices(w);
        // Deterministic witness: scan in descending lexicographic order.
        std::optional<PayoffVector> failing;
        for (auto it = verts.rbegin(); it != verts.rend(); ++it) {
            if (!gen_membership(*it, w).first) {
                failing = *it;
                break;
            }
        }
        verdict.reason = CoincidenceVerdict::Reason::VertexInclusion;
        if (failing) {
            verdict.outcome = CoincidenceVerdict::Outcome::NotCoincident;
            verdict.witness = std::move(failing);
        } else {
            verdict.outcome = CoincidenceVerdict::Outcome::Coincident;
            try {
                verdict.noncoincidence_test = thm_noncoincidence_test(w);
                verdict.conflict = *verdict.noncoincidence_test;
            } catch (const BudgetExceeded&) {
            }
        }
        return verdict;
    } catch (const BudgetExceeded&) {
        verdict.outcome = CoincidenceVerdict::Outcome::Unknown;
        verdict.reason = CoincidenceVerdict::Reason::Budget;
        try {
            verdict.noncoincidence_test = thm_noncoincidence_test(w);
        } catch (const BudgetExceeded&) {
        }
        return verdict;
    }
}

} // namespace coopint
