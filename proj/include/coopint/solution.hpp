#pragma once

#include <optional>
#include <vector>

#include "coopint/exactgeom.hpp"
#include "coopint/intgame.hpp"
#include "coopint/interval.hpp"
#include "coopint/tugame.hpp"

namespace coopint {

// Nonnegative slack vectors certifying membership of a payoff vector in
// gen of the interval core.
struct GenCertificate {
    RVec l, u;
};

bool selection_imputation_membership(const PayoffVector& x,
                                     const IntervalGame& w);

bool selection_core_membership(const PayoffVector& x, const IntervalGame& w);

bool interval_imputation_membership(const IntervalVector& iv,
                                    const IntervalGame& w);

bool interval_core_membership(const IntervalVector& iv, const IntervalGame& w);

// H-representation of the selection core: a slab on x(N) plus lower
// bounds on every proper coalition sum.
ConstraintSystem selection_core_system(const IntervalGame& w);

bool selection_core_is_empty(const IntervalGame& w);

// Throws EmptyPolytope when the selection core is empty.
std::vector<PayoffVector> selection_core_vertices(const IntervalGame& w);

// Membership of x in gen of the interval core, decided through the
// slack-vector system; the certificate is re-verified before return.
std::pair<bool, std::optional<GenCertificate>> gen_membership(
    const PayoffVector& x, const IntervalGame& w);

// Same membership decided through existence of a containing
// interval-core element; used to cross-check gen_membership.
bool gen_membership_via_interval_core(const PayoffVector& x,
                                      const IntervalGame& w);

bool verify_gen_certificate(const PayoffVector& x, const IntervalGame& w,
                            const GenCertificate& cert);

// Sufficient condition for non-coincidence: both the lower game with the
// upper grand value and the upper border game have nonempty cores.
bool thm_noncoincidence_test(const IntervalGame& w);

struct CoincidenceVerdict {
    enum class Outcome { Coincident, NotCoincident, Unknown };
    enum class Reason { EmptySC, Degenerate, VertexInclusion, Budget };

    Outcome outcome = Outcome::Unknown;
    Reason reason = Reason::Budget;
    std::optional<PayoffVector> witness;     // NotCoincident only
    std::optional<bool> noncoincidence_test; // heuristic flag, when computed
    // True when the sufficient non-coincidence test fired although the
    // exact vertex check proved coincidence; both results are reported.
    bool conflict = false;
};

CoincidenceVerdict decide_core_coincidence(const IntervalGame& w);

} // namespace coopint
