#pragma once

#include <cstdint>

#include "coopint/intgame.hpp"
#include "coopint/tugame.hpp"

namespace coopint {
namespace oracle {

// Average marginal contribution over all n! player orders; n <= 8.
PayoffVector shapley_by_permutations(const TuGame& v);

// Bondareva-Shapley style certificate search: true iff some minimal
// balanced collection of proper coalitions has total weighted worth
// exceeding v(N); n <= 4.
bool core_empty_by_balanced_collections(const TuGame& v);

enum class SelectionProperty { Monotonic, Supermodular, Superadditive, NonemptyCore };

// True iff the property holds for every corner selection and for
// `interior_samples` seeded random interior selections.
bool selection_property_by_enumeration(const IntervalGame& w,
                                       SelectionProperty property,
                                       int interior_samples,
                                       std::uint64_t seed = 20240901);

} // namespace oracle
} // namespace coopint
