#include "coopint/oracle.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <vector>

namespace coopint {
namespace oracle {

PayoffVector shapley_by_permutations(const TuGame& v) {
    const int n = v.players();
    if (n > 8) throw BudgetExceeded("permutation oracle limited to n <= 8");

    PayoffVector acc = PayoffVector::Zero(n);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    long permutations = 0;
    do {
        Coalition formed;
        for (int player : order) {
            const Rational before = v.value(formed);
            formed = formed.with(player);
            acc(player) += v.value(formed) - before;
        }
        ++permutations;
    } while (std::next_permutation(order.begin(), order.end()));

    for (int i = 0; i < n; ++i) acc(i) /= permutations;
    return acc;
}

namespace {

struct BalancedCollection {
    std::vector<std::uint32_t> masks;
    std::vector<Rational> weights;
};

// Solves the n x k system "sum of weights of members containing player i
// equals 1"; returns the weights only when the solution is unique and
// strictly positive.
std::optional<std::vector<Rational>> balancing_weights(
    const std::vector<std::uint32_t>& masks, int n) {
    const int k = static_cast<int>(masks.size());
    std::vector<std::vector<Rational>> m(
        n, std::vector<Rational>(k + 1, Rational(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j)
            if ((masks[j] >> i) & 1u) m[i][j] = 1;
        m[i][k] = 1;
    }

    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int col = 0; col < k && row < n; ++col) {
        int pivot = -1;
        for (int r = row; r < n; ++r) {
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return std::nullopt; // free variable: not minimal
        std::swap(m[row], m[pivot]);
        const Rational p = m[row][col];
        for (int c = col; c <= k; ++c) m[row][c] /= p;
        for (int r = 0; r < n; ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational factor = m[r][col];
            for (int c = col; c <= k; ++c) m[r][c] -= factor * m[row][c];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (int r = row; r < n; ++r)
        if (m[r][k] != 0) return std::nullopt; // inconsistent

    std::vector<Rational> weights(k);
    for (int r = 0; r < static_cast<int>(pivot_col_of_row.size()); ++r)
        weights[pivot_col_of_row[r]] = m[r][k];
    for (const Rational& wgt : weights)
        if (wgt <= 0) return std::nullopt;
    return weights;
}

const std::vector<BalancedCollection>& minimal_balanced_collections(int n) {
    static std::mutex mutex;
    static std::map<int, std::vector<BalancedCollection>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<std::uint32_t> proper;
    const std::uint32_t full = (1u << n) - 1u;
    for (std::uint32_t s = 1; s < full; ++s) proper.push_back(s);

    std::vector<BalancedCollection> out;
    std::vector<std::uint32_t> masks;
    // All subsets of proper coalitions of size at most n.
    auto recurse = [&](auto&& self, std::size_t start) -> void {
        if (!masks.empty()) {
            if (auto weights = balancing_weights(masks, n))
                out.push_back({masks, std::move(*weights)});
        }
        if (static_cast<int>(masks.size()) == n) return;
        for (std::size_t i = start; i < proper.size(); ++i) {
            masks.push_back(proper[i]);
            self(self, i + 1);
            masks.pop_back();
        }
    };
    recurse(recurse, 0);
    return cache.emplace(n, std::move(out)).first->second;
}

} // namespace

bool core_empty_by_balanced_collections(const TuGame& v) {
    const int n = v.players();
    if (n > 4)
        throw BudgetExceeded("balanced-collection oracle limited to n <= 4");

    const Rational grand = v.value(v.grand());
    for (const auto& collection : minimal_balanced_collections(n)) {
        Rational total(0);
        for (std::size_t j = 0; j < collection.masks.size(); ++j)
            total +=
                collection.weights[j] * v.value(Coalition(collection.masks[j]));
        if (total > grand) return true;
    }
    return false;
}

namespace {

bool has_property(const TuGame& v, SelectionProperty property) {
    switch (property) {
        case SelectionProperty::Monotonic:
            return is_monotonic(v);
        case SelectionProperty::Supermodular:
            return is_supermodular(v);
        case SelectionProperty::Superadditive:
            return is_superadditive(v);
        case SelectionProperty::NonemptyCore:
            return !core_empty_by_balanced_collections(v);
    }
    return false;
}

} // namespace

bool selection_property_by_enumeration(const IntervalGame& w,
                                       SelectionProperty property,
                                       int interior_samples,
                                       std::uint64_t seed) {
    bool holds = true;
    for_each_corner_selection(w, [&](const TuGame& v) {
        if (holds && !has_property(v, property)) holds = false;
    });
    if (!holds) return false;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> step(1, 15);
    const std::uint32_t full = w.grand().bits();
    TuGame v(w.players());
    for (int k = 0; k < interior_samples; ++k) {
        for (std::uint32_t s = 1; s <= full; ++s) {
            Coalition c(s);
            const Interval& iv = w.value(c);
            Rational t(step(rng), 16);
            t.canonicalize();
            v.set_value(c, iv.lower() + t * length(iv));
        }
        if (!has_property(v, property)) return false;
    }
    return true;
}

} // namespace oracle
} // namespace coopint
