#include "coopint/tugame.hpp"

namespace coopint {

namespace {

void check_players(int n) {
    if (n < 1 || n > kMaxPlayers)
        throw InvalidParameter("player count must be in 1.." +
                               std::to_string(kMaxPlayers));
}

} // namespace

TuGame::TuGame(int n) : n_(n) {
    check_players(n);
    values_.assign(std::size_t(1) << n, Rational(0));
}

TuGame::TuGame(int n, std::vector<Rational> values) : n_(n), values_(std::move(values)) {
    check_players(n);
    if (values_.size() != (std::size_t(1) << n))
        throw InvalidParameter("characteristic function has wrong size");
    if (values_[0] != 0)
        throw InvalidParameter("v(empty) must be 0");
}

void TuGame::set_value(Coalition s, Rational v) {
    if (s.is_empty() && v != 0)
        throw InvalidParameter("v(empty) must be 0");
    values_[s.bits()] = std::move(v);
}

TuGame operator+(const TuGame& a, const TuGame& b) {
    if (a.players() != b.players())
        throw PlayerCountMismatch("game addition needs identical player sets");
    TuGame out(a.players());
    const std::uint32_t full = Coalition::full(a.players()).bits();
    for (std::uint32_t s = 1; s <= full; ++s) {
        Coalition c(s);
        out.set_value(c, a.value(c) + b.value(c));
    }
    return out;
}

TuGame additive_game(const std::vector<Rational>& per_player) {
    TuGame out(static_cast<int>(per_player.size()));
    const std::uint32_t full = out.grand().bits();
    for (std::uint32_t s = 1; s <= full; ++s) {
        Rational acc(0);
        for (int i = 0; i < out.players(); ++i)
            if ((s >> i) & 1u) acc += per_player[i];
        out.set_value(Coalition(s), acc);
    }
    return out;
}

std::optional<PairWitness> monotonicity_violation(const TuGame& v) {
    const std::uint32_t full = v.grand().bits();
    for (std::uint32_t t = 0; t <= full; ++t) {
        for (std::uint32_t s = t; s <= full; ++s) {
            if ((t & ~s) != 0) continue; // need T subset of S
            if (v.value(Coalition(t)) > v.value(Coalition(s)))
                return PairWitness{Coalition(s), Coalition(t)};
        }
    }
    return std::nullopt;
}

std::optional<PairWitness> supermodularity_violation(const TuGame& v) {
    const std::uint32_t full = v.grand().bits();
    for (std::uint32_t s = 0; s <= full; ++s) {
        for (std::uint32_t t = s; t <= full; ++t) {
            Coalition cs(s), ct(t);
            if (v.value(cs) + v.value(ct) >
                v.value(cs | ct) + v.value(cs & ct))
                return PairWitness{cs, ct};
        }
    }
    return std::nullopt;
}

std::optional<PairWitness> superadditivity_violation(const TuGame& v) {
    const std::uint32_t full = v.grand().bits();
    for (std::uint32_t s = 1; s <= full; ++s) {
        for (std::uint32_t t = s + 1; t <= full; ++t) {
            if ((s & t) != 0) continue;
            Coalition cs(s), ct(t);
            if (v.value(cs) + v.value(ct) > v.value(cs | ct))
                return PairWitness{cs, ct};
        }
    }
    return std::nullopt;
}

Rational coalition_sum(const PayoffVector& x, Coalition s) {
    Rational acc(0);
    for (int i = 0; i < static_cast<int>(x.size()); ++i)
        if (s.contains(i)) acc += x(i);
    return acc;
}

Rational shapley_weight(int coalition_size, int n) {
    mpz_class num_a, num_b, den;
    mpz_fac_ui(num_a.get_mpz_t(), static_cast<unsigned long>(coalition_size));
    mpz_fac_ui(num_b.get_mpz_t(),
               static_cast<unsigned long>(n - coalition_size - 1));
    mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(n));
    Rational w(num_a * num_b, den);
    w.canonicalize();
    return w;
}

PayoffVector shapley(const TuGame& v) {
    const int n = v.players();
    PayoffVector phi = PayoffVector::Zero(n);
    const std::uint32_t full = v.grand().bits();
    for (int i = 0; i < n; ++i) {
        for (std::uint32_t s = 0; s <= full; ++s) {
            if ((s >> i) & 1u) continue;
            Coalition cs(s);
            phi(i) += shapley_weight(cs.size(), n) *
                      (v.value(cs.with(i)) - v.value(cs));
        }
    }
    return phi;
}

Rational excess(const PayoffVector& x, Coalition s, const TuGame& v) {
    return coalition_sum(x, s) - v.value(s);
}

bool core_membership(const PayoffVector& x, const TuGame& v) {
    if (static_cast<int>(x.size()) != v.players()) return false;
    const std::uint32_t full = v.grand().bits();
    if (coalition_sum(x, v.grand()) != v.value(v.grand())) return false;
    for (std::uint32_t s = 1; s < full; ++s) {
        Coalition cs(s);
        if (coalition_sum(x, cs) < v.value(cs)) return false;
    }
    return true;
}

ConstraintSystem core_system(const TuGame& v) {
    const int n = v.players();
    ConstraintSystem sys(n);
    const std::uint32_t full = v.grand().bits();
    auto indicator = [n](std::uint32_t s) {
        RVec row = RVec::Zero(n);
        for (int i = 0; i < n; ++i)
            if ((s >> i) & 1u) row(i) = 1;
        return row;
    };
    sys.add_eq(indicator(full), v.value(v.grand()));
    for (std::uint32_t s = 1; s < full; ++s)
        sys.add_ge(indicator(s), v.value(Coalition(s)));
    return sys;
}

bool core_is_empty(const TuGame& v) {
    return !feasible(core_system(v)).has_value();
}

std::vector<PayoffVector> core_vertices(const TuGame& v) {
    auto out = vertices(core_system(v));
    if (out.empty()) throw EmptyPolytope("core is empty");
    return out;
}

} // namespace coopint
