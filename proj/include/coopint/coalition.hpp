#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "coopint/errors.hpp"

namespace coopint {

inline constexpr int kMaxPlayers = 16;

// Subset of players 0..n-1 encoded as a bitmask. Player indices are
// 0-based internally; the file format uses 1-based indices.
class Coalition {
public:
    constexpr Coalition() : bits_(0) {}
    constexpr explicit Coalition(std::uint32_t bits) : bits_(bits) {}

    static constexpr Coalition empty() { return Coalition(0); }
    static constexpr Coalition single(int player) {
        return Coalition(1u << player);
    }
    static constexpr Coalition full(int n) {
        return Coalition((1u << n) - 1u);
    }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool is_empty() const { return bits_ == 0; }
    int size() const { return std::popcount(bits_); }

    constexpr bool contains(int player) const {
        return (bits_ >> player) & 1u;
    }
    constexpr Coalition with(int player) const {
        return Coalition(bits_ | (1u << player));
    }
    constexpr Coalition without(int player) const {
        return Coalition(bits_ & ~(1u << player));
    }
    constexpr bool subset_of(Coalition other) const {
        return (bits_ & ~other.bits_) == 0;
    }

    friend constexpr Coalition operator|(Coalition a, Coalition b) {
        return Coalition(a.bits_ | b.bits_);
    }
    friend constexpr Coalition operator&(Coalition a, Coalition b) {
        return Coalition(a.bits_ & b.bits_);
    }
    friend constexpr bool operator==(Coalition a, Coalition b) {
        return a.bits_ == b.bits_;
    }
    friend constexpr bool operator!=(Coalition a, Coalition b) {
        return a.bits_ != b.bits_;
    }
    // Increasing bitmask order; used everywhere reports need determinism.
    friend constexpr bool operator<(Coalition a, Coalition b) {
        return a.bits_ < b.bits_;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        for (int i = 0; i < kMaxPlayers; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

private:
    std::uint32_t bits_;
};

// "1,3" style key with strictly increasing 1-based indices.
std::string coalition_key(Coalition s);
Coalition parse_coalition_key(const std::string& key, int n);

} // namespace coopint
