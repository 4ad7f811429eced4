#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "sim/board.hpp"

namespace sim {

inline constexpr int kPermutationCount = 720;

// Bijection on {0..5}; slot i holds the image of vertex i.
class Permutation {
public:
    constexpr Permutation() noexcept : images_{0, 1, 2, 3, 4, 5} {}
    // Throws InvalidArgument unless `images` is a bijection on {0..5}.
    explicit Permutation(const std::array<int, kVertexCount>& images);

    static constexpr Permutation identity() noexcept { return {}; }
    static Permutation transposition(int a, int b);

    constexpr int operator()(int v) const noexcept { return images_[v]; }
    EdgeId operator()(EdgeId e) const noexcept;
    EdgeSet operator()(EdgeSet s) const noexcept;
    VertexSet operator()(VertexSet s) const noexcept;

    Permutation inverse() const noexcept;

    constexpr bool operator==(const Permutation&) const = default;

private:
    std::array<std::uint8_t, kVertexCount> images_;
    friend Permutation compose(const Permutation& outer, const Permutation& inner) noexcept;
};

// (outer ∘ inner)(v) = outer(inner(v))
Permutation compose(const Permutation& outer, const Permutation& inner) noexcept;

// All 720 permutations in lexicographic order of their image arrays.
std::span<const Permutation, kPermutationCount> all_permutations() noexcept;

Position apply_permutation(const Position& p, const Permutation& sigma) noexcept;

// Orbit minimum of (red_mask, blue_mask), red compared first.
struct CanonicalKey {
    std::uint16_t red_mask = 0;
    std::uint16_t blue_mask = 0;

    constexpr std::uint32_t packed() const noexcept {
        return (static_cast<std::uint32_t>(red_mask) << 16) | blue_mask;
    }
    constexpr Position representative() const noexcept {
        return {EdgeSet(red_mask), EdgeSet(blue_mask)};
    }
    std::string to_text() const { return format_position(representative()); }

    constexpr auto operator<=>(const CanonicalKey&) const = default;
};

CanonicalKey canonical_key(const Position& p) noexcept;

// Key plus one permutation taking `p` onto the representative.
struct CanonicalForm {
    CanonicalKey key;
    Permutation to_canonical;
};

CanonicalForm canonical_form(const Position& p) noexcept;

// Color-preserving bijection a -> b between the induced colored subgraphs
// (red to red, blue to blue, uncolored to uncolored). Brute force.
bool colored_isomorphic(const Position& p, VertexSet a, VertexSet b);

}  // namespace sim
