#include "sim/symmetry.hpp"

#include <algorithm>
#include <vector>

namespace sim {

Permutation::Permutation(const std::array<int, kVertexCount>& images) {
    std::uint8_t seen = 0;
    for (int i = 0; i < kVertexCount; ++i) {
        const int v = images[i];
        if (v < 0 || v >= kVertexCount || ((seen >> v) & 1u))
            throw InvalidArgument("not a permutation of {0..5}");
        seen |= static_cast<std::uint8_t>(1u << v);
        images_[i] = static_cast<std::uint8_t>(v);
    }
}

Permutation Permutation::transposition(int a, int b) {
    std::array<int, kVertexCount> img{0, 1, 2, 3, 4, 5};
    if (a < 0 || a >= kVertexCount || b < 0 || b >= kVertexCount)
        throw InvalidArgument("vertex out of range");
    std::swap(img[a], img[b]);
    return Permutation(img);
}

EdgeId Permutation::operator()(EdgeId e) const noexcept {
    auto [u, v] = e.endpoints();
    return EdgeId(detail::kEdgeTables.index[images_[u]][images_[v]]);
}

namespace {

// Per-permutation lookup of a 15-bit edge mask, split into low 8 and high 7 bits.
struct MaskTables {
    std::array<Permutation, kPermutationCount> perms;
    std::array<std::array<std::uint16_t, 256>, kPermutationCount> low;
    std::array<std::array<std::uint16_t, 128>, kPermutationCount> high;
};

std::uint16_t map_mask_slow(const std::array<std::uint8_t, kEdgeCount>& edge_image, unsigned mask) {
    std::uint16_t out = 0;
    for (int e = 0; e < kEdgeCount; ++e)
        if ((mask >> e) & 1u) out |= static_cast<std::uint16_t>(1u << edge_image[e]);
    return out;
}

const MaskTables& mask_tables() {
    // ~550 KB; heap-allocated once, never freed.
    static const MaskTables& tables = *[] {
        auto* tp = new MaskTables{};
        MaskTables& t = *tp;
        std::array<int, kVertexCount> img{0, 1, 2, 3, 4, 5};
        int k = 0;
        do {
            t.perms[k] = Permutation(img);
            std::array<std::uint8_t, kEdgeCount> edge_image{};
            for (int e = 0; e < kEdgeCount; ++e)
                edge_image[e] = static_cast<std::uint8_t>(t.perms[k](EdgeId(e)).index());
            for (unsigned m = 0; m < 256; ++m) t.low[k][m] = map_mask_slow(edge_image, m);
            for (unsigned m = 0; m < 128; ++m) t.high[k][m] = map_mask_slow(edge_image, m << 8);
            ++k;
        } while (std::next_permutation(img.begin(), img.end()));
        return tp;
    }();
    return tables;
}

inline std::uint16_t map_mask(const MaskTables& t, int k, std::uint16_t m) noexcept {
    return static_cast<std::uint16_t>(t.low[k][m & 0xFFu] | t.high[k][m >> 8]);
}

}  // namespace

EdgeSet Permutation::operator()(EdgeSet s) const noexcept {
    EdgeSet out;
    for (EdgeId e : s) out = out.with((*this)(e));
    return out;
}

VertexSet Permutation::operator()(VertexSet s) const noexcept {
    std::uint8_t m = 0;
    for (int v : s) m |= static_cast<std::uint8_t>(1u << images_[v]);
    return VertexSet(m);
}

Permutation Permutation::inverse() const noexcept {
    Permutation out;
    for (int i = 0; i < kVertexCount; ++i) out.images_[images_[i]] = static_cast<std::uint8_t>(i);
    return out;
}

Permutation compose(const Permutation& outer, const Permutation& inner) noexcept {
    Permutation out;
    for (int i = 0; i < kVertexCount; ++i) out.images_[i] = outer.images_[inner.images_[i]];
    return out;
}

std::span<const Permutation, kPermutationCount> all_permutations() noexcept {
    return std::span<const Permutation, kPermutationCount>(mask_tables().perms);
}

Position apply_permutation(const Position& p, const Permutation& sigma) noexcept {
    return {sigma(p.red), sigma(p.blue)};
}

CanonicalForm canonical_form(const Position& p) noexcept {
    const MaskTables& t = mask_tables();
    const std::uint16_t red = p.red.mask();
    const std::uint16_t blue = p.blue.mask();
    std::uint32_t best = ~0u;
    int best_k = 0;
    for (int k = 0; k < kPermutationCount; ++k) {
        const std::uint32_t packed = (static_cast<std::uint32_t>(map_mask(t, k, red)) << 16) | map_mask(t, k, blue);
        if (packed < best) {
            best = packed;
            best_k = k;
        }
    }
    return {CanonicalKey{static_cast<std::uint16_t>(best >> 16), static_cast<std::uint16_t>(best & 0xFFFFu)},
            t.perms[best_k]};
}

CanonicalKey canonical_key(const Position& p) noexcept {
    return canonical_form(p).key;
}

bool colored_isomorphic(const Position& p, VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return false;
    std::vector<int> src(a.begin(), a.end());
    std::vector<int> dst(b.begin(), b.end());

    auto color_of = [&](int u, int v) {
        const EdgeId e = EdgeId::between(u, v);
        return p.red.contains(e) ? 1 : p.blue.contains(e) ? 2 : 0;
    };

    do {
        bool ok = true;
        for (std::size_t i = 0; ok && i < src.size(); ++i)
            for (std::size_t j = i + 1; ok && j < src.size(); ++j)
                ok = color_of(src[i], src[j]) == color_of(dst[i], dst[j]);
        if (ok) return true;
    } while (std::next_permutation(dst.begin(), dst.end()));
    return false;
}

}  // namespace sim
