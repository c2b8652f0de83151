#include "tbprim/mixing.hpp"

#include <algorithm>

#include "tbprim/errors.hpp"

namespace tbprim::mixing {

namespace {

void require_compatible(const gf2::BitMatrix& layer, const gf2::BrickDecomposition& d) {
    if (layer.n != d.n)
        throw InputError("mixing: layer dimension does not match brick decomposition");
}

void require_invertible(const gf2::BitMatrix& layer) {
    if (!gf2::is_invertible(layer))
        throw InputError("mixing: layer must be invertible");
}

std::vector<int> mask_to_indices(gf2::u128 mask) {
    std::vector<int> out;
    while (mask) {
        int j = gf2::lowest_bit(mask);
        out.push_back(j);
        mask &= mask - 1;
    }
    return out;
}

} // namespace

BrickDigraph brick_digraph(const gf2::BitMatrix& layer, const gf2::BrickDecomposition& d) {
    require_compatible(layer, d);
    BrickDigraph g;
    g.s = d.s;
    g.out.assign(d.s, {});
    for (int i = 0; i < d.s; ++i) {
        gf2::u128 support = 0;
        for (int t = 0; t < d.m; ++t)
            support |= layer.apply_word(gf2::u128(1) << (i * d.m + t));
        for (int j = 0; j < d.s; ++j)
            if (support & d.brick_mask(j))
                g.out[i].push_back(j);
    }
    return g;
}

PropernessResult is_proper(const gf2::BitMatrix& layer, const gf2::BrickDecomposition& d) {
    require_compatible(layer, d);
    require_invertible(layer);
    BrickDigraph g = brick_digraph(layer, d);
    const int s = g.s;

    std::vector<gf2::u128> adj(s, 0), radj(s, 0);
    for (int i = 0; i < s; ++i)
        for (int j : g.out[i]) {
            adj[i] |= gf2::u128(1) << j;
            radj[j] |= gf2::u128(1) << i;
        }

    auto closure = [s](const std::vector<gf2::u128>& edges, int start) {
        gf2::u128 seen = gf2::u128(1) << start;
        gf2::u128 frontier = seen;
        while (frontier) {
            gf2::u128 next = 0;
            while (frontier) {
                int j = gf2::lowest_bit(frontier);
                frontier &= frontier - 1;
                next |= edges[j];
            }
            frontier = next & ~seen;
            seen |= next;
        }
        return seen;
    };

    std::vector<gf2::u128> reach(s), rreach(s);
    for (int i = 0; i < s; ++i) {
        reach[i] = closure(adj, i);
        rreach[i] = closure(radj, i);
    }

    const gf2::u128 full = (s == 128) ? ~gf2::u128(0) : ((gf2::u128(1) << s) - 1);
    PropernessResult res;
    if ((reach[0] & rreach[0]) == full) {
        res.proper = true;
        return res;
    }
    // Terminal strongly connected component: reachable set equals the
    // component itself.  One always exists; smallest member index wins.
    for (int i = 0; i < s; ++i) {
        if ((reach[i] & ~rreach[i]) == 0) {
            res.witness = mask_to_indices(reach[i]);
            return res;
        }
    }
    throw std::logic_error("mixing: no terminal component found"); // unreachable
}

PropernessResult is_proper_naive(const gf2::BitMatrix& layer, const gf2::BrickDecomposition& d) {
    require_compatible(layer, d);
    require_invertible(layer);
    if (d.s > 20)
        throw CapacityError("mixing: naive properness check limited to 20 bricks");

    PropernessResult res;
    const std::uint32_t top = std::uint32_t(1) << d.s;
    for (std::uint32_t mask = 1; mask + 1 < top; ++mask) {
        std::vector<gf2::u128> rows;
        for (int i = 0; i < d.s; ++i)
            if (mask & (std::uint32_t(1) << i))
                for (int t = 0; t < d.m; ++t)
                    rows.push_back(gf2::u128(1) << (i * d.m + t));
        gf2::Subspace u = gf2::span_words(rows, d.n);
        if (gf2::image_of_subspace(u, layer) == u) {
            res.witness = mask_to_indices(mask);
            return res;
        }
    }
    res.proper = true;
    return res;
}

} // namespace tbprim::mixing
