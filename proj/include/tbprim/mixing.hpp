#pragma once

// Properness of a mixing layer: no sum of bricks other than {0} and the full
// space may be carried onto itself by the layer.
//
// Fast route: build the digraph on brick indices with an edge i -> j whenever
// the projection of lambda(V_i) onto V_j is nonzero.  lambda(V_i) lies exactly
// inside the sum of its out-neighbours, so a brick-sum over an index set I is
// carried into itself iff I is closed under out-edges; an invertible layer
// then forces equality (images keep dimension, and a subspace containing an
// equal-dimension image of itself equals it).  Hence: proper iff the digraph
// is strongly connected.  A non-proper layer yields a witness index set from
// a terminal strongly connected component.
//
// Slow route (is_proper_naive): enumerate every nonempty proper subset of
// bricks and test image_of_subspace directly.  Kept deliberately separate as
// a cross-check; never fold the two together.

#include <vector>

#include "tbprim/gf2.hpp"

namespace tbprim::mixing {

struct BrickDigraph {
    int s = 0;
    std::vector<std::vector<int>> out; // sorted adjacency per brick
};

BrickDigraph brick_digraph(const gf2::BitMatrix& layer, const gf2::BrickDecomposition& d);

struct PropernessResult {
    bool proper = false;
    std::vector<int> witness; // invariant brick index set when not proper
};

// Digraph route; layer must be invertible.
PropernessResult is_proper(const gf2::BitMatrix& layer, const gf2::BrickDecomposition& d);

// Subset-enumeration route; layer must be invertible, s <= 20.
PropernessResult is_proper_naive(const gf2::BitMatrix& layer, const gf2::BrickDecomposition& d);

} // namespace tbprim::mixing
