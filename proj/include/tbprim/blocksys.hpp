#pragma once

// Ground-truth block system search for small groups, independent of the
// algebraic certifier.  The group is generated by one or more permutations of
// (F2)^n together with all 2^n translations (the latter are implicit).
//
// For a seed w, the minimal block system whose block of 0 contains {0, w} is
// computed by union-find: merge 0 with w, then propagate every merged pair
// through every generator until stable.  The group is primitive iff every
// seed collapses to the full set.

#include <cstdint>
#include <functional>
#include <vector>

#include "tbprim/cipher.hpp"

namespace tbprim::blocksys {

struct GeneratorSet {
    int n = 0;
    // Explicit generators; translations by every basis vector are implicit.
    std::vector<std::function<std::uint32_t(std::uint32_t)>> maps;
};

// The keyed round h as a generator set (zero-key round; the keys themselves
// are the translations).
GeneratorSet round_generators(const cipher::TbCipherSpec& spec, int h);

// Block of 0, sorted ascending; size 2^n means the seed collapses everything.
// n <= 16.
std::vector<std::uint32_t> minimal_block(const GeneratorSet& g, std::uint32_t w);

struct BlockSystemResult {
    std::uint32_t seed = 0; // smallest w producing this system
    std::uint32_t block_size = 0;
    std::uint32_t block_count = 0;
    std::vector<std::uint32_t> block_zero;
    bool is_subspace = false;
};

struct PrimitivityScan {
    int n = 0;
    bool primitive = false;
    std::vector<BlockSystemResult> systems; // distinct nontrivial systems, first-seed order
};

// Tries every seed w in [1, 2^n); n <= 12.
PrimitivityScan primitivity_scan(const GeneratorSet& g);

} // namespace tbprim::blocksys
