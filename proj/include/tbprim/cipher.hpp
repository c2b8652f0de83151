#pragma once

// Translation-based cipher descriptions and the primitivity certifier.
//
// A round applies s parallel m-bit S-box bricks, then an invertible mixing
// layer, then xors the round key.  The certifier searches for one round whose
// layer is proper and whose bricks, after an output translation fixing 0, are
// all weakly 2^r-uniform and strongly r-anti-invariant for some 1 <= r < m/2.
// Such a round makes the group generated by its keyed instances primitive,
// and every group containing a primitive subgroup is itself primitive, so the
// certificate covers the whole cipher.
//
// Spec files are JSON: { "name": ..., "m": ..., "s": ...,
//   "rounds": [ { "sboxes": [paths], "layer": path }, ... ] }.
// S-box and matrix paths are resolved relative to the spec file.  A single
// entry in "sboxes" is broadcast to all s bricks.

#include <cstdint>
#include <string>
#include <vector>

#include "tbprim/gf2.hpp"
#include "tbprim/vbf.hpp"

namespace tbprim::cipher {

struct Round {
    std::vector<vbf::Vbf> sboxes; // s permutations on m bits
    gf2::BitMatrix layer;         // invertible n x n
};

struct TbCipherSpec {
    std::string name;
    gf2::BrickDecomposition bricks;
    std::vector<Round> rounds;

    int n() const { return bricks.n; }
    int m() const { return bricks.m; }
    int s() const { return bricks.s; }
};

TbCipherSpec load_spec(const std::string& path);

// Bricks, then layer, then key xor; v and k must fit in n bits.
gf2::u128 apply_round(const TbCipherSpec& spec, int h, gf2::u128 v, gf2::u128 k);

// Round h with zero key tabulated over all 2^n states; n <= 20.
std::vector<std::uint32_t> round_table(const TbCipherSpec& spec, int h);

struct BrickEvidence {
    int brick = 0;
    std::uint32_t constant = 0;       // output translation applied before analysis
    int min_derivative_image = 0;
    bool weakly_uniform = false;      // for delta = 2^r of the certificate
    int strong_degree = 0;            // exact when strong_exact, else a lower bound
    bool strong_exact = false;
};

struct CertifyAttempt {
    int round = -1;
    int r = 0; // 0 when the layer already fails
    std::string failure;
};

struct Certificate {
    bool primitive = false;
    int round = -1; // certifying round
    int r = 0;
    std::vector<BrickEvidence> evidence;  // bricks of the certifying round
    std::vector<CertifyAttempt> attempts; // failures, in scan order
};

// Scans rounds in order and r = 1 .. min(max_r, ceil(m/2) - 1) ascending
// within each round; the first success wins.  max_r = 0 means no extra cap.
// A negative outcome is "not certified", never "imprimitive".
Certificate certify(const TbCipherSpec& spec, int max_r = 0);

// Exhaustively checks that round h maps every coset of U onto a coset of U
// (translations do so automatically), i.e. the cosets of U form a block
// system of the group generated by round h with all keys.  Requires
// 0 < dim U < n and n <= 20.
bool verify_block_witness(const TbCipherSpec& spec, int h, const gf2::Subspace& U);

} // namespace tbprim::cipher
