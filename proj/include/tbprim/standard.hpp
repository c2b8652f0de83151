#pragma once

// Reference S-boxes and mixing layers used by the fixtures and tests:
// the patched-inversion S-box cores, the AES linear round layer, the
// Serpent linear transform, and two small layers for 8-bit toy ciphers.

#include "tbprim/gf2.hpp"
#include "tbprim/vbf.hpp"

namespace tbprim::standard {

// Patched inversion x -> x^(2^m - 2) over GF(2^m), 0 -> 0.
// m = 8 uses the FIPS-197 modulus x^8+x^4+x^3+x+1, the nonlinear core of
// the AES S-box; m = 4 uses x^4+x+1.
vbf::Vbf aes_inversion_sbox();
vbf::Vbf inversion_sbox_m4();

// Serpent S-box k (0..7), from the Serpent AES submission.
vbf::Vbf serpent_sbox(int k);

// AES round layer ShiftRows followed by MixColumns as a 128x128 matrix.
// State byte i = row + 4*col, bit 8*i+t is coefficient t of the byte.
gf2::BitMatrix aes_layer();

// Serpent linear transform as a 128x128 matrix in brick coordinates:
// brick coordinate 4*i+t is bit i of 32-bit word t of the standard state.
gf2::BitMatrix serpent_layer();

// n = 8, two 4-bit bricks: (v0, v1) -> (v1, v0 ^ v1).
gf2::BitMatrix toy_mix_layer();

// Brick i -> brick (i+1) mod s, identity within each brick.
gf2::BitMatrix brick_rotation(int m, int s);

} // namespace tbprim::standard
