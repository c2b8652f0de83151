#pragma once

// Just enough GF(2^m) arithmetic for the subfield verifier and for building
// inversion S-boxes: shift-and-reduce multiply, square-and-multiply power,
// inverse as x^(2^m - 2).  Moduli are degree-m bit patterns (bit i = x^i).

#include <cstdint>
#include <vector>

namespace tbprim::gf2m {

std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, int m);
std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t modulus, int m);
std::uint32_t inverse(std::uint32_t a, std::uint32_t modulus, int m); // inverse(0) == 0

bool is_irreducible(std::uint32_t poly, int m);
std::uint32_t default_modulus(int m); // smallest irreducible bit pattern of degree m

// table[x] = x^(2^m - 2), the patched inverse (0 -> 0)
std::vector<std::uint32_t> patched_inverse_table(int m, std::uint32_t modulus);

} // namespace tbprim::gf2m
