#pragma once

// Exact linear algebra over F2 on vectors of up to 128 bits.
//
// Conventions used throughout the toolkit:
//   * bit j of a word is coordinate j of the vector (strings and matrix files
//     are written low coordinate first),
//   * a matrix is stored as n rows, row i being the image of the basis vector
//     e_i, so vectors act from the left: v * M = xor of rows i with bit i of
//     v set,
//   * subspace bases are kept in reduced row echelon form with pivot = lowest
//     set bit, rows sorted by pivot, each pivot column zero in all other
//     rows.  Two Subspace values are equal as sets iff their representations
//     are identical.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tbprim/errors.hpp"

namespace tbprim::gf2 {

using u128 = unsigned __int128;

int popcount128(u128 x);
int lowest_bit(u128 x); // -1 for zero

// Vector of fixed width n <= 128; bits at positions >= n are zero.
struct Vec2 {
    int n = 0;
    u128 bits = 0;

    Vec2() = default;
    Vec2(int width, u128 value);

    bool bit(int j) const { return (bits >> j) & 1; }
    bool operator==(const Vec2&) const = default;
};

Vec2 operator^(Vec2 a, const Vec2& b);

// "0101..." with character j = coordinate j.
std::string to_bit_string(const Vec2& v);
Vec2 vec_from_bit_string(const std::string& s);

// Canonical subspace of (F2)^n; see header comment for the basis invariants.
struct Subspace {
    int n = 0;
    std::vector<u128> rows;

    int dim() const { return static_cast<int>(rows.size()); }
    Vec2 basis(int i) const { return Vec2(n, rows[i]); }
    bool operator==(const Subspace&) const = default;
};

Subspace span(const std::vector<Vec2>& vectors, int n);
Subspace span_words(const std::vector<u128>& words, int n);
bool contains(const Subspace& U, const Vec2& v);

// All 2^dim points of U, in increasing numeric order.
std::vector<u128> points(const Subspace& U);

// n x n matrix over F2, row i = image of e_i.
struct BitMatrix {
    int n = 0;
    std::vector<u128> rows;

    static BitMatrix identity(int n);
    Vec2 apply(const Vec2& v) const;
    u128 apply_word(u128 v) const;
    bool operator==(const BitMatrix&) const = default;
};

int rank(const BitMatrix& M);
bool is_invertible(const BitMatrix& M);

// v * (a*b) == (v*a) * b
BitMatrix multiply(const BitMatrix& a, const BitMatrix& b);

Subspace image_of_subspace(const Subspace& U, const BitMatrix& M);

// Text format: n lines of n characters '0'/'1', line i = row i, character
// j = coordinate j.  Trailing newline optional.
BitMatrix matrix_from_text(const std::string& text);
std::string matrix_to_text(const BitMatrix& M);
BitMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const BitMatrix& M);

// Splits (F2)^n into s bricks of m coordinates; brick i covers coordinates
// [i*m, (i+1)*m).
struct BrickDecomposition {
    int n = 0;
    int m = 0;
    int s = 0;

    BrickDecomposition() = default;
    BrickDecomposition(int m_, int s_);

    u128 brick_mask(int i) const;
    std::uint32_t extract(u128 v, int i) const;
    u128 embed(std::uint32_t x, int i) const;
};

// Visits every subspace exactly once; the callback returns false to stop.
// For n <= 8 the order is: dimension ascending, then lexicographic on the
// concatenated basis rows.  dims, when given, restricts the dimensions
// visited (still ascending).  For n > 8 a dims filter with codimension <= 4
// is required (the enumeration then walks the dual space) and the order is
// deterministic but unsorted.
void enumerate_subspaces(int n,
                         const std::optional<std::vector<int>>& dims,
                         const std::function<bool(const Subspace&)>& visit);

std::uint64_t count_subspaces(int n, const std::optional<std::vector<int>>& dims);

} // namespace tbprim::gf2
