#include "tbprim/standard.hpp"

#include <array>
#include <cstdint>

#include "tbprim/errors.hpp"
#include "tbprim/gf2m.hpp"

namespace tbprim::standard {

namespace {

// Serpent S-boxes, Serpent AES submission, table 1.
constexpr std::array<std::array<std::uint32_t, 16>, 8> kSerpentSbox = {{
    {3, 8, 15, 1, 10, 6, 5, 11, 14, 13, 4, 2, 7, 0, 9, 12},
    {15, 12, 2, 7, 9, 0, 5, 10, 1, 11, 14, 8, 6, 13, 3, 4},
    {8, 6, 7, 9, 3, 12, 10, 15, 13, 1, 14, 4, 0, 11, 5, 2},
    {0, 15, 11, 8, 12, 9, 6, 3, 13, 1, 2, 4, 10, 7, 5, 14},
    {1, 15, 8, 3, 12, 0, 11, 6, 2, 5, 4, 10, 9, 14, 7, 13},
    {15, 5, 2, 11, 4, 10, 9, 12, 0, 3, 14, 8, 13, 6, 7, 1},
    {7, 2, 12, 5, 8, 4, 6, 11, 14, 9, 1, 15, 13, 3, 10, 0},
    {1, 13, 15, 0, 14, 8, 2, 11, 7, 4, 12, 10, 9, 3, 5, 6},
}};

std::uint32_t rotl32(std::uint32_t x, int r) {
    return (x << r) | (x >> (32 - r));
}

// Serpent linear transform on the standard state (word t = bits 32t..32t+31).
gf2::u128 serpent_lt_std(gf2::u128 v) {
    std::uint32_t x0 = std::uint32_t(v);
    std::uint32_t x1 = std::uint32_t(v >> 32);
    std::uint32_t x2 = std::uint32_t(v >> 64);
    std::uint32_t x3 = std::uint32_t(v >> 96);
    x0 = rotl32(x0, 13);
    x2 = rotl32(x2, 3);
    x1 ^= x0 ^ x2;
    x3 ^= x2 ^ (x0 << 3);
    x1 = rotl32(x1, 1);
    x3 = rotl32(x3, 7);
    x0 ^= x1 ^ x3;
    x2 ^= x3 ^ (x1 << 7);
    x0 = rotl32(x0, 5);
    x2 = rotl32(x2, 22);
    return gf2::u128(x0) | (gf2::u128(x1) << 32) | (gf2::u128(x2) << 64) | (gf2::u128(x3) << 96);
}

// Brick coordinate 4i+t <-> standard coordinate 32t+i.
gf2::u128 brick_to_std(gf2::u128 v) {
    gf2::u128 out = 0;
    for (int i = 0; i < 32; ++i)
        for (int t = 0; t < 4; ++t)
            if ((v >> (4 * i + t)) & 1)
                out |= gf2::u128(1) << (32 * t + i);
    return out;
}

gf2::u128 std_to_brick(gf2::u128 v) {
    gf2::u128 out = 0;
    for (int i = 0; i < 32; ++i)
        for (int t = 0; t < 4; ++t)
            if ((v >> (32 * t + i)) & 1)
                out |= gf2::u128(1) << (4 * i + t);
    return out;
}

} // namespace

vbf::Vbf aes_inversion_sbox() {
    return vbf::vbf_from_table(8, gf2m::patched_inverse_table(8, 0x11b));
}

vbf::Vbf inversion_sbox_m4() {
    return vbf::vbf_from_table(4, gf2m::patched_inverse_table(4, 0x13));
}

vbf::Vbf serpent_sbox(int k) {
    if (k < 0 || k >= 8)
        throw InputError("serpent_sbox: index must be in [0, 8)");
    const auto& t = kSerpentSbox[std::size_t(k)];
    return vbf::vbf_from_table(4, std::vector<std::uint32_t>(t.begin(), t.end()));
}

gf2::BitMatrix aes_layer() {
    const int n = 128;
    gf2::BitMatrix sr{n, std::vector<gf2::u128>(n, 0)};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            // Output byte (r, c) takes input byte (r, (c + r) % 4).
            int i = r + 4 * ((c + r) % 4);
            int j = r + 4 * c;
            for (int t = 0; t < 8; ++t)
                sr.rows[std::size_t(8 * i + t)] |= gf2::u128(1) << (8 * j + t);
        }
    static constexpr int kMix[4][4] = {{2, 3, 1, 1}, {1, 2, 3, 1}, {1, 1, 2, 3}, {3, 1, 1, 2}};
    gf2::BitMatrix mc{n, std::vector<gf2::u128>(n, 0)};
    for (int c = 0; c < 4; ++c)
        for (int r = 0; r < 4; ++r) {
            int i = r + 4 * c;
            for (int t = 0; t < 8; ++t) {
                gf2::u128 acc = 0;
                for (int r2 = 0; r2 < 4; ++r2) {
                    int j = r2 + 4 * c;
                    acc |= gf2::u128(gf2m::mul(std::uint32_t(kMix[r2][r]),
                                               std::uint32_t(1) << t, 0x11b, 8))
                           << (8 * j);
                }
                mc.rows[std::size_t(8 * i + t)] = acc;
            }
        }
    return gf2::multiply(sr, mc);
}

gf2::BitMatrix serpent_layer() {
    const int n = 128;
    gf2::BitMatrix out{n, std::vector<gf2::u128>(n, 0)};
    for (int c = 0; c < n; ++c)
        out.rows[std::size_t(c)] = std_to_brick(serpent_lt_std(brick_to_std(gf2::u128(1) << c)));
    return out;
}

gf2::BitMatrix toy_mix_layer() {
    gf2::BitMatrix out{8, std::vector<gf2::u128>(8, 0)};
    for (int t = 0; t < 4; ++t) {
        out.rows[std::size_t(t)] = gf2::u128(1) << (4 + t);
        out.rows[std::size_t(4 + t)] = (gf2::u128(1) << t) | (gf2::u128(1) << (4 + t));
    }
    return out;
}

gf2::BitMatrix brick_rotation(int m, int s) {
    gf2::BrickDecomposition d(m, s);
    gf2::BitMatrix out{d.n, std::vector<gf2::u128>(std::size_t(d.n), 0)};
    for (int i = 0; i < s; ++i)
        for (int t = 0; t < m; ++t)
            out.rows[std::size_t(i * m + t)] = gf2::u128(1) << (((i + 1) % s) * m + t);
    return out;
}

} // namespace tbprim::standard
