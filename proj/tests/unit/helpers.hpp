#pragma once

// Shared test utilities: fixture paths, deterministic shuffles, and the
// point-set subspace oracle used to cross-check the algebraic code.  The
// oracle works on bitmasks over the 2^n points and never touches the RREF
// machinery it is checking.

#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

inline std::string fixtures_dir() {
    const char* env = std::getenv("TBPRIM_FIXTURES");
    if (!env || !*env)
        throw std::runtime_error("TBPRIM_FIXTURES is not set");
    return env;
}

inline std::string fixture(const std::string& name) { return fixtures_dir() + "/" + name; }

// Deterministic Fisher-Yates (modulo draws, not std::shuffle).
template <typename T>
void test_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[rng() % i]);
}

inline std::vector<std::uint32_t> random_permutation(std::uint32_t size, std::uint64_t seed) {
    std::vector<std::uint32_t> p(size);
    for (std::uint32_t i = 0; i < size; ++i)
        p[i] = i;
    std::mt19937_64 rng(seed);
    test_shuffle(p, rng);
    return p;
}

// Permutation with p[0] == 0.
inline std::vector<std::uint32_t> random_permutation_fixing_zero(std::uint32_t size,
                                                                 std::uint64_t seed) {
    std::vector<std::uint32_t> tail(size - 1);
    for (std::uint32_t i = 0; i + 1 < size; ++i)
        tail[i] = i + 1;
    std::mt19937_64 rng(seed);
    test_shuffle(tail, rng);
    std::vector<std::uint32_t> p{0};
    p.insert(p.end(), tail.begin(), tail.end());
    return p;
}

// Involution fixing 0: pair up the shuffled nonzero points.
inline std::vector<std::uint32_t> random_involution(std::uint32_t size, std::uint64_t seed) {
    std::vector<std::uint32_t> pts(size - 1);
    for (std::uint32_t i = 0; i + 1 < size; ++i)
        pts[i] = i + 1;
    std::mt19937_64 rng(seed);
    test_shuffle(pts, rng);
    std::vector<std::uint32_t> f(size);
    for (std::uint32_t i = 0; i < size; ++i)
        f[i] = i;
    for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
        f[pts[i]] = pts[i + 1];
        f[pts[i + 1]] = pts[i];
    }
    return f;
}

// All subspaces of (F2)^n as point masks (bit x set <=> x in the subspace),
// grown by closure: every subspace of dimension k+1 is <S, v> for a
// dimension-k subspace S and a point v outside it.  n <= 5.
inline std::vector<std::set<std::uint64_t>> subspace_masks_by_dim(int n) {
    if (n < 1 || n > 5)
        throw std::runtime_error("subspace_masks_by_dim supports n in [1, 5]");
    const std::uint32_t size = std::uint32_t(1) << n;
    std::vector<std::set<std::uint64_t>> by_dim(std::size_t(n) + 1);
    by_dim[0].insert(1); // { 0 }
    for (int k = 0; k < n; ++k) {
        for (std::uint64_t mask : by_dim[std::size_t(k)]) {
            for (std::uint32_t v = 1; v < size; ++v) {
                if ((mask >> v) & 1)
                    continue;
                std::uint64_t grown = mask;
                for (std::uint32_t x = 0; x < size; ++x)
                    if ((mask >> x) & 1)
                        grown |= std::uint64_t(1) << (x ^ v);
                by_dim[std::size_t(k) + 1].insert(grown);
            }
        }
    }
    return by_dim;
}

inline bool mask_closed_under_xor(std::uint64_t mask, int n) {
    const std::uint32_t size = std::uint32_t(1) << n;
    if (!(mask & 1))
        return false;
    for (std::uint32_t a = 0; a < size; ++a) {
        if (!((mask >> a) & 1))
            continue;
        for (std::uint32_t b = a; b < size; ++b)
            if (((mask >> b) & 1) && !((mask >> (a ^ b)) & 1))
                return false;
    }
    return true;
}

// Gaussian binomial [n choose k]_2, exact for n <= 12.
inline std::uint64_t gaussian_binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    unsigned __int128 num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= (1ull << (n - i)) - 1;
        den *= (1ull << (k - i)) - 1;
    }
    return std::uint64_t(num / den);
}
