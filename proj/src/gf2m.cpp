#include "tbprim/gf2m.hpp"

#include "tbprim/errors.hpp"

namespace tbprim::gf2m {

static void check_m(int m) {
    if (m < 1 || m > 16) throw InputError("field degree must be in [1, 16]");
}

std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, int m) {
    std::uint32_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if ((a >> m) & 1) a ^= modulus;
    }
    return r;
}

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t modulus, int m) {
    std::uint32_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a, modulus, m);
        a = mul(a, a, modulus, m);
        e >>= 1;
    }
    return r;
}

std::uint32_t inverse(std::uint32_t a, std::uint32_t modulus, int m) {
    if (a == 0) return 0;
    return pow(a, (1ull << m) - 2, modulus, m);
}

// polynomial division over F2, degrees from bit positions
static int poly_deg(std::uint32_t p) {
    int d = -1;
    while (p) {
        ++d;
        p >>= 1;
    }
    return d;
}

static std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) {
    int db = poly_deg(b);
    int da = poly_deg(a);
    while (da >= db) {
        a ^= b << (da - db);
        da = poly_deg(a);
    }
    return a;
}

bool is_irreducible(std::uint32_t poly, int m) {
    check_m(m);
    if (poly_deg(poly) != m) return false;
    if (m == 1) return true;
    for (std::uint32_t d = 2; poly_deg(d) <= m / 2; ++d)
        if (poly_mod(poly, d) == 0) return false;
    return true;
}

std::uint32_t default_modulus(int m) {
    check_m(m);
    for (std::uint32_t p = (1u << m) + 1;; p += 2)
        if (is_irreducible(p, m)) return p;
}

std::vector<std::uint32_t> patched_inverse_table(int m, std::uint32_t modulus) {
    check_m(m);
    if (!is_irreducible(modulus, m)) throw InputError("modulus is not irreducible of the right degree");
    std::vector<std::uint32_t> t(1u << m);
    for (std::uint32_t x = 0; x < t.size(); ++x) t[x] = inverse(x, modulus, m);
    return t;
}

} // namespace tbprim::gf2m
