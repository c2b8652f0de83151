#include "tbprim/vbf.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "tbprim/gf2m.hpp"

namespace tbprim::vbf {

using gf2::Subspace;
using gf2::u128;

Vbf vbf_from_table(int m, std::vector<std::uint32_t> table) {
    if (m < 2 || m > 16) throw InputError("table width m must be in [2, 16]");
    if (table.size() != (1u << m)) throw InputError("table must have 2^m entries");
    for (std::uint32_t v : table)
        if (v >= (1u << m)) throw InputError("table entry out of range");
    Vbf F;
    F.m = m;
    F.table = std::move(table);
    return F;
}

bool is_permutation(const Vbf& F) {
    std::vector<bool> seen(F.size(), false);
    for (std::uint32_t v : F.table) {
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Vbf inverse_permutation(const Vbf& F) {
    if (!is_permutation(F)) throw InputError("table is not a permutation");
    Vbf G;
    G.m = F.m;
    G.table.resize(F.size());
    for (std::uint32_t x = 0; x < F.size(); ++x) G.table[F.table[x]] = x;
    return G;
}

bool is_involution(const Vbf& F) {
    if (!is_permutation(F)) return false;
    for (std::uint32_t x = 0; x < F.size(); ++x)
        if (F.table[F.table[x]] != x) return false;
    return true;
}

Vbf derivative(const Vbf& F, std::uint32_t a) {
    if (a == 0 || a >= F.size()) throw InputError("derivative direction must be nonzero and < 2^m");
    Vbf D;
    D.m = F.m;
    D.table.resize(F.size());
    for (std::uint32_t x = 0; x < F.size(); ++x) D.table[x] = F.table[x ^ a] ^ F.table[x];
    return D;
}

int derivative_image_size(const Vbf& F, std::uint32_t a) {
    if (a == 0 || a >= F.size()) throw InputError("derivative direction must be nonzero and < 2^m");
    std::vector<bool> seen(F.size(), false);
    int count = 0;
    for (std::uint32_t x = 0; x < F.size(); ++x) {
        std::uint32_t v = F.table[x ^ a] ^ F.table[x];
        if (!seen[v]) {
            seen[v] = true;
            ++count;
        }
    }
    return count;
}

std::pair<Vbf, std::uint32_t> normalized(const Vbf& F) {
    std::uint32_t c = F.table[0];
    Vbf G;
    G.m = F.m;
    G.table.resize(F.size());
    for (std::uint32_t x = 0; x < F.size(); ++x) G.table[x] = F.table[x] ^ c;
    return {std::move(G), c};
}

DdtReport ddt_report(const Vbf& F) {
    const std::uint32_t N = F.size();
    DdtReport rep;
    rep.m = F.m;
    rep.min_derivative_image = static_cast<int>(N);
    std::vector<int> row(N);
    for (std::uint32_t a = 1; a < N; ++a) {
        std::fill(row.begin(), row.end(), 0);
        int image = 0;
        for (std::uint32_t x = 0; x < N; ++x) {
            std::uint32_t b = F.table[x ^ a] ^ F.table[x];
            if (row[b]++ == 0) ++image;
        }
        rep.uniformity = std::max(rep.uniformity, *std::max_element(row.begin(), row.end()));
        rep.min_derivative_image = std::min(rep.min_derivative_image, image);
        rep.max_derivative_image = std::max(rep.max_derivative_image, image);
    }
    rep.is_apn = (rep.uniformity == 2);
    return rep;
}

bool is_weakly_uniform(const Vbf& F, int delta) {
    if (delta < 2 || delta % 2 != 0) throw InputError("delta must be an even number >= 2");
    if (!is_permutation(F)) throw InputError("weak uniformity is defined for permutations");
    const std::int64_t bound = static_cast<std::int64_t>(1) << F.m;
    for (std::uint32_t a = 1; a < F.size(); ++a) {
        std::int64_t im = derivative_image_size(F, a);
        if ((im - 1) * (delta + 2) < bound) return false;
    }
    return true;
}

namespace {

// F(U) == U, checked element by element with early exit.
bool maps_onto_itself(const Vbf& F, const Subspace& U) {
    for (u128 p : gf2::points(U)) {
        std::uint32_t y = F.table[static_cast<std::uint32_t>(p)];
        if (!gf2::contains(U, gf2::Vec2(U.n, y))) return false;
    }
    return true;
}

// F(U) is a subspace iff its span has the same dimension (permutation input,
// so |F(U)| = |U| and 0 is in the image).
bool maps_onto_subspace(const Vbf& F, const Subspace& U, Subspace* image_out) {
    std::vector<u128> img;
    img.reserve(static_cast<size_t>(1) << U.dim());
    for (u128 p : gf2::points(U)) img.push_back(F.table[static_cast<std::uint32_t>(p)]);
    Subspace W = gf2::span_words(img, U.n);
    if (W.dim() != U.dim()) return false;
    if (image_out) *image_out = std::move(W);
    return true;
}

} // namespace

AntiInvarianceReport anti_invariance_report(const Vbf& F, int max_codim) {
    if (!is_permutation(F)) throw InputError("anti-invariance is defined for permutations");
    if (F.table[0] != 0) throw InputError("anti-invariance requires F(0) = 0; normalize first");
    const int m = F.m;
    if (max_codim == 0 && m > 8)
        throw CapacityError("full anti-invariance scan requires m <= 8; pass a codimension cap");
    const int top = (max_codim == 0) ? m - 1 : std::min(max_codim, m - 1);

    AntiInvarianceReport rep;
    rep.m = m;
    std::optional<int> plain_hit, strong_hit;

    for (int codim = 1; codim <= top && !(plain_hit && strong_hit); ++codim) {
        std::vector<int> dims{m - codim};
        gf2::enumerate_subspaces(m, dims, [&](const Subspace& U) {
            if (!strong_hit) {
                Subspace W;
                if (maps_onto_subspace(F, U, &W)) {
                    strong_hit = codim;
                    rep.strong_witness = std::make_pair(U, std::move(W));
                }
            }
            if (!plain_hit && maps_onto_itself(F, U)) {
                plain_hit = codim;
                rep.plain_witness = U;
            }
            return !(plain_hit && strong_hit);
        });
    }

    const bool capped = top < m - 1;
    if (plain_hit) {
        rep.plain_degree = *plain_hit - 1;
    } else {
        // only {0} is invariant among the scanned range
        rep.plain_degree = capped ? top : m - 1;
        rep.plain_partial = capped;
    }
    if (strong_hit) {
        rep.strong_degree = *strong_hit - 1;
    } else {
        rep.strong_degree = capped ? top : m - 1;
        rep.strong_partial = capped;
    }
    return rep;
}

bool strongly_anti_invariant_at_least(const Vbf& F, int r) {
    if (r < 1) throw InputError("anti-invariance degree bound must be >= 1");
    AntiInvarianceReport rep = anti_invariance_report(F, r);
    return rep.strong_degree >= r;
}

InvolutionLemmaReport check_involution_lemma(const Vbf& F) {
    if (!is_involution(F)) throw InputError("lemma check requires an involution");
    if (F.table[0] != 0) throw InputError("lemma check requires F(0) = 0");
    InvolutionLemmaReport out;
    out.degrees = anti_invariance_report(F);
    out.holds = true;
    for (int r = 1; 2 * r < F.m; ++r) {
        InvolutionLemmaReport::Entry e;
        e.r = r;
        e.qualifying = out.degrees.plain_degree >= 2 * r;
        e.satisfied = out.degrees.strong_degree >= r;
        if (e.qualifying && !e.satisfied) out.holds = false;
        out.entries.push_back(e);
    }
    return out;
}

SubfieldTheoremReport verify_subfield_theorem(int m, std::uint32_t modulus) {
    if (m < 2 || m > 8) throw CapacityError("subfield scan enumerates all subspaces; needs m in [2, 8]");
    if (!gf2m::is_irreducible(modulus, m))
        throw InputError("modulus is not irreducible of degree m");

    std::vector<std::uint32_t> inv(1u << m);
    for (std::uint32_t x = 0; x < inv.size(); ++x) inv[x] = gf2m::inverse(x, modulus, m);

    SubfieldTheoremReport rep;
    rep.m = m;
    rep.modulus = modulus;

    std::vector<int> dims;
    for (int k = 1; k <= m; ++k) dims.push_back(k);
    gf2::enumerate_subspaces(m, dims, [&](const Subspace& U) {
        std::vector<u128> pts = gf2::points(U);
        for (u128 p : pts) {
            if (p == 0) continue;
            if (!gf2::contains(U, gf2::Vec2(m, inv[static_cast<std::uint32_t>(p)])))
                return true; // not inverse-closed, skip
        }
        SubfieldTheoremReport::Entry e;
        e.subgroup = U;
        e.multiplicatively_closed = true;
        for (u128 a : pts) {
            for (u128 b : pts) {
                std::uint32_t prod = gf2m::mul(static_cast<std::uint32_t>(a),
                                               static_cast<std::uint32_t>(b), modulus, m);
                if (!gf2::contains(U, gf2::Vec2(m, prod))) {
                    e.multiplicatively_closed = false;
                    break;
                }
            }
            if (!e.multiplicatively_closed) break;
        }
        // the subfield of size 2^d is exactly the fixed field of x -> x^(2^d)
        int d = U.dim();
        e.is_subfield = true;
        for (u128 p : pts)
            if (gf2m::pow(static_cast<std::uint32_t>(p), 1ull << d, modulus, m) != p) {
                e.is_subfield = false;
                break;
            }
        rep.inverse_closed.push_back(std::move(e));
        return true;
    });

    rep.all_subfields = std::all_of(rep.inverse_closed.begin(), rep.inverse_closed.end(),
                                    [](const auto& e) { return e.is_subfield && e.multiplicatively_closed; });
    std::vector<int> found;
    for (const auto& e : rep.inverse_closed) found.push_back(e.subgroup.dim());
    std::sort(found.begin(), found.end());
    std::vector<int> divisors;
    for (int d = 1; d <= m; ++d)
        if (m % d == 0) divisors.push_back(d);
    rep.dims_are_divisors = (found == divisors);
    return rep;
}

namespace {

// Fisher-Yates with explicit modulo draws so tables are reproducible across
// platforms for a given seed.
template <typename T>
void shuffle_tail(std::vector<T>& v, size_t start, std::mt19937_64& rng) {
    for (size_t i = v.size() - 1; i > start; --i) {
        size_t j = start + static_cast<size_t>(rng() % (i - start + 1));
        std::swap(v[i], v[j]);
    }
}

} // namespace

Vbf make_coset_respecting_sbox(const Subspace& U, std::uint64_t seed) {
    const int m = U.n;
    if (m < 2 || m > 16) throw InputError("coset S-box width must be in [2, 16]");
    if (U.dim() == 0 || U.dim() == m) throw InputError("coset subspace must be proper and nonzero");

    const std::uint32_t N = 1u << m;
    std::vector<std::uint32_t> coset_pts;
    for (u128 p : gf2::points(U)) coset_pts.push_back(static_cast<std::uint32_t>(p));

    // canonical representatives: fixed points of reduction by U's basis
    std::vector<std::uint32_t> reps;
    for (std::uint32_t x = 0; x < N; ++x) {
        u128 red = x;
        for (u128 r : U.rows) {
            u128 low = r & (~r + 1);
            if (red & low) red ^= r;
        }
        if (red == static_cast<u128>(x)) reps.push_back(x);
    }

    std::mt19937_64 rng(seed);
    std::vector<std::uint32_t> rho(reps.size());
    for (size_t i = 0; i < rho.size(); ++i) rho[i] = static_cast<std::uint32_t>(i);
    shuffle_tail(rho, 1, rng); // coset 0 (= U) stays fixed

    Vbf F;
    F.m = m;
    F.table.resize(N);
    for (size_t ci = 0; ci < reps.size(); ++ci) {
        std::vector<std::uint32_t> pi(coset_pts.size());
        for (size_t i = 0; i < pi.size(); ++i) pi[i] = static_cast<std::uint32_t>(i);
        // keep F(0) = 0: the zero coset's permutation fixes position 0
        shuffle_tail(pi, ci == 0 ? 1 : 0, rng);
        for (size_t ui = 0; ui < coset_pts.size(); ++ui)
            F.table[reps[ci] ^ coset_pts[ui]] = reps[rho[ci]] ^ coset_pts[pi[ui]];
    }
    return F;
}

Vbf sbox_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int m = -1;
    std::string body;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] == '#') {
            size_t eq = line.find("m=");
            if (eq != std::string::npos && m < 0) {
                try {
                    m = std::stoi(line.substr(eq + 2));
                } catch (const std::exception&) {
                    throw InputError("bad width in S-box header: " + line);
                }
            }
            continue;
        }
        body += line;
        body += ' ';
    }
    if (m < 0) throw InputError("S-box file is missing the '# m=<value>' header");
    if (m < 2 || m > 16) throw InputError("S-box header width out of range [2, 16]");
    std::vector<std::uint32_t> table;
    std::istringstream tokens(body);
    std::string tok;
    while (tokens >> tok) {
        size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(tok, &used, 16);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size()) throw InputError("bad hex token in S-box file: " + tok);
        table.push_back(static_cast<std::uint32_t>(v));
    }
    if (table.size() != (1u << m))
        throw InputError("S-box file must contain exactly 2^m entries");
    return vbf_from_table(m, std::move(table));
}

std::string sbox_to_text(const Vbf& F) {
    std::ostringstream out;
    out << "# m=" << F.m << "\n";
    for (std::uint32_t x = 0; x < F.size(); ++x) {
        out << std::hex << F.table[x];
        out << (((x + 1) % 16 == 0) ? '\n' : ' ');
    }
    std::string s = out.str();
    if (s.back() != '\n') s += '\n';
    return s;
}

Vbf read_sbox_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open S-box file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return sbox_from_text(ss.str());
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

void write_sbox_file(const std::string& path, const Vbf& F) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write S-box file: " + path);
    out << sbox_to_text(F);
}

} // namespace tbprim::vbf
