#include "tbprim/gf2.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace tbprim::gf2 {

int popcount128(u128 x) {
    return __builtin_popcountll(static_cast<std::uint64_t>(x)) +
           __builtin_popcountll(static_cast<std::uint64_t>(x >> 64));
}

int lowest_bit(u128 x) {
    if (x == 0) return -1;
    std::uint64_t lo = static_cast<std::uint64_t>(x);
    if (lo) return __builtin_ctzll(lo);
    return 64 + __builtin_ctzll(static_cast<std::uint64_t>(x >> 64));
}

static u128 width_mask(int n) {
    if (n == 128) return ~static_cast<u128>(0);
    return (static_cast<u128>(1) << n) - 1;
}

static void check_width(int n) {
    if (n < 1 || n > 128) throw InputError("vector width must be in [1, 128]");
}

Vec2::Vec2(int width, u128 value) : n(width), bits(value) {
    check_width(width);
    if (value & ~width_mask(width)) throw InputError("vector has bits beyond its width");
}

Vec2 operator^(Vec2 a, const Vec2& b) {
    if (a.n != b.n) throw InputError("width mismatch in vector sum");
    a.bits ^= b.bits;
    return a;
}

std::string to_bit_string(const Vec2& v) {
    std::string s(v.n, '0');
    for (int j = 0; j < v.n; ++j)
        if (v.bit(j)) s[j] = '1';
    return s;
}

Vec2 vec_from_bit_string(const std::string& s) {
    check_width(static_cast<int>(s.size()));
    u128 bits = 0;
    for (size_t j = 0; j < s.size(); ++j) {
        if (s[j] == '1')
            bits |= static_cast<u128>(1) << j;
        else if (s[j] != '0')
            throw InputError("bit string may contain only '0' and '1'");
    }
    return Vec2(static_cast<int>(s.size()), bits);
}

// Reduce v against rows (each with a distinct pivot); returns the residue.
static u128 reduce(u128 v, const std::vector<u128>& rows) {
    for (u128 r : rows) {
        u128 low = r & (~r + 1);
        if (v & low) v ^= r;
    }
    return v;
}

Subspace span_words(const std::vector<u128>& words, int n) {
    check_width(n);
    std::vector<u128> rows;
    for (u128 v : words) {
        if (v & ~width_mask(n)) throw InputError("vector has bits beyond the span width");
        v = reduce(v, rows);
        if (v) rows.push_back(v);
    }
    // back-eliminate so every pivot column is zero in the other rows
    for (size_t i = 0; i < rows.size(); ++i) {
        u128 low = rows[i] & (~rows[i] + 1);
        for (size_t j = 0; j < rows.size(); ++j)
            if (j != i && (rows[j] & low)) rows[j] ^= rows[i];
    }
    std::sort(rows.begin(), rows.end(),
              [](u128 a, u128 b) { return lowest_bit(a) < lowest_bit(b); });
    Subspace U;
    U.n = n;
    U.rows = std::move(rows);
    return U;
}

Subspace span(const std::vector<Vec2>& vectors, int n) {
    std::vector<u128> words;
    words.reserve(vectors.size());
    for (const Vec2& v : vectors) {
        if (v.n != n) throw InputError("width mismatch in span");
        words.push_back(v.bits);
    }
    return span_words(words, n);
}

bool contains(const Subspace& U, const Vec2& v) {
    if (v.n != U.n) throw InputError("width mismatch in contains");
    return reduce(v.bits, U.rows) == 0;
}

std::vector<u128> points(const Subspace& U) {
    std::vector<u128> pts{0};
    pts.reserve(static_cast<size_t>(1) << U.dim());
    for (u128 r : U.rows) {
        size_t sz = pts.size();
        for (size_t i = 0; i < sz; ++i) pts.push_back(pts[i] ^ r);
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

BitMatrix BitMatrix::identity(int n) {
    check_width(n);
    BitMatrix M;
    M.n = n;
    M.rows.resize(n);
    for (int i = 0; i < n; ++i) M.rows[i] = static_cast<u128>(1) << i;
    return M;
}

u128 BitMatrix::apply_word(u128 v) const {
    u128 out = 0;
    int i = 0;
    while (v) {
        if (v & 1) out ^= rows[i];
        v >>= 1;
        ++i;
    }
    return out;
}

Vec2 BitMatrix::apply(const Vec2& v) const {
    if (v.n != n) throw InputError("width mismatch in matrix apply");
    return Vec2(n, apply_word(v.bits));
}

int rank(const BitMatrix& M) {
    return Subspace(span_words(M.rows, M.n)).dim();
}

bool is_invertible(const BitMatrix& M) { return rank(M) == M.n; }

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
    if (a.n != b.n) throw InputError("width mismatch in matrix multiply");
    BitMatrix out;
    out.n = a.n;
    out.rows.reserve(a.n);
    for (u128 r : a.rows) out.rows.push_back(b.apply_word(r));
    return out;
}

Subspace image_of_subspace(const Subspace& U, const BitMatrix& M) {
    if (U.n != M.n) throw InputError("width mismatch in image_of_subspace");
    std::vector<u128> img;
    img.reserve(U.rows.size());
    for (u128 r : U.rows) img.push_back(M.apply_word(r));
    return span_words(img, M.n);
}

BitMatrix matrix_from_text(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) throw InputError("empty matrix text");
    int n = static_cast<int>(lines.size());
    check_width(n);
    BitMatrix M;
    M.n = n;
    M.rows.reserve(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(lines[i].size()) != n)
            throw InputError("matrix line " + std::to_string(i) + " has wrong length");
        M.rows.push_back(vec_from_bit_string(lines[i]).bits);
    }
    return M;
}

std::string matrix_to_text(const BitMatrix& M) {
    std::string out;
    out.reserve(static_cast<size_t>(M.n) * (M.n + 1));
    for (u128 r : M.rows) {
        out += to_bit_string(Vec2(M.n, r));
        out += '\n';
    }
    return out;
}

BitMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open matrix file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return matrix_from_text(ss.str());
}

void write_matrix_file(const std::string& path, const BitMatrix& M) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write matrix file: " + path);
    out << matrix_to_text(M);
}

BrickDecomposition::BrickDecomposition(int m_, int s_) : n(m_ * s_), m(m_), s(s_) {
    if (m_ < 1 || s_ < 2) throw InputError("brick decomposition needs m >= 1 and s >= 2");
    check_width(n);
}

u128 BrickDecomposition::brick_mask(int i) const {
    u128 one = 1;
    u128 mask = (m == 128) ? ~static_cast<u128>(0) : (one << m) - 1;
    return mask << (i * m);
}

std::uint32_t BrickDecomposition::extract(u128 v, int i) const {
    return static_cast<std::uint32_t>((v >> (i * m)) & ((static_cast<u128>(1) << m) - 1));
}

u128 BrickDecomposition::embed(std::uint32_t x, int i) const {
    return static_cast<u128>(x) << (i * m);
}

// Subspaces of dimension k, one per reduced basis: choose pivot columns
// p_1 < ... < p_k, then fill the free positions (non-pivot columns above each
// row's pivot) with every bit pattern.
static void for_each_of_dim(int n, int k,
                            const std::function<bool(Subspace&)>& visit,
                            bool sorted, bool* stop) {
    if (k == 0) {
        Subspace U;
        U.n = n;
        if (!visit(U)) *stop = true;
        return;
    }
    std::vector<int> pivots(k);
    for (int i = 0; i < k; ++i) pivots[i] = i;

    std::vector<Subspace> bucket;
    auto emit = [&](Subspace& U) {
        if (*stop) return;
        if (sorted)
            bucket.push_back(U);
        else if (!visit(U))
            *stop = true;
    };

    while (!*stop) {
        // free positions for each row, and the total count
        std::vector<std::vector<int>> freepos(k);
        int total_bits = 0;
        for (int i = 0; i < k; ++i) {
            for (int c = pivots[i] + 1; c < n; ++c) {
                bool is_pivot = std::find(pivots.begin(), pivots.end(), c) != pivots.end();
                if (!is_pivot) freepos[i].push_back(c);
            }
            total_bits += static_cast<int>(freepos[i].size());
        }
        if (total_bits >= 63)
            throw CapacityError("subspace family too large to enumerate");
        for (std::uint64_t mask = 0; mask < (1ull << total_bits) && !*stop; ++mask) {
            Subspace U;
            U.n = n;
            U.rows.resize(k);
            int off = 0;
            for (int i = 0; i < k; ++i) {
                u128 row = static_cast<u128>(1) << pivots[i];
                for (size_t j = 0; j < freepos[i].size(); ++j)
                    if ((mask >> (off + j)) & 1) row |= static_cast<u128>(1) << freepos[i][j];
                off += static_cast<int>(freepos[i].size());
                U.rows[i] = row;
            }
            emit(U);
        }
        // next pivot combination
        int i = k - 1;
        while (i >= 0 && pivots[i] == n - k + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }

    if (sorted && !*stop) {
        std::sort(bucket.begin(), bucket.end(),
                  [](const Subspace& a, const Subspace& b) { return a.rows < b.rows; });
        for (Subspace& U : bucket) {
            if (!visit(U)) {
                *stop = true;
                break;
            }
        }
    }
}

// Basis of { v : v . d = 0 for all d in D } via the transposed system.
static Subspace orthogonal_complement(const Subspace& D) {
    int n = D.n;
    int c = D.dim();
    // Solve the homogeneous system with coefficient rows = basis of D.
    // Gaussian elimination on an n-column system with c equations.
    std::vector<u128> eq = D.rows;
    std::vector<int> pivot_col;
    size_t r = 0;
    for (int col = 0; col < n && r < eq.size(); ++col) {
        size_t sel = r;
        while (sel < eq.size() && !((eq[sel] >> col) & 1)) ++sel;
        if (sel == eq.size()) continue;
        std::swap(eq[r], eq[sel]);
        for (size_t i = 0; i < eq.size(); ++i)
            if (i != r && ((eq[i] >> col) & 1)) eq[i] ^= eq[r];
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<u128> basis;
    for (int col = 0; col < n; ++col) {
        if (std::find(pivot_col.begin(), pivot_col.end(), col) != pivot_col.end()) continue;
        u128 v = static_cast<u128>(1) << col;
        for (size_t i = 0; i < pivot_col.size(); ++i)
            if ((eq[i] >> col) & 1) v |= static_cast<u128>(1) << pivot_col[i];
        basis.push_back(v);
    }
    (void)c;
    return span_words(basis, n);
}

void enumerate_subspaces(int n,
                         const std::optional<std::vector<int>>& dims,
                         const std::function<bool(const Subspace&)>& visit) {
    check_width(n);
    std::vector<int> ks;
    if (dims) {
        ks = *dims;
        std::sort(ks.begin(), ks.end());
        ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
        for (int k : ks)
            if (k < 0 || k > n) throw InputError("dimension filter out of range");
    } else {
        for (int k = 0; k <= n; ++k) ks.push_back(k);
    }

    bool stop = false;
    if (n <= 8) {
        for (int k : ks) {
            if (stop) break;
            for_each_of_dim(n, k, [&](Subspace& U) { return visit(U); }, /*sorted=*/true, &stop);
        }
        return;
    }

    if (!dims) throw CapacityError("full subspace enumeration requires n <= 8");
    for (int k : ks)
        if (n - k > 4)
            throw CapacityError("for n > 8 only dimensions of codimension <= 4 are enumerable");
    for (int k : ks) {
        if (stop) break;
        // walk codim-dimensional subspaces of the dual; U = complement of D
        for_each_of_dim(n, n - k, [&](Subspace& D) {
            Subspace U = orthogonal_complement(D);
            return visit(U);
        }, /*sorted=*/false, &stop);
    }
}

std::uint64_t count_subspaces(int n, const std::optional<std::vector<int>>& dims) {
    std::uint64_t count = 0;
    enumerate_subspaces(n, dims, [&](const Subspace&) {
        ++count;
        return true;
    });
    return count;
}

} // namespace tbprim::gf2
