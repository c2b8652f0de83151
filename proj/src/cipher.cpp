#include "tbprim/cipher.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "tbprim/errors.hpp"
#include "tbprim/mixing.hpp"

namespace tbprim::cipher {

namespace fs = std::filesystem;

TbCipherSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cipher: cannot open spec file " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("cipher: spec file " + path + " is not valid JSON: " + e.what());
    }
    if (!doc.is_object() || !doc.contains("m") || !doc.contains("s") || !doc.contains("rounds"))
        throw InputError("cipher: spec must be an object with m, s and rounds");

    TbCipherSpec spec;
    spec.name = doc.value("name", fs::path(path).stem().string());
    int m = doc.at("m").get<int>();
    int s = doc.at("s").get<int>();
    spec.bricks = gf2::BrickDecomposition(m, s);

    const fs::path base = fs::path(path).parent_path();
    auto resolve = [&base](const std::string& p) {
        fs::path q(p);
        return (q.is_absolute() ? q : base / q).string();
    };

    const auto& rounds = doc.at("rounds");
    if (!rounds.is_array() || rounds.empty())
        throw InputError("cipher: rounds must be a non-empty array");
    std::map<std::string, vbf::Vbf> sbox_cache;
    std::map<std::string, gf2::BitMatrix> layer_cache;
    for (const auto& rj : rounds) {
        if (!rj.is_object() || !rj.contains("sboxes") || !rj.contains("layer"))
            throw InputError("cipher: each round needs sboxes and layer");
        Round round;
        std::vector<std::string> paths = rj.at("sboxes").get<std::vector<std::string>>();
        if (paths.size() == 1)
            paths.assign(std::size_t(s), paths[0]);
        if (int(paths.size()) != s)
            throw InputError("cipher: round must list 1 or s S-box files");
        for (const auto& p : paths) {
            std::string full = resolve(p);
            auto it = sbox_cache.find(full);
            if (it == sbox_cache.end())
                it = sbox_cache.emplace(full, vbf::read_sbox_file(full)).first;
            const vbf::Vbf& f = it->second;
            if (f.m != m)
                throw InputError("cipher: S-box " + p + " has wrong width for m");
            if (!vbf::is_permutation(f))
                throw InputError("cipher: S-box " + p + " is not a permutation");
            round.sboxes.push_back(f);
        }
        std::string lp = resolve(rj.at("layer").get<std::string>());
        auto lt = layer_cache.find(lp);
        if (lt == layer_cache.end())
            lt = layer_cache.emplace(lp, gf2::read_matrix_file(lp)).first;
        round.layer = lt->second;
        if (round.layer.n != spec.n())
            throw InputError("cipher: layer " + lp + " has wrong dimension for m*s");
        if (!gf2::is_invertible(round.layer))
            throw InputError("cipher: layer " + lp + " is not invertible");
        spec.rounds.push_back(std::move(round));
    }
    return spec;
}

namespace {

void require_round(const TbCipherSpec& spec, int h) {
    if (h < 0 || h >= int(spec.rounds.size()))
        throw InputError("cipher: round index out of range");
}

void require_width(const TbCipherSpec& spec, gf2::u128 v, const char* what) {
    if (spec.n() < 128 && (v >> spec.n()))
        throw InputError(std::string("cipher: ") + what + " does not fit in n bits");
}

} // namespace

gf2::u128 apply_round(const TbCipherSpec& spec, int h, gf2::u128 v, gf2::u128 k) {
    require_round(spec, h);
    require_width(spec, v, "state");
    require_width(spec, k, "key");
    const Round& round = spec.rounds[std::size_t(h)];
    const auto& d = spec.bricks;
    gf2::u128 out = 0;
    for (int i = 0; i < d.s; ++i)
        out |= d.embed(round.sboxes[std::size_t(i)](d.extract(v, i)), i);
    return round.layer.apply_word(out) ^ k;
}

std::vector<std::uint32_t> round_table(const TbCipherSpec& spec, int h) {
    require_round(spec, h);
    if (spec.n() > 20)
        throw CapacityError("cipher: round tabulation limited to n <= 20");
    const std::uint32_t size = std::uint32_t(1) << spec.n();
    std::vector<std::uint32_t> table(size);
    for (std::uint32_t v = 0; v < size; ++v)
        table[v] = std::uint32_t(apply_round(spec, h, v, 0));
    return table;
}

Certificate certify(const TbCipherSpec& spec, int max_r) {
    const int m = spec.m();
    int r_top = (m - 1) / 2; // largest r with 2r < m
    if (max_r > 0 && max_r < r_top)
        r_top = max_r;

    struct Analysis {
        vbf::Vbf fixed; // f + f(0)
        std::uint32_t constant = 0;
        vbf::DdtReport ddt;
        vbf::AntiInvarianceReport anti; // full scan, m <= 8 only
        bool anti_done = false;
    };
    std::map<std::vector<std::uint32_t>, Analysis> cache;
    auto analyze = [&](const vbf::Vbf& f) -> const Analysis& {
        auto it = cache.find(f.table);
        if (it == cache.end()) {
            auto [fn, c] = vbf::normalized(f);
            Analysis a;
            a.fixed = std::move(fn);
            a.constant = c;
            a.ddt = vbf::ddt_report(a.fixed);
            if (m <= 8) {
                a.anti = vbf::anti_invariance_report(a.fixed);
                a.anti_done = true;
            }
            it = cache.emplace(f.table, std::move(a)).first;
        }
        return it->second;
    };

    Certificate cert;
    for (int h = 0; h < int(spec.rounds.size()); ++h) {
        const Round& round = spec.rounds[std::size_t(h)];
        if (!mixing::is_proper(round.layer, spec.bricks).proper) {
            cert.attempts.push_back({h, 0, "mixing layer not proper"});
            continue;
        }
        for (int r = 1; r <= r_top; ++r) {
            const int delta = 1 << r;
            std::vector<BrickEvidence> evidence;
            bool ok = true;
            for (int i = 0; i < spec.s() && ok; ++i) {
                const vbf::Vbf& f = round.sboxes[std::size_t(i)];
                const Analysis& a = analyze(f);
                BrickEvidence ev;
                ev.brick = i;
                ev.constant = a.constant;
                ev.min_derivative_image = a.ddt.min_derivative_image;
                ev.weakly_uniform = vbf::is_weakly_uniform(a.fixed, delta);
                if (!ev.weakly_uniform) {
                    cert.attempts.push_back(
                        {h, r, "brick " + std::to_string(i) + " is not weakly " +
                                   std::to_string(delta) + "-uniform"});
                    ok = false;
                    break;
                }
                if (a.anti_done) {
                    ev.strong_degree = a.anti.strong_degree;
                    ev.strong_exact = !a.anti.strong_partial;
                } else {
                    ev.strong_exact = false;
                    ev.strong_degree = vbf::strongly_anti_invariant_at_least(a.fixed, r) ? r : 0;
                }
                if (ev.strong_degree < r) {
                    cert.attempts.push_back(
                        {h, r, "brick " + std::to_string(i) + " is not strongly " +
                                   std::to_string(r) + "-anti-invariant"});
                    ok = false;
                    break;
                }
                evidence.push_back(ev);
            }
            if (ok) {
                cert.primitive = true;
                cert.round = h;
                cert.r = r;
                cert.evidence = std::move(evidence);
                return cert;
            }
        }
    }
    return cert;
}

bool verify_block_witness(const TbCipherSpec& spec, int h, const gf2::Subspace& U) {
    require_round(spec, h);
    if (U.n != spec.n())
        throw InputError("cipher: witness subspace has wrong dimension");
    if (U.dim() == 0 || U.dim() == U.n)
        throw InputError("cipher: witness subspace must be proper and nonzero");
    std::vector<std::uint32_t> table = round_table(spec, h);
    const std::uint32_t size = std::uint32_t(table.size());
    std::vector<bool> in_u(size, false);
    for (gf2::u128 p : gf2::points(U))
        in_u[std::uint32_t(p)] = true;
    std::vector<std::uint32_t> pts;
    for (std::uint32_t x = 0; x < size; ++x)
        if (in_u[x] && x)
            pts.push_back(x);
    for (std::uint32_t v = 0; v < size; ++v)
        for (std::uint32_t u : pts)
            if (!in_u[table[v ^ u] ^ table[v]])
                return false;
    return true;
}

} // namespace tbprim::cipher
