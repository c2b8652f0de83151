#include "tbprim/report.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#include "tbprim/blocksys.hpp"
#include "tbprim/cipher.hpp"
#include "tbprim/errors.hpp"
#include "tbprim/gf2m.hpp"
#include "tbprim/mixing.hpp"
#include "tbprim/vbf.hpp"

namespace tbprim::report {

using nlohmann::json;

std::uint64_t fnv1a64_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("report: cannot open " + path);
    std::uint64_t h = 0xcbf29ce484222325ull;
    char c;
    while (in.get(c)) {
        h ^= std::uint8_t(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, v >>= 4)
        out[std::size_t(i)] = digits[v & 0xf];
    return out;
}

namespace {

std::string utc_now() {
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string hex_poly(std::uint32_t v) {
    std::ostringstream out;
    out << "0x" << std::hex << v;
    return out.str();
}

json subspace_to_json(const gf2::Subspace& u) {
    json rows = json::array();
    for (int i = 0; i < u.dim(); ++i)
        rows.push_back(gf2::to_bit_string(u.basis(i)));
    return json{{"dim", u.dim()}, {"basis", rows}};
}

} // namespace

json envelope(const std::string& command,
              const std::vector<std::string>& input_paths,
              json payload) {
    json inputs = json::array();
    for (const auto& p : input_paths)
        inputs.push_back({{"path", p}, {"fnv1a64", hex64(fnv1a64_file(p))}});
    return json{{"tool", kToolName},
                {"version", kToolVersion},
                {"command", command},
                {"generated_at", utc_now()},
                {"inputs", inputs},
                {"payload", std::move(payload)}};
}

json sbox_analyze(const std::string& path, bool normalize, int strong_max_codim) {
    vbf::Vbf f = vbf::read_sbox_file(path);
    json payload;
    payload["m"] = f.m;
    payload["entries"] = f.size();
    bool perm = vbf::is_permutation(f);
    payload["is_permutation"] = perm;

    std::uint32_t constant = 0;
    if (normalize) {
        auto [fn, c] = vbf::normalized(f);
        f = std::move(fn);
        constant = c;
    }
    payload["constant"] = constant;
    payload["is_involution"] = perm && vbf::is_involution(f);

    vbf::DdtReport ddt = vbf::ddt_report(f);
    payload["ddt"] = {{"uniformity", ddt.uniformity},
                      {"min_derivative_image", ddt.min_derivative_image},
                      {"max_derivative_image", ddt.max_derivative_image},
                      {"is_apn", ddt.is_apn}};
    if (!perm)
        return envelope("sbox analyze", {path}, std::move(payload));

    json weak = json::array();
    for (int delta : {2, 4, 8, 16})
        weak.push_back({{"delta", delta}, {"holds", vbf::is_weakly_uniform(f, delta)}});
    payload["weakly_uniform"] = weak;

    if (f(0) != 0) {
        payload["anti_invariance"] = nullptr;
        payload["anti_invariance_skipped"] = "table does not fix 0; rerun with --normalize";
    } else {
        vbf::AntiInvarianceReport anti = vbf::anti_invariance_report(f, strong_max_codim);
        json a;
        a["plain_degree"] = anti.plain_degree;
        a["strong_degree"] = anti.strong_degree;
        a["plain_partial"] = anti.plain_partial;
        a["strong_partial"] = anti.strong_partial;
        a["plain_witness"] =
            anti.plain_witness ? subspace_to_json(*anti.plain_witness) : json(nullptr);
        if (anti.strong_witness)
            a["strong_witness"] = {{"domain", subspace_to_json(anti.strong_witness->first)},
                                   {"image", subspace_to_json(anti.strong_witness->second)}};
        else
            a["strong_witness"] = nullptr;
        payload["anti_invariance"] = std::move(a);
    }
    return envelope("sbox analyze", {path}, std::move(payload));
}

json layer_check(const std::string& path, int m, int s) {
    gf2::BitMatrix layer = gf2::read_matrix_file(path);
    gf2::BrickDecomposition d(m, s);
    if (layer.n != d.n)
        throw InputError("layer check: matrix is " + std::to_string(layer.n) +
                         "x" + std::to_string(layer.n) + " but bricks give n = " +
                         std::to_string(d.n));
    json payload;
    payload["n"] = layer.n;
    payload["m"] = m;
    payload["s"] = s;
    payload["rank"] = gf2::rank(layer);
    bool invertible = gf2::is_invertible(layer);
    payload["invertible"] = invertible;

    mixing::BrickDigraph g = mixing::brick_digraph(layer, d);
    json degs = json::array();
    for (const auto& out : g.out)
        degs.push_back(out.size());
    payload["digraph_out_degrees"] = degs;

    if (invertible) {
        mixing::PropernessResult pr = mixing::is_proper(layer, d);
        payload["proper"] = pr.proper;
        payload["witness"] = pr.proper ? json(nullptr) : json(pr.witness);
    } else {
        payload["proper"] = nullptr;
        payload["witness"] = nullptr;
    }
    return envelope("layer check", {path}, std::move(payload));
}

json cipher_certify(const std::string& spec_path, int max_r) {
    cipher::TbCipherSpec spec = cipher::load_spec(spec_path);
    cipher::Certificate cert = cipher::certify(spec, max_r);
    json payload;
    payload["name"] = spec.name;
    payload["n"] = spec.n();
    payload["m"] = spec.m();
    payload["s"] = spec.s();
    payload["rounds"] = spec.rounds.size();
    payload["primitive"] = cert.primitive;
    if (cert.primitive) {
        payload["round"] = cert.round;
        payload["r"] = cert.r;
        json ev = json::array();
        for (const auto& e : cert.evidence)
            ev.push_back({{"brick", e.brick},
                          {"constant", e.constant},
                          {"min_derivative_image", e.min_derivative_image},
                          {"weakly_uniform", e.weakly_uniform},
                          {"strong_degree", e.strong_degree},
                          {"strong_exact", e.strong_exact}});
        payload["evidence"] = ev;
    } else {
        payload["round"] = nullptr;
        payload["r"] = nullptr;
        payload["evidence"] = json::array();
    }
    json attempts = json::array();
    for (const auto& a : cert.attempts)
        attempts.push_back({{"round", a.round}, {"r", a.r}, {"failure", a.failure}});
    payload["attempts"] = attempts;
    return envelope("cipher certify", {spec_path}, std::move(payload));
}

json group_oracle(const std::string& spec_path, int round, int max_n) {
    cipher::TbCipherSpec spec = cipher::load_spec(spec_path);
    if (spec.n() > max_n)
        throw InputError("group oracle: n = " + std::to_string(spec.n()) +
                         " exceeds --max-n = " + std::to_string(max_n));
    blocksys::GeneratorSet gens = blocksys::round_generators(spec, round);
    blocksys::PrimitivityScan scan = blocksys::primitivity_scan(gens);
    json payload;
    payload["name"] = spec.name;
    payload["n"] = spec.n();
    payload["round"] = round;
    payload["primitive"] = scan.primitive;
    json systems = json::array();
    for (const auto& s : scan.systems)
        systems.push_back({{"seed", s.seed},
                           {"block_size", s.block_size},
                           {"block_count", s.block_count},
                           {"is_subspace", s.is_subspace},
                           {"block_zero", s.block_zero}});
    payload["systems"] = systems;
    return envelope("group oracle", {spec_path}, std::move(payload));
}

json subfield_theorem(int m, std::uint32_t modulus) {
    if (modulus == 0)
        modulus = gf2m::default_modulus(m);
    vbf::SubfieldTheoremReport rep = vbf::verify_subfield_theorem(m, modulus);
    json payload;
    payload["m"] = rep.m;
    payload["modulus"] = hex_poly(rep.modulus);
    json entries = json::array();
    std::vector<int> dims;
    for (const auto& e : rep.inverse_closed) {
        json pts = json::array();
        for (gf2::u128 p : gf2::points(e.subgroup))
            pts.push_back(std::uint32_t(p));
        entries.push_back({{"dim", e.subgroup.dim()},
                           {"points", pts},
                           {"multiplicatively_closed", e.multiplicatively_closed},
                           {"is_subfield", e.is_subfield}});
        dims.push_back(e.subgroup.dim());
    }
    payload["inverse_closed"] = entries;
    std::sort(dims.begin(), dims.end());
    payload["dims"] = dims;
    payload["all_subfields"] = rep.all_subfields;
    payload["dims_are_divisors"] = rep.dims_are_divisors;
    return envelope("verify subfield-theorem", {}, std::move(payload));
}

json involution_lemma(const std::string& path) {
    vbf::Vbf f = vbf::read_sbox_file(path);
    vbf::InvolutionLemmaReport rep = vbf::check_involution_lemma(f);
    json payload;
    payload["m"] = f.m;
    payload["plain_degree"] = rep.degrees.plain_degree;
    payload["strong_degree"] = rep.degrees.strong_degree;
    json entries = json::array();
    for (const auto& e : rep.entries)
        entries.push_back({{"r", e.r}, {"qualifying", e.qualifying}, {"satisfied", e.satisfied}});
    payload["entries"] = entries;
    payload["holds"] = rep.holds;
    return envelope("verify involution-lemma", {path}, std::move(payload));
}

} // namespace tbprim::report
