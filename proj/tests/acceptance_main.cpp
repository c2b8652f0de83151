// Acceptance gate: one line per criterion, pass/fail with elapsed time.
// Exit status 0 iff every criterion passes.  Numeric tolerances and time
// budgets are pinned next to each check.
//
// usage: acceptance <tbprim-binary> <fixtures-dir>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "helpers.hpp"
#include "tbprim/blocksys.hpp"
#include "tbprim/cipher.hpp"
#include "tbprim/gf2m.hpp"
#include "tbprim/mixing.hpp"
#include "tbprim/standard.hpp"
#include "tbprim/vbf.hpp"

using namespace tbprim;
using gf2::u128;
namespace fs = std::filesystem;

static std::string g_tbprim;
static fs::path g_fixtures;
static int g_failures = 0;
static int g_json_counter = 0;

static double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Runs the CLI with --json into a temp file and parses the envelope.
static nlohmann::json run_cli(const std::string& args) {
    fs::path out = fs::temp_directory_path() /
                   ("tbprim_acceptance_" + std::to_string(++g_json_counter) + ".json");
    std::string cmd =
        "\"" + g_tbprim + "\" " + args + " --json \"" + out.string() + "\" > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    if (rc != 0)
        throw std::runtime_error("command exited with status " + std::to_string(rc) + ": " + cmd);
    std::ifstream in(out);
    nlohmann::json doc;
    in >> doc;
    fs::remove(out);
    return doc;
}

struct Outcome {
    bool pass = false;
    std::string detail; // shown on failure or as a skip marker
};

static void criterion(int number, const std::string& label, double budget_seconds,
                      const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.pass = false;
        out.detail = e.what();
    }
    double elapsed = seconds_since(t0);
    bool in_budget = budget_seconds <= 0 || elapsed <= budget_seconds;
    bool pass = out.pass && in_budget;
    std::ostringstream line;
    line << "criterion " << number << ": " << label << " ... " << (pass ? "PASS" : "FAIL");
    line.setf(std::ios::fixed);
    line.precision(2);
    line << " (" << elapsed << "s";
    if (budget_seconds > 0)
        line << ", budget " << budget_seconds << "s";
    line << ")";
    if (!out.detail.empty())
        line << " [" << out.detail << "]";
    if (out.pass && !in_budget)
        line << " [over time budget]";
    std::cout << line.str() << "\n";
    if (!pass)
        ++g_failures;
}

// Parses a low-coordinate-first basis array into the subspace it spans.
static gf2::Subspace subspace_from_basis(const nlohmann::json& witness, int n) {
    std::vector<u128> words;
    for (const auto& row : witness.at("basis")) {
        std::string bits = row.get<std::string>();
        u128 w = 0;
        for (std::size_t j = 0; j < bits.size(); ++j)
            if (bits[j] == '1')
                w |= u128(1) << j;
        words.push_back(w);
    }
    return gf2::span_words(words, n);
}

// 1. Full S-box analysis of the 8-bit patched inversion: 4-uniform with
//    one-point-short derivative images, weakly 2-uniform, plain degree 3
//    witnessed by the half-width subfield, strongly anti-invariant, an
//    involution.
static Outcome criterion1() {
    nlohmann::json doc =
        run_cli("sbox analyze \"" + (g_fixtures / "aes_inverse.sbox").string() + "\"");
    const nlohmann::json& p = doc.at("payload");
    if (p.at("ddt").at("uniformity") != 4)
        return {false, "uniformity != 4"};
    if (p.at("ddt").at("min_derivative_image") != 127)
        return {false, "min derivative image != 127"};
    bool weakly2 = false;
    for (const auto& e : p.at("weakly_uniform"))
        if (e.at("delta") == 2 && e.at("holds") == true)
            weakly2 = true;
    if (!weakly2)
        return {false, "not weakly 2-uniform"};
    if (p.at("anti_invariance").is_null())
        return {false, "anti-invariance scan missing"};
    if (p.at("anti_invariance").at("plain_degree") != 3)
        return {false, "plain degree != 3"};
    if (p.at("anti_invariance").at("strong_degree") < 1)
        return {false, "strong degree < 1"};
    if (p.at("is_involution") != true)
        return {false, "not an involution"};

    // the witness must be the subfield fixed by x -> x^16, i.e. a copy of
    // GF(2^4) inside GF(2^8)
    gf2::Subspace witness =
        subspace_from_basis(p.at("anti_invariance").at("plain_witness"), 8);
    std::vector<u128> fixed;
    for (std::uint32_t x = 0; x < 256; ++x)
        if (gf2m::pow(x, 16, 0x11b, 8) == x)
            fixed.push_back(x);
    if (!(gf2::span_words(fixed, 8) == witness))
        return {false, "plain witness is not the half-width subfield"};
    return {true, ""};
}

// 2. The byte-permutation-then-column-mix layer is proper for 16 bricks of 8.
static Outcome criterion2() {
    nlohmann::json doc = run_cli("layer check \"" + (g_fixtures / "aes_layer.mat").string() +
                                 "\" --bricks 16x8");
    const nlohmann::json& p = doc.at("payload");
    if (p.at("invertible") != true)
        return {false, "layer not invertible"};
    if (p.at("proper") != true)
        return {false, "layer not proper"};
    return {true, ""};
}

// 3. Both reference ciphers certify at r = 1.
static Outcome criterion3() {
    nlohmann::json aes = run_cli("cipher certify \"" + (g_fixtures / "aes.json").string() + "\"");
    if (aes.at("payload").at("primitive") != true)
        return {false, "aes-core not certified"};
    if (aes.at("payload").at("r") != 1)
        return {false, "aes-core certified with r != 1"};

    fs::path serpent = g_fixtures / "serpent.json";
    if (!fs::exists(serpent))
        return {true, "SKIP serpent: fixture not present"};
    nlohmann::json ser = run_cli("cipher certify \"" + serpent.string() + "\"");
    if (ser.at("payload").at("primitive") != true)
        return {false, "serpent-core not certified"};
    if (ser.at("payload").at("r") != 1)
        return {false, "serpent-core certified with r != 1"};
    return {true, ""};
}

// 4. Inverse-closed additive subgroups of GF(2^4) and GF(2^8) are exactly the
//    subfields, with dimension sets {1,2,4} and {1,2,4,8}.
static Outcome criterion4() {
    nlohmann::json r4 = run_cli("verify subfield-theorem --m 4");
    const nlohmann::json& p4 = r4.at("payload");
    if (p4.at("all_subfields") != true || p4.at("dims_are_divisors") != true)
        return {false, "m=4 scan failed"};
    if (p4.at("dims") != nlohmann::json::array({1, 2, 4}))
        return {false, "m=4 dimension set wrong"};

    nlohmann::json r8 = run_cli("verify subfield-theorem --m 8");
    const nlohmann::json& p8 = r8.at("payload");
    if (p8.at("all_subfields") != true || p8.at("dims_are_divisors") != true)
        return {false, "m=8 scan failed"};
    if (p8.at("dims") != nlohmann::json::array({1, 2, 4, 8}))
        return {false, "m=8 dimension set wrong"};
    return {true, ""};
}

// 5. For involutions fixing 0: plain degree >= 2r forces strong degree >= r.
//    100 seeded 6-bit involutions, zero violations.
static Outcome criterion5() {
    int violations = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        vbf::Vbf f = vbf::vbf_from_table(6, random_involution(64, seed));
        if (!vbf::check_involution_lemma(f).holds)
            ++violations;
    }
    if (violations > 0)
        return {false, std::to_string(violations) + " lemma violations"};
    return {true, ""};
}

// 6. Differential uniformity delta implies weak delta-uniformity, and for the
//    smallest r with 2^r >= delta every derivative image spans a subspace of
//    dimension >= m - r.  100 seeded permutations across m = 4, 5, 6.
static Outcome criterion6() {
    int violations = 0;
    int tested = 0;
    for (int m : {4, 5, 6}) {
        const int count = (m == 4) ? 34 : 33;
        const std::uint32_t size = std::uint32_t(1) << m;
        for (int i = 0; i < count; ++i) {
            vbf::Vbf f =
                vbf::vbf_from_table(m, random_permutation(size, std::uint64_t(m * 1000 + i)));
            ++tested;
            vbf::DdtReport ddt = vbf::ddt_report(f);
            int delta = ddt.uniformity; // DDT entries are even, so delta is valid
            if (!vbf::is_weakly_uniform(f, delta)) {
                ++violations;
                continue;
            }
            int r = 0;
            while ((1 << r) < delta)
                ++r;
            // span of each derivative image must have dimension >= m - r
            for (std::uint32_t a = 1; a < size; ++a) {
                std::vector<u128> im;
                for (std::uint32_t x = 0; x < size; ++x)
                    im.push_back(f.table[x ^ a] ^ f.table[x]);
                if (gf2::span_words(im, m).dim() < m - r) {
                    ++violations;
                    break;
                }
            }
        }
    }
    if (tested != 100)
        return {false, "sample count wrong"};
    if (violations > 0)
        return {false, std::to_string(violations) + " violations"};
    return {true, ""};
}

// 7. The block system oracle agrees with the construction: the good toy round
//    is primitive, the trapdoor round reveals exactly the planted subspace as
//    its block of 0, and the witness checker confirms it.
static Outcome criterion7() {
    auto t0 = std::chrono::steady_clock::now();
    nlohmann::json good =
        run_cli("group oracle \"" + (g_fixtures / "toy_good.json").string() + "\"");
    double good_elapsed = seconds_since(t0);
    if (good.at("payload").at("primitive") != true)
        return {false, "good toy round not primitive"};
    if (good_elapsed > 10)
        return {false, "good toy scan over 10s"};

    t0 = std::chrono::steady_clock::now();
    nlohmann::json trap =
        run_cli("group oracle \"" + (g_fixtures / "toy_trapdoor.json").string() + "\"");
    if (seconds_since(t0) > 10)
        return {false, "trapdoor scan over 10s"};
    const nlohmann::json& p = trap.at("payload");
    if (p.at("primitive") != false)
        return {false, "trapdoor round reported primitive"};

    gf2::Subspace planted = gf2::span_words({1, 2, 16, 32}, 8);
    std::vector<std::uint32_t> planted_pts;
    for (u128 q : gf2::points(planted))
        planted_pts.push_back(std::uint32_t(q));
    bool found = false;
    for (const auto& sys : p.at("systems"))
        if (sys.at("block_zero").get<std::vector<std::uint32_t>>() == planted_pts)
            found = true;
    if (!found)
        return {false, "planted subspace not among the block systems"};

    cipher::TbCipherSpec spec = cipher::load_spec((g_fixtures / "toy_trapdoor.json").string());
    if (!cipher::verify_block_witness(spec, 0, planted))
        return {false, "witness check rejects the planted subspace"};
    return {true, ""};
}

// 8. Every block of 0 the oracle reports on random 8-bit rounds is closed
//    under addition.  50 seeded rounds, two 4-bit bricks each.
static Outcome criterion8() {
    int violations = 0;
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        cipher::TbCipherSpec spec;
        spec.name = "sample";
        spec.bricks = gf2::BrickDecomposition(4, 2);
        vbf::Vbf f0 = vbf::vbf_from_table(4, random_permutation(16, rng()));
        vbf::Vbf f1 = vbf::vbf_from_table(4, random_permutation(16, rng()));
        gf2::BitMatrix layer{8, std::vector<u128>(8, 0)};
        do {
            for (int i = 0; i < 8; ++i)
                layer.rows[std::size_t(i)] = u128(rng()) & 0xff;
        } while (!gf2::is_invertible(layer));
        spec.rounds.push_back({{f0, f1}, layer});

        blocksys::PrimitivityScan scan =
            blocksys::primitivity_scan(blocksys::round_generators(spec, 0));
        for (const auto& sys : scan.systems) {
            std::set<std::uint32_t> pts(sys.block_zero.begin(), sys.block_zero.end());
            for (std::uint32_t a : pts)
                for (std::uint32_t b : pts)
                    if (!pts.count(a ^ b))
                        ++violations;
        }
    }
    if (violations > 0)
        return {false, std::to_string(violations) + " non-additive blocks"};
    return {true, ""};
}

// 9. The digraph properness test agrees with subset enumeration on every
//    brick structure with s in {2, 3} and n <= 9: identity, cyclic rotation,
//    and 200 seeded invertible layers per structure.
static Outcome criterion9() {
    int disagreements = 0;
    for (int s : {2, 3}) {
        for (int m = 1; m * s <= 9; ++m) {
            const int n = m * s;
            gf2::BrickDecomposition d(m, s);
            auto compare = [&](const gf2::BitMatrix& layer) {
                if (mixing::is_proper(layer, d).proper !=
                    mixing::is_proper_naive(layer, d).proper)
                    ++disagreements;
            };
            compare(gf2::BitMatrix::identity(n));
            compare(standard::brick_rotation(m, s));
            std::mt19937_64 rng(std::uint64_t(900 + 10 * m + s));
            for (int i = 0; i < 200; ++i) {
                gf2::BitMatrix layer{n, std::vector<u128>(std::size_t(n), 0)};
                do {
                    for (int row = 0; row < n; ++row)
                        layer.rows[std::size_t(row)] = u128(rng()) & ((u128(1) << n) - 1);
                } while (!gf2::is_invertible(layer));
                compare(layer);
            }
        }
    }
    if (disagreements > 0)
        return {false, std::to_string(disagreements) + " route disagreements"};
    return {true, ""};
}

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: acceptance <tbprim-binary> <fixtures-dir>\n";
        return 2;
    }
    g_tbprim = argv[1];
    g_fixtures = argv[2];

    criterion(1, "inversion S-box analysis", 60, criterion1);
    criterion(2, "mixing layer properness (16 bricks of 8)", 1, criterion2);
    criterion(3, "reference ciphers certify at r=1", 0, criterion3);
    criterion(4, "inverse-closed subgroups are subfields (m=4,8)", 30, criterion4);
    criterion(5, "involution lemma on 100 seeded involutions", 0, criterion5);
    criterion(6, "uniformity implies weak uniformity + span bound", 0, criterion6);
    criterion(7, "oracle: good round primitive, trapdoor revealed", 0, criterion7);
    criterion(8, "oracle blocks are additively closed (50 rounds)", 0, criterion8);
    criterion(9, "properness routes agree on all small structures", 0, criterion9);

    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
