// Writes the reference fixtures into a directory: S-box and matrix files,
// cipher specs, and a MANIFEST.json with seeds and content digests.
//
// The trapdoor fixture plants the subspace U0 = span{0001, 0010} in both
// 4-bit bricks: each brick maps cosets of U0 onto cosets of U0, and the
// mixing layer maps U0 x U0 onto itself, so the cosets of U0 x U0 form a
// block system of every round with every key.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tbprim/gf2.hpp"
#include "tbprim/report.hpp"
#include "tbprim/standard.hpp"
#include "tbprim/vbf.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace tbprim;

int main(int argc, char** argv) {
    CLI::App app{"fixture generator"};
    std::string out_dir;
    std::uint64_t seed = 2026;
    app.add_option("dir", out_dir, "output directory")->required();
    app.add_option("--seed", seed, "base seed for the trapdoor S-boxes");
    CLI11_PARSE(app, argc, argv);

    fs::create_directories(out_dir);
    std::vector<std::string> written;
    auto put = [&](const std::string& name, const std::string& text) {
        std::ofstream out(fs::path(out_dir) / name);
        if (!out) {
            std::cerr << "cannot write " << name << "\n";
            std::exit(1);
        }
        out << text;
        written.push_back(name);
    };

    put("inv4.sbox", vbf::sbox_to_text(standard::inversion_sbox_m4()));
    put("aes_inverse.sbox", vbf::sbox_to_text(standard::aes_inversion_sbox()));
    put("identity_2.sbox", vbf::sbox_to_text(vbf::vbf_from_table(2, {0, 1, 2, 3})));
    for (int k = 0; k < 8; ++k)
        put("serpent_s" + std::to_string(k) + ".sbox",
            vbf::sbox_to_text(standard::serpent_sbox(k)));

    gf2::Subspace u0 = gf2::span_words({0b0001, 0b0010}, 4);
    put("trap_b0.sbox", vbf::sbox_to_text(vbf::make_coset_respecting_sbox(u0, seed)));
    put("trap_b1.sbox", vbf::sbox_to_text(vbf::make_coset_respecting_sbox(u0, seed + 1)));

    put("toy_layer.mat", gf2::matrix_to_text(standard::toy_mix_layer()));
    put("aes_layer.mat", gf2::matrix_to_text(standard::aes_layer()));
    put("serpent_layer.mat", gf2::matrix_to_text(standard::serpent_layer()));
    put("identity_4.mat", gf2::matrix_to_text(gf2::BitMatrix::identity(4)));
    put("swap_8.mat", gf2::matrix_to_text(standard::brick_rotation(4, 2)));

    auto spec = [](const std::string& name, int m, int s, json rounds) {
        return json{{"name", name}, {"m", m}, {"s", s}, {"rounds", std::move(rounds)}}.dump(2) +
               "\n";
    };
    put("toy_good.json",
        spec("toy-good", 4, 2,
             json::array({{{"sboxes", {"inv4.sbox"}}, {"layer", "toy_layer.mat"}}})));
    put("toy_trapdoor.json",
        spec("toy-trapdoor", 4, 2,
             json::array(
                 {{{"sboxes", {"trap_b0.sbox", "trap_b1.sbox"}}, {"layer", "toy_layer.mat"}}})));
    put("translations_only.json",
        spec("translations-only", 2, 2,
             json::array({{{"sboxes", {"identity_2.sbox"}}, {"layer", "identity_4.mat"}}})));
    put("aes.json",
        spec("aes-core", 8, 16,
             json::array({{{"sboxes", {"aes_inverse.sbox"}}, {"layer", "aes_layer.mat"}}})));
    json serpent_rounds = json::array();
    for (int k = 0; k < 8; ++k)
        serpent_rounds.push_back({{"sboxes", {"serpent_s" + std::to_string(k) + ".sbox"}},
                                  {"layer", "serpent_layer.mat"}});
    put("serpent.json", spec("serpent-core", 4, 32, std::move(serpent_rounds)));

    json files;
    for (const auto& name : written)
        files[name] = report::hex64(report::fnv1a64_file((fs::path(out_dir) / name).string()));
    json manifest{{"tool", report::kToolName},
                  {"version", report::kToolVersion},
                  {"seed", seed},
                  {"trapdoor_seeds", {{"trap_b0", seed}, {"trap_b1", seed + 1}}},
                  {"planted_subspace", {"1000", "0100"}},
                  {"files", files}};
    {
        std::ofstream out(fs::path(out_dir) / "MANIFEST.json");
        out << manifest.dump(2) << "\n";
    }
    std::cout << "wrote " << written.size() + 1 << " files to " << out_dir << "\n";
    return 0;
}
