// Command line front end.  Exit codes: 0 success (whatever the verdict),
// 2 bad input, 3 capacity bound exceeded, 1 anything else.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tbprim/errors.hpp"
#include "tbprim/report.hpp"

namespace {

void emit(const nlohmann::json& rep, const std::string& json_path) {
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out)
            throw tbprim::InputError("cannot write " + json_path);
        out << rep.dump(2) << "\n";
    }
}

void summarize_sbox(const nlohmann::json& p) {
    std::cout << "m = " << p["m"] << ", permutation: " << p["is_permutation"]
              << ", involution: " << p["is_involution"] << "\n";
    const auto& d = p["ddt"];
    std::cout << "uniformity " << d["uniformity"] << " (apn: " << d["is_apn"]
              << "), derivative image size " << d["min_derivative_image"] << ".."
              << d["max_derivative_image"] << "\n";
    if (p.contains("weakly_uniform")) {
        std::cout << "weakly uniform:";
        for (const auto& w : p["weakly_uniform"])
            std::cout << " delta=" << w["delta"] << ":" << (w["holds"].get<bool>() ? "yes" : "no");
        std::cout << "\n";
    }
    if (p.contains("anti_invariance") && p["anti_invariance"].is_object()) {
        const auto& a = p["anti_invariance"];
        std::cout << "anti-invariance degrees: plain " << a["plain_degree"]
                  << (a["plain_partial"].get<bool>() ? "+" : "") << ", strong "
                  << a["strong_degree"] << (a["strong_partial"].get<bool>() ? "+" : "") << "\n";
    } else if (p.contains("anti_invariance_skipped")) {
        std::cout << "anti-invariance skipped: " << p["anti_invariance_skipped"].get<std::string>()
                  << "\n";
    }
}

void summarize_layer(const nlohmann::json& p) {
    std::cout << "n = " << p["n"] << " (" << p["s"] << " bricks of " << p["m"]
              << "), rank " << p["rank"] << ", invertible: " << p["invertible"] << "\n";
    if (p["proper"].is_boolean()) {
        if (p["proper"].get<bool>()) {
            std::cout << "proper: yes\n";
        } else {
            std::cout << "proper: no, invariant brick set " << p["witness"].dump() << "\n";
        }
    } else {
        std::cout << "proper: not defined (layer not invertible)\n";
    }
}

void summarize_certify(const nlohmann::json& p) {
    std::cout << p["name"].get<std::string>() << ": n = " << p["n"] << ", " << p["s"]
              << " bricks of " << p["m"] << ", " << p["rounds"] << " round(s)\n";
    if (p["primitive"].get<bool>()) {
        std::cout << "certified primitive via round " << p["round"] << " with r = " << p["r"]
                  << "\n";
        for (const auto& e : p["evidence"])
            std::cout << "  brick " << e["brick"] << ": min derivative image "
                      << e["min_derivative_image"] << ", strong degree " << e["strong_degree"]
                      << (e["strong_exact"].get<bool>() ? "" : "+") << "\n";
    } else {
        std::cout << "not certified (this is not a proof of imprimitivity)\n";
    }
    for (const auto& a : p["attempts"]) {
        std::cout << "  round " << a["round"];
        if (a["r"].get<int>() > 0)
            std::cout << ", r = " << a["r"];
        std::cout << ": " << a["failure"].get<std::string>() << "\n";
    }
}

void summarize_oracle(const nlohmann::json& p) {
    std::cout << p["name"].get<std::string>() << ": round " << p["round"] << ", n = " << p["n"]
              << "\n";
    if (p["primitive"].get<bool>()) {
        std::cout << "primitive: every seed collapses to the full state space\n";
        return;
    }
    std::cout << p["systems"].size() << " nontrivial block system(s):\n";
    for (const auto& s : p["systems"])
        std::cout << "  seed " << s["seed"] << ": " << s["block_count"] << " blocks of "
                  << s["block_size"] << (s["is_subspace"].get<bool>() ? " (subspace)" : "")
                  << "\n";
}

void summarize_subfield(const nlohmann::json& p) {
    std::cout << "GF(2^" << p["m"] << "), modulus " << p["modulus"].get<std::string>() << "\n";
    std::cout << "inverse-closed subgroup dimensions: " << p["dims"].dump() << "\n";
    std::cout << "all are subfields: " << p["all_subfields"]
              << ", dims are exactly the divisors: " << p["dims_are_divisors"] << "\n";
}

void summarize_involution(const nlohmann::json& p) {
    std::cout << "m = " << p["m"] << ", plain degree " << p["plain_degree"] << ", strong degree "
              << p["strong_degree"] << "\n";
    for (const auto& e : p["entries"])
        std::cout << "  r = " << e["r"] << ": qualifying " << e["qualifying"] << ", satisfied "
                  << e["satisfied"] << "\n";
    std::cout << "lemma holds: " << p["holds"] << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Primitivity toolkit for translation-based ciphers"};
    app.require_subcommand(1);
    std::cout << std::boolalpha;

    // sbox analyze
    auto* sbox = app.add_subcommand("sbox", "S-box statistics");
    sbox->require_subcommand(1);
    auto* analyze = sbox->add_subcommand("analyze", "DDT, weak uniformity, anti-invariance");
    std::string sbox_path, sbox_json;
    bool normalize = false;
    int strong_max_codim = 0;
    analyze->add_option("path", sbox_path, "S-box file")->required();
    analyze->add_flag("--normalize", normalize, "analyze F + F(0) instead of F");
    analyze->add_option("--strong-max-codim", strong_max_codim,
                        "cap the anti-invariance scan at this codimension (0 = full scan)");
    analyze->add_option("--json", sbox_json, "write the JSON report here");

    // layer check
    auto* layer = app.add_subcommand("layer", "mixing layer checks");
    layer->require_subcommand(1);
    auto* check = layer->add_subcommand("check", "rank, brick digraph, properness");
    std::string layer_path, layer_json, bricks_arg;
    check->add_option("path", layer_path, "matrix file")->required();
    check->add_option("--bricks", bricks_arg, "decomposition as SxM, e.g. 16x8")->required();
    check->add_option("--json", layer_json, "write the JSON report here");

    // cipher certify
    auto* cipher_cmd = app.add_subcommand("cipher", "whole-cipher certification");
    cipher_cmd->require_subcommand(1);
    auto* certify = cipher_cmd->add_subcommand("certify", "search for a certifying round");
    std::string spec_path, certify_json;
    int max_r = 0;
    certify->add_option("spec", spec_path, "cipher spec JSON")->required();
    certify->add_option("--max-r", max_r, "cap the anti-invariance order r (0 = all r < m/2)");
    certify->add_option("--json", certify_json, "write the JSON report here");

    // group oracle
    auto* group = app.add_subcommand("group", "exhaustive small-group checks");
    group->require_subcommand(1);
    auto* oracle = group->add_subcommand("oracle", "enumerate all block systems of a keyed round");
    std::string oracle_spec, oracle_json;
    int oracle_round = 0, oracle_max_n = 12;
    oracle->add_option("spec", oracle_spec, "cipher spec JSON")->required();
    oracle->add_option("--round", oracle_round, "round index (default 0)");
    oracle->add_option("--max-n", oracle_max_n, "refuse state spaces beyond this n");
    oracle->add_option("--json", oracle_json, "write the JSON report here");

    // verify subfield-theorem / involution-lemma
    auto* verify = app.add_subcommand("verify", "exhaustive checks of the supporting results");
    verify->require_subcommand(1);
    auto* subfield = verify->add_subcommand(
        "subfield-theorem", "inverse-closed additive subgroups of GF(2^m) are the subfields");
    int sub_m = 0;
    std::string sub_modulus, subfield_json;
    subfield->add_option("--m", sub_m, "field degree (2..8)")->required();
    subfield->add_option("--modulus", sub_modulus, "field modulus, e.g. 0x11b (default: smallest)");
    subfield->add_option("--json", subfield_json, "write the JSON report here");
    auto* invol = verify->add_subcommand(
        "involution-lemma", "involutions with plain degree >= 2r have strong degree >= r");
    std::string invol_path, invol_json;
    invol->add_option("path", invol_path, "S-box file (involution fixing 0)")->required();
    invol->add_option("--json", invol_json, "write the JSON report here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            auto rep = tbprim::report::sbox_analyze(sbox_path, normalize, strong_max_codim);
            summarize_sbox(rep["payload"]);
            emit(rep, sbox_json);
        } else if (*check) {
            int s = 0, m = 0;
            if (std::sscanf(bricks_arg.c_str(), "%dx%d", &s, &m) != 2)
                throw tbprim::InputError("--bricks expects SxM, e.g. 16x8");
            auto rep = tbprim::report::layer_check(layer_path, m, s);
            summarize_layer(rep["payload"]);
            emit(rep, layer_json);
        } else if (*certify) {
            auto rep = tbprim::report::cipher_certify(spec_path, max_r);
            summarize_certify(rep["payload"]);
            emit(rep, certify_json);
        } else if (*oracle) {
            auto rep = tbprim::report::group_oracle(oracle_spec, oracle_round, oracle_max_n);
            summarize_oracle(rep["payload"]);
            emit(rep, oracle_json);
        } else if (*subfield) {
            std::uint32_t modulus = 0;
            if (!sub_modulus.empty())
                modulus = std::uint32_t(std::stoul(sub_modulus, nullptr, 0));
            auto rep = tbprim::report::subfield_theorem(sub_m, modulus);
            summarize_subfield(rep["payload"]);
            emit(rep, subfield_json);
        } else if (*invol) {
            auto rep = tbprim::report::involution_lemma(invol_path);
            summarize_involution(rep["payload"]);
            emit(rep, invol_json);
        }
    } catch (const tbprim::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const tbprim::CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
