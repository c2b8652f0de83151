#pragma once

// JSON reports behind the command line tool.  Every command produces an
// envelope { tool, version, command, generated_at, inputs, payload }; inputs
// carry an FNV-1a 64 digest of every file read, and generated_at is the only
// field that differs between identical runs.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace tbprim::report {

inline constexpr const char* kToolName = "tbprim";
inline constexpr const char* kToolVersion = "1.0.0";

std::uint64_t fnv1a64_file(const std::string& path);
std::string hex64(std::uint64_t v);

nlohmann::json envelope(const std::string& command,
                        const std::vector<std::string>& input_paths,
                        nlohmann::json payload);

// S-box statistics: DDT summary always; weak uniformity and anti-invariance
// for permutations.  The anti-invariance scan needs F(0) = 0; normalize
// replaces F by F + F(0) first (the applied constant is reported).
// strong_max_codim = 0 scans all codimensions (m <= 8 only).
nlohmann::json sbox_analyze(const std::string& path, bool normalize, int strong_max_codim);

// Invertibility, rank, brick digraph and properness for an n x n layer split
// into s bricks of m bits.
nlohmann::json layer_check(const std::string& path, int m, int s);

nlohmann::json cipher_certify(const std::string& spec_path, int max_r);

// Exhaustive block system scan of round h with all keys; refuses n > max_n.
nlohmann::json group_oracle(const std::string& spec_path, int round, int max_n);

// modulus = 0 picks the smallest irreducible of degree m.
nlohmann::json subfield_theorem(int m, std::uint32_t modulus);

nlohmann::json involution_lemma(const std::string& path);

} // namespace tbprim::report
