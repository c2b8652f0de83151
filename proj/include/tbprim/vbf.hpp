#pragma once

// Vectorial boolean functions F: (F2)^m -> (F2)^m given by lookup table,
// with the differential and subspace-invariance statistics the certifier
// consumes: difference distribution, derivative image sizes, weak uniformity,
// and the two anti-invariance degrees.
//
// Degrees are defined through the largest proper subspace that breaks them:
//   plain_degree  = m - 1 - max{ dim U : U proper, F(U) = U }
//   strong_degree = m - 1 - max{ dim U : U proper, F(U) is a subspace }
// Both require F(0) = 0 so that {0} is always a candidate.  For a permutation
// every line {0, a} maps onto the subspace {0, F(a)}, hence
// strong_degree <= m - 2, and strong_degree <= plain_degree.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tbprim/gf2.hpp"

namespace tbprim::vbf {

struct Vbf {
    int m = 0;
    std::vector<std::uint32_t> table; // 2^m entries, each < 2^m

    std::uint32_t size() const { return 1u << m; }
    std::uint32_t operator()(std::uint32_t x) const { return table[x]; }
};

Vbf vbf_from_table(int m, std::vector<std::uint32_t> table);
bool is_permutation(const Vbf& F);
Vbf inverse_permutation(const Vbf& F);
bool is_involution(const Vbf& F);

// F(x + a) + F(x); a must be nonzero
Vbf derivative(const Vbf& F, std::uint32_t a);
int derivative_image_size(const Vbf& F, std::uint32_t a);

// (F + F(0), F(0)): output translation making the table fix zero
std::pair<Vbf, std::uint32_t> normalized(const Vbf& F);

struct DdtReport {
    int m = 0;
    int uniformity = 0;           // max over a != 0, b of |{x : F(x+a)+F(x) = b}|
    int min_derivative_image = 0; // min over a != 0 of |Im(F(x+a)+F(x))|
    int max_derivative_image = 0;
    bool is_apn = false;
};
DdtReport ddt_report(const Vbf& F);

// (|Im(F_a^)| - 1) * (delta + 2) >= 2^m for every a != 0, in exact integer
// arithmetic.  F must be a permutation, delta an even number >= 2.
bool is_weakly_uniform(const Vbf& F, int delta);

struct AntiInvarianceReport {
    int m = 0;
    int plain_degree = 0;
    int strong_degree = 0;
    // set when the scan was capped at max_codim and found no witness, so the
    // degree is only a lower bound
    bool plain_partial = false;
    bool strong_partial = false;
    std::optional<gf2::Subspace> plain_witness; // invariant subspace of maximal dimension
    std::optional<std::pair<gf2::Subspace, gf2::Subspace>> strong_witness; // (U, F(U))
};

// Requires a permutation with F(0) = 0.  max_codim = 0 scans every proper
// subspace (needs m <= 8); a positive max_codim restricts the scan to
// codimensions <= max_codim (mandatory for m > 8) and flags partial degrees.
AntiInvarianceReport anti_invariance_report(const Vbf& F, int max_codim = 0);

// Bounded check used by the certifier: no proper subspace of codimension <= r
// maps onto a subspace.
bool strongly_anti_invariant_at_least(const Vbf& F, int r);

struct InvolutionLemmaReport {
    struct Entry {
        int r = 0;
        bool qualifying = false; // plain_degree >= 2r
        bool satisfied = false;  // strong_degree >= r
    };
    AntiInvarianceReport degrees;
    std::vector<Entry> entries; // r = 1 .. ceil(m/2)-1
    bool holds = false;         // every qualifying entry satisfied
};

// F must be an involution fixing 0.
InvolutionLemmaReport check_involution_lemma(const Vbf& F);

struct SubfieldTheoremReport {
    struct Entry {
        gf2::Subspace subgroup;
        bool multiplicatively_closed = false;
        bool is_subfield = false; // equals the fixed field of x -> x^(2^dim)
    };
    int m = 0;
    std::uint32_t modulus = 0;
    std::vector<Entry> inverse_closed; // every nonzero inverse-closed additive subgroup
    bool all_subfields = false;
    bool dims_are_divisors = false; // the set of dimensions found == divisors of m
};

// Enumerates all additive subgroups of GF(2^m) (m <= 8), keeps those closed
// under x -> x^-1 on nonzero elements, and checks each is a subfield.
SubfieldTheoremReport verify_subfield_theorem(int m, std::uint32_t modulus);

// Permutation fixing 0 that maps every coset of U onto a coset of U: a seeded
// permutation of the coset space (fixing U itself) composed with independent
// in-coset permutations.  Requires 0 < dim U < n.
Vbf make_coset_respecting_sbox(const gf2::Subspace& U, std::uint64_t seed);

// S-box file format: a "# m=<value>" header line, then 2^m whitespace
// separated hex values, the entry for input x at position x.
Vbf read_sbox_file(const std::string& path);
void write_sbox_file(const std::string& path, const Vbf& F);
Vbf sbox_from_text(const std::string& text);
std::string sbox_to_text(const Vbf& F);

} // namespace tbprim::vbf
