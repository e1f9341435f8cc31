#pragma once

// Code-keying OFDM codebooks built from the quadratic path forms.
//
//   C1  : psi(g_1) over all (pi, lambda, mu, mu0), length 2^(m-1) + 2^v
//   C2  : (psi(f_1) | 0_b | psi(g_1)) over the same grid, length 2^m + 2^(v+1) + b
//   C3  : C2 restricted to lambda = 0 and mu_m = 0
//   C21 : C3 restricted to one fixed permutation
//
// Enumeration walks (pi, lambda, mu, mu0) lexicographically, pi in the order of
// enumerate_constrained_permutations and mu0 varying fastest.

#include "nullcs/gbf.hpp"
#include "nullcs/seqcore.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nullcs {

enum class CodebookVariant { c1, c2, c3, c21 };

std::string to_string(CodebookVariant variant);
/// "c1", "c2", "c3", "c21" (case-insensitive).
CodebookVariant parse_variant(std::string_view name);

struct CodebookSpec {
    int q = 2;
    int m = 3;
    int v = 1;
    std::size_t b = 0;
    CodebookVariant variant = CodebookVariant::c2;
    /// Permutation images for C21; identity when empty. Ignored by other variants.
    std::vector<int> pi;

    /// Throws InputError outside the variant's parameter range.
    void validate() const;
    std::size_t codeword_length() const;
    ConstrainedPermutation fixed_permutation() const;
};

/// Parameters of one raw enumeration index.
struct CodewordParams {
    ConstrainedPermutation pi;
    std::vector<int> lambda;
    std::vector<int> mu;
    int mu0 = 0;
};

/// Two raw enumeration indices that produced the same codeword.
struct Collision {
    std::uint64_t first = 0;
    std::uint64_t second = 0;
};

class Codebook {
public:
    static constexpr std::uint8_t kNullSymbol = 0xFF;

    Codebook(CodebookSpec spec, std::size_t length);

    const CodebookSpec& spec() const noexcept { return spec_; }
    std::size_t length() const noexcept { return length_; }
    /// Distinct codewords.
    std::size_t size() const noexcept { return raw_index_.size(); }
    std::uint64_t raw_count() const noexcept { return raw_count_; }
    const std::optional<Collision>& first_collision() const noexcept { return first_collision_; }

    /// Symbols of codeword i (phase, or kNullSymbol).
    std::span<const std::uint8_t> row(std::size_t i) const noexcept {
        return {symbols_.data() + i * length_, length_};
    }
    QarySequence codeword(std::size_t i) const;
    /// Raw enumeration index of distinct codeword i.
    std::uint64_t raw_index(std::size_t i) const noexcept { return raw_index_[i]; }

private:
    friend Codebook enumerate(const CodebookSpec&, std::uint64_t);

    CodebookSpec spec_;
    std::size_t length_;
    std::uint64_t raw_count_ = 0;
    std::vector<std::uint8_t> symbols_;
    std::vector<std::uint64_t> raw_index_;
    std::optional<Collision> first_collision_;
};

/// Closed-form |C|: v!(m-1-v)! q^(m+v+1) for C1/C2, v!(m-1-v)! q^m for C3, q^m for C21.
std::uint64_t size_formula(const CodebookSpec& spec);

/// Parameters behind raw enumeration index `raw` (< size_formula(spec)).
CodewordParams decode_params(const CodebookSpec& spec, std::uint64_t raw);

/// The codeword for one parameter choice, as enumerate would emit it.
QarySequence make_codeword(const CodebookSpec& spec, const CodewordParams& params);

/// Enumerates and deduplicates; CapExceededError when size_formula(spec) > cap.
Codebook enumerate(const CodebookSpec& spec, std::uint64_t cap = 1'000'000);

/// Largest e with q^e <= n, by integer comparison. n >= 1, q >= 2.
unsigned floor_log(std::uint64_t n, std::uint64_t q);

struct CodeRate {
    std::uint64_t numerator = 0;
    std::uint64_t denominator = 1;

    double value() const noexcept { return static_cast<double>(numerator) / static_cast<double>(denominator); }
};

/// floor(log_q |C|) / codeword length.
CodeRate code_rate(const CodebookSpec& spec);

/// Exact minimum pairwise distance. Needs at least two codewords; CapExceededError
/// when the number of pairs exceeds pair_budget.
std::size_t min_hamming_distance(const Codebook& codebook, std::uint64_t pair_budget = 2'000'000'000ULL);

/// Distance between two symbol rows.
std::size_t hamming_distance(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

/// Which pair of subcodes a d_min prediction talks about.
enum class DminFamily {
    truncated,     ///< psi(f) of length 2^(m-1) + 2^v, f in Q_pi + affine(x_1..x_{m-1})
    concatenated,  ///< (psi(f_1) | 0_b | psi(g_1)) codewords of C3
};

enum class PermContext {
    same,       ///< both codewords share one permutation
    differing,  ///< the union of two subcodes with different permutations
    all,        ///< the union over every admissible permutation
};

/// Closed-form minimum distance. Throws InputError outside the (m, v) range the
/// result is stated for.
std::uint64_t predicted_dmin(DminFamily family, PermContext context, int m, int v);

}  // namespace nullcs
