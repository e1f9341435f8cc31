#pragma once

// Sequence-set constructions.
//
//  * chen_cs       - size-4 CS of length 2^(m-1) + 2^v from a quadratic path form
//  * mocs_pair     - the (2, 4, L) MOCS {G, F} over the same parameters
//  * concat_cs     - the size-4 CS of length 2^m + 2^(v+1) + b joining G and F
//                    around b spectral nulls
//  * zero_insert_step / iterate - pairwise concatenation of an MOCS with NULL gaps
//  * seed_ccc      - a binary (N, N, N) complete complementary code used as a seed

#include "nullcs/gbf.hpp"
#include "nullcs/seqcore.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace nullcs {

/// g_1 = (q/2) sum_{s=1}^{m-2} x_pi(s) x_pi(s+1) + sum_s lambda_s x_pi(s) x_m
///       + sum_{s=1}^m mu_s x_s + mu0
struct Theorem2Params {
    int q = 2;
    int m = 2;
    int v = 1;
    ConstrainedPermutation pi = ConstrainedPermutation::identity(2, 1);
    /// v entries, or m-1 entries (the extra lambda_s vanish on the truncation window).
    std::vector<int> lambda;
    /// m entries.
    std::vector<int> mu;
    int mu0 = 0;

    /// Identity permutation, all coefficients zero.
    static Theorem2Params zeros(int q, int m, int v);

    /// Throws InputError when dimensions or ranges are inconsistent.
    void validate() const;
    /// Copy with lambda in its v-entry form.
    Theorem2Params reduced() const;
    std::size_t length() const { return truncation_length(m, v); }
};

/// g_1 in reduced form.
Gbf theorem2_base(const Theorem2Params& p);

/// {g_1, g_2, g_3, g_4} with offsets 0, (q/2)x_m, (q/2)x_pi(1), (q/2)(x_pi(1) + x_m).
std::array<Gbf, 4> theorem2_functions(const Theorem2Params& p);

/// {f_1, ..., f_4}, f_k = g_k + (q/2) x_pi(m-1) + (q/2) x_m x_pi(v). Needs m >= 3, v < m-1.
std::array<Gbf, 4> theorem3_functions(const Theorem2Params& p);

ComplementarySet chen_cs(const Theorem2Params& p);

/// Family {G, F}; requires m >= 3 and 1 <= v < m-1.
MocsFamily mocs_pair(const Theorem2Params& p);

/// Which half comes first in a concatenated codeword.
enum class HalfOrder {
    g_first,  ///< (psi(g_k) | 0_b | psi(f_k)): zero_insert_step applied to {G, F}
    f_first,  ///< (psi(f_k) | 0_b | psi(g_k))
};

ComplementarySet concat_cs(const Theorem2Params& p, std::size_t b, HalfOrder order = HalfOrder::g_first);

/// (head | NULL^b | tail)
QarySequence concat_with_nulls(const QarySequence& head, std::size_t b, const QarySequence& tail);

/// One iteration: set i of the result is W_i joined with W_{i+M1} across b NULLs,
/// M1 = floor(M/2). With odd M the last set is not used.
MocsFamily zero_insert_step(const MocsFamily& family, std::size_t b);

/// b_1, ..., b_{k-1}
using ZeroInsertionPlan = std::vector<std::size_t>;

/// 2^(k-1) L + sum_i 2^(k-1-i) b_i
std::size_t iterated_length(std::size_t seed_length, const ZeroInsertionPlan& plan);
/// sum_i 2^(k-1-i) b_i
std::size_t inserted_null_count(const ZeroInsertionPlan& plan);

/// Applies zero_insert_step once per plan entry; needs M >= 2^(k-1).
MocsFamily iterate(const MocsFamily& family, const ZeroInsertionPlan& plan);

/// Binary (N, N, N) complete complementary code for N in {2, 4, 8, 16}: the
/// Kronecker power of the 2x2 Golay kernel [[1+z, 1-z], [1-z, 1+z]].
/// Seed plumbing only, not one of the constructions above.
MocsFamily seed_ccc(std::size_t n);

}  // namespace nullcs
