#pragma once

// Generalized Boolean functions f : {0,1}^m -> Z_q in algebraic normal form.
//
// Variables are numbered 1..m. Index i in [0, 2^m) maps to the point
// (i_1, ..., i_m) with i = sum_k i_k 2^(k-1); i_1 is the least significant bit
// and i_m the most significant.

#include "nullcs/seqcore.hpp"

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nullcs {

inline constexpr int kMaxVariables = 30;

struct Monomial {
    int coeff = 0;
    /// Bit k-1 is set when x_k appears.
    std::uint32_t vars = 0;

    int degree() const noexcept;
    /// 1-based variable indices in increasing order.
    std::vector<int> variables() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Bit mask for a list of 1-based variable indices.
std::uint32_t variable_mask(std::span<const int> vars, int m);

class GeneralizedBooleanFunction {
public:
    /// The zero function.
    GeneralizedBooleanFunction(int q, int m);
    GeneralizedBooleanFunction(int q, int m, std::vector<Monomial> terms);

    int q() const noexcept { return q_; }
    int m() const noexcept { return m_; }
    /// Collected terms sorted by (degree, variable list); no zero coefficients.
    const std::vector<Monomial>& terms() const noexcept { return terms_; }

    GeneralizedBooleanFunction& add_term(int coeff, std::span<const int> vars);
    GeneralizedBooleanFunction& add_term(int coeff, std::initializer_list<int> vars) {
        return add_term(coeff, std::span<const int>(vars.begin(), vars.size()));
    }

    /// Coefficient of the monomial over exactly these variables (0 if absent).
    int coefficient(std::uint32_t vars) const noexcept;

    /// f(i_1, ..., i_m) for 0 <= i < 2^m.
    int evaluate(std::uint64_t i) const;

    friend bool operator==(const GeneralizedBooleanFunction&, const GeneralizedBooleanFunction&) = default;

private:
    void insert(int coeff, std::uint32_t vars);

    int q_;
    int m_;
    std::vector<Monomial> terms_;
};

using Gbf = GeneralizedBooleanFunction;

Gbf add(const Gbf& f, const Gbf& g);
inline Gbf operator+(const Gbf& f, const Gbf& g) { return add(f, g); }

/// (f(0), ..., f(L-1)) as phases; the truncation f^(L) of the length-2^m table.
QarySequence truncated_sequence(const Gbf& f, std::size_t length);

/// Canonical text, e.g. "2 + 3*x2 + 1*x1x2"; the zero function prints "0".
std::string to_string(const Gbf& f);

/// Parses "1*x1x2 + 3*x2 + 2" style text. Coefficients are reduced mod q; a
/// bare monomial has coefficient 1; '-' negates the following term.
Gbf parse_gbf(std::string_view text, int q, int m);

/// Permutation pi of {1, ..., m-1} with {pi(1), ..., pi(v)} = {1, ..., v}.
class ConstrainedPermutation {
public:
    ConstrainedPermutation(int m, int v, std::vector<int> images);

    static ConstrainedPermutation identity(int m, int v);

    int m() const noexcept { return m_; }
    int v() const noexcept { return v_; }
    /// pi(s) for 1 <= s <= m-1.
    int operator()(int s) const { return images_.at(static_cast<std::size_t>(s - 1)); }
    const std::vector<int>& images() const noexcept { return images_; }
    bool is_identity() const noexcept;

    friend bool operator==(const ConstrainedPermutation&, const ConstrainedPermutation&) = default;

private:
    int m_;
    int v_;
    std::vector<int> images_;
};

/// v! (m-1-v)!
std::uint64_t count_constrained_permutations(int m, int v);

/// All constrained permutations for (m, v) in lexicographic order.
std::vector<ConstrainedPermutation> enumerate_constrained_permutations(int m, int v);

/// Length 2^(m-1) + 2^v of the truncated sequences built over (m, v).
std::size_t truncation_length(int m, int v);

/// Drops the lambda_s x_pi(s) x_m terms with s > v from a function of the shape
///   (q/2) sum_{s=1}^{m-2} x_pi(s) x_pi(s+1) + sum_s lambda_s x_pi(s) x_m + sum_s mu_s x_s + mu.
/// Those terms vanish on every i < 2^(m-1) + 2^v, so the truncated sequences agree.
/// Throws UnsupportedShapeError for any other shape.
Gbf reduce_for_truncation(const Gbf& f, const ConstrainedPermutation& pi);

}  // namespace nullcs
