#pragma once

// Sequence representation, aperiodic correlation and the complementary-set /
// MOCS verification oracles.
//
// A q-ary sequence stores a phase index k in Z_q per position (complex value
// xi^k, xi = exp(2*pi*j/q)) or NULL for a spectral zero. All correlation sums
// are accumulated as histograms over Z_q, so when q divides 4 every value is a
// Gaussian integer and zero tests are exact.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nullcs {

using Complex = std::complex<double>;
using ComplexSequence = std::vector<Complex>;

class QarySequence {
public:
    static constexpr std::int32_t kNull = -1;

    QarySequence(int q, std::vector<std::int32_t> entries);

    int q() const noexcept { return q_; }
    std::size_t size() const noexcept { return entries_.size(); }

    std::int32_t operator[](std::size_t i) const noexcept { return entries_[i]; }
    bool is_null(std::size_t i) const noexcept { return entries_[i] == kNull; }
    std::span<const std::int32_t> entries() const noexcept { return entries_; }

    /// Number of non-NULL entries, i.e. sum |a(i)|^2.
    std::size_t energy() const noexcept;

    friend bool operator==(const QarySequence&, const QarySequence&) = default;

private:
    int q_;
    std::vector<std::int32_t> entries_;
};

/// Binary sequence from +1 / -1 / 0 values (0 becomes NULL).
QarySequence from_bipolar(std::span<const int> values);
QarySequence from_bipolar(std::initializer_list<int> values);

/// True when every correlation value over Z_q is a Gaussian integer.
constexpr bool exact_modulus(int q) noexcept { return q == 1 || q == 2 || q == 4; }

/// xi^k for xi the primitive q-th root of unity; exact for q in {1, 2, 4}.
Complex root_of_unity(int q, std::int64_t k);

ComplexSequence to_complex(const QarySequence& seq);

struct CorrelationValue {
    Complex value;
    /// Real and imaginary parts are exact integers.
    bool exact = false;

    bool is_zero(double tol) const noexcept;
};

/// R_{a,b}(u) = sum_i a(i) b*(i+u), zero for |u| >= L.
CorrelationValue cross_correlation(const QarySequence& a, const QarySequence& b, long u);
CorrelationValue auto_correlation(const QarySequence& a, long u);

/// Same sum evaluated by complex multiply-accumulate, without the histogram.
Complex cross_correlation_numeric(const QarySequence& a, const QarySequence& b, long u);

class ComplementarySet {
public:
    explicit ComplementarySet(std::vector<QarySequence> sequences);

    std::size_t size() const noexcept { return sequences_.size(); }
    std::size_t length() const noexcept { return sequences_.front().size(); }
    int q() const noexcept { return sequences_.front().q(); }

    const QarySequence& operator[](std::size_t j) const noexcept { return sequences_[j]; }
    const std::vector<QarySequence>& sequences() const noexcept { return sequences_; }
    auto begin() const noexcept { return sequences_.begin(); }
    auto end() const noexcept { return sequences_.end(); }

    friend bool operator==(const ComplementarySet&, const ComplementarySet&) = default;

private:
    std::vector<QarySequence> sequences_;
};

class MocsFamily {
public:
    explicit MocsFamily(std::vector<ComplementarySet> sets);

    std::size_t size() const noexcept { return sets_.size(); }
    std::size_t set_size() const noexcept { return sets_.front().size(); }
    std::size_t length() const noexcept { return sets_.front().length(); }
    int q() const noexcept { return sets_.front().q(); }

    const ComplementarySet& operator[](std::size_t i) const noexcept { return sets_[i]; }
    const std::vector<ComplementarySet>& sets() const noexcept { return sets_; }
    auto begin() const noexcept { return sets_.begin(); }
    auto end() const noexcept { return sets_.end(); }

    friend bool operator==(const MocsFamily&, const MocsFamily&) = default;

private:
    std::vector<ComplementarySet> sets_;
};

/// sum_j R_{a_j, b_j}(u) over the members of two sets of equal shape.
CorrelationValue correlation_sum(const ComplementarySet& a, const ComplementarySet& b, long u);

/// First failing (i, k, u) of a verification; i == k for an autocorrelation sum.
struct Violation {
    std::size_t set_i = 0;
    std::size_t set_k = 0;
    long shift = 0;
    double magnitude = 0.0;
};

struct VerificationReport {
    bool ok = true;
    std::optional<Violation> first_violation;

    explicit operator bool() const noexcept { return ok; }
    /// One line, 1-based set indices.
    std::string describe() const;
};

/// Default zero tolerance for inexact moduli: 1e-9 * L.
double default_tolerance(std::size_t length) noexcept;

VerificationReport is_complementary_set(const ComplementarySet& set,
                                        std::optional<double> tol = std::nullopt);
VerificationReport is_mocs(const MocsFamily& family, std::optional<double> tol = std::nullopt);

/// Positions where the two sequences differ, NULL compared as a symbol.
std::size_t hamming_distance(const QarySequence& a, const QarySequence& b);

}  // namespace nullcs
