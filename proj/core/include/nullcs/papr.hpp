#pragma once

// OFDM envelope power and PAPR of q-ary sequences.
//
// The carrier and symbol duration are normalized out: the envelope is sampled
// at t = n T / (J L), n = 0 .. J L - 1, and the average power is the sequence
// energy sum |a(i)|^2 (the time average of |S_a(t)|^2 over one symbol).

#include "nullcs/seqcore.hpp"

#include <vector>

namespace nullcs {

struct PaprConfig {
    /// Oversampling ratio J >= 1.
    int oversampling = 8;
};

struct PowerEnvelope {
    /// |S_a(t_n)|^2 for n = 0 .. J L - 1.
    std::vector<double> samples;
    double energy = 0.0;

    double peak() const noexcept;
    double mean() const noexcept;
};

PowerEnvelope envelope(const QarySequence& seq, const PaprConfig& cfg = {});

/// max_n P(t_n) / energy. Throws UndefinedError for an all-NULL sequence.
double papr(const QarySequence& seq, const PaprConfig& cfg = {});

/// Largest member PAPR.
double set_papr(const ComplementarySet& set, const PaprConfig& cfg = {});

/// sum_j P_{a_j}(t_n); constant for a complementary set.
std::vector<double> power_sum(const ComplementarySet& set, const PaprConfig& cfg = {});

struct Lemma1Report {
    /// All members carry the same number of non-NULL entries.
    bool equal_energy = false;
    /// The set size N.
    double bound = 0.0;
    double grid_slack = 0.0;
    double set_papr = 0.0;
    std::vector<double> member_papr;
    /// bound - member PAPR.
    std::vector<double> margins;
    /// equal_energy and set_papr <= bound (1 + grid_slack).
    bool holds = false;
};

/// PAPR <= N for a CS of equal-energy members; grid_slack absorbs the sampled sup.
Lemma1Report check_lemma1_bound(const ComplementarySet& set, const PaprConfig& cfg = {}, double grid_slack = 0.01);

}  // namespace nullcs
