#include "nullcs/papr.hpp"

#include "nullcs/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace nullcs {

double PowerEnvelope::peak() const noexcept {
    return samples.empty() ? 0.0 : *std::max_element(samples.begin(), samples.end());
}

double PowerEnvelope::mean() const noexcept {
    if (samples.empty()) return 0.0;
    return std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(samples.size());
}

PowerEnvelope envelope(const QarySequence& seq, const PaprConfig& cfg) {
    if (cfg.oversampling < 1) throw InputError("oversampling ratio must be >= 1, got " + std::to_string(cfg.oversampling));
    const std::size_t length = seq.size();
    const std::size_t grid = length * static_cast<std::size_t>(cfg.oversampling);

    std::vector<Complex> twiddle(grid);
    for (std::size_t k = 0; k < grid; ++k)
        twiddle[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(grid));

    std::vector<std::pair<std::size_t, Complex>> tones;
    for (std::size_t i = 0; i < length; ++i)
        if (!seq.is_null(i)) tones.emplace_back(i, root_of_unity(seq.q(), seq[i]));

    PowerEnvelope env;
    env.energy = static_cast<double>(tones.size());
    env.samples.resize(grid);
    for (std::size_t n = 0; n < grid; ++n) {
        Complex s{0.0, 0.0};
        for (const auto& [i, value] : tones) s += value * twiddle[(i * n) % grid];
        env.samples[n] = std::norm(s);
    }
    return env;
}

double papr(const QarySequence& seq, const PaprConfig& cfg) {
    const auto env = envelope(seq, cfg);
    if (env.energy == 0.0) throw UndefinedError("PAPR undefined for an all-NULL sequence");
    return env.peak() / env.energy;
}

double set_papr(const ComplementarySet& set, const PaprConfig& cfg) {
    double worst = 0.0;
    for (const auto& s : set) worst = std::max(worst, papr(s, cfg));
    return worst;
}

std::vector<double> power_sum(const ComplementarySet& set, const PaprConfig& cfg) {
    std::vector<double> total;
    for (const auto& s : set) {
        const auto env = envelope(s, cfg);
        if (total.empty()) total.assign(env.samples.size(), 0.0);
        for (std::size_t n = 0; n < total.size(); ++n) total[n] += env.samples[n];
    }
    return total;
}

Lemma1Report check_lemma1_bound(const ComplementarySet& set, const PaprConfig& cfg, double grid_slack) {
    Lemma1Report report;
    report.bound = static_cast<double>(set.size());
    report.grid_slack = grid_slack;
    const auto energy = set[0].energy();
    report.equal_energy = std::all_of(set.begin(), set.end(), [&](const QarySequence& s) { return s.energy() == energy; });
    for (const auto& s : set) {
        const double p = papr(s, cfg);
        report.member_papr.push_back(p);
        report.margins.push_back(report.bound - p);
        report.set_papr = std::max(report.set_papr, p);
    }
    report.holds = report.equal_energy && report.set_papr <= report.bound * (1.0 + grid_slack);
    return report;
}

}  // namespace nullcs
