#include "nullcs/seqcore.hpp"

#include "nullcs/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace nullcs {

namespace {

void require_compatible(const QarySequence& a, const QarySequence& b) {
    if (a.size() != b.size())
        throw InputError("sequence lengths differ: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
    if (a.q() != b.q())
        throw InputError("sequence moduli differ: q=" + std::to_string(a.q()) + " vs q=" +
                         std::to_string(b.q()));
}

// counts[d] += #{i : a(i) b*(i+u) = xi^d}
void accumulate(const QarySequence& a, const QarySequence& b, long u, std::vector<std::int64_t>& counts) {
    const long length = static_cast<long>(a.size());
    if (u >= length || -u >= length) return;
    const int q = a.q();
    const auto ea = a.entries();
    const auto eb = b.entries();
    const long begin = std::max(0L, -u);
    const long end = std::min(length, length - u);
    for (long i = begin; i < end; ++i) {
        const std::int32_t x = ea[static_cast<std::size_t>(i)];
        const std::int32_t y = eb[static_cast<std::size_t>(i + u)];
        if (x == QarySequence::kNull || y == QarySequence::kNull) continue;
        int d = x - y;
        if (d < 0) d += q;
        ++counts[static_cast<std::size_t>(d)];
    }
}

CorrelationValue evaluate(int q, const std::vector<std::int64_t>& counts) {
    if (exact_modulus(q)) {
        // Map onto the fourth roots of unity: xi_q^d = j^(d*4/q).
        std::int64_t quarter[4] = {0, 0, 0, 0};
        const int step = 4 / q;
        for (int d = 0; d < q; ++d) quarter[d * step] += counts[static_cast<std::size_t>(d)];
        return {Complex(static_cast<double>(quarter[0] - quarter[2]),
                        static_cast<double>(quarter[1] - quarter[3])),
                true};
    }
    Complex sum{0.0, 0.0};
    for (int d = 0; d < q; ++d) {
        if (counts[static_cast<std::size_t>(d)] != 0)
            sum += static_cast<double>(counts[static_cast<std::size_t>(d)]) * root_of_unity(q, d);
    }
    return {sum, false};
}

}  // namespace

QarySequence::QarySequence(int q, std::vector<std::int32_t> entries) : q_(q), entries_(std::move(entries)) {
    if (q < 1) throw InputError("modulus q must be positive, got " + std::to_string(q));
    if (entries_.empty()) throw InputError("sequence length must be at least 1");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto k = entries_[i];
        if (k != kNull && (k < 0 || k >= q))
            throw InputError("entry " + std::to_string(i) + " = " + std::to_string(k) +
                             " outside Z_" + std::to_string(q));
    }
}

std::size_t QarySequence::energy() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(entries_.begin(), entries_.end(), [](std::int32_t k) { return k != kNull; }));
}

QarySequence from_bipolar(std::span<const int> values) {
    std::vector<std::int32_t> entries;
    entries.reserve(values.size());
    for (int v : values) {
        switch (v) {
            case 1: entries.push_back(0); break;
            case -1: entries.push_back(1); break;
            case 0: entries.push_back(QarySequence::kNull); break;
            default: throw InputError("bipolar value must be +1, -1 or 0, got " + std::to_string(v));
        }
    }
    return QarySequence(2, std::move(entries));
}

QarySequence from_bipolar(std::initializer_list<int> values) {
    return from_bipolar(std::span<const int>(values.begin(), values.size()));
}

Complex root_of_unity(int q, std::int64_t k) {
    k %= q;
    if (k < 0) k += q;
    if (exact_modulus(q)) {
        static constexpr double re[4] = {1.0, 0.0, -1.0, 0.0};
        static constexpr double im[4] = {0.0, 1.0, 0.0, -1.0};
        const auto idx = static_cast<std::size_t>(k * (4 / q));
        return {re[idx], im[idx]};
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / q);
}

ComplexSequence to_complex(const QarySequence& seq) {
    ComplexSequence out;
    out.reserve(seq.size());
    for (auto k : seq.entries())
        out.push_back(k == QarySequence::kNull ? Complex{0.0, 0.0} : root_of_unity(seq.q(), k));
    return out;
}

bool CorrelationValue::is_zero(double tol) const noexcept {
    if (exact) return value == Complex{0.0, 0.0};
    return std::abs(value) <= tol;
}

CorrelationValue cross_correlation(const QarySequence& a, const QarySequence& b, long u) {
    require_compatible(a, b);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(a.q()), 0);
    accumulate(a, b, u, counts);
    return evaluate(a.q(), counts);
}

CorrelationValue auto_correlation(const QarySequence& a, long u) { return cross_correlation(a, a, u); }

Complex cross_correlation_numeric(const QarySequence& a, const QarySequence& b, long u) {
    require_compatible(a, b);
    const long length = static_cast<long>(a.size());
    if (u >= length || -u >= length) return {0.0, 0.0};
    const auto ca = to_complex(a);
    const auto cb = to_complex(b);
    Complex sum{0.0, 0.0};
    for (long i = std::max(0L, -u); i < std::min(length, length - u); ++i)
        sum += ca[static_cast<std::size_t>(i)] * std::conj(cb[static_cast<std::size_t>(i + u)]);
    return sum;
}

ComplementarySet::ComplementarySet(std::vector<QarySequence> sequences) : sequences_(std::move(sequences)) {
    if (sequences_.empty()) throw InputError("complementary set must contain at least one sequence");
    for (const auto& s : sequences_) {
        if (s.size() != sequences_.front().size())
            throw InputError("complementary set members have unequal lengths");
        if (s.q() != sequences_.front().q()) throw InputError("complementary set members have unequal q");
    }
}

MocsFamily::MocsFamily(std::vector<ComplementarySet> sets) : sets_(std::move(sets)) {
    if (sets_.empty()) throw InputError("MOCS family must contain at least one set");
    const auto& first = sets_.front();
    for (const auto& s : sets_) {
        if (s.size() != first.size()) throw InputError("MOCS member sets have unequal sizes");
        if (s.length() != first.length()) throw InputError("MOCS member sets have unequal lengths");
        if (s.q() != first.q()) throw InputError("MOCS member sets have unequal q");
    }
}

CorrelationValue correlation_sum(const ComplementarySet& a, const ComplementarySet& b, long u) {
    if (a.size() != b.size())
        throw InputError("set sizes differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    std::vector<std::int64_t> counts(static_cast<std::size_t>(a.q()), 0);
    for (std::size_t j = 0; j < a.size(); ++j) {
        require_compatible(a[j], b[j]);
        accumulate(a[j], b[j], u, counts);
    }
    return evaluate(a.q(), counts);
}

std::string VerificationReport::describe() const {
    if (ok) return "ok";
    std::ostringstream os;
    const auto& v = *first_violation;
    os << "violation at (i=" << v.set_i + 1 << ", k=" << v.set_k + 1 << ", u=" << v.shift
       << "): |sum| = " << v.magnitude;
    return os.str();
}

double default_tolerance(std::size_t length) noexcept { return 1e-9 * static_cast<double>(length); }

namespace {

// Scans u in [first_shift, L-1] for the pair (i, k); records the first nonzero sum.
bool scan_pair(const ComplementarySet& a, const ComplementarySet& b, std::size_t i, std::size_t k,
               long first_shift, double tol, VerificationReport& report) {
    const long length = static_cast<long>(a.length());
    for (long u = first_shift; u < length; ++u) {
        const auto value = correlation_sum(a, b, u);
        if (!value.is_zero(tol)) {
            report.ok = false;
            report.first_violation = Violation{i, k, u, std::abs(value.value)};
            return false;
        }
    }
    return true;
}

}  // namespace

VerificationReport is_complementary_set(const ComplementarySet& set, std::optional<double> tol) {
    VerificationReport report;
    scan_pair(set, set, 0, 0, 1, tol.value_or(default_tolerance(set.length())), report);
    return report;
}

VerificationReport is_mocs(const MocsFamily& family, std::optional<double> tol) {
    VerificationReport report;
    const double t = tol.value_or(default_tolerance(family.length()));
    const long length = static_cast<long>(family.length());
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (!scan_pair(family[i], family[i], i, i, 1, t, report)) return report;
        // R_{b,a}(-u) = R_{a,b}(u)* makes k < i redundant.
        for (std::size_t k = i + 1; k < family.size(); ++k)
            if (!scan_pair(family[i], family[k], i, k, -(length - 1), t, report)) return report;
    }
    return report;
}

std::size_t hamming_distance(const QarySequence& a, const QarySequence& b) {
    require_compatible(a, b);
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]) ? 1 : 0;
    return d;
}

}  // namespace nullcs
