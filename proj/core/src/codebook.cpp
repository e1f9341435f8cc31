#include "nullcs/codebook.hpp"

#include "nullcs/construct.hpp"
#include "nullcs/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <string_view>
#include <unordered_map>

namespace nullcs {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw InputError("codebook size overflows 64 bits");
    return r;
}

std::uint64_t checked_pow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int k = 0; k < exp; ++k) r = checked_mul(r, base);
    return r;
}

bool uses_lambda(CodebookVariant v) { return v == CodebookVariant::c1 || v == CodebookVariant::c2; }
bool free_last_mu(CodebookVariant v) { return v == CodebookVariant::c1 || v == CodebookVariant::c2; }

// Number of free (lambda, mu, mu0) digits after the permutation.
int coefficient_digits(const CodebookSpec& spec) {
    return (uses_lambda(spec.variant) ? spec.v : 0) + (free_last_mu(spec.variant) ? spec.m : spec.m - 1) + 1;
}

std::string range_text(const CodebookSpec& s) {
    return "(q=" + std::to_string(s.q) + ", m=" + std::to_string(s.m) + ", v=" + std::to_string(s.v) + ")";
}

}  // namespace

std::string to_string(CodebookVariant variant) {
    switch (variant) {
        case CodebookVariant::c1: return "c1";
        case CodebookVariant::c2: return "c2";
        case CodebookVariant::c3: return "c3";
        case CodebookVariant::c21: return "c21";
    }
    return "?";
}

CodebookVariant parse_variant(std::string_view name) {
    std::string lower;
    for (char c : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == "c1") return CodebookVariant::c1;
    if (lower == "c2") return CodebookVariant::c2;
    if (lower == "c3") return CodebookVariant::c3;
    if (lower == "c21") return CodebookVariant::c21;
    throw InputError("unknown codebook variant '" + std::string(name) + "' (expected c1, c2, c3 or c21)");
}

void CodebookSpec::validate() const {
    if (q < 2 || q % 2 != 0 || q > 254) throw InputError("codebook q must be even in [2, 254], got " + std::to_string(q));
    // Every variant sits on the (2, 4, L) MOCS parameter range.
    if (m < 3 || m > 20 || v < 1 || v >= m - 1)
        throw InputError("codebook needs m >= 3 and 1 <= v < m-1, got " + range_text(*this));
    if (variant == CodebookVariant::c1 && b != 0) throw InputError("C1 codewords carry no nulls; b must be 0");
    if (variant == CodebookVariant::c21) (void)fixed_permutation();
}

std::size_t CodebookSpec::codeword_length() const {
    if (variant == CodebookVariant::c1) return truncation_length(m, v);
    return 2 * truncation_length(m, v) + b;
}

ConstrainedPermutation CodebookSpec::fixed_permutation() const {
    if (pi.empty()) return ConstrainedPermutation::identity(m, v);
    return ConstrainedPermutation(m, v, pi);
}

Codebook::Codebook(CodebookSpec spec, std::size_t length) : spec_(std::move(spec)), length_(length) {}

QarySequence Codebook::codeword(std::size_t i) const {
    std::vector<std::int32_t> entries;
    entries.reserve(length_);
    for (auto s : row(i)) entries.push_back(s == kNullSymbol ? QarySequence::kNull : static_cast<std::int32_t>(s));
    return QarySequence(spec_.q, std::move(entries));
}

std::uint64_t size_formula(const CodebookSpec& spec) {
    spec.validate();
    const std::uint64_t q = static_cast<std::uint64_t>(spec.q);
    switch (spec.variant) {
        case CodebookVariant::c1:
        case CodebookVariant::c2:
            return checked_mul(count_constrained_permutations(spec.m, spec.v), checked_pow(q, spec.m + spec.v + 1));
        case CodebookVariant::c3:
            return checked_mul(count_constrained_permutations(spec.m, spec.v), checked_pow(q, spec.m));
        case CodebookVariant::c21:
            return checked_pow(q, spec.m);
    }
    return 0;
}

CodewordParams decode_params(const CodebookSpec& spec, std::uint64_t raw) {
    const std::uint64_t total = size_formula(spec);
    if (raw >= total) throw InputError("raw index " + std::to_string(raw) + " beyond codebook size " + std::to_string(total));
    const int digits = coefficient_digits(spec);
    const std::uint64_t q = static_cast<std::uint64_t>(spec.q);

    std::vector<int> digit(static_cast<std::size_t>(digits));
    for (int d = digits - 1; d >= 0; --d) {
        digit[static_cast<std::size_t>(d)] = static_cast<int>(raw % q);
        raw /= q;
    }
    CodewordParams params{spec.variant == CodebookVariant::c21
                              ? spec.fixed_permutation()
                              : enumerate_constrained_permutations(spec.m, spec.v).at(raw),
                          {}, {}, 0};
    auto next = digit.begin();
    params.lambda.assign(static_cast<std::size_t>(spec.v), 0);
    if (uses_lambda(spec.variant))
        for (auto& l : params.lambda) l = *next++;
    params.mu.assign(static_cast<std::size_t>(spec.m), 0);
    const int free_mu = free_last_mu(spec.variant) ? spec.m : spec.m - 1;
    for (int s = 0; s < free_mu; ++s) params.mu[static_cast<std::size_t>(s)] = *next++;
    params.mu0 = *next;
    return params;
}

QarySequence make_codeword(const CodebookSpec& spec, const CodewordParams& params) {
    spec.validate();
    Theorem2Params p;
    p.q = spec.q;
    p.m = spec.m;
    p.v = spec.v;
    p.pi = params.pi;
    p.lambda = params.lambda;
    p.mu = params.mu;
    p.mu0 = params.mu0;
    const auto length = p.length();
    if (spec.variant == CodebookVariant::c1) return truncated_sequence(theorem2_base(p), length);
    const auto f = theorem3_functions(p);
    return concat_with_nulls(truncated_sequence(f[0], length), spec.b, truncated_sequence(theorem2_base(p), length));
}

Codebook enumerate(const CodebookSpec& spec, std::uint64_t cap) {
    spec.validate();
    const std::uint64_t total = size_formula(spec);
    if (total > cap)
        throw CapExceededError("codebook " + to_string(spec.variant) + " " + range_text(spec) + " has " +
                               std::to_string(total) + " raw codewords, cap is " + std::to_string(cap));

    const int q = spec.q;
    const int m = spec.m;
    const int v = spec.v;
    const std::size_t half = truncation_length(m, v);
    const bool concatenated = spec.variant != CodebookVariant::c1;

    Codebook book(spec, spec.codeword_length());
    book.raw_count_ = total;
    book.symbols_.reserve(static_cast<std::size_t>(total) * book.length_);
    book.raw_index_.reserve(static_cast<std::size_t>(total));

    const std::vector<ConstrainedPermutation> perms = spec.variant == CodebookVariant::c21
                                                          ? std::vector<ConstrainedPermutation>{spec.fixed_permutation()}
                                                          : enumerate_constrained_permutations(m, v);
    const int digits = coefficient_digits(spec);
    const int lambda_digits = uses_lambda(spec.variant) ? v : 0;
    const int mu_digits = free_last_mu(spec.variant) ? m : m - 1;

    std::unordered_map<std::string, std::uint64_t> seen;
    seen.reserve(static_cast<std::size_t>(total));
    std::vector<int> digit(static_cast<std::size_t>(digits));
    std::vector<std::uint8_t> word(book.length_, Codebook::kNullSymbol);
    std::vector<int> path(half);
    std::vector<int> f_shift(half);
    std::uint64_t raw = 0;

    for (const auto& pi : perms) {
        // Quadratic path form and the f_1 - g_1 offset, per index.
        for (std::size_t i = 0; i < half; ++i) {
            auto bit = [i](int k) { return static_cast<int>((i >> (k - 1)) & 1u); };
            int acc = 0;
            for (int s = 1; s <= m - 2; ++s) acc += bit(pi(s)) * bit(pi(s + 1));
            path[i] = (q / 2) * acc % q;
            f_shift[i] = (q / 2) * (bit(pi(m - 1)) + bit(m) * bit(pi(v))) % q;
        }
        std::fill(digit.begin(), digit.end(), 0);
        for (bool more = true; more; ++raw) {
            const int* lambda = digit.data();
            const int* mu = lambda + lambda_digits;
            const int mu0 = digit.back();
            for (std::size_t i = 0; i < half; ++i) {
                long long g = path[i] + mu0;
                const bool top = ((i >> (m - 1)) & 1u) != 0;
                for (int s = 1; s <= mu_digits; ++s) g += mu[s - 1] * static_cast<long long>((i >> (s - 1)) & 1u);
                if (top)
                    for (int s = 1; s <= lambda_digits; ++s) g += lambda[s - 1] * static_cast<long long>((i >> (pi(s) - 1)) & 1u);
                const auto gi = static_cast<std::uint8_t>(g % q);
                if (concatenated) {
                    word[i] = static_cast<std::uint8_t>((gi + f_shift[i]) % q);
                    word[half + spec.b + i] = gi;
                } else {
                    word[i] = gi;
                }
            }

            std::string key(word.begin(), word.end());
            auto [it, inserted] = seen.try_emplace(std::move(key), raw);
            if (inserted) {
                book.symbols_.insert(book.symbols_.end(), word.begin(), word.end());
                book.raw_index_.push_back(raw);
            } else if (!book.first_collision_) {
                book.first_collision_ = Collision{it->second, raw};
            }

            // Odometer, last digit fastest.
            more = false;
            for (int d = digits - 1; d >= 0; --d) {
                if (++digit[static_cast<std::size_t>(d)] < q) {
                    more = true;
                    break;
                }
                digit[static_cast<std::size_t>(d)] = 0;
            }
        }
    }
    return book;
}

unsigned floor_log(std::uint64_t n, std::uint64_t q) {
    if (n < 1 || q < 2) throw InputError("floor_log needs n >= 1 and q >= 2");
    unsigned e = 0;
    std::uint64_t power = 1;
    while (power <= n / q) {
        power *= q;
        ++e;
    }
    return e;
}

CodeRate code_rate(const CodebookSpec& spec) {
    spec.validate();
    const std::uint64_t q = static_cast<std::uint64_t>(spec.q);
    const std::uint64_t perms = count_constrained_permutations(spec.m, spec.v);
    CodeRate rate;
    rate.denominator = spec.codeword_length();
    switch (spec.variant) {
        case CodebookVariant::c1:
        case CodebookVariant::c2:
            rate.numerator = static_cast<std::uint64_t>(spec.m + spec.v + 1) + floor_log(perms, q);
            break;
        case CodebookVariant::c3:
            rate.numerator = static_cast<std::uint64_t>(spec.m) + floor_log(perms, q);
            break;
        case CodebookVariant::c21:
            rate.numerator = static_cast<std::uint64_t>(spec.m);
            break;
    }
    return rate;
}

std::size_t hamming_distance(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
    if (a.size() != b.size()) throw InputError("codeword lengths differ");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

std::size_t min_hamming_distance(const Codebook& codebook, std::uint64_t pair_budget) {
    const std::uint64_t n = codebook.size();
    if (n < 2) throw InputError("minimum distance needs at least two codewords");
    const std::uint64_t pairs = n * (n - 1) / 2;
    if (pairs > pair_budget)
        throw CapExceededError(std::to_string(pairs) + " codeword pairs exceed the budget of " + std::to_string(pair_budget));

    // Columns where every codeword holds the same symbol never contribute.
    std::vector<std::size_t> live;
    for (std::size_t c = 0; c < codebook.length(); ++c) {
        const auto s = codebook.row(0)[c];
        for (std::size_t i = 1; i < n; ++i)
            if (codebook.row(i)[c] != s) {
                live.push_back(c);
                break;
            }
    }
    std::vector<std::uint8_t> packed(n * live.size());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < live.size(); ++c) packed[i * live.size() + c] = codebook.row(i)[live[c]];

    std::size_t best = std::numeric_limits<std::size_t>::max();
    const std::size_t width = live.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint8_t* a = packed.data() + i * width;
        for (std::size_t k = i + 1; k < n; ++k) {
            const std::uint8_t* b = packed.data() + k * width;
            std::size_t d = 0;
            for (std::size_t c = 0; c < width && d < best; ++c) d += a[c] != b[c];
            best = std::min(best, d);
        }
    }
    return best;
}

std::uint64_t predicted_dmin(DminFamily family, PermContext context, int m, int v) {
    auto out_of_range = [&](const char* stated) {
        return InputError(std::string("prediction stated for ") + stated + ", got m=" + std::to_string(m) +
                          ", v=" + std::to_string(v));
    };
    if (m < 3 || m > 62) throw out_of_range("m >= 3");
    const std::uint64_t p1 = std::uint64_t{1} << (m - 1);
    const std::uint64_t p2 = std::uint64_t{1} << (m - 2);
    const std::uint64_t p3 = std::uint64_t{1} << (m - 3);

    if (family == DminFamily::truncated) {
        if (v < 1 || v > m - 2) throw out_of_range("1 <= v <= m-2");
        const bool several = count_constrained_permutations(m, v) > 1;
        switch (context) {
            case PermContext::same: return p2;
            case PermContext::differing:
                if (!several) throw out_of_range("(m, v) admitting two distinct permutations");
                return p3;
            case PermContext::all: return several ? p3 : p2;
        }
    }
    switch (context) {
        case PermContext::same:
            if (v < 1 || v >= m - 1) throw out_of_range("1 <= v < m-1");
            return p1;
        case PermContext::differing:
            if (v < 1 || v >= m - 2) throw out_of_range("1 <= v < m-2");
            return p2;
        case PermContext::all:
            if (m == 3 && v == 1) return 4;
            if (m > 3 && v >= 1 && v < m - 2) return p2;
            throw out_of_range("m = 3 with v = 1, or m > 3 with 1 <= v < m-2");
    }
    return 0;
}

}  // namespace nullcs
