#include "nullcs/gbf.hpp"

#include "nullcs/errors.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <set>

namespace nullcs {

namespace {

int reduce_mod(long long value, int q) {
    long long r = value % q;
    return static_cast<int>(r < 0 ? r + q : r);
}

bool canonical_less(const Monomial& a, const Monomial& b) {
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) return da < db;
    const auto va = a.variables();
    const auto vb = b.variables();
    return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

void check_shape(int q, int m) {
    if (q < 1) throw InputError("modulus q must be positive, got " + std::to_string(q));
    if (m < 1 || m > kMaxVariables)
        throw InputError("number of variables m must be in [1, " + std::to_string(kMaxVariables) +
                         "], got " + std::to_string(m));
}

}  // namespace

int Monomial::degree() const noexcept { return std::popcount(vars); }

std::vector<int> Monomial::variables() const {
    std::vector<int> out;
    for (int k = 0; k < 32; ++k)
        if (vars & (1u << k)) out.push_back(k + 1);
    return out;
}

std::uint32_t variable_mask(std::span<const int> vars, int m) {
    std::uint32_t mask = 0;
    for (int k : vars) {
        if (k < 1 || k > m)
            throw InputError("variable x" + std::to_string(k) + " outside x1..x" + std::to_string(m));
        mask |= 1u << (k - 1);
    }
    return mask;
}

GeneralizedBooleanFunction::GeneralizedBooleanFunction(int q, int m) : q_(q), m_(m) { check_shape(q, m); }

GeneralizedBooleanFunction::GeneralizedBooleanFunction(int q, int m, std::vector<Monomial> terms) : q_(q), m_(m) {
    check_shape(q, m);
    const std::uint32_t allowed = m == 32 ? ~0u : ((1u << m) - 1u);
    for (const auto& t : terms) {
        if ((t.vars & ~allowed) != 0) throw InputError("monomial uses a variable beyond x" + std::to_string(m));
        insert(t.coeff, t.vars);
    }
}

void GeneralizedBooleanFunction::insert(int coeff, std::uint32_t vars) {
    const int c = reduce_mod(coeff, q_);
    auto it = std::find_if(terms_.begin(), terms_.end(), [vars](const Monomial& t) { return t.vars == vars; });
    if (it != terms_.end()) {
        it->coeff = reduce_mod(static_cast<long long>(it->coeff) + c, q_);
        if (it->coeff == 0) terms_.erase(it);
        return;
    }
    if (c == 0) return;
    const Monomial term{c, vars};
    terms_.insert(std::upper_bound(terms_.begin(), terms_.end(), term, canonical_less), term);
}

GeneralizedBooleanFunction& GeneralizedBooleanFunction::add_term(int coeff, std::span<const int> vars) {
    insert(coeff, variable_mask(vars, m_));
    return *this;
}

int GeneralizedBooleanFunction::coefficient(std::uint32_t vars) const noexcept {
    for (const auto& t : terms_)
        if (t.vars == vars) return t.coeff;
    return 0;
}

int GeneralizedBooleanFunction::evaluate(std::uint64_t i) const {
    if (i >= (std::uint64_t{1} << m_))
        throw InputError("index " + std::to_string(i) + " outside [0, 2^" + std::to_string(m_) + ")");
    long long sum = 0;
    for (const auto& t : terms_)
        if ((i & t.vars) == t.vars) sum += t.coeff;
    return reduce_mod(sum, q_);
}

Gbf add(const Gbf& f, const Gbf& g) {
    if (f.q() != g.q() || f.m() != g.m())
        throw InputError("cannot add functions over (q=" + std::to_string(f.q()) + ", m=" + std::to_string(f.m()) +
                         ") and (q=" + std::to_string(g.q()) + ", m=" + std::to_string(g.m()) + ")");
    std::vector<Monomial> terms = f.terms();
    terms.insert(terms.end(), g.terms().begin(), g.terms().end());
    return Gbf(f.q(), f.m(), std::move(terms));
}

QarySequence truncated_sequence(const Gbf& f, std::size_t length) {
    const std::uint64_t full = std::uint64_t{1} << f.m();
    if (length < 1 || length > full)
        throw InputError("truncation length " + std::to_string(length) + " outside [1, 2^" +
                         std::to_string(f.m()) + "]");
    std::vector<std::int32_t> phases(length);
    for (std::size_t i = 0; i < length; ++i) phases[i] = f.evaluate(i);
    return QarySequence(f.q(), std::move(phases));
}

std::string to_string(const Gbf& f) {
    if (f.terms().empty()) return "0";
    std::string out;
    for (const auto& t : f.terms()) {
        if (!out.empty()) out += " + ";
        out += std::to_string(t.coeff);
        if (t.vars == 0) continue;
        out += '*';
        for (int k : t.variables()) out += "x" + std::to_string(k);
    }
    return out;
}

namespace {

class AnfParser {
public:
    AnfParser(std::string_view text, int q, int m) : text_(text), f_(q, m) {}

    Gbf run() {
        skip_space();
        if (at_end()) fail("empty expression");
        int sign = 1;
        if (peek() == '-') {
            sign = -1;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        for (;;) {
            term(sign);
            skip_space();
            if (at_end()) break;
            if (peek() == '+') sign = 1;
            else if (peek() == '-') sign = -1;
            else fail(std::string("expected '+' or '-', found '") + peek() + "'");
            ++pos_;
        }
        return f_;
    }

private:
    void term(int sign) {
        skip_space();
        long long coeff = 1;
        bool have_coeff = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = number();
            have_coeff = true;
            skip_space();
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_space();
                if (at_end() || peek() != 'x') fail("expected monomial after '*'");
            }
        }
        std::vector<int> vars;
        while (!at_end() && peek() == 'x') {
            ++pos_;
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected variable index after 'x'");
            const long long k = number();
            if (k < 1 || k > f_.m()) fail("variable x" + std::to_string(k) + " outside x1..x" + std::to_string(f_.m()));
            vars.push_back(static_cast<int>(k));
            skip_space();
        }
        if (!have_coeff && vars.empty()) fail("expected coefficient or monomial");
        f_.add_term(reduce_mod(sign * (coeff % f_.q()), f_.q()), vars);
    }

    long long number() {
        long long value = 0;
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            if (pos_ - start > 15) fail("number too long");
            value = value * 10 + (peek() - '0');
            ++pos_;
        }
        return value;
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("ANF parse error at column " + std::to_string(pos_ + 1) + ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Gbf f_;
};

}  // namespace

Gbf parse_gbf(std::string_view text, int q, int m) { return AnfParser(text, q, m).run(); }

ConstrainedPermutation::ConstrainedPermutation(int m, int v, std::vector<int> images)
    : m_(m), v_(v), images_(std::move(images)) {
    if (m < 2) throw InputError("constrained permutation needs m >= 2, got " + std::to_string(m));
    if (v < 1 || v > m - 1)
        throw InputError("v must satisfy 1 <= v <= m-1, got v=" + std::to_string(v) + ", m=" + std::to_string(m));
    if (images_.size() != static_cast<std::size_t>(m - 1))
        throw InputError("permutation of {1..m-1} needs " + std::to_string(m - 1) + " entries, got " +
                         std::to_string(images_.size()));
    std::vector<int> sorted = images_;
    std::sort(sorted.begin(), sorted.end());
    for (int s = 0; s < m - 1; ++s)
        if (sorted[static_cast<std::size_t>(s)] != s + 1) throw InputError("not a permutation of {1..m-1}");
    for (int s = 0; s < v; ++s)
        if (images_[static_cast<std::size_t>(s)] > v)
            throw InputError("{pi(1),...,pi(v)} must equal {1,...,v} (v=" + std::to_string(v) + ")");
}

ConstrainedPermutation ConstrainedPermutation::identity(int m, int v) {
    std::vector<int> images(static_cast<std::size_t>(std::max(m - 1, 0)));
    std::iota(images.begin(), images.end(), 1);
    return ConstrainedPermutation(m, v, std::move(images));
}

bool ConstrainedPermutation::is_identity() const noexcept {
    for (std::size_t s = 0; s < images_.size(); ++s)
        if (images_[s] != static_cast<int>(s + 1)) return false;
    return true;
}

namespace {

std::uint64_t factorial(int n) {
    std::uint64_t r = 1;
    for (int k = 2; k <= n; ++k) r *= static_cast<std::uint64_t>(k);
    return r;
}

}  // namespace

std::uint64_t count_constrained_permutations(int m, int v) {
    if (m < 2 || v < 1 || v > m - 1 || m - 1 > 20)
        throw InputError("(m, v) = (" + std::to_string(m) + ", " + std::to_string(v) + ") out of range");
    return factorial(v) * factorial(m - 1 - v);
}

std::vector<ConstrainedPermutation> enumerate_constrained_permutations(int m, int v) {
    constexpr std::uint64_t kLimit = 10'000'000;
    const auto count = count_constrained_permutations(m, v);
    if (count > kLimit) throw CapExceededError(std::to_string(count) + " permutations exceed the enumeration limit");

    std::vector<int> head(static_cast<std::size_t>(v));
    std::vector<int> tail(static_cast<std::size_t>(m - 1 - v));
    std::iota(head.begin(), head.end(), 1);
    std::vector<ConstrainedPermutation> out;
    out.reserve(count);
    do {
        std::iota(tail.begin(), tail.end(), v + 1);
        do {
            std::vector<int> images = head;
            images.insert(images.end(), tail.begin(), tail.end());
            out.emplace_back(m, v, std::move(images));
        } while (std::next_permutation(tail.begin(), tail.end()));
    } while (std::next_permutation(head.begin(), head.end()));
    return out;
}

std::size_t truncation_length(int m, int v) {
    if (m < 2 || m > kMaxVariables || v < 1 || v > m - 1)
        throw InputError("(m, v) = (" + std::to_string(m) + ", " + std::to_string(v) + ") out of range");
    return (std::size_t{1} << (m - 1)) + (std::size_t{1} << v);
}

Gbf reduce_for_truncation(const Gbf& f, const ConstrainedPermutation& pi) {
    const int m = f.m();
    const int q = f.q();
    if (pi.m() != m) throw InputError("permutation built for m=" + std::to_string(pi.m()) + ", function has m=" +
                                      std::to_string(m));
    const std::uint32_t xm = 1u << (m - 1);

    std::set<std::uint32_t> path;
    for (int s = 1; s + 1 <= m - 1; ++s) path.insert((1u << (pi(s) - 1)) | (1u << (pi(s + 1) - 1)));
    if (!path.empty() && q % 2 != 0) throw UnsupportedShapeError("quadratic path form needs even q");

    std::size_t path_terms = 0;
    for (const auto& t : f.terms()) {
        if (t.degree() > 2) throw UnsupportedShapeError("term of degree " + std::to_string(t.degree()));
        if (t.degree() < 2 || (t.vars & xm) != 0) continue;
        if (!path.contains(t.vars) || t.coeff != q / 2)
            throw UnsupportedShapeError("quadratic term not on the permutation path with coefficient q/2");
        ++path_terms;
    }
    if (path_terms != path.size()) throw UnsupportedShapeError("quadratic path form is incomplete");

    const std::uint64_t length = truncation_length(m, pi.v());
    std::vector<Monomial> kept;
    for (const auto& t : f.terms()) {
        // x_pi(s) x_m first fires at i = 2^(m-1) + 2^(pi(s)-1); beyond the window when pi(s) > v.
        if (t.degree() == 2 && (t.vars & xm) != 0 && t.vars >= length) continue;
        kept.push_back(t);
    }
    return Gbf(q, m, std::move(kept));
}

}  // namespace nullcs
