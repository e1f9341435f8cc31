#include "nullcs/construct.hpp"

#include "nullcs/errors.hpp"

#include <string>

namespace nullcs {

namespace {

void require_range(const std::vector<int>& values, int q, const char* name) {
    for (std::size_t s = 0; s < values.size(); ++s)
        if (values[s] < 0 || values[s] >= q)
            throw InputError(std::string(name) + "[" + std::to_string(s + 1) + "] = " + std::to_string(values[s]) +
                             " outside Z_" + std::to_string(q));
}

void require_theorem3_range(const Theorem2Params& p) {
    if (p.m < 3 || p.v >= p.m - 1)
        throw InputError("MOCS construction needs m >= 3 and 1 <= v < m-1, got m=" + std::to_string(p.m) +
                         ", v=" + std::to_string(p.v));
}

Gbf half_offset(const Theorem2Params& p, bool first_var, bool last_var) {
    Gbf offset(p.q, p.m);
    if (first_var) offset.add_term(p.q / 2, {p.pi(1)});
    if (last_var) offset.add_term(p.q / 2, {p.m});
    return offset;
}

}  // namespace

Theorem2Params Theorem2Params::zeros(int q, int m, int v) {
    Theorem2Params p;
    p.q = q;
    p.m = m;
    p.v = v;
    p.pi = ConstrainedPermutation::identity(m, v);
    p.lambda.assign(static_cast<std::size_t>(v), 0);
    p.mu.assign(static_cast<std::size_t>(m), 0);
    p.mu0 = 0;
    return p;
}

void Theorem2Params::validate() const {
    if (q < 2 || q % 2 != 0) throw InputError("q must be even and >= 2, got " + std::to_string(q));
    if (m < 2 || m > kMaxVariables) throw InputError("m out of range: " + std::to_string(m));
    if (v < 1 || v > m - 1)
        throw InputError("v must satisfy 1 <= v <= m-1, got v=" + std::to_string(v) + ", m=" + std::to_string(m));
    if (pi.m() != m || pi.v() != v)
        throw InputError("permutation was built for (m=" + std::to_string(pi.m()) + ", v=" + std::to_string(pi.v()) +
                         ")");
    if (lambda.size() != static_cast<std::size_t>(v) && lambda.size() != static_cast<std::size_t>(m - 1))
        throw InputError("lambda needs v=" + std::to_string(v) + " or m-1=" + std::to_string(m - 1) +
                         " entries, got " + std::to_string(lambda.size()));
    if (mu.size() != static_cast<std::size_t>(m))
        throw InputError("mu needs m=" + std::to_string(m) + " entries, got " + std::to_string(mu.size()));
    require_range(lambda, q, "lambda");
    require_range(mu, q, "mu");
    if (mu0 < 0 || mu0 >= q) throw InputError("mu0 outside Z_" + std::to_string(q));
}

Theorem2Params Theorem2Params::reduced() const {
    Theorem2Params r = *this;
    r.lambda.resize(static_cast<std::size_t>(v));
    return r;
}

Gbf theorem2_base(const Theorem2Params& p) {
    p.validate();
    Gbf g(p.q, p.m);
    for (int s = 1; s <= p.m - 2; ++s) g.add_term(p.q / 2, {p.pi(s), p.pi(s + 1)});
    for (std::size_t s = 1; s <= p.lambda.size(); ++s)
        g.add_term(p.lambda[s - 1], {p.pi(static_cast<int>(s)), p.m});
    for (int s = 1; s <= p.m; ++s) g.add_term(p.mu[static_cast<std::size_t>(s - 1)], {s});
    g.add_term(p.mu0, {});
    if (p.lambda.size() != static_cast<std::size_t>(p.v)) g = reduce_for_truncation(g, p.pi);
    return g;
}

std::array<Gbf, 4> theorem2_functions(const Theorem2Params& p) {
    const Gbf g1 = theorem2_base(p);
    return {g1, g1 + half_offset(p, false, true), g1 + half_offset(p, true, false), g1 + half_offset(p, true, true)};
}

std::array<Gbf, 4> theorem3_functions(const Theorem2Params& p) {
    p.validate();
    require_theorem3_range(p);
    Gbf shift(p.q, p.m);
    shift.add_term(p.q / 2, {p.pi(p.m - 1)});
    shift.add_term(p.q / 2, {p.m, p.pi(p.v)});
    auto g = theorem2_functions(p);
    return {g[0] + shift, g[1] + shift, g[2] + shift, g[3] + shift};
}

namespace {

ComplementarySet to_set(const std::array<Gbf, 4>& functions, std::size_t length) {
    std::vector<QarySequence> seqs;
    seqs.reserve(functions.size());
    for (const auto& f : functions) seqs.push_back(truncated_sequence(f, length));
    return ComplementarySet(std::move(seqs));
}

}  // namespace

ComplementarySet chen_cs(const Theorem2Params& p) { return to_set(theorem2_functions(p), p.length()); }

MocsFamily mocs_pair(const Theorem2Params& p) {
    auto f = theorem3_functions(p);
    return MocsFamily({to_set(theorem2_functions(p), p.length()), to_set(f, p.length())});
}

ComplementarySet concat_cs(const Theorem2Params& p, std::size_t b, HalfOrder order) {
    const auto family = mocs_pair(p);
    const auto& g = family[0];
    const auto& f = family[1];
    std::vector<QarySequence> seqs;
    for (std::size_t k = 0; k < g.size(); ++k)
        seqs.push_back(order == HalfOrder::g_first ? concat_with_nulls(g[k], b, f[k]) : concat_with_nulls(f[k], b, g[k]));
    return ComplementarySet(std::move(seqs));
}

QarySequence concat_with_nulls(const QarySequence& head, std::size_t b, const QarySequence& tail) {
    if (head.q() != tail.q()) throw InputError("cannot join sequences over different q");
    std::vector<std::int32_t> entries(head.entries().begin(), head.entries().end());
    entries.insert(entries.end(), b, QarySequence::kNull);
    entries.insert(entries.end(), tail.entries().begin(), tail.entries().end());
    return QarySequence(head.q(), std::move(entries));
}

MocsFamily zero_insert_step(const MocsFamily& family, std::size_t b) {
    if (family.size() < 2)
        throw InputError("zero insertion needs at least 2 sets, family has " + std::to_string(family.size()));
    const std::size_t half = family.size() / 2;
    std::vector<ComplementarySet> sets;
    sets.reserve(half);
    for (std::size_t i = 0; i < half; ++i) {
        std::vector<QarySequence> seqs;
        seqs.reserve(family.set_size());
        for (std::size_t j = 0; j < family.set_size(); ++j)
            seqs.push_back(concat_with_nulls(family[i][j], b, family[i + half][j]));
        sets.emplace_back(std::move(seqs));
    }
    return MocsFamily(std::move(sets));
}

std::size_t iterated_length(std::size_t seed_length, const ZeroInsertionPlan& plan) {
    std::size_t length = seed_length;
    for (std::size_t b : plan) length = 2 * length + b;
    return length;
}

std::size_t inserted_null_count(const ZeroInsertionPlan& plan) { return iterated_length(0, plan); }

MocsFamily iterate(const MocsFamily& family, const ZeroInsertionPlan& plan) {
    if (plan.size() >= 8 * sizeof(std::size_t) || (family.size() >> plan.size()) == 0)
        throw InputError("plan of " + std::to_string(plan.size()) + " steps needs at least 2^" +
                         std::to_string(plan.size()) + " seed sets, family has " + std::to_string(family.size()));
    MocsFamily current = family;
    for (std::size_t b : plan) current = zero_insert_step(current, b);
    return current;
}

MocsFamily seed_ccc(std::size_t n) {
    if (n != 2 && n != 4 && n != 8 && n != 16)
        throw InputError("seed_ccc supports N in {2, 4, 8, 16}, got " + std::to_string(n));

    // kernel[k][j] holds the two phases of row k, column j of [[1+z, 1-z], [1-z, 1+z]].
    static constexpr int kernel[2][2][2] = {{{0, 0}, {0, 1}}, {{0, 1}, {0, 0}}};

    // rows[k][j] is the phase sequence of member j of set k.
    std::vector<std::vector<std::vector<std::int32_t>>> rows = {{{0}}};
    for (std::size_t size = 1; size < n; size *= 2) {
        const std::size_t next = 2 * size;
        std::vector<std::vector<std::vector<std::int32_t>>> grown(next, std::vector<std::vector<std::int32_t>>(next));
        for (std::size_t k1 = 0; k1 < 2; ++k1)
            for (std::size_t j1 = 0; j1 < 2; ++j1)
                for (std::size_t k2 = 0; k2 < size; ++k2)
                    for (std::size_t j2 = 0; j2 < size; ++j2) {
                        // Coefficient a*size + t of p(z^size) c(z) is p[a] c[t].
                        auto& seq = grown[k1 * size + k2][j1 * size + j2];
                        for (int a = 0; a < 2; ++a)
                            for (std::int32_t c : rows[k2][j2]) seq.push_back((kernel[k1][j1][a] + c) % 2);
                    }
        rows = std::move(grown);
    }

    std::vector<ComplementarySet> sets;
    for (auto& members : rows) {
        std::vector<QarySequence> seqs;
        for (auto& phases : members) seqs.emplace_back(2, std::move(phases));
        sets.emplace_back(std::move(seqs));
    }
    return MocsFamily(std::move(sets));
}

}  // namespace nullcs
