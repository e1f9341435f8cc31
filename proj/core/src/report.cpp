#include "nullcs/report.hpp"

#include "nullcs/codebook.hpp"
#include "nullcs/errors.hpp"
#include "nullcs/fileio.hpp"

namespace nullcs {

ComplementarySet published_papr_family(int v, std::size_t b) {
    return concat_cs(Theorem2Params::zeros(2, 7, v), b, HalfOrder::g_first);
}

std::vector<PaprTableRow> papr_table_rows(int which, const PaprConfig& cfg) {
    std::vector<PaprTableRow> rows;
    auto add = [&](int v, std::size_t b) {
        const auto set = published_papr_family(v, b);
        rows.push_back({v, b, set.length(), set_papr(set, cfg)});
    };
    if (which == 1) {
        for (int v = 1; v <= 5; ++v) add(v, 1);
    } else if (which == 2) {
        for (std::size_t b = 0; b <= 4; ++b) add(1, b);
    } else {
        throw InputError("PAPR tables are 1 and 2, got " + std::to_string(which));
    }
    return rows;
}

namespace {

std::string rate_text(const CodebookSpec& spec) {
    const auto rate = code_rate(spec);
    return format_fixed4(rate.numerator, rate.denominator);
}

std::string rate_cell(int q, int m, int v, std::size_t b) {
    CodebookSpec spec{q, m, v, b, CodebookVariant::c2, {}};
    return rate_text(spec);
}

std::string papr_table(int which) {
    const auto rows = papr_table_rows(which);
    std::vector<std::string> head{which == 1 ? "sequence_length" : "b"};
    std::vector<std::string> values{"papr"};
    for (const auto& r : rows) {
        head.push_back(std::to_string(which == 1 ? r.length : r.b));
        values.push_back(format_fixed4(r.set_papr));
    }
    CsvWriter csv;
    csv.row(head);
    csv.row(values);
    return csv.str();
}

std::string rate_table_by_b() {
    std::vector<std::pair<int, int>> columns;
    for (int m = 3; m <= 6; ++m)
        for (int v = 1; v < m - 1; ++v) columns.emplace_back(m, v);
    CsvWriter csv;
    std::vector<std::string> head{"b"};
    for (auto [m, v] : columns) head.push_back("m=" + std::to_string(m) + ",v=" + std::to_string(v));
    csv.row(head);
    for (std::size_t b = 0; b <= 6; ++b) {
        std::vector<std::string> row{std::to_string(b)};
        for (auto [m, v] : columns) row.push_back(rate_cell(2, m, v, b));
        csv.row(row);
    }
    return csv.str();
}

std::string rate_table_by_q() {
    const std::vector<std::pair<int, std::size_t>> columns{{4, 1}, {4, 2}, {5, 1}, {5, 2}, {5, 3},
                                                           {6, 1}, {6, 2}, {6, 3}, {6, 4}};
    CsvWriter csv;
    std::vector<std::string> head{"q"};
    for (auto [m, b] : columns) head.push_back("m=" + std::to_string(m) + ",b=" + std::to_string(b));
    csv.row(head);
    for (int q = 2; q <= 10; q += 2) {
        std::vector<std::string> row{std::to_string(q)};
        for (auto [m, b] : columns) row.push_back(rate_cell(q, m, 1, b));
        csv.row(row);
    }
    return csv.str();
}

std::string distance_table() {
    CsvWriter csv;
    // "length" repeats the published column 2^(m-1) + 2^v + b; the C3 codewords
    // themselves are 2^m + 2^(v+1) + b long and the rates use that length.
    csv.row({"b", "m", "v", "length", "codeword_length", "code_rate", "d_min"});
    for (std::size_t b = 0; b <= 2; ++b) {
        for (int m = 3; m <= 6; ++m) {
            const int v_max = m == 3 ? 1 : m - 3;
            for (int v = 1; v <= v_max; ++v) {
                const CodebookSpec spec{2, m, v, b, CodebookVariant::c3, {}};
                const auto book = enumerate(spec);
                csv.row({std::to_string(b), std::to_string(m), std::to_string(v),
                         std::to_string(truncation_length(m, v) + b), std::to_string(spec.codeword_length()),
                         rate_text(spec), std::to_string(min_hamming_distance(book))});
            }
        }
    }
    return csv.str();
}

}  // namespace

std::string report_table(int which) {
    switch (which) {
        case 1:
        case 2: return papr_table(which);
        case 3: return rate_table_by_b();
        case 4: return rate_table_by_q();
        case 6: return distance_table();
        default: throw InputError("table must be one of 1, 2, 3, 4, 6; got " + std::to_string(which));
    }
}

}  // namespace nullcs
