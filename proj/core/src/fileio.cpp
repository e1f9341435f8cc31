#include "nullcs/fileio.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>

namespace nullcs {

using nlohmann::json;

namespace {

json sequence_json(const QarySequence& s) {
    json out = json::array();
    for (auto k : s.entries()) out.push_back(k == QarySequence::kNull ? json(nullptr) : json(k));
    return out;
}

json set_json(const ComplementarySet& set) {
    json out = json::array();
    for (const auto& s : set) out.push_back(sequence_json(s));
    return out;
}

std::string dump(json doc) { return doc.dump() + "\n"; }

ParseError violation(const std::string& what, const std::string& where) {
    return ParseError(ParseErrorKind::invariant_violation, what + (where.empty() ? "" : " at " + where), 0, 0, where);
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

std::int64_t integer_field(const json& doc, const char* key) {
    const std::string where = std::string("/") + key;
    if (!doc.contains(key)) throw violation(std::string("missing field '") + key + "'", where);
    const auto& value = doc.at(key);
    if (!value.is_number_integer()) throw violation(std::string("field '") + key + "' must be an integer", where);
    return value.get<std::int64_t>();
}

QarySequence parse_sequence(const json& items, int q, std::size_t length, const std::string& where) {
    if (!items.is_array()) throw violation("sequence must be a list", where);
    if (items.size() != length)
        throw violation("sequence has " + std::to_string(items.size()) + " entries, declared length is " +
                            std::to_string(length),
                        where);
    std::vector<std::int32_t> entries;
    entries.reserve(length);
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto& item = items[i];
        const std::string at = where + "/" + std::to_string(i);
        if (item.is_null()) {
            entries.push_back(QarySequence::kNull);
            continue;
        }
        if (!item.is_number_integer()) throw violation("entry must be an integer phase or null", at);
        const auto k = item.get<std::int64_t>();
        if (k < 0 || k >= q) throw violation("phase " + std::to_string(k) + " outside [0, " + std::to_string(q) + ")", at);
        entries.push_back(static_cast<std::int32_t>(k));
    }
    return QarySequence(q, std::move(entries));
}

ComplementarySet parse_set(const json& seqs, int q, std::size_t length, const std::string& where) {
    if (!seqs.is_array()) throw violation("set must be a list of sequences", where);
    if (seqs.empty()) throw violation("set must contain at least one sequence", where);
    std::vector<QarySequence> out;
    for (std::size_t j = 0; j < seqs.size(); ++j)
        out.push_back(parse_sequence(seqs[j], q, length, where + "/" + std::to_string(j)));
    return ComplementarySet(std::move(out));
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, std::string message, std::size_t line, std::size_t column, std::string where)
    : InputError(line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message
                          : message),
      kind_(kind),
      line_(line),
      column_(column),
      where_(std::move(where)) {}

std::string emit(const ComplementarySet& set) {
    json doc;
    doc["format"] = kDocumentFormat;
    doc["q"] = set.q();
    doc["length"] = set.length();
    doc["structure"] = "set";
    doc["data"] = set_json(set);
    return dump(std::move(doc));
}

std::string emit(const MocsFamily& family) {
    json doc;
    doc["format"] = kDocumentFormat;
    doc["q"] = family.q();
    doc["length"] = family.length();
    doc["structure"] = "mocs";
    json sets = json::array();
    for (const auto& s : family) sets.push_back(set_json(s));
    doc["data"] = std::move(sets);
    return dump(std::move(doc));
}

std::string emit(const SequenceDocument& doc) {
    return std::visit([](const auto& obj) { return emit(obj); }, doc);
}

SequenceDocument parse_document(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto byte = e.byte > 0 ? e.byte - 1 : 0;
        const auto [line, column] = line_column(text, byte);
        throw ParseError(ParseErrorKind::malformed, e.what(), line, column);
    }
    if (!doc.is_object()) throw ParseError(ParseErrorKind::malformed, "document must be a JSON object", 1, 1);
    if (!doc.contains("format") || !doc["format"].is_string() || doc["format"].get<std::string>() != kDocumentFormat)
        throw ParseError(ParseErrorKind::tag_mismatch,
                         "expected format tag \"" + std::string(kDocumentFormat) + "\"", 0, 0, "/format");
    for (const auto& [key, value] : doc.items()) {
        if (key != "format" && key != "q" && key != "length" && key != "structure" && key != "data")
            throw violation("unknown field '" + key + "'", "/" + key);
    }

    const auto q = integer_field(doc, "q");
    if (q < 1 || q > 1'000'000) throw violation("q must be a positive integer", "/q");
    const auto length = integer_field(doc, "length");
    if (length < 1) throw violation("length must be at least 1", "/length");
    if (!doc.contains("structure") || !doc["structure"].is_string()) throw violation("missing field 'structure'", "/structure");
    const auto structure = doc["structure"].get<std::string>();
    if (!doc.contains("data")) throw violation("missing field 'data'", "/data");
    const auto& data = doc["data"];

    const int qi = static_cast<int>(q);
    const auto len = static_cast<std::size_t>(length);
    if (structure == "set") return parse_set(data, qi, len, "/data");
    if (structure == "mocs") {
        if (!data.is_array() || data.empty()) throw violation("mocs data must be a non-empty list of sets", "/data");
        std::vector<ComplementarySet> sets;
        for (std::size_t i = 0; i < data.size(); ++i)
            sets.push_back(parse_set(data[i], qi, len, "/data/" + std::to_string(i)));
        try {
            return MocsFamily(std::move(sets));
        } catch (const InputError& e) {
            throw violation(e.what(), "/data");
        }
    }
    throw violation("structure must be \"set\" or \"mocs\"", "/structure");
}

MocsFamily as_family(const SequenceDocument& doc) {
    if (const auto* set = std::get_if<ComplementarySet>(&doc)) return MocsFamily({*set});
    return std::get<MocsFamily>(doc);
}

namespace {

std::string join(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
    return out;
}

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

int to_int(const std::string& text, std::size_t line) {
    int value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || text.empty())
        throw ParseError(ParseErrorKind::malformed, "expected an integer, got '" + text + "'", line, 1);
    return value;
}

std::vector<int> to_list(const std::string& text, std::size_t line) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    for (;;) {
        const auto comma = text.find(',', start);
        out.push_back(to_int(trim(std::string_view(text).substr(start, comma - start)), line));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

std::string emit_params(const Theorem2Params& p) {
    std::ostringstream os;
    os << "q=" << p.q << "\nm=" << p.m << "\nv=" << p.v << "\npi=" << join(p.pi.images()) << "\nlambda="
       << join(p.lambda) << "\nmu=" << join(p.mu) << "\nmu0=" << p.mu0 << "\n";
    return os.str();
}

Theorem2Params parse_params(std::string_view text) {
    std::map<std::string, std::pair<std::string, std::size_t>> fields;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto nl = text.find('\n', start);
        const auto raw = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        ++line_no;
        const auto hash = raw.find('#');
        const std::string line = trim(raw.substr(0, hash));
        if (!line.empty()) {
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw ParseError(ParseErrorKind::malformed, "expected key=value", line_no, 1);
            const std::string key = trim(std::string_view(line).substr(0, eq));
            static const char* known[] = {"q", "m", "v", "pi", "lambda", "mu", "mu0"};
            if (std::find(std::begin(known), std::end(known), key) == std::end(known))
                throw ParseError(ParseErrorKind::invariant_violation, "unknown key '" + key + "'", line_no, 1, key);
            if (!fields.emplace(key, std::pair{trim(std::string_view(line).substr(eq + 1)), line_no}).second)
                throw ParseError(ParseErrorKind::invariant_violation, "duplicate key '" + key + "'", line_no, 1, key);
        }
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    for (const char* required : {"q", "m", "v"})
        if (!fields.contains(required))
            throw ParseError(ParseErrorKind::invariant_violation, std::string("missing key '") + required + "'", 0, 0,
                             required);

    const int q = to_int(fields["q"].first, fields["q"].second);
    const int m = to_int(fields["m"].first, fields["m"].second);
    const int v = to_int(fields["v"].first, fields["v"].second);
    try {
        Theorem2Params p = Theorem2Params::zeros(q, m, v);
        if (fields.contains("pi")) p.pi = ConstrainedPermutation(m, v, to_list(fields["pi"].first, fields["pi"].second));
        if (fields.contains("lambda")) p.lambda = to_list(fields["lambda"].first, fields["lambda"].second);
        if (fields.contains("mu")) p.mu = to_list(fields["mu"].first, fields["mu"].second);
        if (fields.contains("mu0")) p.mu0 = to_int(fields["mu0"].first, fields["mu0"].second);
        p.validate();
        return p;
    } catch (const ParseError&) {
        throw;
    } catch (const InputError& e) {
        throw ParseError(ParseErrorKind::invariant_violation, e.what());
    }
}

std::string format_fixed4(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", value);
    return buf;
}

std::string format_fixed4(std::uint64_t numerator, std::uint64_t denominator) {
    if (denominator == 0 || denominator > 1'000'000'000'000ULL)
        throw InputError("denominator must be in [1, 10^12]");
    const std::uint64_t scaled = (numerator % denominator) * 10000U;
    auto frac = scaled / denominator;
    auto carry = numerator / denominator;
    if ((scaled % denominator) * 2 >= denominator) ++frac;
    if (frac == 10000) {
        frac = 0;
        ++carry;
    }
    char buf[48];
    std::snprintf(buf, sizeof buf, "%llu.%04llu", static_cast<unsigned long long>(carry),
                  static_cast<unsigned long long>(frac));
    return buf;
}

std::string csv_field(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void CsvWriter::row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) text_ += ',';
        text_ += csv_field(fields[i]);
    }
    text_ += '\n';
}

}  // namespace nullcs
