#pragma once

// Text formats.
//
// Sequence-set document ("css-set/v1"): one JSON object with sorted keys and no
// insignificant whitespace, followed by a newline:
//
//   {"data":[[0,1,null,1]],"format":"css-set/v1","length":4,"q":2,"structure":"set"}
//
// "structure" is "set" (data is a list of sequences) or "mocs" (a list of sets).
// Sequence items are phase indices in [0, q) or null for a spectral zero.
//
// Construction parameters: flat "key=value" lines, '#' starts a comment.
//
//   q=2
//   m=7
//   v=1
//   pi=1,2,3,4,5,6
//   lambda=0
//   mu=0,0,0,0,0,0,0
//   mu0=0
//
// q, m and v are required; pi defaults to the identity, coefficients to zero.
// lambda takes v or m-1 entries.

#include "nullcs/construct.hpp"
#include "nullcs/errors.hpp"
#include "nullcs/seqcore.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace nullcs {

inline constexpr std::string_view kDocumentFormat = "css-set/v1";

using SequenceDocument = std::variant<ComplementarySet, MocsFamily>;

std::string emit(const ComplementarySet& set);
std::string emit(const MocsFamily& family);
std::string emit(const SequenceDocument& doc);

enum class ParseErrorKind {
    malformed,            ///< not parseable as a document at all
    tag_mismatch,         ///< wrong or missing format tag
    invariant_violation,  ///< well-formed, but the content breaks a document invariant
};

class ParseError : public InputError {
public:
    /// line/column are 1-based; 0 when the error has no text position.
    ParseError(ParseErrorKind kind, std::string message, std::size_t line = 0, std::size_t column = 0,
               std::string where = {});

    ParseErrorKind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    /// JSON pointer to the offending value, e.g. "/data/2/5".
    const std::string& where() const noexcept { return where_; }

private:
    ParseErrorKind kind_;
    std::size_t line_;
    std::size_t column_;
    std::string where_;
};

SequenceDocument parse_document(std::string_view text);

/// The document as a family; a "set" document becomes a one-set family.
MocsFamily as_family(const SequenceDocument& doc);

std::string emit_params(const Theorem2Params& params);
Theorem2Params parse_params(std::string_view text);

/// 4 decimal places, '.' as decimal separator.
std::string format_fixed4(double value);
/// numerator/denominator to 4 decimal places by exact integer arithmetic, ties rounded up.
std::string format_fixed4(std::uint64_t numerator, std::uint64_t denominator);

/// RFC 4180 quoting: fields with ',', '"', CR or LF are quoted, quotes doubled.
std::string csv_field(std::string_view field);

class CsvWriter {
public:
    void row(const std::vector<std::string>& fields);
    void row(std::initializer_list<std::string> fields) { row(std::vector<std::string>(fields)); }
    const std::string& str() const noexcept { return text_; }

private:
    std::string text_;
};

}  // namespace nullcs
