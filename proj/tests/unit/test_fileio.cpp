#include "nullcs/construct.hpp"
#include "nullcs/fileio.hpp"

#include "support/oracle.hpp"

#include <gtest/gtest.h>

using namespace nullcs;

namespace {

ParseErrorKind kind_of(std::string_view text) {
    try {
        parse_document(text);
    } catch (const ParseError& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error for: " << text;
    return ParseErrorKind::malformed;
}

}  // namespace

TEST(Document, EmitsCanonicalText) {
    const ComplementarySet set({from_bipolar({1, -1, 0}), QarySequence(2, {1, 1, 0})});
    EXPECT_EQ(emit(set), "{\"data\":[[0,1,null],[1,1,0]],\"format\":\"css-set/v1\",\"length\":3,\"q\":2,"
                         "\"structure\":\"set\"}\n");
}

TEST(Document, PrintedMocsRoundTrip) {
    const auto w = oracle::bipolar_family(oracle::example_w());
    const auto text = emit(w);
    EXPECT_NE(text.find("\"structure\":\"mocs\""), std::string::npos);
    const auto back = parse_document(text);
    ASSERT_TRUE(std::holds_alternative<MocsFamily>(back));
    EXPECT_EQ(std::get<MocsFamily>(back), w);
    EXPECT_EQ(emit(back), text);

    const auto first = oracle::bipolar_family(oracle::example_w1())[0];
    const auto doc = emit(first);
    EXPECT_NE(doc.find("[0,0,0,0,null,1,1,0,0]"), std::string::npos);
}

TEST(Document, AcceptsWhitespaceAndKeyOrder) {
    const auto doc = parse_document(R"({ "q": 4, "structure": "set", "length": 2,
        "format": "css-set/v1", "data": [[3, null]] })");
    const auto& set = std::get<ComplementarySet>(doc);
    EXPECT_EQ(set[0][0], 3);
    EXPECT_TRUE(set[0].is_null(1));
    EXPECT_EQ(set.q(), 4);
}

TEST(Document, ErrorKinds) {
    EXPECT_EQ(kind_of("{\"format\": "), ParseErrorKind::malformed);
    EXPECT_EQ(kind_of("[1, 2]"), ParseErrorKind::malformed);
    EXPECT_EQ(kind_of(R"({"format":"css-set/v2","q":2,"length":1,"structure":"set","data":[[0]]})"),
              ParseErrorKind::tag_mismatch);
    EXPECT_EQ(kind_of(R"({"q":2,"length":1,"structure":"set","data":[[0]]})"), ParseErrorKind::tag_mismatch);
    EXPECT_EQ(kind_of(R"({"format":"css-set/v1","q":2,"length":2,"structure":"set","data":[[0,2]]})"),
              ParseErrorKind::invariant_violation);
    EXPECT_EQ(kind_of(R"({"format":"css-set/v1","q":2,"length":2,"structure":"set","data":[[0,1],[0]]})"),
              ParseErrorKind::invariant_violation);
    EXPECT_EQ(kind_of(R"({"format":"css-set/v1","q":2,"length":1,"structure":"set","data":[]})"),
              ParseErrorKind::invariant_violation);
    EXPECT_EQ(kind_of(R"({"format":"css-set/v1","q":2,"length":1,"structure":"cube","data":[[0]]})"),
              ParseErrorKind::invariant_violation);
    EXPECT_EQ(kind_of(R"({"format":"css-set/v1","q":2,"length":1,"structure":"set","data":[[0]],"x":1})"),
              ParseErrorKind::invariant_violation);
    EXPECT_EQ(kind_of(R"({"format":"css-set/v1","q":2,"length":1,"structure":"mocs","data":[[[0]],[[0],[1]]]})"),
              ParseErrorKind::invariant_violation);
    EXPECT_EQ(kind_of(R"({"format":"css-set/v1","q":2,"length":1,"structure":"set","data":[[0.5]]})"),
              ParseErrorKind::invariant_violation);
}

TEST(Document, ErrorPositions) {
    try {
        parse_document("{\"format\":\n  \"css-set/v1\" \"q\"}");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_GT(e.column(), 1u);
    }
    try {
        parse_document(R"({"format":"css-set/v1","q":4,"length":3,"structure":"set","data":[[0,1,2],[0,9,1]]})");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.where(), "/data/1/1");
    }
}

TEST(Document, RoundTripProperty) {
    oracle::Gen gen(515);
    for (int trial = 0; trial < 100; ++trial) {
        const int q = gen.uniform(1, 9);
        const auto length = static_cast<std::size_t>(gen.uniform(1, 12));
        const auto n = gen.uniform(1, 4);
        const auto sets = gen.uniform(1, 3);
        std::vector<ComplementarySet> family;
        for (int s = 0; s < sets; ++s) {
            std::vector<QarySequence> seqs;
            for (int j = 0; j < n; ++j) {
                const auto p = gen.phases(q, length, 0.2);
                seqs.emplace_back(q, std::vector<std::int32_t>(p.begin(), p.end()));
            }
            family.emplace_back(std::move(seqs));
        }
        const SequenceDocument doc = gen.coin() ? SequenceDocument(family[0]) : SequenceDocument(MocsFamily(family));
        const auto text = emit(doc);
        EXPECT_EQ(parse_document(text), doc);
        EXPECT_EQ(emit(parse_document(text)), text);
    }
}

TEST(Document, ConstructOutputsRoundTrip) {
    const auto p = Theorem2Params::zeros(4, 5, 2);
    for (const SequenceDocument& doc :
         {SequenceDocument(chen_cs(p)), SequenceDocument(mocs_pair(p)), SequenceDocument(concat_cs(p, 3)),
          SequenceDocument(seed_ccc(8)), SequenceDocument(iterate(seed_ccc(8), {2, 0}))})
        EXPECT_EQ(parse_document(emit(doc)), doc);
}

TEST(Params, RoundTrip) {
    auto p = Theorem2Params::zeros(4, 5, 2);
    p.pi = ConstrainedPermutation(5, 2, {2, 1, 4, 3});
    p.lambda = {1, 3};
    p.mu = {0, 1, 2, 3, 0};
    p.mu0 = 2;
    const auto text = emit_params(p);
    EXPECT_EQ(text, "q=4\nm=5\nv=2\npi=2,1,4,3\nlambda=1,3\nmu=0,1,2,3,0\nmu0=2\n");
    const auto back = parse_params(text);
    EXPECT_EQ(back.pi, p.pi);
    EXPECT_EQ(back.lambda, p.lambda);
    EXPECT_EQ(back.mu, p.mu);
    EXPECT_EQ(back.mu0, p.mu0);
}

TEST(Params, DefaultsCommentsAndErrors) {
    const auto p = parse_params("# seed\nq = 2\nm=7  # variables\nv=1\n\n");
    EXPECT_TRUE(p.pi.is_identity());
    EXPECT_EQ(p.mu, std::vector<int>(7, 0));
    EXPECT_THROW(parse_params("q=2\nm=4"), ParseError);
    EXPECT_THROW(parse_params("q=2\nm=4\nv=1\nv=1"), ParseError);
    EXPECT_THROW(parse_params("q=2\nm=4\nv=1\nnu=1"), ParseError);
    EXPECT_THROW(parse_params("q=2\nm=4\nv=1\nmu0=x"), ParseError);
    EXPECT_THROW(parse_params("q=2\nm=4\nv=1\nmu=1,1"), ParseError);
    EXPECT_THROW(parse_params("q=2\nm=4\nv=1\njunk"), ParseError);
}

TEST(Csv, QuotingAndNumbers) {
    EXPECT_EQ(csv_field("plain"), "plain");
    EXPECT_EQ(csv_field("m=3,v=1"), "\"m=3,v=1\"");
    EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    EXPECT_EQ(format_fixed4(5.0 / 12.0), "0.4167");
    EXPECT_EQ(format_fixed4(3.6), "3.6000");
    CsvWriter w;
    w.row({"a", "b,c"});
    w.row({"1", "2"});
    EXPECT_EQ(w.str(), "a,\"b,c\"\n1,2\n");
}

TEST(Csv, ExactRatiosRoundHalfUp) {
    EXPECT_EQ(format_fixed4(5, 32), "0.1563");
    EXPECT_EQ(format_fixed4(5, 12), "0.4167");
    EXPECT_EQ(format_fixed4(1, 3), "0.3333");
    EXPECT_EQ(format_fixed4(99999, 100000), "1.0000");
    EXPECT_EQ(format_fixed4(7, 7), "1.0000");
    EXPECT_EQ(format_fixed4(0, 9), "0.0000");
    EXPECT_THROW(format_fixed4(1, 0), InputError);
}
