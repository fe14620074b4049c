#include <gtest/gtest.h>

#include "ivfg/document.hpp"
#include "ivfg/fixtures.hpp"
#include "support.hpp"

using namespace ivfg;

namespace {

const char* kTriangle = R"({
  "version": 1,
  "vertices": [
    {"id": "x", "mu": ["0.2", "0.4"]},
    {"id": "y", "mu": ["0.3", "0.5"]},
    {"id": "z", "mu": ["0.4", "0.5"]}
  ],
  "edges": [
    {"u": "x", "v": "y", "mu": ["0.1", "0.3"]},
    {"u": "y", "v": "z", "mu": ["0.2", "0.4"]},
    {"u": "z", "v": "x", "mu": ["0.1", "0.4"]}
  ]
})";

ParseError parse_error(const std::string& text) {
  try {
    (void)parse_document(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for " << text;
  return ParseError(ErrorCode::SyntaxError, "", "");
}

}  // namespace

TEST(Parse, TriangleDocumentValidates) {
  const auto doc = parse_document(kTriangle);
  EXPECT_EQ(doc, fixtures::triangle_xyz_document());
  EXPECT_TRUE(validate(doc).ok());
}

TEST(Parse, UnknownField) {
  const auto e = parse_error(R"({"version":1,"vertices":[{"id":"a","mu":["0","0"],"weight":"1"}],"edges":[]})");
  EXPECT_EQ(e.code(), ErrorCode::UnknownField);
  EXPECT_EQ(e.context(), "$.vertices[0]");
  EXPECT_EQ(parse_error(R"({"version":1,"vertices":[],"edges":[],"extra":0})").code(), ErrorCode::UnknownField);
}

TEST(Parse, BadNumber) {
  const auto e = parse_error(R"({"version":1,"vertices":[{"id":"a","mu":["0.2/3","0.5"]}],"edges":[]})");
  EXPECT_EQ(e.code(), ErrorCode::BadNumber);
  EXPECT_EQ(e.context(), "$.vertices[0].mu[0]");
  EXPECT_EQ(parse_error(R"({"version":1,"vertices":[{"id":"a","mu":[0.2,0.5]}],"edges":[]})").code(),
            ErrorCode::BadNumber);
}

TEST(Parse, OutOfRangeIsLeftToValidate) {
  const auto doc = parse_document(R"({"version":1,"vertices":[{"id":"a","mu":["0.7","1.5"]}],"edges":[]})");
  const auto r = validate(doc);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].kind, ViolationKind::MembershipOutOfRange);
}

TEST(Parse, SyntaxErrors) {
  const auto e = parse_error("{\n  \"version\": 1,\n  \"vertices\": [\n}");
  EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
  EXPECT_EQ(e.context(), "line 4");
  EXPECT_EQ(parse_error(R"({"version":2,"vertices":[],"edges":[]})").code(), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error(R"({"version":1,"vertices":[]})").code(), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error(R"([])").code(), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error(R"({"version":1,"vertices":[{"id":"a","mu":["0"]}],"edges":[]})").code(), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error(R"({"version":1,"vertices":[{"id":3,"mu":["0","0"]}],"edges":[]})").code(), ErrorCode::SyntaxError);
}

TEST(Serialize, CanonicalForm) {
  const auto text = serialize(fixtures::triangle_xyz());
  // z-x is stored as x-z.
  EXPECT_NE(text.find("\"u\": \"x\",\n      \"v\": \"z\""), std::string::npos) << text;
  EXPECT_EQ(serialize(parse_graph(text)), text);
  EXPECT_EQ(parse_document(text), to_document(fixtures::triangle_xyz()));
}

TEST(Serialize, RoundTripProperty) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto doc = to_document(reference::random_graph(seed, 6, 7));
    EXPECT_EQ(parse_document(serialize_document(doc)), doc);
  }
}

TEST(Mapping, ParseAndSerialize) {
  const auto m = parse_mapping("# swap\na1 -> b2\n\n  b1->a2  # trailing\n");
  EXPECT_EQ(m("a1"), "b2");
  EXPECT_EQ(m("b1"), "a2");
  EXPECT_EQ(serialize_mapping(m), "a1 -> b2\nb1 -> a2\n");
  EXPECT_EQ(parse_mapping(serialize_mapping(m)), m);
  EXPECT_THROW(parse_mapping("a1 b2\n"), ParseError);
  EXPECT_THROW(parse_mapping("a1 -> b2\na1 -> c\n"), ParseError);
  EXPECT_THROW(parse_mapping(" -> b2\n"), ParseError);
}

TEST(Dot, TriangleLabels) {
  const auto dot = to_dot(fixtures::triangle_xyz());
  EXPECT_NE(dot.find("x -- y [label=\"[0.1,0.3]\"]"), std::string::npos) << dot;
  EXPECT_NE(dot.find("x [label=\"x [0.2,0.4]\"]"), std::string::npos) << dot;
  EXPECT_EQ(dot, to_dot(fixtures::triangle_xyz()));
}

TEST(Dot, EmptyGraph) { EXPECT_EQ(to_dot(IVFuzzyGraph{}), "graph G {\n}\n"); }

TEST(Dot, QuotesPairIds) {
  const auto dot = to_dot(fixtures::graph({{"a|c", "0.1", "0.2"}, {"q\"", "0.1", "0.2"}}, {}));
  EXPECT_NE(dot.find("\"a|c\" [label=\"a|c [0.1,0.2]\"]"), std::string::npos) << dot;
  EXPECT_NE(dot.find("\"q\\\"\""), std::string::npos) << dot;
}
