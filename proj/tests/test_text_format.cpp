#include <gtest/gtest.h>

#include "precond/error.hpp"
#include "support.hpp"

using namespace precond;

namespace {

int parse_error_line(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST(TextFormat, LatticeDocumentsRoundTrip) {
  for (const auto& e : catalog_entries()) {
    const auto again = parse_lattice_document(serialize(e.doc));
    EXPECT_EQ(*again.lattice, *e.doc.lattice) << e.name;
    EXPECT_EQ(again.op, e.doc.op) << e.name;
    EXPECT_EQ(again.neg, e.doc.neg) << e.name;
    EXPECT_EQ(again.expect, e.doc.expect) << e.name;
    EXPECT_EQ(again.expected_class, e.doc.expected_class) << e.name;
    EXPECT_EQ(again.anchor, e.doc.anchor) << e.name;
    EXPECT_EQ(serialize(again), serialize(e.doc)) << e.name;
  }
}

TEST(TextFormat, FrameDocumentsRoundTrip) {
  for (const auto& e : catalog_frames()) {
    const auto again = parse_frame_document(serialize(e.doc));
    EXPECT_EQ(again.frame.names(), e.doc.frame.names());
    EXPECT_EQ(again.frame.edges(), e.doc.frame.edges());
    EXPECT_EQ(again.reflexive, e.doc.reflexive);
  }
}

TEST(TextFormat, SelectionDocumentsRoundTrip) {
  for (const auto& e : catalog_selection_frames()) {
    const auto again = parse_selection_document(serialize(e.doc));
    EXPECT_EQ(again.frame, e.doc.frame) << e.name;
    EXPECT_EQ(again.name, e.doc.name);
  }
}

TEST(TextFormat, SelectionDefaults) {
  const auto& doc = catalog_selection_frame("density-failure").doc;
  // Eight subsets, two given explicitly.
  EXPECT_EQ(doc.defaulted.size(), 6u);
  EXPECT_EQ(doc.frame.successors(0b111, 1), WorldSet{0b010});
  EXPECT_EQ(doc.frame.successors(0b110, 0), WorldSet{0b010});
}

TEST(TextFormat, OperationLine) {
  EXPECT_EQ(format_op_line(support::catalog_op("chain2-material")), "op -> 1 1 ; 0 1");
}

TEST(TextFormat, DocumentKind) {
  for (const auto& [stem, text] : catalog_sources()) {
    const auto kind = document_kind(text);
    EXPECT_TRUE(kind == "lattice" || kind == "frame" || kind == "selframe") << stem;
  }
  EXPECT_EQ(document_kind("# nothing\n\n"), "");
  EXPECT_EQ(document_kind("  # c\nframe f\n"), "frame");
}

TEST(TextFormat, ParseErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line([] { parse_lattice_document("lattice x\nelements 0 1\ncover 0 2\n"); }), 3);
  EXPECT_EQ(parse_error_line([] { parse_lattice_document("lattice x\nelements 0 1\ncover 0 1\nop -> 1 1\n"); }), 4);
  EXPECT_EQ(parse_error_line([] { parse_lattice_document("# c\nlattice x\nelements 0 1\nbogus\n"); }), 4);
  EXPECT_EQ(parse_error_line([] { parse_lattice_document("lattice x\nelements 0 1\ncover 0 1\nexpect P9=pass\n"); }), 4);
  EXPECT_EQ(parse_error_line([] { parse_frame_document("frame f\npoints a b\nedge a c\n"); }), 3);
  EXPECT_EQ(parse_error_line([] { parse_selection_document("selframe s\nworlds a b\nrel a : a,q\n"); }), 3);
}

TEST(TextFormat, ValidationErrorsAreNotParseErrors) {
  try {
    parse_lattice_document("lattice bad\nelements 0 a b\ncover 0 a\ncover 0 b\n");
    FAIL();
  } catch (const ParseError&) {
    FAIL() << "expected a lattice validation error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingBound);
  }
}
