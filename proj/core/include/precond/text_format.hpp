#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "precond/cond_ops.hpp"
#include "precond/frames.hpp"
#include "precond/selection.hpp"

namespace precond {

/// A lattice file: the lattice, optional operations and recorded
/// expectations.
///
///   lattice <name>
///   elements <e0> <e1> ...
///   cover <a> <b>            (or: leq <a> <b>)
///   op -> <row a=e0> ; <row a=e1> ; ...
///   op neg <n names>
///   expect P1=pass P4=fail ...
///   class <label>
///   anchor <free text>
struct LatticeDocument {
  LatticePtr lattice;
  std::optional<ConditionalOp> op;
  std::optional<UnaryOp> neg;
  std::vector<std::pair<AxiomId, bool>> expect;
  std::optional<ClassLabel> expected_class;
  std::string anchor;
};

/// Throws ParseError with the 1-based line, or Error from lattice validation.
LatticeDocument parse_lattice_document(std::string_view text, LatticeLimits limits = {});
std::string serialize(const LatticeDocument& doc);

/// The operation as an `op -> ...` line.
std::string format_op_line(const ConditionalOp& op);

///   frame <name>
///   points <p0> <p1> ...
///   reflexive
///   edge <y> <x>             (y ◁ x)
struct FrameDocument {
  RelationalFrame frame;
  bool reflexive = false;
};

FrameDocument parse_frame_document(std::string_view text);
std::string serialize(const FrameDocument& doc);

///   selframe <name>
///   worlds <w0> <w1> ...
///   rel <subset> : <w>,<v> <w>,<v> ...
///
/// A subset is comma-separated world names, `*` for all worlds or `-` for
/// none. Subsets without a `rel` line get {(w,w) : w ∈ A}.
struct SelectionDocument {
  std::string name;
  SelectionFrame frame;
  /// Subsets that received the default relation.
  std::vector<WorldSet> defaulted;
};

SelectionDocument parse_selection_document(std::string_view text);
/// Writes every subset whose relation differs from the default.
std::string serialize(const SelectionDocument& doc);

/// The first directive of a document ("lattice", "frame", "selframe"), or
/// empty if there is none.
std::string document_kind(std::string_view text);

}  // namespace precond
