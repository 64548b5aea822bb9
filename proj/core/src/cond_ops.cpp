#include "precond/cond_ops.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

#include "axiom_eval.hpp"
#include "precond/error.hpp"

namespace precond {

namespace {

std::optional<Elem> total(Elem value) { return value; }

std::string name_triple(const FiniteLattice& l, const Counterexample& cx) {
  std::string out = "(";
  for (int i = 0; i < cx.arity; ++i) out += (i ? "," : "") + l.name_of(cx.vars[i]);
  return out + ")";
}

bool tuple_less(const Counterexample& a, const Counterexample& b) {
  return std::lexicographical_compare(a.vars.begin(), a.vars.begin() + a.arity, b.vars.begin(),
                                      b.vars.begin() + b.arity);
}

template <class Imp>
AxiomResult check_with(const FiniteLattice& l, AxiomId axiom, Imp&& imp,
                       const CheckOptions& options) {
  AxiomResult result;
  result.axiom = axiom;
  const auto n = static_cast<Elem>(l.size());
  const int k = arity(axiom);

  auto visit = [&](Elem a, Elem b, Elem c) {
    ++result.instances;
    const auto sides = detail::evaluate(axiom, l, imp, a, b, c);
    if (sides->holds) return true;
    Counterexample cx{{a, b, c}, k, sides->lhs, sides->rhs};
    if (!result.counterexample || tuple_less(cx, *result.counterexample)) result.counterexample = cx;
    result.pass = false;
    return false;
  };

  if (k == 3 && n > options.exhaustive_limit) {
    result.sampled = true;
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<Elem> pick(0, n - 1);
    for (std::uint64_t i = 0; i < options.samples; ++i) {
      const Elem a = pick(rng);
      const Elem b = pick(rng);
      const Elem c = pick(rng);
      visit(a, b, c);
    }
    return result;
  }

  const Elem ra = k >= 1 ? n : 1;
  const Elem rb = k >= 2 ? n : 1;
  const Elem rc = k >= 3 ? n : 1;
  for (Elem a = 0; a < ra; ++a)
    for (Elem b = 0; b < rb; ++b)
      for (Elem c = 0; c < rc; ++c)
        if (!visit(a, b, c)) return result;
  return result;
}

}  // namespace

ConditionalOp::ConditionalOp(LatticePtr lattice, std::vector<Elem> table)
    : lattice_(std::move(lattice)), table_(std::move(table)) {
  const std::size_t n = lattice_->size();
  if (table_.size() != n * n) throw Error(ErrorCode::InvalidSpec, "operation table must be n×n");
  for (Elem e : table_)
    if (e >= n) throw Error(ErrorCode::InvalidSpec, "operation table entry out of range");
}

UnaryOp::UnaryOp(LatticePtr lattice, std::vector<Elem> table)
    : lattice_(std::move(lattice)), table_(std::move(table)) {
  const std::size_t n = lattice_->size();
  if (table_.size() != n) throw Error(ErrorCode::InvalidSpec, "unary table must have n entries");
  for (Elem e : table_)
    if (e >= n) throw Error(ErrorCode::InvalidSpec, "unary table entry out of range");
}

std::string_view to_string(AxiomId axiom) {
  switch (axiom) {
    case AxiomId::P1: return "P1";
    case AxiomId::P2: return "P2";
    case AxiomId::P3: return "P3";
    case AxiomId::P4: return "P4";
    case AxiomId::P5: return "P5";
    case AxiomId::MP: return "MP";
    case AxiomId::WM: return "WM";
    case AxiomId::SEMI: return "SEMI";
    case AxiomId::INV: return "INV";
    case AxiomId::ID: return "ID";
    case AxiomId::NORM: return "NORM";
    case AxiomId::NEGIMP: return "NEGIMP";
    case AxiomId::FLAT: return "FLAT";
    case AxiomId::PC_ANTI: return "PC-ANTI";
    case AxiomId::PC_TOP: return "PC-TOP";
  }
  return "?";
}

std::optional<AxiomId> parse_axiom(std::string_view text) {
  std::string norm;
  for (char ch : text) norm += ch == '_' ? '-' : static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  for (AxiomId axiom : kAllAxioms)
    if (to_string(axiom) == norm) return axiom;
  return std::nullopt;
}

int arity(AxiomId axiom) {
  switch (axiom) {
    case AxiomId::PC_TOP: return 0;
    case AxiomId::P1:
    case AxiomId::SEMI:
    case AxiomId::INV:
    case AxiomId::ID: return 1;
    case AxiomId::P2:
    case AxiomId::P3:
    case AxiomId::MP:
    case AxiomId::WM:
    case AxiomId::NEGIMP:
    case AxiomId::PC_ANTI: return 2;
    case AxiomId::P4:
    case AxiomId::P5:
    case AxiomId::NORM:
    case AxiomId::FLAT: return 3;
  }
  return 3;
}

std::string_view formula(AxiomId axiom) {
  switch (axiom) {
    case AxiomId::P1: return "1→a ≤ a";
    case AxiomId::P2: return "a∧b ≤ a→b";
    case AxiomId::P3: return "a→b ≤ a→(a∧b)";
    case AxiomId::P4: return "a→(b∧c) ≤ a→b";
    case AxiomId::P5: return "a→((a∧b)→c) ≤ (a∧b)→c";
    case AxiomId::MP: return "a∧(a→b) ≤ b";
    case AxiomId::WM: return "b ≤ a→b";
    case AxiomId::SEMI: return "a∧(a→0) = 0";
    case AxiomId::INV: return "(a→0)→0 = a";
    case AxiomId::ID: return "a→a = 1";
    case AxiomId::NORM: return "(a→b)∧(a→c) ≤ a→(b∧c)";
    case AxiomId::NEGIMP: return "¬(a→b) ≤ a→¬b";
    case AxiomId::FLAT: return "a→((a∧b)→c) = (a∧b)→c";
    case AxiomId::PC_ANTI: return "a ≤ b ⇒ ¬b ≤ ¬a";
    case AxiomId::PC_TOP: return "¬1 = 0";
  }
  return "";
}

bool AxiomReport::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.pass; });
}

const AxiomResult* AxiomReport::find(AxiomId axiom) const {
  for (const auto& r : results)
    if (r.axiom == axiom) return &r;
  return nullptr;
}

bool AxiomReport::passes(AxiomId axiom) const {
  const AxiomResult* r = find(axiom);
  return r != nullptr && r->pass;
}

AxiomResult check_axiom(const ConditionalOp& op, AxiomId axiom, const CheckOptions& options) {
  return check_with(op.lattice(), axiom, [&](Elem x, Elem y) { return total(op(x, y)); }, options);
}

std::vector<Counterexample> all_counterexamples(const ConditionalOp& op, AxiomId axiom, std::size_t max) {
  std::vector<Counterexample> out;
  const FiniteLattice& l = op.lattice();
  const auto n = static_cast<Elem>(l.size());
  const int k = arity(axiom);
  auto imp = [&](Elem x, Elem y) { return total(op(x, y)); };
  for (Elem a = 0; a < (k >= 1 ? n : 1); ++a)
    for (Elem b = 0; b < (k >= 2 ? n : 1); ++b)
      for (Elem c = 0; c < (k >= 3 ? n : 1); ++c) {
        if (out.size() >= max) return out;
        const auto sides = detail::evaluate(axiom, l, imp, a, b, c);
        if (!sides->holds) out.push_back({{a, b, c}, k, sides->lhs, sides->rhs});
      }
  return out;
}

AxiomReport check_axioms(const ConditionalOp& op, std::span<const AxiomId> axioms,
                         const CheckOptions& options) {
  AxiomReport report;
  for (AxiomId axiom : axioms) report.results.push_back(check_axiom(op, axiom, options));
  return report;
}

AxiomReport check_preconditional(const ConditionalOp& op, const CheckOptions& options) {
  return check_axioms(op, kPreconditionalAxioms, options);
}

bool is_preconditional(const ConditionalOp& op, const CheckOptions& options) {
  for (AxiomId axiom : kPreconditionalAxioms)
    if (!check_axiom(op, axiom, options).pass) return false;
  return true;
}

UnaryOp derive_negation(const ConditionalOp& op) {
  const auto n = static_cast<Elem>(op.lattice().size());
  std::vector<Elem> table(n);
  for (Elem a = 0; a < n; ++a) table[a] = op(a, op.lattice().bottom());
  return UnaryOp(op.lattice_ptr(), std::move(table));
}

AxiomReport check_precomplementation(const UnaryOp& neg) {
  const FiniteLattice& l = neg.lattice();
  auto imp = [&](Elem x, Elem) { return total(neg(x)); };
  AxiomReport report;
  report.results.push_back(check_with(l, AxiomId::PC_ANTI, imp, {}));
  report.results.push_back(check_with(l, AxiomId::PC_TOP, imp, {}));
  return report;
}

ConditionalOp from_precomplementation(const UnaryOp& neg) {
  const AxiomReport pre = check_precomplementation(neg);
  if (!pre.all_pass()) {
    const AxiomResult& bad = pre.results[pre.passes(AxiomId::PC_ANTI) ? 1 : 0];
    throw Error(ErrorCode::NotAPrecomplementation,
                std::string(to_string(bad.axiom)) + " fails: " + std::string(formula(bad.axiom)));
  }
  const FiniteLattice& l = neg.lattice();
  ConditionalOp op = ConditionalOp::from_function(
      neg.lattice_ptr(), [&](Elem a, Elem b) { return l.join(neg(a), l.meet(a, b)); });
  if (!is_preconditional(op)) {
    throw Error(ErrorCode::InternalInconsistency,
                "precomplementation induced a non-preconditional");
  }
  return op;
}

Orthocomplement Orthocomplement::make(UnaryOp neg) {
  const FiniteLattice& l = neg.lattice();
  const auto n = static_cast<Elem>(l.size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (l.leq(a, b) && !l.leq(neg(b), neg(a))) {
        throw Error(ErrorCode::NotAnOrthocomplementation,
                    "antitonicity fails at (" + l.name_of(a) + "," + l.name_of(b) + ")");
      }
    }
    if (l.meet(a, neg(a)) != l.bottom()) {
      throw Error(ErrorCode::NotAnOrthocomplementation,
                  "semicomplementation fails at " + l.name_of(a));
    }
    if (neg(neg(a)) != a) {
      throw Error(ErrorCode::NotAnOrthocomplementation, "involution fails at " + l.name_of(a));
    }
  }
  // Consequences: excluded middle and both De Morgan laws.
  for (Elem a = 0; a < n; ++a) {
    if (l.join(a, neg(a)) != l.top())
      throw Error(ErrorCode::InternalInconsistency, "excluded middle fails at " + l.name_of(a));
    for (Elem b = 0; b < n; ++b) {
      if (neg(l.join(a, b)) != l.meet(neg(a), neg(b)) ||
          neg(l.meet(a, b)) != l.join(neg(a), neg(b))) {
        throw Error(ErrorCode::InternalInconsistency,
                    "De Morgan fails at (" + l.name_of(a) + "," + l.name_of(b) + ")");
      }
    }
  }
  return Orthocomplement(std::move(neg));
}

ConditionalOp sasaki_hook(const Orthocomplement& neg) {
  const FiniteLattice& l = neg.lattice();
  ConditionalOp op = ConditionalOp::from_function(
      neg.op().lattice_ptr(), [&](Elem a, Elem b) { return l.join(neg(a), l.meet(a, b)); });
  const ConditionalOp dual_form = ConditionalOp::from_function(
      neg.op().lattice_ptr(), [&](Elem a, Elem b) { return neg(l.meet(a, neg(l.meet(a, b)))); });
  if (!(op == dual_form)) {
    throw Error(ErrorCode::InternalInconsistency, "the two Sasaki forms disagree");
  }
  if (!is_preconditional(op)) {
    throw Error(ErrorCode::InternalInconsistency, "Sasaki hook is not a preconditional");
  }
  return op;
}

bool satisfies_residuation(const ConditionalOp& op) {
  const FiniteLattice& l = op.lattice();
  const auto n = static_cast<Elem>(l.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (l.leq(l.meet(a, b), c) != l.leq(a, op(b, c))) return false;
  return true;
}

ConditionalOp heyting_residual(LatticePtr lattice) {
  const FiniteLattice& l = *lattice;
  const auto n = static_cast<Elem>(l.size());
  ConditionalOp op = ConditionalOp::from_function(lattice, [&](Elem b, Elem c) {
    Elem acc = l.bottom();
    for (Elem a = 0; a < n; ++a)
      if (l.leq(l.meet(a, b), c)) acc = l.join(acc, a);
    return acc;
  });
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (l.leq(l.meet(a, b), c) != l.leq(a, op(b, c))) {
          throw Error(ErrorCode::NotResiduated, "residuation fails at (" + l.name_of(a) + "," +
                                                    l.name_of(b) + "," + l.name_of(c) + ")");
        }
  if (!is_preconditional(op) || !check_axiom(op, AxiomId::MP).pass ||
      !check_axiom(op, AxiomId::WM).pass) {
    throw Error(ErrorCode::InternalInconsistency, "Heyting residual fails its characterization");
  }
  return op;
}

OrthomodularityVerdict is_orthomodular(const Orthocomplement& neg) {
  const FiniteLattice& l = neg.lattice();
  const auto n = static_cast<Elem>(l.size());
  OrthomodularityVerdict verdict;
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (!verdict.law_witness && l.leq(a, b) && b != l.join(a, l.meet(neg(a), b))) {
        verdict.law_witness = std::pair{a, b};
      }
      if (!verdict.sasaki_mp_witness &&
          !l.leq(l.meet(a, l.join(neg(a), l.meet(a, b))), b)) {
        verdict.sasaki_mp_witness = std::pair{a, b};
      }
    }
  }
  if (verdict.law_witness.has_value() != verdict.sasaki_mp_witness.has_value()) {
    throw Error(ErrorCode::InternalInconsistency,
                "orthomodular law and Sasaki modus ponens disagree on " + l.name());
  }
  verdict.orthomodular = !verdict.law_witness;
  return verdict;
}

std::string_view to_string(ClassLabel label) {
  switch (label) {
    case ClassLabel::None: return "None";
    case ClassLabel::Preconditional: return "Preconditional";
    case ClassLabel::PreconditionalWithSemicomp: return "PreconditionalWithSemicomp";
    case ClassLabel::PreconditionalWithMP: return "PreconditionalWithMP";
    case ClassLabel::ProtoHeyting: return "ProtoHeyting";
    case ClassLabel::Heyting: return "Heyting";
    case ClassLabel::SasakiOL: return "SasakiOL";
    case ClassLabel::SasakiOML: return "SasakiOML";
    case ClassLabel::ClassicalMaterial: return "ClassicalMaterial";
  }
  return "?";
}

std::optional<ClassLabel> parse_class_label(std::string_view text) {
  for (ClassLabel label :
       {ClassLabel::None, ClassLabel::Preconditional, ClassLabel::PreconditionalWithSemicomp,
        ClassLabel::PreconditionalWithMP, ClassLabel::ProtoHeyting, ClassLabel::Heyting,
        ClassLabel::SasakiOL, ClassLabel::SasakiOML, ClassLabel::ClassicalMaterial})
    if (to_string(label) == text) return label;
  return std::nullopt;
}

Classification classify(const ConditionalOp& op, const CheckOptions& options) {
  Classification out;
  out.profile = check_axioms(op, kAllAxioms, options);
  const auto& p = out.profile;
  const bool pre = std::all_of(kPreconditionalAxioms.begin(), kPreconditionalAxioms.end(),
                               [&](AxiomId a) { return p.passes(a); });
  const bool mp = p.passes(AxiomId::MP);
  const bool wm = p.passes(AxiomId::WM);
  const bool semi = p.passes(AxiomId::SEMI);
  const bool inv = p.passes(AxiomId::INV);

  // SasakiOL + WM forces orthomodularity, hence MP: the classes below are
  // linearly ranked wherever two of them could both apply.
  if (!pre) out.label = ClassLabel::None;
  else if (mp && wm && inv) out.label = ClassLabel::ClassicalMaterial;
  else if (mp && wm) out.label = ClassLabel::Heyting;
  else if (mp && inv) out.label = ClassLabel::SasakiOML;
  else if (semi && inv) out.label = ClassLabel::SasakiOL;
  else if (wm && semi) out.label = ClassLabel::ProtoHeyting;
  else if (mp) out.label = ClassLabel::PreconditionalWithMP;
  else if (semi) out.label = ClassLabel::PreconditionalWithSemicomp;
  else out.label = ClassLabel::Preconditional;

  const bool sasaki = out.label == ClassLabel::SasakiOL || out.label == ClassLabel::SasakiOML ||
                      out.label == ClassLabel::ClassicalMaterial;
  const bool heyting =
      out.label == ClassLabel::Heyting || out.label == ClassLabel::ClassicalMaterial;
  const FiniteLattice& l = op.lattice();
  if (sasaki) {
    try {
      const Orthocomplement neg = Orthocomplement::make(derive_negation(op));
      for (Elem a = 0; a < l.size(); ++a)
        for (Elem b = 0; b < l.size(); ++b)
          if (op(a, b) != l.join(neg(a), l.meet(a, b)))
            throw Error(ErrorCode::InternalInconsistency, "Sasaki label but table differs");
      if (out.label != ClassLabel::SasakiOL && !is_orthomodular(neg).orthomodular)
        throw Error(ErrorCode::InternalInconsistency, "SasakiOML label on non-orthomodular lattice");
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InternalInconsistency) throw;
      throw Error(ErrorCode::InternalInconsistency,
                  "Sasaki label but derived negation is not an orthocomplement");
    }
  }
  if (heyting && !satisfies_residuation(op)) {
    throw Error(ErrorCode::InternalInconsistency, "Heyting label but residuation fails");
  }
  return out;
}

FlatteningReport check_flattening(const ConditionalOp& op, const CheckOptions& options) {
  FlatteningReport report;
  report.equation = check_axiom(op, AxiomId::FLAT, options);
  report.left_to_right = check_axiom(op, AxiomId::P5, options);

  // Right-to-left half: (a∧b)→c ≤ a→((a∧b)→c).
  const FiniteLattice& l = op.lattice();
  auto reversed = [&](Elem a, Elem b, Elem c) {
    const Elem inner = op(l.meet(a, b), c);
    return std::pair{inner, op(a, inner)};
  };
  AxiomResult& rtl = report.right_to_left;
  rtl.axiom = AxiomId::FLAT;
  const auto n = static_cast<Elem>(l.size());
  if (n > options.exhaustive_limit) {
    rtl.sampled = true;
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<Elem> pick(0, n - 1);
    for (std::uint64_t i = 0; i < options.samples; ++i) {
      const Elem a = pick(rng), b = pick(rng), c = pick(rng);
      ++rtl.instances;
      auto [lhs, rhs] = reversed(a, b, c);
      if (!l.leq(lhs, rhs)) {
        Counterexample cx{{a, b, c}, 3, lhs, rhs};
        if (!rtl.counterexample || tuple_less(cx, *rtl.counterexample)) rtl.counterexample = cx;
        rtl.pass = false;
      }
    }
    return report;
  }
  for (Elem a = 0; a < n && rtl.pass; ++a)
    for (Elem b = 0; b < n && rtl.pass; ++b)
      for (Elem c = 0; c < n && rtl.pass; ++c) {
        ++rtl.instances;
        auto [lhs, rhs] = reversed(a, b, c);
        if (!l.leq(lhs, rhs)) {
          rtl.pass = false;
          rtl.counterexample = Counterexample{{a, b, c}, 3, lhs, rhs};
        }
      }
  return report;
}

std::string format_table(const ConditionalOp& op) {
  const FiniteLattice& l = op.lattice();
  auto columns = [](const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
  };
  std::size_t width = 1;
  for (const auto& name : l.names()) width = std::max(width, columns(name));
  auto pad = [&](const std::string& s) {
    const std::size_t w = columns(s);
    return s + std::string(width > w ? width - w + 1 : 1, ' ');
  };
  std::ostringstream out;
  out << pad("→") << "|";
  for (const auto& name : l.names()) out << " " << pad(name);
  out << "\n";
  for (Elem a = 0; a < l.size(); ++a) {
    out << pad(l.name_of(a)) << "|";
    for (Elem b = 0; b < l.size(); ++b) out << " " << pad(l.name_of(op(a, b)));
    out << "\n";
  }
  return out.str();
}

std::string describe_counterexample(const FiniteLattice& l, const Counterexample& cx) {
  return name_triple(l, cx) + " lhs=" + l.name_of(cx.lhs) + " rhs=" + l.name_of(cx.rhs);
}

}  // namespace precond
