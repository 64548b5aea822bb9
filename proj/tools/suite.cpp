#include "suite.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "precond/error.hpp"
#include "precond/probabilistic.hpp"
#include "precond/representation.hpp"
#include "precond/search.hpp"
#include "precond/selection.hpp"

namespace precond::suite {

namespace {

class Findings {
 public:
  void expect(bool condition, const std::string& what) {
    if (!condition) problems_.push_back(what);
  }
  void note(const std::string& text) { notes_.push_back(text); }
  bool ok() const { return problems_.empty(); }

  std::string text() const {
    const auto& lines = problems_.empty() ? notes_ : problems_;
    std::string out;
    for (const auto& l : lines) out += (out.empty() ? "" : "; ") + l;
    return out;
  }

 private:
  std::vector<std::string> problems_;
  std::vector<std::string> notes_;
};

class Catalog {
 public:
  explicit Catalog(const std::vector<WitnessEntry>& entries) : entries_(entries) {}

  const WitnessEntry& entry(std::string_view name) const {
    for (const auto& e : entries_)
      if (e.name == name) return e;
    throw Error(ErrorCode::InvalidSpec, "no catalog entry named " + std::string(name));
  }

  const ConditionalOp& op(std::string_view name) const {
    const auto& e = entry(name);
    if (!e.doc.op) throw Error(ErrorCode::InvalidSpec, std::string(name) + " has no operation");
    return *e.doc.op;
  }

  const std::vector<WitnessEntry>& all() const { return entries_; }

 private:
  const std::vector<WitnessEntry>& entries_;
};

Elem el(const FiniteLattice& l, std::string_view name) {
  const auto e = l.find(name);
  if (!e) throw Error(ErrorCode::InvalidSpec, "no element " + std::string(name) + " in " + l.name());
  return *e;
}

std::string vars_text(const FiniteLattice& l, const Counterexample& cx) {
  std::string out = "(";
  for (int i = 0; i < cx.arity; ++i) out += (i ? "," : "") + l.name_of(cx.vars[i]);
  return out + ")";
}

bool fails_at(const ConditionalOp& op, AxiomId axiom, std::initializer_list<std::string_view> at) {
  const AxiomResult r = check_axiom(op, axiom);
  if (r.pass || !r.counterexample) return false;
  std::size_t i = 0;
  for (auto name : at)
    if (r.counterexample->vars[i++] != el(op.lattice(), name)) return false;
  return static_cast<int>(at.size()) == r.counterexample->arity;
}

std::vector<AxiomId> failing(const ConditionalOp& op, std::span<const AxiomId> axioms) {
  std::vector<AxiomId> out;
  for (AxiomId a : axioms)
    if (!check_axiom(op, a).pass) out.push_back(a);
  return out;
}

std::string names(const std::vector<AxiomId>& axioms) {
  std::string out;
  for (AxiomId a : axioms) out += (out.empty() ? "" : ",") + std::string(to_string(a));
  return out.empty() ? "none" : out;
}

bool is_catalog_preconditional(const WitnessEntry& e) {
  return e.doc.op && e.doc.lattice->size() >= 2 && e.doc.lattice->size() <= 8 && is_preconditional(*e.doc.op);
}

// Criteria -----------------------------------------------------------------

void independence(const Catalog& cat, Findings& f) {
  const auto chain2 = cat.op("fact1-p1").lattice_ptr();
  const auto constant = [&](Elem v) {
    return ConditionalOp::from_function(chain2, [v](Elem, Elem) { return v; });
  };
  f.expect(cat.op("fact1-p1") == constant(1), "fact1-p1 is not the constant-1 table");
  f.expect(cat.op("fact1-p2") == constant(0), "fact1-p2 is not the constant-0 table");
  f.expect(cat.op("fact1-p3") == ConditionalOp::from_function(chain2, [](Elem, Elem b) { return b; }),
           "fact1-p3 is not a->b = b");
  f.expect(cat.op("fact1-p4").lattice().size() == 3 && cat.op("fact1-p5").lattice().size() == 3,
           "axiom 4 and 5 witnesses must live on the 3-chain");
  const char* entries[] = {"fact1-p1", "fact1-p2", "fact1-p3", "fact1-p4", "fact1-p5"};
  for (std::size_t i = 0; i < 5; ++i) {
    const auto fails = failing(cat.op(entries[i]), kPreconditionalAxioms);
    f.expect(fails == std::vector<AxiomId>{kPreconditionalAxioms[i]},
             std::string(entries[i]) + " fails " + names(fails));
  }
  const auto& p4 = cat.op("fact1-p4");
  const auto& l3 = p4.lattice();
  const auto zero = l3.find("0"), one = l3.find("1");
  bool listed = false;
  if (zero && one)
    for (const auto& c : all_counterexamples(p4, AxiomId::P4))
      listed = listed || c.vars == std::array<Elem, 3>{*zero, *one, *zero};
  f.expect(listed, "fact1-p4 does not fail P4 at (0,1,0)");
  f.note("each witness fails exactly its own axiom; P4 fails at (0,1,0)");
}

void mp_wm(const Catalog& cat, Findings& f) {
  const std::vector<AxiomId> base(kPreconditionalAxioms.begin(), kPreconditionalAxioms.end());
  const auto& mp = cat.op("mp-independence");
  auto with = [&](AxiomId extra) {
    auto v = base;
    v.push_back(extra);
    return v;
  };
  f.expect(check_axioms(mp, with(AxiomId::WM)).all_pass(), "mp-independence: P1..P5+WM do not all hold");
  f.expect(fails_at(mp, AxiomId::MP, {"b", "a"}), "mp-independence: MP does not fail first at (b,a)");

  const auto& wm = cat.op("wm-independence");
  const auto meet = ConditionalOp::from_function(wm.lattice_ptr(), [&](Elem a, Elem b) { return wm.lattice().meet(a, b); });
  f.expect(wm == meet, "wm-independence is not a->b = a meet b");
  f.expect(check_axioms(wm, with(AxiomId::MP)).all_pass(), "wm-independence: P1..P5+MP do not all hold");
  f.expect(fails_at(wm, AxiomId::WM, {"0", "1"}), "wm-independence: WM does not fail first at (0,1)");
  f.note("MP fails at (b,a); WM fails at (0,1)");
}

void heyting_independence(const Catalog& cat, Findings& f) {
  const std::vector<AxiomId> four = {AxiomId::P3, AxiomId::P4, AxiomId::MP, AxiomId::WM};
  const std::pair<const char*, AxiomId> witnesses[] = {
      {"fact1-p3", AxiomId::P3}, {"heyting-p4", AxiomId::P4}, {"fact1-p1", AxiomId::MP}, {"fact1-p2", AxiomId::WM}};
  for (const auto& [name, axiom] : witnesses) {
    const auto fails = failing(cat.op(name), four);
    f.expect(fails == std::vector<AxiomId>{axiom}, std::string(name) + " fails " + names(fails) + " among P3,P4,MP,WM");
  }
  const auto& p4 = cat.op("heyting-p4");
  const auto expected = ConditionalOp::from_function(p4.lattice_ptr(), [](Elem x, Elem y) -> Elem { return x == y ? 2 : y; });
  f.expect(p4 == expected, "heyting-p4 is not x->y = (x = y ? 1 : y)");
  f.note("four witnesses separate P3, P4, MP and WM");
}

void heyting_residuation(Findings& f) {
  const auto chain = std::make_shared<const FiniteLattice>(make_chain(3));
  const std::vector<AxiomId> second = {AxiomId::P1, AxiomId::P2, AxiomId::P3, AxiomId::P4,
                                       AxiomId::P5, AxiomId::MP, AxiomId::WM};
  const std::vector<AxiomId> third = {AxiomId::P3, AxiomId::P4, AxiomId::MP, AxiomId::WM};
  std::size_t count = 0;
  std::size_t disagreements = 0;
  std::vector<Elem> table(9, 0);
  for (int code = 0; code < 19683; ++code) {
    int c = code;
    for (auto& cell : table) {
      cell = static_cast<Elem>(c % 3);
      c /= 3;
    }
    const ConditionalOp op(chain, table);
    const bool residuated = satisfies_residuation(op);
    const bool pre = check_axioms(op, second).all_pass();
    const bool weak = check_axioms(op, third).all_pass();
    if (residuated != pre || pre != weak) ++disagreements;
    if (residuated) {
      ++count;
      f.expect(op == heyting_residual(chain), "a residuated table differs from the Heyting residual");
    }
  }
  f.expect(disagreements == 0, std::to_string(disagreements) + " tables classified differently");
  f.expect(count == 1, std::to_string(count) + " residuated tables, expected 1");
  f.note("19683 tables, " + std::to_string(count) + " selected by all three conditions");
}

void relframe(const Catalog& cat, Findings& f, const FrameEntry& frame) {
  const FixpointLattice fp = fixpoints(frame.doc.frame);
  const auto& expected = cat.op("relframe-lattice");
  const auto& lat = expected.lattice();
  f.expect(fp.size() == 7, std::to_string(fp.size()) + " fixpoints, expected 7");
  if (fp.size() != lat.size()) return;
  std::size_t order = 0;
  std::size_t arrows = 0;
  for (Elem a = 0; a < lat.size(); ++a)
    for (Elem b = 0; b < lat.size(); ++b) {
      if (fp.lattice()->leq(a, b) == lat.leq(a, b)) ++order;
      if (fp.arrow_op()(a, b) == expected(a, b)) ++arrows;
    }
  f.expect(order == 49, "order differs in " + std::to_string(49 - order) + " places");
  f.expect(arrows == 49, std::to_string(arrows) + " of 49 arrow entries match");
  f.note("7 fixpoints, " + std::to_string(arrows) + "/49 entries match");
}

void sasaki(const Catalog& cat, Findings& f) {
  const auto& m4 = cat.entry("m4-sasaki");
  const auto& l4 = *m4.doc.lattice;
  const auto neg4 = Orthocomplement::make(*m4.doc.neg);
  const auto s4 = sasaki_hook(neg4);
  f.expect(s4 == *m4.doc.op, "m4-sasaki table is not the Sasaki hook");
  const Elem a = el(l4, "a");
  const Elem c = el(l4, "c");
  f.expect(neg4(s4(a, c)) == a, "on M4, not(a->c) != a");
  f.expect(s4(a, neg4(c)) == neg4(a), "on M4, a->not c != not a");
  f.expect(!l4.leq(neg4(s4(a, c)), s4(a, neg4(c))), "on M4, negation import holds at (a,c)");

  const auto& o8 = cat.entry("nonnormal-sasaki");
  const auto& l8 = *o8.doc.lattice;
  const auto s8 = sasaki_hook(Orthocomplement::make(*o8.doc.neg));
  f.expect(s8 == *o8.doc.op, "nonnormal-sasaki table is not the Sasaki hook");
  const Elem a8 = el(l8, "a");
  const Elem b8 = el(l8, "b");
  const Elem c8 = el(l8, "c");
  f.expect(l8.meet(s8(a8, b8), s8(a8, c8)) == l8.top(), "on O8, (a->b) meet (a->c) != 1");
  f.expect(s8(a8, l8.meet(b8, c8)) == el(l8, "~a"), "on O8, a->(b meet c) != ~a");

  std::size_t ortho = 0;
  for (const auto& e : cat.all()) {
    if (!e.doc.neg) continue;
    ++ortho;
    const auto hook = sasaki_hook(Orthocomplement::make(*e.doc.neg));
    f.expect(is_preconditional(hook), e.name + ": Sasaki hook is not a preconditional");
  }
  f.expect(ortho >= 4, "only " + std::to_string(ortho) + " catalog ortholattices");

  f.expect(is_orthomodular(neg4).orthomodular, "M4 judged not orthomodular");
  const auto o6 = is_orthomodular(Orthocomplement::make(*cat.entry("o6-sasaki").doc.neg));
  f.expect(!o6.orthomodular && o6.law_witness && o6.sasaki_mp_witness, "O6 judged orthomodular");
  f.note("negation import and normality fail as stated; " + std::to_string(ortho) + " ortholattices checked");
}

void normality(const Catalog& cat, Findings& f) {
  const auto& op = cat.op("nonnormal-proto");
  const auto& l = op.lattice();
  const std::vector<AxiomId> proto = {AxiomId::P1, AxiomId::P2, AxiomId::P3, AxiomId::P4,
                                      AxiomId::P5, AxiomId::WM, AxiomId::SEMI};
  f.expect(l.size() == 6, "witness lattice has " + std::to_string(l.size()) + " elements");
  f.expect(check_axioms(op, proto).all_pass(), "proto-Heyting checks fail");
  f.expect(classify(op).label == ClassLabel::ProtoHeyting, "not classified ProtoHeyting");
  const Elem a = el(l, "a");
  const Elem d = el(l, "d");
  f.expect(op(a, d) == d, "a->d != d");
  for (Elem x = 0; x < l.size(); ++x) {
    f.expect(op(l.top(), x) == x, "1->x != x");
    if (x != l.bottom()) f.expect(op(x, l.bottom()) == l.bottom(), "x->0 != 0 for x != 0");
  }
  f.expect(fails_at(op, AxiomId::NORM, {"a", "b", "c"}), "NORM does not fail first at (a,b,c)");
  f.note("proto-Heyting; NORM fails at (a,b,c)");
}

void fi_representation(const Catalog& cat, Findings& f) {
  std::size_t count = 0;
  for (const auto& e : cat.all()) {
    if (!is_catalog_preconditional(e)) continue;
    ++count;
    const auto report = verify_fi_embedding(*e.doc.op);
    f.expect(report.embedding.ok(), e.name + ": " + report.embedding.failure);
    f.expect(report.compact_open_image, e.name + ": image differs from the compact open fixpoints");
    const auto space = check_space_conditions(as_space(build_fi_space(*e.doc.op)));
    f.expect(space.all_pass(), e.name + ": space conditions fail");
  }
  f.expect(count >= 10, "only " + std::to_string(count) + " catalog preconditionals");
  f.note(std::to_string(count) + " preconditionals embedded");
}

void pair_frame(const Catalog& cat, Findings& f) {
  std::size_t count = 0;
  std::vector<std::string> fallback;
  for (const auto& e : cat.all()) {
    if (!is_catalog_preconditional(e)) continue;
    ++count;
    const auto report = verify_pair_embedding(*e.doc.op);
    f.expect(report.verified(), e.name + ": no isomorphism (" + report.candidate.failure + ")");
    if (report.searched) fallback.push_back(e.name);
  }
  f.expect(count >= 10, "only " + std::to_string(count) + " catalog preconditionals");
  std::string fb;
  for (const auto& n : fallback) fb += (fb.empty() ? "" : ",") + n;
  f.note(std::to_string(count) + " verified; search fallback: " + (fb.empty() ? "none" : fb));
}

void selection(const Catalog& cat, Findings& f) {
  const auto order = from_well_order({"0", "1", "2"}, {0, 1, 2});
  f.expect(check_frame(order).all_pass(), "well-order frame fails a frame property");

  const auto& op = cat.op("b3-wellorder");
  const BooleanSelection bs = ba_to_selection(op);
  const auto& lat = op.lattice();
  f.expect(bs.frame == from_well_order(bs.frame.names(), {0, 1, 2}),
           "recovered frame is not the well-order on the atoms");
  std::vector<Elem> transported(lat.size() * lat.size());
  const WorldSet full = bs.frame.all();
  for (WorldSet s = 0; s <= full; ++s)
    for (WorldSet t = 0; t <= full; ++t)
      transported[bs.mask_to_element[s] * lat.size() + bs.mask_to_element[t]] =
          bs.mask_to_element[arrow_selection(bs.frame, s, t)];
  f.expect(ConditionalOp(op.lattice_ptr(), transported) == op, "round trip changes the table");

  const auto& dense = catalog_selection_frame("density-failure").doc.frame;
  const auto props = check_frame(dense);
  f.expect(props.success.pass && props.centering.pass && props.functionality.pass,
           "density-failure frame fails a property other than strong density");
  f.expect(!props.strong_density.pass, "density-failure frame is strongly dense");
  const auto sel = selection_op(dense);
  const auto fails = failing(sel, kPreconditionalAxioms);
  f.expect(fails == std::vector<AxiomId>{AxiomId::P5}, "density-failure conditional fails " + names(fails));
  f.note("well-order frame sound; round trip exact; density-failure violates P5 only");
}

void probabilistic(const SuiteOptions& options, Findings& f) {
  const auto space = ConfidenceSpace::standard();
  const auto w = standard_normality_witness();
  ProbVerifyOptions po;
  po.samples = options.prob_samples;
  po.seed = options.seed;
  po.priority_triples = {w};
  const AxiomReport report = verify_axioms(space, po);
  for (AxiomId a : {AxiomId::P1, AxiomId::P2, AxiomId::P3, AxiomId::P4, AxiomId::P5, AxiomId::MP})
    f.expect(report.passes(a), std::string(to_string(a)) + " has a violation");
  for (AxiomId a : {AxiomId::P1, AxiomId::P2, AxiomId::P3, AxiomId::MP}) {
    const auto* r = report.find(a);
    f.expect(r && !r->sampled, std::string(to_string(a)) + " was not exhaustive");
  }
  const auto* p2 = report.find(AxiomId::P2);
  f.expect(p2 && p2->instances == (std::uint64_t{1} << 22), "P2 did not cover all 2^11 x 2^11 pairs");
  const auto* norm = report.find(AxiomId::NORM);
  f.expect(norm && !norm->pass && norm->counterexample &&
               norm->counterexample->vars == std::array<Elem, 3>{static_cast<Elem>(w[0]), static_cast<Elem>(w[1]),
                                                                 static_cast<Elem>(w[2])},
           "NORM does not fail at the expected triple");
  const WorldSet ab = arrow_prob(space, w[0], w[1]);
  const WorldSet ac = arrow_prob(space, w[0], w[2]);
  const WorldSet abc = arrow_prob(space, w[0], w[1] & w[2]);
  f.expect((ab & ac & 1U) && !(abc & 1U), "world 0 does not separate the NORM sides");
  const auto* p4 = report.find(AxiomId::P4);
  f.note("zero violations; P4 checked on " + std::to_string(p4 ? p4->instances : 0) + " triples; NORM fails at world 0");
}

void search_criterion(Findings& f) {
  const auto start = std::chrono::steady_clock::now();
  for (AxiomId target : kPreconditionalAxioms) {
    std::vector<AxiomId> others;
    for (AxiomId a : kPreconditionalAxioms)
      if (a != target) others.push_back(a);
    const auto mw = minimal_witness(others, {target});
    const std::string name(to_string(target));
    f.expect(mw.witness.has_value(), "no witness for " + name);
    if (!mw.witness) continue;
    f.expect(mw.witness->lattice().size() <= 3, name + " witness needs " + std::to_string(mw.witness->lattice().size()) + " elements");
    f.expect(check_axioms(*mw.witness, others).all_pass() && !check_axiom(*mw.witness, target).pass,
             name + " witness does not re-verify");
  }
  const double minimal_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  f.expect(minimal_seconds <= 10.0, "minimal witnesses took " + std::to_string(minimal_seconds) + "s");

  const std::vector<AxiomId> pool = {AxiomId::P1, AxiomId::P2, AxiomId::P3, AxiomId::P4,
                                     AxiomId::P5, AxiomId::MP, AxiomId::WM};
  const auto chain = lattice_inventory()[1];
  std::vector<ConditionalOp> tables;
  std::vector<std::uint32_t> profiles;
  for (int code = 0; code < 16; ++code) {
    ConditionalOp op(chain, {static_cast<Elem>(code >> 3 & 1), static_cast<Elem>(code >> 2 & 1),
                             static_cast<Elem>(code >> 1 & 1), static_cast<Elem>(code & 1)});
    std::uint32_t profile = 0;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (check_axiom(op, pool[i]).pass) profile |= 1U << i;
    tables.push_back(std::move(op));
    profiles.push_back(profile);
  }
  std::size_t specs = 0;
  std::size_t mismatches = 0;
  int spec_code_limit = 1;
  for (std::size_t i = 0; i < pool.size(); ++i) spec_code_limit *= 3;
  for (int code = 0; code < spec_code_limit; ++code) {
    SearchSpec spec;
    spec.lattice = chain;
    spec.find_all = true;
    std::uint32_t req = 0;
    std::uint32_t forb = 0;
    int c = code;
    for (std::size_t i = 0; i < pool.size(); ++i, c /= 3) {
      if (c % 3 == 1) {
        spec.require.push_back(pool[i]);
        req |= 1U << i;
      } else if (c % 3 == 2) {
        spec.forbid.push_back(pool[i]);
        forb |= 1U << i;
      }
    }
    std::vector<ConditionalOp> expected;
    for (std::size_t t = 0; t < tables.size(); ++t)
      if ((profiles[t] & req) == req && (profiles[t] & forb) == 0) expected.push_back(tables[t]);
    const auto result = find_witness(spec);
    ++specs;
    if (!result.exhausted || result.witnesses != expected) ++mismatches;
  }
  f.expect(mismatches == 0, std::to_string(mismatches) + " of " + std::to_string(specs) + " 2-chain specs differ from brute force");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", minimal_seconds);
  f.note(std::string("five minimal witnesses in ") + buf + "s; " + std::to_string(specs) + " 2-chain specs match brute force");
}

RelationalFrame random_frame(std::mt19937_64& rng, std::size_t index) {
  std::uniform_int_distribution<std::size_t> size_dist(1, 8);
  std::uniform_real_distribution<double> density_dist(0.0, 1.0);
  const std::size_t m = size_dist(rng);
  const double density = density_dist(rng);
  std::bernoulli_distribution edge(density);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("p" + std::to_string(i));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t y = 0; y < m; ++y)
    for (std::size_t x = 0; x < m; ++x)
      if (edge(rng)) edges.emplace_back(y, x);
  return RelationalFrame("random-" + std::to_string(index), std::move(names), edges);
}

void properties(const Catalog& cat, const SuiteOptions& options, Findings& f) {
  std::mt19937_64 rng(options.seed);
  std::size_t closure_violations = 0;
  std::size_t induced_failures = 0;
  for (std::size_t i = 0; i < options.random_frames; ++i) {
    const RelationalFrame frame = random_frame(rng, i);
    const std::size_t m = frame.size();
    std::vector<PointSet> closed(std::size_t{1} << m);
    for (std::size_t s = 0; s < closed.size(); ++s) closed[s] = closure(frame, PointSet(m, s));
    for (std::size_t s = 0; s < closed.size(); ++s) {
      const PointSet set(m, s);
      if (!set.is_subset_of(closed[s])) ++closure_violations;
      if (closed[closed[s].to_ulong()] != closed[s]) ++closure_violations;
      for (std::size_t x = 0; x < m; ++x)
        if (!closed[s].is_subset_of(closed[s | (std::size_t{1} << x)])) ++closure_violations;
    }
    if (!check_induced_preconditional(frame).all_pass()) ++induced_failures;
  }
  f.expect(closure_violations == 0, std::to_string(closure_violations) + " closure law violations");
  f.expect(induced_failures == 0, std::to_string(induced_failures) + " frames induce a non-preconditional");

  std::size_t negations = 0;
  for (const auto& e : cat.all()) {
    if (!e.doc.op || !is_preconditional(*e.doc.op)) continue;
    ++negations;
    f.expect(check_precomplementation(derive_negation(*e.doc.op)).all_pass(), e.name + ": derived negation is not a precomplementation");
  }
  f.note(std::to_string(options.random_frames) + " random frames, " + std::to_string(negations) + " derived negations, zero violations");
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "independence", "preconditional axioms are mutually independent", 1},
      {2, "mp-wm", "modus ponens and weak monotonicity are independent", 1},
      {3, "heyting-independence", "axioms 3, 4, MP and WM are mutually independent", 1},
      {4, "heyting-residuation", "Heyting implications: three characterizations agree", 10},
      {5, "relframe", "fixpoints and induced conditional of the example frame", 1},
      {6, "sasaki", "Sasaki hook: negation import, normality, orthomodularity", 1},
      {7, "normality", "proto-Heyting implication that is not normal", 1},
      {8, "fi-representation", "filter-ideal space representation", 30},
      {9, "pair-frame", "pair frame representation", 60},
      {10, "selection", "selection frames and Boolean algebras", 5},
      {11, "probabilistic", "probabilistic conditional", 300},
      {12, "search", "automated independence witnesses", 60},
      {13, "properties", "random frames and derived negations", 60},
  };
  return list;
}

bool matches(const Criterion& criterion, const std::string& filter) {
  return filter.empty() || criterion.key.find(filter) != std::string::npos ||
         criterion.anchor.find(filter) != std::string::npos || std::to_string(criterion.number) == filter;
}

std::vector<CriterionResult> run(const SuiteOptions& options) {
  const Catalog cat(options.catalog ? *options.catalog : catalog_entries());
  std::vector<CriterionResult> results;
  for (const Criterion& c : criteria()) {
    if (!matches(c, options.filter)) continue;
    Findings f;
    const auto start = std::chrono::steady_clock::now();
    try {
      switch (c.number) {
        case 1: independence(cat, f); break;
        case 2: mp_wm(cat, f); break;
        case 3: heyting_independence(cat, f); break;
        case 4: heyting_residuation(f); break;
        case 5: relframe(cat, f, catalog_frame("relframe")); break;
        case 6: sasaki(cat, f); break;
        case 7: normality(cat, f); break;
        case 8: fi_representation(cat, f); break;
        case 9: pair_frame(cat, f); break;
        case 10: selection(cat, f); break;
        case 11: probabilistic(options, f); break;
        case 12: search_criterion(f); break;
        case 13: properties(cat, options, f); break;
      }
    } catch (const std::exception& e) {
      f.expect(false, e.what());
    }
    CriterionResult r;
    r.criterion = c;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.within_time = r.seconds <= c.limit_seconds;
    r.pass = f.ok() && r.within_time;
    r.detail = f.text();
    if (!r.within_time) r.detail += (r.detail.empty() ? "" : "; ") + std::string("time limit exceeded");
    if (options.on_result) options.on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::vector<EntryResult> check_catalog(const std::vector<WitnessEntry>& entries) {
  std::vector<EntryResult> out;
  for (const auto& e : entries) {
    EntryResult r{e.name, true, {}};
    if (!e.doc.op) {
      r.detail = "no operation";
      out.push_back(std::move(r));
      continue;
    }
    std::vector<std::string> problems;
    try {
      const Classification cls = classify(*e.doc.op);
      for (const auto& [axiom, expected] : e.doc.expect) {
        const auto* res = cls.profile.find(axiom);
        if (!res || res->pass != expected) {
          std::string p = std::string(to_string(axiom)) + (expected ? " expected pass" : " expected fail");
          if (res && res->counterexample) p += " at " + vars_text(e.doc.op->lattice(), *res->counterexample);
          problems.push_back(p);
        }
      }
      if (e.doc.expected_class && *e.doc.expected_class != cls.label) {
        problems.push_back("class " + std::string(to_string(cls.label)) + ", expected " +
                           std::string(to_string(*e.doc.expected_class)));
      }
      if (e.doc.neg && derive_negation(*e.doc.op) != *e.doc.neg) problems.push_back("recorded negation differs from a->0");
    } catch (const std::exception& ex) {
      problems.push_back(ex.what());
    }
    r.pass = problems.empty();
    for (const auto& p : problems) r.detail += (r.detail.empty() ? "" : "; ") + p;
    if (r.pass) r.detail = std::to_string(e.doc.expect.size()) + " expectations met";
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  char head[160];
  std::snprintf(head, sizeof head, "[%s] %02d %-20s %8.3fs (limit %gs)", r.pass ? "PASS" : "FAIL", r.criterion.number,
                r.criterion.key.c_str(), r.seconds, r.criterion.limit_seconds);
  return std::string(head) + "  " + r.criterion.anchor + ": " + r.detail;
}

}  // namespace precond::suite
