#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "precond/catalog.hpp"
#include "precond/error.hpp"
#include "precond/probabilistic.hpp"
#include "precond/representation.hpp"
#include "precond/search.hpp"
#include "suite.hpp"

namespace fs = std::filesystem;
using namespace precond;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kMalformed = 2 };

struct Globals {
  std::string dot_file;
  std::string report_file;
  std::uint64_t seed = 1;
  std::uint64_t limit = 0;
};

/// Line-oriented key=value records, one check per line.
class Report {
 public:
  void add(std::initializer_list<std::pair<std::string, std::string>> fields) {
    std::string line;
    for (const auto& [k, v] : fields) {
      std::string value = v;
      std::replace(value.begin(), value.end(), ' ', '_');
      line += (line.empty() ? "" : " ") + k + "=" + value;
    }
    lines_.push_back(line);
  }

  void write(const std::string& path) const {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    for (const auto& l : lines_) out << l << '\n';
  }

 private:
  std::vector<std::string> lines_;
};

struct Source {
  std::string label;
  std::string text;
};

/// A path, or `@name` for a built-in catalog file.
Source read_source(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    const std::string stem = arg.substr(1);
    for (const auto& [name, text] : catalog_sources())
      if (name == stem) return {arg, std::string(text)};
    throw std::runtime_error("no catalog file named " + stem);
  }
  std::ifstream in(arg);
  if (!in) throw std::runtime_error("cannot read " + arg);
  std::ostringstream buf;
  buf << in.rdbuf();
  return {arg, buf.str()};
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string frame_dot(const RelationalFrame& frame) {
  std::ostringstream out;
  out << "digraph \"" << frame.name() << "\" {\n";
  for (std::size_t x = 0; x < frame.size(); ++x) out << "  p" << x << " [label=\"" << frame.names()[x] << "\"];\n";
  for (auto [y, x] : frame.edges()) out << "  p" << y << " -> p" << x << ";\n";
  out << "}\n";
  return out.str();
}

std::string selection_dot(const SelectionFrame& frame) {
  std::ostringstream out;
  out << "digraph selection {\n";
  for (std::size_t w = 0; w < frame.size(); ++w) out << "  w" << w << " [label=\"" << frame.names()[w] << "\"];\n";
  for (WorldSet a = 0; a <= frame.all(); ++a)
    for (std::size_t w = 0; w < frame.size(); ++w)
      for (std::size_t v = 0; v < frame.size(); ++v)
        if (frame.related(a, w, v) && w != v)
          out << "  w" << w << " -> w" << v << " [label=\"" << frame.format_set(a) << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string vars_text(const FiniteLattice& l, const Counterexample& cx) {
  std::string out = "(";
  for (int i = 0; i < cx.arity; ++i) out += (i ? "," : "") + l.name_of(cx.vars[i]);
  return out + ")";
}

const ConditionalOp& require_op(const LatticeDocument& doc) {
  if (!doc.op) throw Error(ErrorCode::InvalidSpec, "the file defines no operation (add an `op ->` line)");
  return *doc.op;
}

// Prints the profile and compares it with recorded expectations; returns
// the number of mismatches.
int print_profile(const LatticeDocument& doc, const AxiomReport& profile, std::size_t listed, Report& report) {
  const auto& l = *doc.lattice;
  int mismatches = 0;
  for (const auto& r : profile.results) {
    std::string witness;
    std::cout << "  " << std::left << std::setw(8) << to_string(r.axiom) << (r.pass ? "pass" : "FAIL");
    if (r.counterexample) {
      const auto all = all_counterexamples(*doc.op, r.axiom, listed);
      for (const auto& cx : all) witness += (witness.empty() ? "" : ";") + vars_text(l, cx);
      std::cout << "  at";
      for (std::size_t i = 0; i < all.size(); ++i) std::cout << (i ? ", " : " ") << describe_counterexample(l, all[i]);
    }
    std::string expected = "-";
    for (const auto& [axiom, pass] : doc.expect) {
      if (axiom != r.axiom) continue;
      expected = pass ? "pass" : "fail";
      if (pass != r.pass) {
        ++mismatches;
        std::cout << "  (expected " << expected << ")";
      }
    }
    std::cout << '\n';
    report.add({{"check", std::string(to_string(r.axiom))},
                {"result", r.pass ? "pass" : "fail"},
                {"expected", expected},
                {"witness", witness.empty() ? "-" : witness}});
  }
  return mismatches;
}

int cmd_check(const std::string& file, const Globals& g, Report& report) {
  const Source src = read_source(file);
  const LatticeDocument doc = parse_lattice_document(src.text);
  const ConditionalOp& op = require_op(doc);
  std::cout << "lattice " << doc.lattice->name() << " (" << doc.lattice->size() << " elements)\n"
            << format_table(op);
  const AxiomReport profile = check_axioms(op, kAllAxioms);
  const int mismatches = print_profile(doc, profile, g.limit ? g.limit : 8, report);
  write_text(g.dot_file, hasse_dot(*doc.lattice));
  if (doc.expect.empty()) {
    const bool pre = std::all_of(kPreconditionalAxioms.begin(), kPreconditionalAxioms.end(),
                                 [&](AxiomId a) { return profile.passes(a); });
    std::cout << (pre ? "preconditional\n" : "not a preconditional\n");
    return pre ? kOk : kCheckFailed;
  }
  std::cout << (mismatches ? std::to_string(mismatches) + " expectation(s) not met\n" : "all expectations met\n");
  return mismatches ? kCheckFailed : kOk;
}

int cmd_classify(const std::string& file, const Globals& g, Report& report) {
  const Source src = read_source(file);
  const LatticeDocument doc = parse_lattice_document(src.text);
  const Classification cls = classify(require_op(doc));
  std::cout << to_string(cls.label) << '\n';
  std::string expected = doc.expected_class ? std::string(to_string(*doc.expected_class)) : "-";
  report.add({{"check", "class"}, {"result", std::string(to_string(cls.label))}, {"expected", expected}});
  write_text(g.dot_file, hasse_dot(*doc.lattice));
  if (doc.expected_class && *doc.expected_class != cls.label) {
    std::cout << "expected " << expected << '\n';
    return kCheckFailed;
  }
  return kOk;
}

int cmd_frame(const std::string& file, const Globals& g, Report& report) {
  const Source src = read_source(file);
  const FrameDocument doc = parse_frame_document(src.text);
  const auto& frame = doc.frame;
  FrameLimits limits;
  if (g.limit) limits.exhaustive_points = g.limit;
  const FixpointLattice fp = frame.size() <= limits.exhaustive_points ? fixpoints(frame, limits)
                                                                      : fixpoints_by_generation(frame, 4096, limits);
  std::cout << "frame " << frame.name() << ": " << frame.size() << " points, " << fp.size() << " fixpoints\n";
  for (Elem e = 0; e < fp.size(); ++e) std::cout << "  " << e << "  " << format_set(frame, fp.set_of(e)) << '\n';
  std::cout << format_table(fp.arrow_op());
  const AxiomReport pre = check_preconditional(fp.arrow_op());
  for (const auto& r : pre.results)
    report.add({{"check", std::string(to_string(r.axiom))}, {"result", r.pass ? "pass" : "fail"}});
  report.add({{"check", "fixpoints"}, {"result", std::to_string(fp.size())}});
  std::cout << (pre.all_pass() ? "induced conditional is a preconditional\n"
                               : "induced conditional is NOT a preconditional\n");
  write_text(g.dot_file, frame_dot(frame));
  return pre.all_pass() ? kOk : kCheckFailed;
}

int cmd_represent(const std::string& file, const Globals& g, Report& report) {
  const Source src = read_source(file);
  const LatticeDocument doc = parse_lattice_document(src.text);
  const ConditionalOp& op = require_op(doc);
  const auto fi = verify_fi_embedding(op);
  const auto space = check_space_conditions(as_space(build_fi_space(op)));
  const auto pair = verify_pair_embedding(op);
  const PairFrame pf = build_pair_frame(op);

  std::cout << "filter-ideal space: " << build_fi_space(op).points.size() << " points, "
            << fi.compact_open_count << " compact open fixpoints\n"
            << "  embedding " << (fi.ok() ? "verified" : "FAILED " + fi.embedding.failure) << '\n'
            << "  separation " << space.separation << ", closure/basis " << space.closed_and_basis
            << ", realization " << space.realization << ", relation " << space.relation_matches << '\n';
  std::cout << "pair frame: " << pf.points.size() << " points, " << pair.fixpoint_count << " fixpoints\n"
            << "  candidate map " << (pair.candidate.ok() ? "verified" : "rejected: " + pair.candidate.failure)
            << '\n';
  if (pair.searched) std::cout << "  isomorphism search " << (pair.verified() ? "found a map" : "found nothing") << '\n';
  report.add({{"check", "fi-embedding"}, {"result", fi.ok() ? "pass" : "fail"}});
  report.add({{"check", "space-conditions"}, {"result", space.all_pass() ? "pass" : "fail"}});
  report.add({{"check", "pair-embedding"},
              {"result", pair.verified() ? "pass" : "fail"},
              {"path", pair.searched ? "search" : "candidate"}});
  write_text(g.dot_file, frame_dot(pf.frame));
  return fi.ok() && space.all_pass() && pair.verified() ? kOk : kCheckFailed;
}

void print_verdict(const char* name, const PropertyVerdict& v, const SelectionFrame& f, Report& report) {
  std::cout << "  " << std::left << std::setw(16) << name << (v.pass ? "pass" : "FAIL");
  if (v.witness) {
    std::cout << "  A=" << f.format_set(v.witness->a) << " w=" << f.names()[v.witness->w]
              << " v=" << f.names()[v.witness->v];
    if (std::string(name) == "strong-density") std::cout << " A∩B=" << f.format_set(v.witness->c);
  }
  std::cout << '\n';
  report.add({{"check", name}, {"result", v.pass ? "pass" : "fail"}});
}

int cmd_selection(const std::string& file, const Globals& g, Report& report) {
  const Source src = read_source(file);
  const std::string kind = document_kind(src.text);
  SelectionFrame frame(std::vector<std::string>{});
  if (kind == "lattice") {
    const LatticeDocument doc = parse_lattice_document(src.text);
    const BooleanSelection bs = ba_to_selection(require_op(doc));
    frame = bs.frame;
    std::cout << "selection frame on the atoms";
    for (Elem a : bs.atoms) std::cout << ' ' << doc.lattice->name_of(a);
    std::cout << " (round trip verified)\n";
  } else {
    frame = parse_selection_document(src.text).frame;
    std::cout << "selection frame with " << frame.size() << " worlds\n";
  }
  const FramePropertyReport props = check_frame(frame);
  print_verdict("success", props.success, frame, report);
  print_verdict("centering", props.centering, frame, report);
  print_verdict("functionality", props.functionality, frame, report);
  print_verdict("strong-density", props.strong_density, frame, report);
  const ConditionalOp op = selection_op(frame);
  const AxiomReport pre = check_preconditional(op);
  std::cout << "induced conditional on the powerset:\n";
  for (const auto& r : pre.results) {
    std::cout << "  " << std::left << std::setw(16) << to_string(r.axiom) << (r.pass ? "pass" : "FAIL");
    if (r.counterexample) std::cout << "  at " << describe_counterexample(op.lattice(), *r.counterexample);
    std::cout << '\n';
    report.add({{"check", std::string(to_string(r.axiom))}, {"result", r.pass ? "pass" : "fail"}});
  }
  write_text(g.dot_file, selection_dot(frame));
  return props.all_pass() && pre.all_pass() ? kOk : kCheckFailed;
}

std::vector<AxiomId> parse_axiom_list(const std::string& text) {
  std::vector<AxiomId> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty()) continue;
    const auto a = parse_axiom(item);
    if (!a) throw ParseError(0, "unknown axiom " + item);
    out.push_back(*a);
  }
  return out;
}

LatticePtr search_lattice(const std::string& arg) {
  for (const auto& l : lattice_inventory())
    if (l->name() == arg) return l;
  return parse_lattice_document(read_source(arg).text).lattice;
}

struct SearchArgs {
  std::string lattice;
  std::string require;
  std::string forbid;
  bool all = false;
  bool minimal = false;
  std::uint64_t budget = 50'000'000;
};

int cmd_search(const SearchArgs& args, const Globals& g, Report& report) {
  const auto require = parse_axiom_list(args.require);
  const auto forbid = parse_axiom_list(args.forbid);
  const std::uint64_t budget = g.limit ? g.limit : args.budget;
  if (args.minimal || args.lattice.empty()) {
    const MinimalWitness mw = minimal_witness(require, forbid, {}, budget);
    for (const auto& a : mw.attempts) {
      std::cout << "  " << std::left << std::setw(10) << a.lattice << a.nodes << " nodes"
                << (a.exhausted ? ", exhausted" : "") << '\n';
      report.add({{"lattice", a.lattice}, {"nodes", std::to_string(a.nodes)}, {"exhausted", a.exhausted ? "yes" : "no"}});
    }
    if (!mw.witness) {
      std::cout << "no witness on any lattice with at most 5 elements\n";
      return kCheckFailed;
    }
    LatticeDocument doc{mw.witness->lattice_ptr(), mw.witness, std::nullopt, {}, std::nullopt, ""};
    std::cout << serialize(doc);
    write_text(g.dot_file, hasse_dot(mw.witness->lattice()));
    return kOk;
  }
  SearchSpec spec;
  spec.lattice = search_lattice(args.lattice);
  spec.require = require;
  spec.forbid = forbid;
  spec.find_all = args.all;
  spec.node_budget = budget;
  const SearchResult result = find_witness(spec);
  for (const auto& w : result.witnesses) std::cout << format_op_line(w) << '\n';
  std::cout << result.witnesses.size() << " witness(es), " << result.nodes << " nodes"
            << (result.exhausted ? ", space exhausted" : "") << '\n';
  report.add({{"witnesses", std::to_string(result.witnesses.size())},
              {"nodes", std::to_string(result.nodes)},
              {"exhausted", result.exhausted ? "yes" : "no"}});
  write_text(g.dot_file, hasse_dot(*spec.lattice));
  return result.witnesses.empty() ? kCheckFailed : kOk;
}

struct ProbArgs {
  std::uint64_t samples = 1'000'000;
  bool exhaustive = false;
  bool seed_set = false;
  std::uint64_t seed = 1;
};

int cmd_prob(const ProbArgs& args, const Globals& g, Report& report) {
  const auto space = ConfidenceSpace::standard();
  ProbVerifyOptions po;
  po.samples = g.limit ? g.limit : args.samples;
  po.seed = args.seed_set ? args.seed : g.seed;
  po.exhaustive = args.exhaustive;
  po.priority_triples = {standard_normality_witness()};
  const AxiomReport r = verify_axioms(space, po);
  bool ok = true;
  for (const auto& res : r.results) {
    std::cout << "  " << std::left << std::setw(6) << to_string(res.axiom) << (res.pass ? "pass" : "FAIL") << "  "
              << res.instances << (res.sampled ? " sampled" : " exhaustive");
    std::string witness = "-";
    if (res.counterexample) {
      const SelectionFrame names(std::vector<std::string>{"0", "1", "2", "3", "4", "5", "6", "7", "8", "9", "10"});
      witness.clear();
      for (int i = 0; i < res.counterexample->arity; ++i)
        witness += (i ? " " : "") + names.format_set(static_cast<WorldSet>(res.counterexample->vars[i]));
      std::cout << "  at " << witness;
    }
    std::cout << '\n';
    if (res.axiom != AxiomId::NORM && !res.pass) ok = false;
    report.add({{"check", std::string(to_string(res.axiom))},
                {"result", res.pass ? "pass" : "fail"},
                {"instances", std::to_string(res.instances)},
                {"witness", witness}});
  }
  return ok ? kOk : kCheckFailed;
}

std::vector<WitnessEntry> load_catalog_dir(const std::string& dir) {
  std::vector<WitnessEntry> out;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".txt") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& p : files) {
    const Source src = read_source(p.string());
    if (document_kind(src.text) != "lattice") continue;
    try {
      out.push_back({p.stem().string(), parse_lattice_document(src.text)});
    } catch (const ParseError& e) {
      throw ParseError(e.line(), p.string() + ": " + e.what());
    }
  }
  return out;
}

int cmd_demo(const std::string& filter, const std::string& catalog_dir, const Globals& g, Report& report) {
  const std::vector<WitnessEntry> custom = catalog_dir.empty() ? std::vector<WitnessEntry>{} : load_catalog_dir(catalog_dir);
  const auto& entries = catalog_dir.empty() ? catalog_entries() : custom;
  std::vector<std::string> failed;
  if (filter.empty()) {
    for (const auto& r : suite::check_catalog(entries)) {
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << "catalog/" << r.name << "  " << r.detail << '\n';
      report.add({{"entry", r.name}, {"result", r.pass ? "pass" : "fail"}, {"detail", r.detail}});
      if (!r.pass) failed.push_back("catalog/" + r.name);
    }
  }
  suite::SuiteOptions opts;
  opts.filter = filter;
  opts.catalog = &entries;
  opts.seed = g.seed;
  if (g.limit) opts.prob_samples = g.limit;
  opts.on_result = [&](const suite::CriterionResult& r) {
    std::cout << suite::format_line(r) << std::endl;
    report.add({{"criterion", std::to_string(r.criterion.number)},
                {"key", r.criterion.key},
                {"result", r.pass ? "pass" : "fail"},
                {"seconds", std::to_string(r.seconds)}});
    if (!r.pass) failed.push_back(r.criterion.key + " (" + r.detail + ")");
  };
  const auto results = suite::run(opts);
  if (results.empty() && !filter.empty()) {
    std::cerr << "no criterion matches '" << filter << "'\n";
    return kMalformed;
  }
  if (!failed.empty()) {
    std::cout << "FAILED:";
    for (const auto& f : failed) std::cout << ' ' << f;
    std::cout << '\n';
    return kCheckFailed;
  }
  std::cout << "all checks passed\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"precond: conditionals on finite lattices"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--dot", g.dot_file, "Write a Graphviz rendering")->type_name("FILE");
  app.add_option("--report", g.report_file, "Write key=value records, one check per line")->type_name("FILE");
  app.add_option("--seed", g.seed, "Seed for sampled checks");
  app.add_option("--limit", g.limit, "Work limit: search node budget, probabilistic samples, frame size for exhaustive fixpoints or counterexamples listed per axiom");

  std::string file;
  auto* check = app.add_subcommand("check", "Axiom profile of a lattice file");
  check->add_option("file", file, "Lattice file, or @name for a built-in one")->required();
  auto* classify_cmd = app.add_subcommand("classify", "Most specific class of a lattice file");
  classify_cmd->add_option("file", file)->required();
  auto* frame = app.add_subcommand("frame", "Fixpoint lattice of a relational frame");
  frame->add_option("file", file)->required();
  auto* represent = app.add_subcommand("represent", "Verify both frame representations");
  represent->add_option("file", file)->required();
  auto* selection = app.add_subcommand("selection", "Selection frame properties (selframe or Boolean lattice file)");
  selection->add_option("file", file)->required();

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Find an operation table with a given axiom profile");
  search->add_option("--lattice", sa.lattice, "Lattice file, @name or inventory name (e.g. chain-3)");
  search->add_option("--require", sa.require, "Comma-separated axioms that must hold");
  search->add_option("--forbid", sa.forbid, "Comma-separated axioms that must fail");
  search->add_flag("--all", sa.all, "Enumerate every witness");
  search->add_flag("--minimal", sa.minimal, "Search the lattice inventory in size order");
  search->add_option("--budget", sa.budget, "Node budget");

  ProbArgs pa;
  auto* prob = app.add_subcommand("prob", "Probabilistic conditional");
  prob->require_subcommand(1);
  auto* verify = prob->add_subcommand("verify", "Check the axioms on the standard confidence space");
  verify->add_option("--samples", pa.samples, "Sampled triples for P4, P5 and NORM");
  verify->add_flag("--exhaustive", pa.exhaustive, "Enumerate all triples");
  auto* seed_opt = verify->add_option("--seed", pa.seed, "Seed");

  std::string filter;
  std::string catalog_dir;
  auto* demo = app.add_subcommand("demo", "Regression runs");
  demo->require_subcommand(1);
  auto* paper = demo->add_subcommand("paper", "Run the catalog checks and every acceptance criterion");
  paper->add_option("--filter", filter, "Only criteria whose key or anchor contains this text");
  paper->add_option("--catalog", catalog_dir, "Directory of lattice files to use instead of the built-in catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  }

  Report report;
  int code = kOk;
  try {
    if (*check) code = cmd_check(file, g, report);
    else if (*classify_cmd) code = cmd_classify(file, g, report);
    else if (*frame) code = cmd_frame(file, g, report);
    else if (*represent) code = cmd_represent(file, g, report);
    else if (*selection) code = cmd_selection(file, g, report);
    else if (*search) code = cmd_search(sa, g, report);
    else if (*verify) {
      pa.seed_set = seed_opt->count() > 0;
      code = cmd_prob(pa, g, report);
    } else if (*paper) code = cmd_demo(filter, catalog_dir, g, report);
    report.write(g.report_file);
  } catch (const ParseError& e) {
    std::cerr << file << ":" << e.line() << ": " << e.what() << '\n';
    return kMalformed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::NotAPartialOrder:
      case ErrorCode::MissingBound:
      case ErrorCode::NotALattice:
      case ErrorCode::InvalidSpec:
      case ErrorCode::TooLarge:
        return kMalformed;
      default:
        return kCheckFailed;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMalformed;
  }
  return code;
}
