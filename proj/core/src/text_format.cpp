#include "precond/text_format.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "precond/error.hpp"

namespace precond {

namespace {

struct Line {
  int number;
  std::vector<std::string> words;
  std::string rest;  // text after the first word, trimmed
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}, {}};
    for (std::string w; in >> w;) line.words.push_back(w);
    if (line.words.empty()) continue;
    const auto first = raw.find(line.words[0]);
    line.rest = trim(raw.substr(first + line.words[0].size()));
    out.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const auto end = s.find(sep, pos);
    out.push_back(trim(s.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos)));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

std::size_t lookup(const std::map<std::string, std::size_t>& index, const std::string& name, int line,
                   const char* what) {
  auto it = index.find(name);
  if (it == index.end()) throw ParseError(line, std::string("unknown ") + what + " '" + name + "'");
  return it->second;
}

std::map<std::string, std::size_t> index_names(const std::vector<std::string>& names, int line) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!index.emplace(names[i], i).second) throw ParseError(line, "duplicate name '" + names[i] + "'");
  return index;
}

void expect_header(const std::vector<Line>& lines, const char* keyword) {
  if (lines.empty()) throw ParseError(1, std::string("expected '") + keyword + " <name>'");
  const Line& first = lines.front();
  if (first.words[0] != keyword || first.words.size() != 2) {
    throw ParseError(first.number, std::string("expected '") + keyword + " <name>'");
  }
}

std::string join_words(const std::vector<std::string>& words, std::string_view sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += sep;
    out += words[i];
  }
  return out;
}

}  // namespace

std::string document_kind(std::string_view text) {
  const auto lines = split_lines(text);
  return lines.empty() ? std::string() : lines.front().words[0];
}

LatticeDocument parse_lattice_document(std::string_view text, LatticeLimits limits) {
  const auto lines = split_lines(text);
  expect_header(lines, "lattice");
  OrderData data;
  data.name = lines[0].words[1];
  std::map<std::string, std::size_t> index;
  bool have_elements = false;
  bool have_cover = false;
  bool have_leq = false;
  std::vector<const Line*> deferred;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& key = line.words[0];
    if (key == "elements") {
      if (have_elements) throw ParseError(line.number, "duplicate 'elements' line");
      if (line.words.size() < 2) throw ParseError(line.number, "'elements' needs at least one name");
      data.names.assign(line.words.begin() + 1, line.words.end());
      index = index_names(data.names, line.number);
      have_elements = true;
    } else if (key == "cover" || key == "leq") {
      if (!have_elements) throw ParseError(line.number, "'" + key + "' before 'elements'");
      if (line.words.size() != 3) throw ParseError(line.number, "expected '" + key + " <a> <b>'");
      (key == "cover" ? have_cover : have_leq) = true;
      if (have_cover && have_leq) throw ParseError(line.number, "cannot mix 'cover' and 'leq' lines");
      data.pairs.emplace_back(static_cast<Elem>(lookup(index, line.words[1], line.number, "element")),
                              static_cast<Elem>(lookup(index, line.words[2], line.number, "element")));
    } else if (key == "op" || key == "expect" || key == "class" || key == "anchor") {
      deferred.push_back(&line);
    } else {
      throw ParseError(line.number, "unknown directive '" + key + "'");
    }
  }
  if (!have_elements) throw ParseError(lines[0].number, "missing 'elements' line");
  data.kind = have_leq ? OrderData::Kind::Leq : OrderData::Kind::Covers;

  LatticeDocument doc;
  doc.lattice = std::make_shared<const FiniteLattice>(FiniteLattice::validate(data, limits));
  const std::size_t n = data.names.size();
  auto element = [&](const std::string& name, int line) {
    return static_cast<Elem>(lookup(index, name, line, "element"));
  };

  for (const Line* line : deferred) {
    const std::string& key = line->words[0];
    if (key == "op") {
      if (line->words.size() < 2) throw ParseError(line->number, "expected 'op ->' or 'op neg'");
      if (line->words[1] == "->") {
        if (doc.op) throw ParseError(line->number, "duplicate 'op ->' line");
        const auto rows = split(trim(std::string_view(line->rest).substr(2)), ';');
        if (rows.size() != n) {
          throw ParseError(line->number, "expected " + std::to_string(n) + " rows, got " + std::to_string(rows.size()));
        }
        std::vector<Elem> table;
        for (std::size_t r = 0; r < n; ++r) {
          std::istringstream in(rows[r]);
          std::size_t count = 0;
          for (std::string w; in >> w; ++count) table.push_back(element(w, line->number));
          if (count != n) {
            throw ParseError(line->number, "row " + data.names[r] + " has " + std::to_string(count) +
                                               " entries, expected " + std::to_string(n));
          }
        }
        doc.op = ConditionalOp(doc.lattice, std::move(table));
      } else if (line->words[1] == "neg") {
        if (doc.neg) throw ParseError(line->number, "duplicate 'op neg' line");
        if (line->words.size() != n + 2) {
          throw ParseError(line->number, "'op neg' needs " + std::to_string(n) + " entries");
        }
        std::vector<Elem> table;
        for (std::size_t k = 2; k < line->words.size(); ++k) table.push_back(element(line->words[k], line->number));
        doc.neg = UnaryOp(doc.lattice, std::move(table));
      } else {
        throw ParseError(line->number, "expected 'op ->' or 'op neg'");
      }
    } else if (key == "expect") {
      for (std::size_t k = 1; k < line->words.size(); ++k) {
        const std::string& w = line->words[k];
        const auto eq = w.find('=');
        if (eq == std::string::npos) throw ParseError(line->number, "expected AXIOM=pass|fail, got '" + w + "'");
        const auto axiom = parse_axiom(w.substr(0, eq));
        if (!axiom) throw ParseError(line->number, "unknown axiom '" + w.substr(0, eq) + "'");
        const std::string verdict = w.substr(eq + 1);
        if (verdict != "pass" && verdict != "fail") {
          throw ParseError(line->number, "verdict must be pass or fail, got '" + verdict + "'");
        }
        doc.expect.emplace_back(*axiom, verdict == "pass");
      }
    } else if (key == "class") {
      if (line->words.size() != 2) throw ParseError(line->number, "expected 'class <label>'");
      doc.expected_class = parse_class_label(line->words[1]);
      if (!doc.expected_class) throw ParseError(line->number, "unknown class '" + line->words[1] + "'");
    } else {
      doc.anchor = line->rest;
    }
  }
  return doc;
}

std::string format_op_line(const ConditionalOp& op) {
  const FiniteLattice& l = op.lattice();
  const auto n = static_cast<Elem>(l.size());
  std::string out = "op ->";
  for (Elem a = 0; a < n; ++a) {
    if (a) out += " ;";
    for (Elem b = 0; b < n; ++b) out += " " + l.name_of(op(a, b));
  }
  return out;
}

std::string serialize(const LatticeDocument& doc) {
  const FiniteLattice& l = *doc.lattice;
  std::string out = "lattice " + l.name() + "\n";
  out += "elements " + join_words(l.names()) + "\n";
  for (auto [a, b] : hasse_edges(l)) out += "cover " + l.name_of(a) + " " + l.name_of(b) + "\n";
  if (doc.op) out += format_op_line(*doc.op) + "\n";
  if (doc.neg) {
    out += "op neg";
    for (Elem v : doc.neg->table()) out += " " + l.name_of(v);
    out += "\n";
  }
  if (!doc.expect.empty()) {
    out += "expect";
    for (auto [axiom, pass] : doc.expect) out += " " + std::string(to_string(axiom)) + (pass ? "=pass" : "=fail");
    out += "\n";
  }
  if (doc.expected_class) out += "class " + std::string(to_string(*doc.expected_class)) + "\n";
  if (!doc.anchor.empty()) out += "anchor " + doc.anchor + "\n";
  return out;
}

FrameDocument parse_frame_document(std::string_view text) {
  const auto lines = split_lines(text);
  expect_header(lines, "frame");
  std::vector<std::string> names;
  std::map<std::string, std::size_t> index;
  bool have_points = false;
  bool reflexive = false;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& key = line.words[0];
    if (key == "points") {
      if (have_points) throw ParseError(line.number, "duplicate 'points' line");
      names.assign(line.words.begin() + 1, line.words.end());
      index = index_names(names, line.number);
      have_points = true;
    } else if (key == "reflexive") {
      if (line.words.size() != 1) throw ParseError(line.number, "'reflexive' takes no arguments");
      reflexive = true;
    } else if (key == "edge") {
      if (!have_points) throw ParseError(line.number, "'edge' before 'points'");
      if (line.words.size() != 3) throw ParseError(line.number, "expected 'edge <y> <x>'");
      edges.emplace_back(lookup(index, line.words[1], line.number, "point"),
                         lookup(index, line.words[2], line.number, "point"));
    } else {
      throw ParseError(line.number, "unknown directive '" + key + "'");
    }
  }
  if (!have_points) throw ParseError(lines[0].number, "missing 'points' line");
  return FrameDocument{RelationalFrame(lines[0].words[1], std::move(names), edges, reflexive), reflexive};
}

std::string serialize(const FrameDocument& doc) {
  const RelationalFrame& f = doc.frame;
  std::string out = "frame " + f.name() + "\n";
  out += "points " + join_words(f.names()) + "\n";
  if (doc.reflexive) out += "reflexive\n";
  for (auto [y, x] : f.edges()) {
    if (doc.reflexive && x == y) continue;
    out += "edge " + f.names()[y] + " " + f.names()[x] + "\n";
  }
  return out;
}

SelectionDocument parse_selection_document(std::string_view text) {
  const auto lines = split_lines(text);
  expect_header(lines, "selframe");
  std::vector<std::string> names;
  std::map<std::string, std::size_t> index;
  bool have_worlds = false;
  std::optional<SelectionFrame> frame;
  std::vector<bool> listed;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& key = line.words[0];
    if (key == "worlds") {
      if (have_worlds) throw ParseError(line.number, "duplicate 'worlds' line");
      names.assign(line.words.begin() + 1, line.words.end());
      index = index_names(names, line.number);
      if (names.size() > kMaxWorlds) {
        throw ParseError(line.number, "at most " + std::to_string(kMaxWorlds) + " worlds are supported");
      }
      frame.emplace(names);
      listed.assign(std::size_t{1} << names.size(), false);
      have_worlds = true;
    } else if (key == "rel") {
      if (!have_worlds) throw ParseError(line.number, "'rel' before 'worlds'");
      const auto colon = line.rest.find(':');
      if (colon == std::string::npos) throw ParseError(line.number, "expected 'rel <subset> : <w>,<v> ...'");
      const std::string subset = trim(std::string_view(line.rest).substr(0, colon));
      WorldSet a = 0;
      if (subset == "*") {
        a = frame->all();
      } else if (subset != "-") {
        for (const auto& w : split(subset, ','))
          a |= WorldSet{1} << lookup(index, w, line.number, "world");
      }
      if (listed[a]) throw ParseError(line.number, "subset " + frame->format_set(a) + " listed twice");
      listed[a] = true;
      std::istringstream in(line.rest.substr(colon + 1));
      for (std::string pair; in >> pair;) {
        const auto parts = split(pair, ',');
        if (parts.size() != 2) throw ParseError(line.number, "expected <w>,<v>, got '" + pair + "'");
        frame->relate(a, lookup(index, parts[0], line.number, "world"), lookup(index, parts[1], line.number, "world"));
      }
    } else {
      throw ParseError(line.number, "unknown directive '" + key + "'");
    }
  }
  if (!have_worlds) throw ParseError(lines[0].number, "missing 'worlds' line");
  SelectionDocument doc{lines[0].words[1], std::move(*frame), {}};
  for (std::size_t a = 0; a < listed.size(); ++a) {
    if (listed[a]) continue;
    const auto s = static_cast<WorldSet>(a);
    for (std::size_t w = 0; w < names.size(); ++w) doc.frame.set_successors(s, w, s & (WorldSet{1} << w));
    doc.defaulted.push_back(s);
  }
  return doc;
}

std::string serialize(const SelectionDocument& doc) {
  const SelectionFrame& f = doc.frame;
  std::string out = "selframe " + doc.name + "\n";
  out += "worlds " + join_words(f.names()) + "\n";
  for (std::uint64_t am = 0; am <= f.all(); ++am) {
    const auto a = static_cast<WorldSet>(am);
    bool is_default = true;
    for (std::size_t w = 0; w < f.size(); ++w)
      if (f.successors(a, w) != (a & (WorldSet{1} << w))) is_default = false;
    if (is_default) continue;
    std::vector<std::string> members;
    for (std::size_t w = 0; w < f.size(); ++w)
      if (a >> w & 1U) members.push_back(f.names()[w]);
    out += "rel " + (a == 0 ? std::string("-") : a == f.all() && f.size() > 1 ? std::string("*") : join_words(members, ","));
    out += " :";
    for (std::size_t w = 0; w < f.size(); ++w)
      for (std::size_t v = 0; v < f.size(); ++v)
        if (f.related(a, w, v)) out += " " + f.names()[w] + "," + f.names()[v];
    out += "\n";
  }
  return out;
}

}  // namespace precond
