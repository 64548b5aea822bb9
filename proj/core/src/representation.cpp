#include "precond/representation.hpp"

#include <algorithm>
#include <set>

#include "precond/error.hpp"

namespace precond {

namespace {

void require_preconditional(const ConditionalOp& op, const CheckOptions& options) {
  const AxiomReport report = check_preconditional(op, options);
  for (const auto& r : report.results) {
    if (!r.pass) {
      std::string msg = std::string(to_string(r.axiom)) + " fails";
      if (r.counterexample) msg += " at " + describe_counterexample(op.lattice(), *r.counterexample);
      throw Error(ErrorCode::NotAPreconditional, msg);
    }
  }
}

std::string pair_name(const FiniteLattice& l, Elem a, Elem b) {
  return "(" + l.name_of(a) + "," + l.name_of(b) + ")";
}

std::string args(const FiniteLattice& l, Elem a, Elem b) {
  return "(" + l.name_of(a) + ", " + l.name_of(b) + ")";
}

// Checks that `image` is an embedding of (L,→) into the fixpoints of `frame`.
EmbeddingCheck check_embedding(const ConditionalOp& op, const RelationalFrame& frame,
                               const std::vector<PointSet>& image,
                               const FixpointLattice* all_fixpoints) {
  const FiniteLattice& l = op.lattice();
  const auto n = static_cast<Elem>(l.size());
  EmbeddingCheck out;
  auto fail = [&](bool& flag, const std::string& what) {
    if (flag && out.failure.empty()) out.failure = what;
    flag = false;
  };
  for (Elem a = 0; a < n; ++a) {
    if (image[a].size() != frame.size()) {
      throw Error(ErrorCode::WidthMismatch, "candidate image of " + l.name_of(a));
    }
    if (closure(frame, image[a]) != image[a]) {
      fail(out.fixpoints, "image of " + l.name_of(a) + " is not a fixpoint");
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (a < b && image[a] == image[b]) fail(out.injective, "not injective at " + args(l, a, b));
      if ((image[a] & image[b]) != image[l.meet(a, b)]) {
        fail(out.meets, "meet not preserved at " + args(l, a, b));
      }
      if (closure(frame, image[a] | image[b]) != image[l.join(a, b)]) {
        fail(out.joins, "join not preserved at " + args(l, a, b));
      }
      if (arrow(frame, image[a], image[b]) != image[op(a, b)]) {
        fail(out.arrows, "arrow not preserved at " + args(l, a, b));
      }
    }
  }
  if (all_fixpoints != nullptr) {
    std::set<PointSet> hit(image.begin(), image.end());
    for (const auto& s : all_fixpoints->fixpoints()) {
      if (!hit.count(s)) {
        fail(out.surjective, "fixpoint " + format_set(frame, s) + " is not an image");
        break;
      }
    }
  }
  return out;
}

}  // namespace

PairFrame build_pair_frame(const ConditionalOp& op, const CheckOptions& options) {
  require_preconditional(op, options);
  const FiniteLattice& l = op.lattice();
  const auto n = static_cast<Elem>(l.size());
  std::set<std::pair<Elem, Elem>> unique;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) unique.emplace(x, op(x, y));
  std::vector<std::pair<Elem, Elem>> points(unique.begin(), unique.end());

  std::vector<std::string> names;
  for (auto [a, b] : points) names.push_back(pair_name(l, a, b));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t p = 0; p < points.size(); ++p)
    for (std::size_t q = 0; q < points.size(); ++q)
      if (!l.leq(points[q].first, points[p].second)) edges.emplace_back(p, q);
  RelationalFrame frame(l.name() + "-pairs", std::move(names), edges);
  return PairFrame{op, std::move(points), std::move(frame)};
}

PointSet default_pair_candidate(const PairFrame& pf, Elem a) {
  PointSet s(pf.points.size());
  for (std::size_t p = 0; p < pf.points.size(); ++p)
    if (pf.op.lattice().leq(pf.points[p].first, a)) s.set(p);
  return s;
}

PairEmbeddingReport verify_pair_embedding(const ConditionalOp& op, const PairCandidate& candidate,
                                          const CheckOptions& options) {
  const PairFrame pf = build_pair_frame(op, options);
  const FiniteLattice& l = op.lattice();
  const auto n = static_cast<Elem>(l.size());
  const FixpointLattice fix = fixpoints_by_generation(pf.frame);

  PairEmbeddingReport report;
  report.fixpoint_count = fix.size();
  std::vector<PointSet> image;
  for (Elem a = 0; a < n; ++a) {
    image.push_back(candidate ? candidate(pf, a) : default_pair_candidate(pf, a));
  }
  report.candidate = check_embedding(op, pf.frame, image, &fix);
  if (report.candidate.ok()) {
    std::vector<Elem> mapping;
    for (Elem a = 0; a < n; ++a) mapping.push_back(*fix.index_of(image[a]));
    report.mapping = std::move(mapping);
    return report;
  }

  report.searched = true;
  const ConditionalOp& target = fix.arrow_op();
  report.mapping = find_order_isomorphism(l, *fix.lattice(), [&](const std::vector<Elem>& m) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (m[op(a, b)] != target(m[a], m[b])) return false;
    return true;
  });
  return report;
}

void require_pair_embedding(const PairEmbeddingReport& report) {
  if (report.verified()) return;
  throw Error(ErrorCode::EmbeddingNotVerified,
              "candidate map: " + report.candidate.failure +
                  (report.searched ? "; no isomorphism found by search" : ""));
}

bool is_consonant(const ConditionalOp& op, Elem f, Elem i) {
  const FiniteLattice& l = op.lattice();
  const auto n = static_cast<Elem>(l.size());
  for (Elem a = 0; a < n; ++a) {
    if (!l.leq(f, a)) continue;
    for (Elem b = 0; b < n; ++b)
      if (l.leq(l.meet(a, b), i) && !l.leq(op(a, b), i)) return false;
  }
  return true;
}

FilterIdealSpace build_fi_space(const ConditionalOp& op, const CheckOptions& options) {
  require_preconditional(op, options);
  const FiniteLattice& l = op.lattice();
  const auto n = static_cast<Elem>(l.size());
  std::vector<std::pair<Elem, Elem>> points;
  for (Elem f = 0; f < n; ++f)
    for (Elem i = 0; i < n; ++i)
      if (is_consonant(op, f, i)) points.emplace_back(f, i);

  const std::set<std::pair<Elem, Elem>> present(points.begin(), points.end());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (!present.count({x, op(x, y)})) {
        throw Error(ErrorCode::InternalInconsistency,
                    "(↑" + l.name_of(x) + ",↓" + l.name_of(op(x, y)) + ") is not consonant");
      }
    }
  }

  std::vector<std::string> names;
  for (auto [f, i] : points) names.push_back("(↑" + l.name_of(f) + ",↓" + l.name_of(i) + ")");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t p = 0; p < points.size(); ++p)
    for (std::size_t q = 0; q < points.size(); ++q)
      if (!l.leq(points[q].first, points[p].second)) edges.emplace_back(p, q);
  RelationalFrame frame(l.name() + "-fi", std::move(names), edges);

  std::vector<PointSet> basis(n, PointSet(points.size()));
  for (Elem a = 0; a < n; ++a)
    for (std::size_t p = 0; p < points.size(); ++p)
      if (l.leq(points[p].first, a)) basis[a].set(p);
  return FilterIdealSpace{op, std::move(points), std::move(frame), std::move(basis)};
}

FrameSpace as_space(const FilterIdealSpace& space) { return FrameSpace{space.frame, space.basis}; }

FiEmbeddingReport verify_fi_embedding(const ConditionalOp& op, const CheckOptions& options) {
  const FilterIdealSpace space = build_fi_space(op, options);
  FiEmbeddingReport report;
  report.embedding = check_embedding(op, space.frame, space.basis, nullptr);
  const auto cofix = compact_open_fixpoints(as_space(space));
  report.compact_open_count = cofix.size();
  const std::set<PointSet> image(space.basis.begin(), space.basis.end());
  report.compact_open_image = std::set<PointSet>(cofix.begin(), cofix.end()) == image;
  if (!report.compact_open_image && report.embedding.failure.empty()) {
    report.embedding.failure = "image has " + std::to_string(image.size()) + " sets but there are " +
                               std::to_string(cofix.size()) + " compact open fixpoints";
  }
  return report;
}

void require_fi_embedding(const FiEmbeddingReport& report) {
  if (!report.ok()) throw Error(ErrorCode::EmbeddingNotVerified, report.embedding.failure);
}

std::vector<PointSet> open_sets(const FrameSpace& space, std::size_t budget) {
  const std::size_t m = space.frame.size();
  std::set<PointSet> base_seen;
  std::vector<PointSet> base;
  auto add_base = [&](const PointSet& s) {
    if (s.size() != m) throw Error(ErrorCode::WidthMismatch, "basis set width");
    if (base_seen.insert(s).second) base.push_back(s);
  };
  add_base(space.frame.full_set());
  for (const auto& b : space.basis) add_base(b);
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add_base(base[i] & base[j]);

  std::set<PointSet> seen;
  std::vector<PointSet> opens;
  auto add = [&](PointSet s) {
    if (seen.insert(s).second) {
      if (opens.size() >= budget) {
        throw Error(ErrorCode::BudgetExceeded,
                    "more than " + std::to_string(budget) + " open sets");
      }
      opens.push_back(std::move(s));
    }
  };
  add(space.frame.empty_set());
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (const auto& b : base) add(opens[i] | b);
  }
  std::sort(opens.begin(), opens.end(), canonical_less);
  return opens;
}

std::vector<PointSet> compact_open_fixpoints(const FrameSpace& space, std::size_t budget) {
  std::vector<PointSet> out;
  for (auto& u : open_sets(space, budget))
    if (closure(space.frame, u) == u) out.push_back(std::move(u));
  return out;
}

SpaceReport check_space_conditions(const FrameSpace& space, std::size_t budget) {
  const RelationalFrame& frame = space.frame;
  const std::size_t m = frame.size();
  const std::vector<PointSet> opens = open_sets(space, budget);
  SpaceReport report;
  report.cofix = compact_open_fixpoints(space, budget);
  const auto& cofix = report.cofix;
  const std::size_t k = cofix.size();
  std::map<PointSet, std::size_t> index;
  for (std::size_t u = 0; u < k; ++u) index.emplace(cofix[u], u);

  for (std::size_t x = 0; x < m; ++x) {
    boost::dynamic_bitset<> f(k);
    boost::dynamic_bitset<> i(k);
    for (std::size_t u = 0; u < k; ++u) {
      f[u] = cofix[u].test(x);
      i[u] = !cofix[u].intersects(frame.successors(x));
    }
    report.f_sets.push_back(std::move(f));
    report.i_sets.push_back(std::move(i));
  }

  report.separation = true;
  for (std::size_t x = 0; x < m && report.separation; ++x) {
    for (std::size_t y = x + 1; y < m; ++y) {
      if (report.f_sets[x] == report.f_sets[y] && report.i_sets[x] == report.i_sets[y]) {
        report.separation = false;
        report.notes.push_back("points " + frame.names()[x] + " and " + frame.names()[y] +
                               " have the same (F,I)");
        break;
      }
    }
  }

  // Condition 2, keeping the operation tables for condition 3.
  bool closed = true;
  std::vector<std::size_t> meet(k * k);
  std::vector<std::size_t> arrow_table(k * k);
  for (std::size_t u = 0; u < k && closed; ++u) {
    for (std::size_t v = 0; v < k && closed; ++v) {
      const auto mi = index.find(cofix[u] & cofix[v]);
      const auto jo = index.find(closure(frame, cofix[u] | cofix[v]));
      const auto ar = index.find(arrow(frame, cofix[u], cofix[v]));
      if (mi == index.end() || jo == index.end() || ar == index.end()) {
        closed = false;
        report.notes.push_back("compact open fixpoints not closed at " +
                               format_set(frame, cofix[u]) + ", " + format_set(frame, cofix[v]));
      } else {
        meet[u * k + v] = mi->second;
        arrow_table[u * k + v] = ar->second;
      }
    }
  }
  bool basis = true;
  for (const auto& o : opens) {
    PointSet covered = frame.empty_set();
    for (const auto& u : cofix)
      if (u.is_subset_of(o)) covered |= u;
    if (covered != o) {
      basis = false;
      report.notes.push_back("open " + format_set(frame, o) +
                             " is not a union of compact open fixpoints");
      break;
    }
  }
  report.closed_and_basis = closed && basis && k > 0;

  // Condition 3: in a finite lattice every filter is ↑U and every ideal ↓V.
  if (report.closed_and_basis) {
    report.realization = true;
    auto sub = [&](std::size_t u, std::size_t v) { return cofix[u].is_subset_of(cofix[v]); };
    for (std::size_t fu = 0; fu < k && report.realization; ++fu) {
      for (std::size_t iv = 0; iv < k; ++iv) {
        bool consonant = true;
        for (std::size_t a = 0; a < k && consonant; ++a) {
          if (!sub(fu, a)) continue;
          for (std::size_t b = 0; b < k; ++b) {
            if (sub(meet[a * k + b], iv) && !sub(arrow_table[a * k + b], iv)) {
              consonant = false;
              break;
            }
          }
        }
        if (!consonant) continue;
        boost::dynamic_bitset<> f(k);
        boost::dynamic_bitset<> i(k);
        for (std::size_t w = 0; w < k; ++w) {
          f[w] = sub(fu, w);
          i[w] = sub(w, iv);
        }
        bool found = false;
        for (std::size_t x = 0; x < m && !found; ++x)
          found = report.f_sets[x] == f && report.i_sets[x] == i;
        if (!found) {
          report.realization = false;
          report.notes.push_back("consonant pair (↑" + format_set(frame, cofix[fu]) + ", ↓" +
                                 format_set(frame, cofix[iv]) + ") is not realized");
          break;
        }
      }
    }
  } else {
    report.notes.push_back("realization not evaluated: compact open fixpoints do not form a lattice");
  }

  report.relation_matches = true;
  for (std::size_t x = 0; x < m && report.relation_matches; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (frame.related(x, y) != !report.i_sets[x].intersects(report.f_sets[y])) {
        report.relation_matches = false;
        report.notes.push_back("relation mismatch at " + frame.names()[x] + ", " +
                               frame.names()[y]);
        break;
      }
    }
  }
  return report;
}

}  // namespace precond
