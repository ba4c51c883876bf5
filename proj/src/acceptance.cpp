#include "geoimp/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "geoimp/diagnostic.hpp"
#include "geoimp/geometry.hpp"
#include "geoimp/knframe.hpp"
#include "geoimp/represent.hpp"
#include "geoimp/topology.hpp"

namespace geoimp {

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
  std::string witness;
};

Outcome fail(std::string witness, std::string detail = {}) { return {false, std::move(detail), std::move(witness)}; }

std::string table_text(const FinLattice& l, std::span<const Elem> table) {
  std::string out = "[";
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (k) out += ((k % l.size()) == 0) ? " | " : " ";
    out += table[k] == kUnassigned ? "?" : l.name(table[k]);
  }
  return out + "]";
}

std::set<OpTable> table_set(const std::vector<Implication>& imps) {
  std::set<OpTable> out;
  for (const auto& imp : imps) out.insert(imp.table());
  return out;
}

// ---- implication group ----

Outcome a2_criteria() {
  std::size_t total = 0;
  for (const auto& [name, l] : fixture_lattices(5)) {
    const int n = static_cast<int>(l->size());
    for (const auto& imp : enumerate_implications(l)) {
      ++total;
      bool open_def = true, closed_def = true, open_crit = true, closed_crit = true;
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          open_crit = open_crit && l->leq(a, imp(b, l->meet(a, b)));
          closed_crit = closed_crit && l->join(imp(l->join(a, b), a), b) == l->top();
          for (int c = 0; c < n; ++c) {
            if (l->leq(l->meet(a, b), c) && !l->leq(a, imp(b, c))) open_def = false;
            if (l->leq(a, l->join(b, c)) && l->join(imp(a, b), c) != l->top()) closed_def = false;
          }
        }
      }
      const auto cls = classify(imp);
      if (open_def != open_crit || cls.open != open_crit || closed_def != closed_crit || cls.closed != closed_crit) {
        return fail(name + " " + table_text(*l, imp.table()));
      }
    }
  }
  return {true, std::to_string(total) + " implications over " + std::to_string(fixture_lattices(5).size()) + " lattices", {}};
}

Outcome a3_wbi() {
  std::ostringstream detail;
  for (const auto& [name, l] : fixture_lattices(5)) {
    EnumerateOptions opts;
    opts.filter = ClassFilter::weakly_boolean();
    const auto found = enumerate_implications(l, opts);
    std::set<OpTable> built;
    for (Elem m = 0; m < static_cast<Elem>(l->size()); ++m) {
      if (interval_boolean_obstruction(*l, m)) continue;
      const auto imp = wbi_from_core(l, m);
      if (wbi_decompose(imp) != m) return fail(name + ": core " + l->name(m) + " does not round-trip");
      built.insert(imp.table());
    }
    for (const auto& imp : found) {
      if (wbi_from_core(l, wbi_decompose(imp)).table() != imp.table()) {
        return fail(name + ": " + table_text(*l, imp.table()) + " is not rebuilt from its core");
      }
    }
    if (table_set(found) != built) return fail(name + ": enumerated and constructed WBIs differ");
    if (name == "3-chain" && found.size() != 2) return fail("3-chain has " + std::to_string(found.size()) + " WBIs");
    if (name == "Boolean square" && found.size() != 4) return fail("Boolean square has " + std::to_string(found.size()) + " WBIs");
    detail << name << ' ' << found.size() << "; ";
  }
  return {true, detail.str(), {}};
}

Outcome a11_lifting() {
  std::size_t maps = 0, lifts = 0, boolean_extra = 0;
  const auto lattices = fixture_lattices(5);
  for (const auto& [an, a] : lattices) {
    EnumerateOptions opts;
    opts.filter = ClassFilter::weakly_boolean();
    const auto source_wbis = enumerate_implications(a, opts);
    for (const auto& [bn, b] : lattices) {
      const auto target_wbis = enumerate_implications(b, opts);
      const bool boolean_target = boolean_structure(*b).complement.has_value();
      for (const auto& f : all_monotone_maps(a, b)) {
        if (!f.is_lattice_map()) continue;
        const bool surjective = f.is_surjective();
        if (!surjective && !boolean_target) continue;
        (surjective ? maps : boolean_extra) += 1;
        for (const auto& w : source_wbis) {
          const auto lifted = lift_wbi(f, w);
          ++lifts;
          std::size_t strong = 0;
          for (const auto& t : target_wbis) strong += is_strong_map(f, w, t) ? 1 : 0;
          if (strong != 1 || !is_strong_map(f, w, lifted) || !classify(lifted).weakly_boolean) {
            return fail(an + " → " + bn + " map " + table_text(*b, f.table()) + ", source " + table_text(*a, w.table()),
                        std::to_string(strong) + " strong WBIs");
          }
        }
      }
    }
  }
  return {true,
          std::to_string(maps) + " surjective morphisms and " + std::to_string(boolean_extra) +
              " into Boolean targets, " + std::to_string(lifts) + " lifts",
          {}};
}

// ---- topology group ----

std::vector<SpacePtr> small_spaces() {
  std::vector<SpacePtr> out;
  const std::vector<std::vector<std::string>> carriers{{}, {"a"}, {"a", "b"}, {"a", "b", "c"}};
  for (const auto& pts : carriers) {
    for (auto& s : all_topologies(pts)) out.push_back(std::move(s));
  }
  return out;
}

std::string space_text(const FinSpace& x) {
  std::string out = "opens";
  for (Subset u : x.opens()) out += " " + x.format(u);
  return out;
}

Outcome a4_cores() {
  const auto spaces = small_spaces();
  for (const auto& x : spaces) {
    EnumerateOptions opts;
    opts.filter = ClassFilter::weakly_boolean();
    const auto wbis = table_set(enumerate_implications(x->lattice(), opts));
    const auto cored = wbs_enumerate(x);
    std::set<OpTable> from_cores;
    std::set<Subset> cores;
    for (const auto& c : cored) {
      from_cores.insert(c.strong.imp.table());
      cores.insert(c.core);
      const auto cls = classify(c.strong.imp);
      if (!cls.core || x->open(*cls.core) != c.core) return fail(space_text(*x) + ": core " + x->format(c.core) + " not recovered");
    }
    if (from_cores != wbis || cores.size() != cored.size() || cored.size() != wbis.size()) {
      return fail(space_text(*x) + ": cores do not biject with WBIs");
    }
  }
  const auto sier = sierpinski_space();
  std::vector<Subset> cores;
  for (const auto& c : wbs_enumerate(sier)) cores.push_back(c.core);
  if (cores != std::vector<Subset>{0b01, 0b11}) return fail("Sierpiński cores differ from {a}, X");
  return {true, std::to_string(spaces.size()) + " spaces; Sierpiński cores {a}, {a,b}", {}};
}

struct Embeddings {
  std::vector<ContinuousMap> open, closed;
};

Embeddings subspace_embeddings(const SpacePtr& x) {
  Embeddings out;
  for (Subset a = 0; a <= x->all(); ++a) {
    const bool o = x->is_open(a), c = x->is_closed(a);
    if (!o && !c) continue;
    const auto sub = subspace(x, a);
    if (o) out.open.push_back(sub.inclusion);
    if (c) out.closed.push_back(sub.inclusion);
  }
  return out;
}

bool pullbacks_exist(const std::vector<ContinuousMap>& embeddings, const Implication& imp) {
  for (const auto& j : embeddings) {
    if (induced_cells(j, imp).conflict) return false;
  }
  return true;
}

std::optional<std::string> check_one(const SpacePtr& x, const Embeddings& emb, const Implication& imp) {
  const auto cls = classify(imp);
  const auto s = StrongSpace::make(x, imp);
  const bool lo = localizability(s, LocalMode::open).holds;
  const bool lc = localizability(s, LocalMode::closed).holds;
  const bool po = pullbacks_exist(emb.open, imp);
  const bool pc = pullbacks_exist(emb.closed, imp);
  if (lo != cls.open || lc != cls.closed || po != cls.open || pc != cls.closed) {
    return space_text(*x) + " " + table_text(imp.lattice(), imp.table());
  }
  for (const auto& j : cls.open ? emb.open : std::vector<ContinuousMap>{}) {
    if (!classify(*pullback_along_embedding(j, imp).implication).open) return "open pullback not open: " + space_text(*x);
  }
  for (const auto& j : cls.closed ? emb.closed : std::vector<ContinuousMap>{}) {
    if (!classify(*pullback_along_embedding(j, imp).implication).closed) return "closed pullback not closed: " + space_text(*x);
  }
  return std::nullopt;
}

constexpr std::size_t kExhaustiveOpens = 6;
constexpr std::size_t kLargeSample = 20000;

Outcome a5_localizability() {
  std::size_t checked = 0, set_level = 0;
  for (const auto& x : small_spaces()) {
    const auto emb = subspace_embeddings(x);
    const auto& l = x->lattice();
    std::optional<std::string> bad;
    if (l->size() <= kExhaustiveOpens) {
      for_each_implication(l, {}, [&](const Implication& imp) {
        ++checked;
        bad = check_one(x, emb, imp);
        return !bad;
      });
      if (bad) return fail(*bad);
      continue;
    }
    // Too many implications to visit one by one: compare the constrained
    // searches with the class filters, and check a prefix of the full search.
    ++set_level;
    EnumerateOptions sample;
    sample.limit = kLargeSample;
    for_each_implication(l, sample, [&](const Implication& imp) {
      ++checked;
      bad = check_one(x, emb, imp);
      return !bad;
    });
    if (bad) return fail(*bad);
    for (const auto mode : {LocalMode::open, LocalMode::closed}) {
      EnumerateOptions by_class;
      by_class.filter = mode == LocalMode::open ? ClassFilter::open() : ClassFilter::closed();
      const auto expected = table_set(enumerate_implications(l, by_class));
      EnumerateOptions local;
      local.extra = localizability_constraint(x, mode);
      EnumerateOptions pulled;
      pulled.extra = pullback_constraint(mode == LocalMode::open ? emb.open : emb.closed);
      if (table_set(enumerate_implications(l, local)) != expected) {
        return fail(space_text(*x) + ": localizable set differs in " + (mode == LocalMode::open ? "open" : "closed") + " mode");
      }
      if (table_set(enumerate_implications(l, pulled)) != expected) {
        return fail(space_text(*x) + ": pullback set differs in " + (mode == LocalMode::open ? "open" : "closed") + " mode");
      }
    }
  }
  return {true,
          std::to_string(checked) + " implications checked one by one; " + std::to_string(set_level) +
              " space(s) with more than " + std::to_string(kExhaustiveOpens) + " opens compared as sets",
          {}};
}

// ---- frame group ----

std::vector<std::string> point_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("p" + std::to_string(i));
  return out;
}

KNFrame example_frame() {
  return standard_frame({"k", "l"}, {{true, true}, {false, true}}, {{1, 0}, {0, 0}});
}

Outcome a6_frames() {
  {
    const auto frame = example_frame();
    const auto alg = frame_algebra(frame);
    if (alg(frame.all(), 0b10) != 0) return fail("K → {l} = " + frame.format(alg(frame.all(), 0b10)));
    const auto cls = classify(alg.implication);
    if (!cls.closed || cls.open) return fail("example frame algebra is not closed-and-not-open");
  }
  std::size_t frames = 0;
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& leq : all_partial_orders(n)) {
      for (const auto& rel : compatible_relations(leq)) {
        ++frames;
        const auto frame = standard_frame(point_names(n), leq, rel);
        const auto alg = frame_algebra(frame);
        const auto cls = classify(alg.implication);
        const auto fc = frame_class(frame);
        bool below = true, above = true;
        for (const auto& [x, y] : rel) {
          below = below && leq[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
          above = above && leq[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
        }
        if ((below && !(cls.open && fc.open_frame)) || (above && !(cls.closed && fc.closed_frame))) {
          std::string w = std::to_string(n) + " points, R =";
          for (const auto& [x, y] : rel) w += " (" + std::to_string(x) + "," + std::to_string(y) + ")";
          return fail(w);
        }
      }
    }
  }
  return {true, "example frame gives K → {l} = ∅; " + std::to_string(frames) + " standard frames", {}};
}

// Two incomparable points, R everything, B = {∅, K}, N(k) = N(l) = {K}.
KNFrame recorded_loss_frame() {
  RawFrame raw;
  raw.points = {"k", "l"};
  raw.leq = {{true, false}, {false, true}};
  raw.relation = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  raw.algebra = std::vector<Subset>{0b00, 0b11};
  raw.neighbourhoods = std::vector<std::vector<Subset>>{{0b11}, {0b11}};
  return KNFrame::validate(raw);
}

bool loses_flag(const KNFrame& frame) {
  const auto before = frame_class(frame);
  const auto after = frame_class(fullify(frame).frame);
  return (before.open_frame && !after.open_frame) || (before.closed_frame && !after.closed_frame);
}

std::optional<std::string> check_fullification(const KNFrame& frame) {
  const auto full = fullify(frame);
  const auto a = frame_algebra(frame);
  const auto b = frame_algebra(full.frame);
  for (Subset u : a.upsets) {
    for (Subset v : a.upsets) {
      if (a(u, v) != b(u, v)) return "→ not preserved at " + frame.format(u) + ", " + frame.format(v);
    }
  }
  return std::nullopt;
}

std::vector<std::vector<Subset>> boolean_subalgebras(const std::vector<std::vector<bool>>& leq,
                                                     const std::vector<std::pair<int, int>>& rel) {
  const std::size_t n = leq.size();
  const Subset all = full_set(n);
  std::vector<Subset> subsets;
  for (Subset s = 0; s <= all; ++s) subsets.push_back(s);
  std::vector<std::vector<Subset>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << subsets.size()); ++mask) {
    std::vector<Subset> b;
    for (std::size_t k = 0; k < subsets.size(); ++k) {
      if ((mask >> k) & 1U) b.push_back(subsets[k]);
    }
    const auto has = [&](Subset s) { return std::find(b.begin(), b.end(), s) != b.end(); };
    bool ok = has(0) && has(all);
    for (Subset s : b) {
      if (!ok) break;
      Subset diamond = 0;
      for (const auto& [x, y] : rel) {
        if (contains(s, y)) diamond |= bit(x);
      }
      ok = has(all & ~s) && has(diamond);
      for (Subset t : b) ok = ok && has(s | t);
    }
    if (ok) out.push_back(b);
  }
  return out;
}

// Smallest frames first: every poset, relation, subalgebra and neighbourhood
// assignment on at most two points.
std::optional<KNFrame> search_loss(std::size_t& searched) {
  for (std::size_t n = 1; n <= 2; ++n) {
    for (const auto& leq : all_partial_orders(n)) {
      for (const auto& rel : compatible_relations(leq)) {
        for (const auto& b : boolean_subalgebras(leq, rel)) {
          RawFrame raw;
          raw.points = point_names(n);
          raw.leq = leq;
          raw.relation = rel;
          raw.algebra = b;
          std::vector<Subset> ups;
          for (Subset s : b) {
            bool up = true;
            for (int x : members(s)) {
              for (std::size_t y = 0; y < n; ++y) up = up && (!leq[static_cast<std::size_t>(x)][y] || contains(s, static_cast<int>(y)));
            }
            if (up) ups.push_back(s);
          }
          const std::uint64_t per_point = std::uint64_t{1} << ups.size();
          std::uint64_t combos = 1;
          for (std::size_t k = 0; k < n; ++k) combos *= per_point;
          for (std::uint64_t code = 0; code < combos; ++code) {
            std::vector<std::vector<Subset>> nb(n);
            std::uint64_t rest = code;
            for (std::size_t x = 0; x < n; ++x) {
              const std::uint64_t fam = rest % per_point;
              rest /= per_point;
              for (std::size_t k = 0; k < ups.size(); ++k) {
                if ((fam >> k) & 1U) nb[x].push_back(ups[k]);
              }
            }
            raw.neighbourhoods = nb;
            ++searched;
            try {
              auto frame = KNFrame::validate(raw);
              if (loses_flag(frame)) return frame;
            } catch (const ModelError&) {
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

Outcome a7_fullification() {
  std::vector<KNFrame> family{example_frame(), recorded_loss_frame()};
  for (const auto& leq : all_partial_orders(2)) {
    for (const auto& rel : compatible_relations(leq)) family.push_back(standard_frame(point_names(2), leq, rel));
  }
  for (const auto& frame : family) {
    if (auto bad = check_fullification(frame)) return fail(*bad);
  }
  if (!loses_flag(recorded_loss_frame())) return fail("recorded frame keeps its flags after fullification");
  std::size_t searched = 0;
  const auto found = search_loss(searched);
  if (!found) return fail("search found no frame losing a flag");
  if (auto bad = check_fullification(*found)) return fail(*bad);
  return {true,
          std::to_string(family.size()) + " frames preserve →; search over " + std::to_string(searched) +
              " frames found a loss on " + std::to_string(found->size()) + " points; recorded frame loses openness",
          {}};
}

// ---- representation ----

Outcome a8_representation() {
  std::size_t runs = 0;
  for (const auto& [name, l] : fixture_lattices(4)) {
    const auto monotone = all_monotone_maps(l, l);
    for (const auto& nabla : monotone) {
      if (nabla.join_obstruction()) continue;
      for (const auto& f : monotone) {
        const auto data = AdjointData::make(nabla, f);
        const auto report = build_representation(data, implication_from_adjoints(data));
        ++runs;
        if (const auto* bad = report.first_failure()) {
          return fail(name + " ∇ " + table_text(*l, nabla.table()) + " F " + table_text(*l, f.table()) + ": " + bad->name +
                      " at " + bad->witness);
        }
      }
    }
  }
  return {true, std::to_string(runs) + " (∇, F) pairs, every check passes", {}};
}

// ---- geometry ----

std::vector<FiberAssignment> expected_assignments(const SpaceCategory& c, std::initializer_list<const char*> kinds) {
  std::vector<FiberAssignment> out;
  for (const char* k : kinds) out.push_back(canonical_fibers(c, parse_canonical(k)));
  std::sort(out.begin(), out.end(), assignment_less);
  return out;
}

Outcome a9_geometric() {
  std::ostringstream detail;
  for (const bool with_empty : {true, false}) {
    struct Case {
      std::string name;
      SpaceCategory category;
      std::initializer_list<const char*> kinds;
    };
    const std::vector<Case> cases{
        {"Sierpiński", local_closure({sierpinski_space()}, with_empty), {"t"}},
        {"one point", local_closure({point_space()}, with_empty), {"t", "b", "bt"}},
        {"discrete ≤ 2", local_closure({discrete_space({"a", "b"})}, with_empty), {"t", "b", "bt", "a"}},
    };
    for (const auto& cs : cases) {
      GeometricOptions opts;
      opts.empty_subspaces = with_empty;
      const auto search = enumerate_geometric(cs.category, opts);
      if (!search.local) return fail(cs.name + " category is not local");
      const auto expected = expected_assignments(cs.category, cs.kinds);
      if (search.assignments != expected) {
        return fail(cs.name + (with_empty ? "" : " without ∅") + ": " + std::to_string(search.assignments.size()) +
                    " assignments, expected " + std::to_string(expected.size()));
      }
      if (with_empty) detail << cs.name << ' ' << search.assignments.size() << "; ";
    }
  }
  detail << "same with the empty space excluded";
  return {true, detail.str(), {}};
}

Outcome a10_strictness() {
  const auto c = injective_discrete_category(3);
  std::vector<FiberAssignment> levels;
  for (std::size_t n = 0; n <= 2; ++n) {
    levels.push_back(canonical_fibers(c, {CanonicalKind::bounded_core, n}));
    const auto g = is_geometric(c, levels.back());
    if (!g.holds) return fail("c" + std::to_string(n) + " is not geometric");
  }
  std::ostringstream sizes;
  for (std::size_t n = 0; n + 1 < levels.size(); ++n) {
    bool strict = false;
    for (std::size_t x = 0; x < c.size(); ++x) {
      const auto& small = levels[n][x];
      const auto& big = levels[n + 1][x];
      if (!std::includes(big.begin(), big.end(), small.begin(), small.end())) {
        return fail("c" + std::to_string(n) + " ⊄ c" + std::to_string(n + 1) + " at " + c.name(static_cast<int>(x)));
      }
      strict = strict || big.size() > small.size();
    }
    if (!strict) return fail("c" + std::to_string(n) + " = c" + std::to_string(n + 1));
  }
  for (std::size_t n = 0; n < levels.size(); ++n) {
    std::size_t total = 0;
    for (const auto& fiber : levels[n]) total += fiber.size();
    sizes << 'c' << n << ' ' << total << (n + 1 < levels.size() ? ", " : "");
  }
  return {true, "fiber totals " + sizes.str(), {}};
}

struct Criterion {
  const char* id;
  const char* group;
  const char* title;
  Outcome (*run)();
};

Outcome a1_default() {
  const auto r = check_axiomatizations(fixture_lattices(4), definition_violation, alternative_violation);
  return {r.passed, r.detail, r.witness};
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {"A1", "implication", "axiomatization equivalence", a1_default},
      {"A2", "implication", "open/closed criterion equivalence", a2_criteria},
      {"A3", "implication", "WBI classification", a3_wbi},
      {"A4", "topology", "core characterization on spaces", a4_cores},
      {"A5", "topology", "localizability", a5_localizability},
      {"A6", "knframe", "frame semantics", a6_frames},
      {"A7", "knframe", "fullification", a7_fullification},
      {"A8", "represent", "representation pipeline", a8_representation},
      {"A9", "geometry", "geometricity classification", a9_geometric},
      {"A10", "geometry", "C_n strictness", a10_strictness},
      {"A11", "implication", "lifting along surjections", a11_lifting},
  };
  return list;
}

}  // namespace

CriterionResult check_axiomatizations(const std::vector<NamedLattice>& lattices, const AxiomChecker& definition,
                                      const AxiomChecker& alternative) {
  CriterionResult result{"A1", "axiomatization equivalence", "implication", true, {}, {}, 0};
  std::size_t leaves = 0;
  std::ostringstream detail;
  for (const auto& [name, l] : lattices) {
    const int n = static_cast<int>(l->size());
    std::vector<std::pair<int, int>> cells;
    for (int a = 0; a < n; ++a) cells.emplace_back(a, a);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a != b && l->leq(a, b)) cells.emplace_back(a, b);
      }
    }
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (!l->leq(a, b)) cells.emplace_back(a, b);
      }
    }
    OpTable table(static_cast<std::size_t>(n * n), kUnassigned);
    std::set<OpTable> by_definition, by_alternative;
    std::optional<OpTable> mismatch;
    std::function<void(std::size_t)> sweep = [&](std::size_t k) {
      if (mismatch) return;
      const bool d = !definition(*l, table);
      const bool alt = !alternative(*l, table);
      if (k == cells.size()) {
        ++leaves;
        if (d) by_definition.insert(table);
        if (alt) by_alternative.insert(table);
        if (d != alt) mismatch = table;
        return;
      }
      if (!d && !alt) return;
      const auto idx = static_cast<std::size_t>(cells[k].first * n + cells[k].second);
      for (Elem v = 0; v < n; ++v) {
        table[idx] = v;
        sweep(k + 1);
      }
      table[idx] = kUnassigned;
    };
    sweep(0);
    if (mismatch) {
      const auto d = definition(*l, *mismatch);
      const auto alt = alternative(*l, *mismatch);
      result.passed = false;
      result.witness = name + " " + table_text(*l, *mismatch) + ": " + (d ? describe(*l, *d) : describe(*l, *alt)) +
                       " under one axiom set only";
      return result;
    }
    if (by_definition != table_set(enumerate_implications(l))) {
      result.passed = false;
      result.witness = name + ": accepted tables differ from the enumerator's";
      return result;
    }
    detail << name << ' ' << by_definition.size() << "; ";
  }
  result.detail = detail.str() + std::to_string(leaves) + " complete tables judged";
  return result;
}

std::vector<std::pair<std::string, std::string>> acceptance_criteria() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& c : criteria()) out.emplace_back(c.id, c.group);
  return out;
}

bool is_acceptance_selector(std::string_view selector) {
  if (selector.empty()) return true;
  for (const auto& c : criteria()) {
    if (selector == c.id || selector == c.group) return true;
  }
  return false;
}

std::vector<CriterionResult> run_acceptance(std::string_view selector) {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) {
    if (!selector.empty() && selector != c.id && selector != c.group) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const ModelError& e) {
      o = fail(e.witness().empty() ? e.what() : std::string(e.what()) + ": " + e.witness());
    } catch (const InvariantError& e) {
      o = fail(std::string("invariant: ") + e.what());
    }
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    out.push_back({c.id, c.title, c.group, o.passed, o.detail, o.witness, took.count()});
  }
  return out;
}

}  // namespace geoimp
