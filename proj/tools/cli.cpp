#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "geoimp/acceptance.hpp"
#include "geoimp/diagnostic.hpp"

namespace geoimp::cli {

std::string render_json(const Report& report, bool timing) {
  Json findings = Json::array();
  for (const auto& f : report.findings) {
    Json item{{"name", f.name}, {"value", f.value}};
    if (!f.witness.empty()) item["witness"] = f.witness;
    findings.push_back(std::move(item));
  }
  Json out{{"command", report.command}, {"status", report.ok ? "ok" : "fail"}, {"findings", std::move(findings)}};
  if (timing) out["timing"] = {{"seconds", report.seconds}};
  return out.dump(2) + "\n";
}

std::string render_text(const Report& report, bool timing) {
  std::ostringstream out;
  out << report.command << ": " << (report.ok ? "ok" : "fail") << '\n';
  for (const auto& f : report.findings) {
    out << "  " << f.name << ": " << (f.value.is_string() ? f.value.get<std::string>() : f.value.dump());
    if (!f.witness.empty()) out << "  [witness: " << f.witness << ']';
    out << '\n';
  }
  if (timing) out << "  time: " << report.seconds << "s\n";
  return out.str();
}

namespace {

Json set_json(const std::vector<std::string>& points, Subset s) { return format_set(points, s); }

std::string pair_text(const FinLattice& l, std::pair<Elem, Elem> p) { return "(" + l.name(p.first) + ", " + l.name(p.second) + ")"; }

std::string local_witness(const FinSpace& x, const LocalizabilityWitness& w) {
  return "Z = " + x.format(w.z) + ", (" + x.format(w.u1) + ", " + x.format(w.v1) + ") vs (" + x.format(w.u2) + ", " +
         x.format(w.v2) + ")";
}

// ---- verbs ----

struct Inputs {
  std::string lattice, implication, space, map, frame, adjoint, category, assignment;
};

void validate(Report& r, const Inputs& in) {
  int given = 0;
  for (const auto* s : {&in.lattice, &in.implication, &in.space, &in.map, &in.frame, &in.adjoint, &in.category}) {
    given += s->empty() ? 0 : 1;
  }
  if (given != 1) throw CLI::ValidationError("validate needs exactly one model file");
  if (!in.lattice.empty()) {
    const auto l = lattice_from_json(load_json_file(in.lattice));
    r.add("kind", "lattice");
    r.add("elements", l->size());
  } else if (!in.implication.empty()) {
    const auto m = implication_from_json(load_json_file(in.implication));
    r.add("kind", m.space ? "implication over a space" : "implication");
    r.add("elements", m.implication.lattice().size());
  } else if (!in.space.empty()) {
    const auto x = space_from_json(load_json_file(in.space));
    r.add("kind", "space");
    r.add("points", x->size());
    r.add("opens", x->opens().size());
  } else if (!in.map.empty()) {
    const auto f = map_from_json(load_json_file(in.map));
    r.add("kind", "continuous map");
    r.add("points", f.source().size());
  } else if (!in.frame.empty()) {
    const auto frame = frame_from_json(load_json_file(in.frame));
    r.add("kind", "frame");
    r.add("points", frame.size());
    r.add("full", frame.full());
    r.add("frame", to_json(frame));
  } else if (!in.adjoint.empty()) {
    const auto data = adjoint_from_json(load_json_file(in.adjoint));
    r.add("kind", "adjoint data");
    r.add("elements", data.lattice().size());
  } else {
    const auto c = category_from_json(load_json_file(in.category));
    r.add("kind", "category");
    r.add("objects", c.names());
    r.add("maps", c.maps().size());
    if (!in.assignment.empty()) {
      const auto a = assignment_from_json(c, load_json_file(in.assignment));
      r.add("assignment", to_json(c, a));
    }
  }
  r.add("valid", true);
}

void classify_cmd(Report& r, const Inputs& in) {
  if (!in.implication.empty()) {
    const auto m = implication_from_json(load_json_file(in.implication));
    const auto& l = m.implication.lattice();
    const auto cls = classify(m.implication);
    const Json flags = to_json(cls, l);
    for (const auto& [key, value] : flags.items()) {
      std::string witness;
      if (key == "open" && cls.not_open_witness) witness = "a ≰ b → (a ∧ b) at " + pair_text(l, *cls.not_open_witness);
      if (key == "closed" && cls.not_closed_witness) witness = "(a ∨ b → a) ∨ b ≠ 1 at " + pair_text(l, *cls.not_closed_witness);
      if (key == "not_open_witness" || key == "not_closed_witness") continue;
      r.add(key, value, witness);
    }
    if (m.space) {
      const auto s = StrongSpace::make(m.space, m.implication);
      for (const auto mode : {LocalMode::open, LocalMode::closed}) {
        const auto loc = localizability(s, mode);
        r.add(mode == LocalMode::open ? "localizable_open" : "localizable_closed", loc.holds,
              loc.witness ? local_witness(*m.space, *loc.witness) : std::string());
      }
    }
    return;
  }
  if (!in.space.empty()) {
    const auto x = space_from_json(load_json_file(in.space));
    const auto c = classify_space(*x);
    r.add("discrete", c.discrete);
    r.add("indiscrete", c.indiscrete);
    r.add("locally_indiscrete", c.locally_indiscrete);
    r.add("t0", c.t0);
    r.add("hausdorff", c.hausdorff);
    r.add("open_irreducible", c.open_irreducible);
    r.add("closed_irreducible", c.closed_irreducible);
    return;
  }
  if (!in.map.empty()) {
    const auto f = map_from_json(load_json_file(in.map));
    const auto c = classify_map(f);
    r.add("continuous", c.continuous);
    r.add("injective", c.injective);
    r.add("surjective", c.surjective);
    r.add("open", c.open);
    r.add("closed", c.closed);
    r.add("embedding", c.embedding);
    r.add("open_irreducible", c.open_irreducible);
    r.add("closed_irreducible", c.closed_irreducible);
    return;
  }
  throw CLI::ValidationError("classify needs --implication, --space or --map");
}

ClassFilter filter_of(const std::string& name) {
  if (name == "open") return ClassFilter::open();
  if (name == "closed") return ClassFilter::closed();
  if (name == "wbi") return ClassFilter::weakly_boolean();
  return ClassFilter::any();
}

void enumerate_cmd(Report& r, const Inputs& in, const std::string& filter, std::size_t limit, bool count_only) {
  LatticePtr l;
  if (!in.lattice.empty()) l = lattice_from_json(load_json_file(in.lattice));
  else if (!in.space.empty()) l = space_from_json(load_json_file(in.space))->lattice();
  else throw CLI::ValidationError("enumerate needs --lattice or --space");
  EnumerateOptions opts;
  opts.filter = filter_of(filter);
  opts.limit = limit;
  Json tables = Json::array();
  const std::size_t count = for_each_implication(l, opts, [&](const Implication& imp) {
    if (!count_only) tables.push_back(table_to_json(imp));
    return true;
  });
  r.add("elements", l->names());
  r.add("filter", filter);
  r.add("count", count);
  if (limit != 0 && count == limit) r.add("truncated", true);
  if (!count_only) r.add("tables", std::move(tables));
}

std::pair<Subset, Subset> parse_query(const KNFrame& frame, const std::string& query) {
  std::size_t at = query.find("->");
  std::size_t width = 2;
  if (at == std::string::npos) {
    at = query.find("→");
    width = std::string("→").size();
  }
  if (at == std::string::npos) throw ModelError(ErrorKind::ParseError, "query must look like \"U -> V\"", query);
  return {parse_point_set(frame.points(), query.substr(0, at)), parse_point_set(frame.points(), query.substr(at + width))};
}

void frame_algebra_cmd(Report& r, const Inputs& in, const std::string& query) {
  const auto frame = frame_from_json(load_json_file(in.frame));
  const auto alg = frame_algebra(frame);
  if (!query.empty()) {
    const auto [u, v] = parse_query(frame, query);
    for (Subset s : {u, v}) {
      if (!frame.is_upset(s) || !frame.in_algebra(s)) {
        throw ModelError(ErrorKind::NotInAlgebra, "query argument is not an upset in B", frame.format(s));
      }
    }
    r.add("query", query);
    r.add("result", set_json(frame.points(), alg(u, v)));
    return;
  }
  Json ups = Json::array();
  for (Subset u : alg.upsets) ups.push_back(set_json(frame.points(), u));
  r.add("upsets", std::move(ups));
  r.add("table", table_to_json(alg.implication));
  const auto cls = classify(alg.implication);
  r.add("open", cls.open);
  r.add("closed", cls.closed);
  r.add("weakly_boolean", cls.weakly_boolean);
}

std::string frame_witness(const KNFrame& f, const FrameWitness& w) {
  return "x = " + f.point(w.x) + ", y = " + f.point(w.y) + ", U = " + f.format(w.u) + ", V = " + f.format(w.v);
}

void add_frame_class(Report& r, const KNFrame& frame, const std::string& prefix) {
  const auto c = frame_class(frame);
  r.add(prefix + "open_frame", c.open_frame, c.not_open ? frame_witness(frame, *c.not_open) : std::string());
  r.add(prefix + "closed_frame", c.closed_frame, c.not_closed ? frame_witness(frame, *c.not_closed) : std::string());
}

void frame_modal_cmd(Report& r, const Inputs& in, const std::string& set) {
  const auto frame = frame_from_json(load_json_file(in.frame));
  const auto v = modal_operators(frame, parse_point_set(frame.points(), set));
  r.add("diamond", set_json(frame.points(), v.diamond));
  r.add("j", v.j ? set_json(frame.points(), *v.j) : Json(nullptr));
}

void frame_fullify_cmd(Report& r, const Inputs& in) {
  const auto frame = frame_from_json(load_json_file(in.frame));
  const auto full = fullify(frame);
  r.add("full", to_json(full.frame));
  add_frame_class(r, frame, "original_");
  add_frame_class(r, full.frame, "full_");
}

void represent_cmd(Report& r, const Inputs& in) {
  const auto data = adjoint_from_json(load_json_file(in.adjoint));
  const auto s = implication_from_adjoints(data);
  const auto rep = build_representation(data, s);
  Json filters = Json::array();
  for (Subset f : rep.filters) filters.push_back(set_json(data.lattice().names(), f));
  r.add("implication", table_to_json(s));
  r.add("prime_filters", std::move(filters));
  r.add("frame", to_json(rep.frame));
  for (const auto& c : rep.checks) {
    if (c.status == CheckStatus::fail) r.fail(c.name, std::string(to_string(c.status)), c.witness);
    else r.add(c.name, std::string(to_string(c.status)));
  }
}

void geometry_enumerate_cmd(Report& r, const Inputs& in, bool exclude_empty, std::size_t universe_cap) {
  const auto c = category_from_json(load_json_file(in.category));
  GeometricOptions opts;
  opts.empty_subspaces = !exclude_empty;
  opts.universe_cap = universe_cap;
  const auto search = enumerate_geometric(c, opts);
  r.add("local", search.local);
  std::size_t universe = 0, survivors = 0;
  for (std::size_t x = 0; x < c.size(); ++x) {
    universe += search.universe[x].size();
    survivors += search.survivors[x].size();
  }
  r.add("universe", universe);
  r.add("survivors", survivors);
  r.add("candidates", search.candidates);
  r.add("count", search.assignments.size());
  Json all = Json::array();
  for (const auto& a : search.assignments) all.push_back(to_json(c, a));
  r.add("assignments", std::move(all));
}

void geometry_props_cmd(Report& r, const Inputs& in, bool exclude_empty) {
  const auto c = category_from_json(load_json_file(in.category));
  const auto p = category_props(c, !exclude_empty);
  const auto names_of = [&](const std::vector<int>& xs) {
    Json out = Json::array();
    for (int x : xs) out.push_back(c.name(x));
    return out;
  };
  r.add("local", p.local, p.witness);
  r.add("has_terminal", p.has_terminal);
  r.add("terminals", names_of(p.terminals));
  r.add("full_objects", names_of(p.full_objects));
}

void geometry_canonical_cmd(Report& r, const Inputs& in, const std::string& kind) {
  const auto c = category_from_json(load_json_file(in.category));
  const auto spec = parse_canonical(kind);
  r.add("kind", to_string(spec));
  r.add("assignment", to_json(c, canonical_fibers(c, spec)));
}

void geometry_check_cmd(Report& r, const Inputs& in) {
  if (in.assignment.empty()) throw CLI::ValidationError("geometry check needs --assignment");
  const auto c = category_from_json(load_json_file(in.category));
  const auto a = assignment_from_json(c, load_json_file(in.assignment));
  const auto g = is_geometric(c, a);
  if (g.holds) {
    r.add("geometric", true);
    return;
  }
  const auto& w = *g.witness;
  std::string text;
  if (w.empty_object) {
    text = "empty fiber over " + c.name(*w.empty_object);
  } else {
    const auto& m = c.maps()[static_cast<std::size_t>(*w.map)];
    text = "no pullback along " + m.name + " (" + c.name(m.source) + " → " + c.name(m.target) + ") of " +
           table_to_json(a[static_cast<std::size_t>(m.target)][static_cast<std::size_t>(*w.target_member)]).dump();
  }
  r.fail("geometric", false, text);
}

void wbs_cmd(Report& r, const Inputs& in, const std::string& core) {
  const auto x = space_from_json(load_json_file(in.space));
  if (!core.empty()) {
    const auto s = wbs_from_core(x, parse_point_set(x->points(), core));
    r.add("core", set_json(x->points(), parse_point_set(x->points(), core)));
    r.add("table", table_to_json(s.imp));
    return;
  }
  Json cores = Json::array();
  for (const auto& c : wbs_enumerate(x)) cores.push_back({{"core", format_set(x->points(), c.core)}, {"table", table_to_json(c.strong.imp)}});
  r.add("count", cores.size());
  r.add("cores", std::move(cores));
}

void selftest_cmd(Report& r, const std::string& only) {
  if (!is_acceptance_selector(only)) throw CLI::ValidationError("unknown criterion or group: " + only);
  for (const auto& c : run_acceptance(only)) {
    if (c.passed) r.add(c.id + " " + c.title, "pass");
    else r.fail(c.id + " " + c.title, "fail", c.witness.empty() ? c.detail : c.witness);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite implications, strong spaces, frames and geometric categories"};
  app.name("geoimp");
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  bool timing = false;
  std::size_t size_guard_value = 0;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timing", timing, "Report the run time");
  app.add_option("--size-guard", size_guard_value, "Largest carrier for powerset enumerations (overrides GEOIMP_SIZE_GUARD)");

  Inputs in;
  const auto model = [](CLI::App* sub, const char* flag, std::string& target, const char* what) {
    return sub->add_option(flag, target, what)->check(CLI::ExistingFile);
  };

  auto* validate_app = app.add_subcommand("validate", "Parse and validate a model");
  model(validate_app, "--lattice", in.lattice, "Lattice file");
  model(validate_app, "--implication", in.implication, "Implication file");
  model(validate_app, "--space", in.space, "Space file");
  model(validate_app, "--map", in.map, "Continuous map file");
  model(validate_app, "--frame", in.frame, "Frame file");
  model(validate_app, "--adjoint", in.adjoint, "Adjoint data file");
  model(validate_app, "--category", in.category, "Category file");
  model(validate_app, "--assignment", in.assignment, "Fiber assignment file (with --category)");

  auto* classify_app = app.add_subcommand("classify", "Classify an implication, a space or a map");
  model(classify_app, "--implication", in.implication, "Implication file");
  model(classify_app, "--space", in.space, "Space file");
  model(classify_app, "--map", in.map, "Continuous map file");

  std::string filter = "any";
  std::size_t limit = 0;
  bool count_only = false;
  auto* enumerate_app = app.add_subcommand("enumerate", "List the implications on a lattice or on the opens of a space");
  model(enumerate_app, "--lattice", in.lattice, "Lattice file");
  model(enumerate_app, "--space", in.space, "Space file");
  enumerate_app->add_option("--filter", filter, "any, open, closed or wbi")->check(CLI::IsMember({"any", "open", "closed", "wbi"}));
  enumerate_app->add_option("--limit", limit, "Stop after this many");
  enumerate_app->add_flag("--count-only", count_only, "Omit the tables");

  std::string query, set;
  auto* frame_app = app.add_subcommand("frame", "Frame constructions");
  frame_app->require_subcommand(1);
  auto* algebra_app = frame_app->add_subcommand("algebra", "The implication algebra of upsets");
  model(algebra_app, "--frame", in.frame, "Frame file")->required();
  algebra_app->add_option("--query", query, "Evaluate \"U -> V\" with point names, {} and K");
  auto* class_app = frame_app->add_subcommand("class", "Open and closed frame conditions");
  model(class_app, "--frame", in.frame, "Frame file")->required();
  auto* full_app = frame_app->add_subcommand("fullify", "The full frame and its conditions");
  model(full_app, "--frame", in.frame, "Frame file")->required();
  auto* modal_app = frame_app->add_subcommand("modal", "◇_R and j of a set");
  model(modal_app, "--frame", in.frame, "Frame file")->required();
  modal_app->add_option("--set", set, "A set in B")->required();

  auto* represent_app = app.add_subcommand("represent", "Prime-filter frame of adjoint data and its checks");
  model(represent_app, "--adjoint", in.adjoint, "Adjoint data file")->required();

  bool exclude_empty = false;
  std::size_t universe_cap = GeometricOptions{}.universe_cap;
  std::string kind;
  auto* geometry_app = app.add_subcommand("geometry", "Geometric fiber assignments over a category of spaces");
  geometry_app->require_subcommand(1);
  auto* g_enum = geometry_app->add_subcommand("enumerate", "Every geometric assignment");
  model(g_enum, "--category", in.category, "Category file")->required();
  g_enum->add_flag("--exclude-empty", exclude_empty, "Leave the empty subspace out of locality");
  g_enum->add_option("--universe-cap", universe_cap, "Largest fiber universe per object");
  auto* g_props = geometry_app->add_subcommand("props", "Locality and terminal objects");
  model(g_props, "--category", in.category, "Category file")->required();
  g_props->add_flag("--exclude-empty", exclude_empty, "Leave the empty subspace out of locality");
  auto* g_canon = geometry_app->add_subcommand("canonical", "A canonical assignment: t, b, bt, a or c<n>");
  model(g_canon, "--category", in.category, "Category file")->required();
  g_canon->add_option("--kind", kind, "t, b, bt, a or c<n>")->required();
  auto* g_check = geometry_app->add_subcommand("check", "Is the assignment geometric?");
  model(g_check, "--category", in.category, "Category file")->required();
  model(g_check, "--assignment", in.assignment, "Fiber assignment file")->required();

  std::string core;
  auto* wbs_app = app.add_subcommand("wbs", "Weakly Boolean strong spaces by core");
  model(wbs_app, "--space", in.space, "Space file")->required();
  wbs_app->add_option("--core", core, "Build the one with this core");

  std::string only;
  auto* selftest_app = app.add_subcommand("selftest", "Run the acceptance criteria");
  selftest_app->add_option("--only", only, "A criterion id (A1..A11) or a group name");

  std::vector<std::string> argv_store{"geoimp"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  if (size_guard_value != 0) setenv("GEOIMP_SIZE_GUARD", std::to_string(size_guard_value).c_str(), 1);

  Report report;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (validate_app->parsed()) {
      report.command = "validate";
      validate(report, in);
    } else if (classify_app->parsed()) {
      report.command = "classify";
      classify_cmd(report, in);
    } else if (enumerate_app->parsed()) {
      report.command = "enumerate";
      enumerate_cmd(report, in, filter, limit, count_only);
    } else if (frame_app->parsed()) {
      if (algebra_app->parsed()) {
        report.command = "frame algebra";
        frame_algebra_cmd(report, in, query);
      } else if (class_app->parsed()) {
        report.command = "frame class";
        add_frame_class(report, frame_from_json(load_json_file(in.frame)), "");
      } else if (full_app->parsed()) {
        report.command = "frame fullify";
        frame_fullify_cmd(report, in);
      } else {
        report.command = "frame modal";
        frame_modal_cmd(report, in, set);
      }
    } else if (represent_app->parsed()) {
      report.command = "represent";
      represent_cmd(report, in);
    } else if (geometry_app->parsed()) {
      if (g_enum->parsed()) {
        report.command = "geometry enumerate";
        geometry_enumerate_cmd(report, in, exclude_empty, universe_cap);
      } else if (g_props->parsed()) {
        report.command = "geometry props";
        geometry_props_cmd(report, in, exclude_empty);
      } else if (g_canon->parsed()) {
        report.command = "geometry canonical";
        geometry_canonical_cmd(report, in, kind);
      } else {
        report.command = "geometry check";
        geometry_check_cmd(report, in);
      }
    } else if (wbs_app->parsed()) {
      report.command = "wbs";
      wbs_cmd(report, in, core);
    } else {
      report.command = "selftest";
      selftest_cmd(report, only);
    }
  } catch (const CLI::ValidationError& e) {
    err << "geoimp: " << e.what() << '\n';
    return 2;
  } catch (const ModelError& e) {
    report.fail("error", std::string(to_string(e.kind())), e.witness());
    report.add("message", e.message());
  } catch (const InvariantError& e) {
    report.fail("internal error", "invariant", e.what());
  }
  const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  report.seconds = took.count();
  out << (format == "json" ? render_json(report, timing) : render_text(report, timing));
  return report.ok ? 0 : 1;
}

}  // namespace geoimp::cli
