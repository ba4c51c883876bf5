#include "geoimp/model_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "geoimp/diagnostic.hpp"

namespace geoimp {

namespace {

[[noreturn]] void parse_fail(const std::string& path, const std::string& message) {
  throw ModelError(ErrorKind::ParseError, "at " + (path.empty() ? std::string("/") : path) + ": " + message);
}

// Runs a validator and prefixes its errors with the field path.
template <class F>
auto at_path(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const ModelError& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    if (path.empty()) throw;
    throw ModelError(e.kind(), "at " + path + ": " + e.message(), e.witness());
  }
}

const Json& field(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) parse_fail(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) parse_fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

const Json* optional_field(const Json& j, const char* key) {
  const auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t k) { return path + "/" + std::to_string(k); }

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) parse_fail(path, "expected an array");
  return j;
}

std::string text(const Json& j, const std::string& path) {
  if (!j.is_string()) parse_fail(path, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> names(const Json& j, const std::string& path) {
  std::vector<std::string> out;
  std::size_t k = 0;
  for (const auto& e : array(j, path)) out.push_back(text(e, child(path, k++)));
  return out;
}

int index_of(const std::vector<std::string>& pool, const std::string& name, const std::string& path) {
  const auto it = std::find(pool.begin(), pool.end(), name);
  if (it == pool.end()) throw ModelError(ErrorKind::UnknownName, "at " + path + ": unknown name \"" + name + "\"", name);
  return static_cast<int>(it - pool.begin());
}

// An n×n matrix of booleans or 0/1, or a list of [x, y] pairs closed
// reflexively and transitively.
std::vector<std::vector<bool>> order_matrix(const Json& j, const std::vector<std::string>& pool, const std::string& path) {
  const std::size_t n = pool.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  if (const Json* m = optional_field(j, "leq")) {
    const std::string p = child(path, "leq");
    if (array(*m, p).size() != n) parse_fail(p, "expected " + std::to_string(n) + " rows");
    for (std::size_t x = 0; x < n; ++x) {
      const std::string row_path = child(p, x);
      const auto& row = array((*m)[x], row_path);
      if (row.size() != n) parse_fail(row_path, "expected " + std::to_string(n) + " entries");
      for (std::size_t y = 0; y < n; ++y) {
        const auto& e = row[y];
        if (e.is_boolean()) leq[x][y] = e.get<bool>();
        else if (e.is_number_integer() && (e.get<int>() == 0 || e.get<int>() == 1)) leq[x][y] = e.get<int>() == 1;
        else parse_fail(child(row_path, y), "expected 0, 1, true or false");
      }
    }
    return leq;
  }
  const Json* pairs = optional_field(j, "order");
  if (!pairs) parse_fail(path, "missing field \"leq\" or \"order\"");
  const std::string p = child(path, "order");
  for (std::size_t x = 0; x < n; ++x) leq[x][x] = true;
  std::size_t k = 0;
  for (const auto& pr : array(*pairs, p)) {
    const std::string pp = child(p, k++);
    if (!pr.is_array() || pr.size() != 2) parse_fail(pp, "expected a pair");
    leq[static_cast<std::size_t>(index_of(pool, text(pr[0], child(pp, 0)), pp))]
       [static_cast<std::size_t>(index_of(pool, text(pr[1], child(pp, 1)), pp))] = true;
  }
  for (std::size_t z = 0; z < n; ++z) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (leq[x][z] && leq[z][y]) leq[x][y] = true;
      }
    }
  }
  return leq;
}

Subset point_set(const Json& j, const std::vector<std::string>& points, const std::string& path) {
  if (j.is_string()) {
    return at_path(path, [&] { return parse_point_set(points, j.get<std::string>()); });
  }
  Subset s = 0;
  std::size_t k = 0;
  for (const auto& e : array(j, path)) s |= bit(index_of(points, text(e, child(path, k)), child(path, k))), ++k;
  return s;
}

Json point_list(const std::vector<std::string>& points, Subset s) {
  Json out = Json::array();
  for (int p : members(s)) out.push_back(points[static_cast<std::size_t>(p)]);
  return out;
}

std::vector<int> point_map(const Json& j, const FinSpace& source, const FinSpace& target, const std::string& path) {
  if (!j.is_object()) parse_fail(path, "expected an object from source points to target points");
  std::vector<int> table(source.size(), -1);
  for (const auto& [key, value] : j.items()) {
    const int p = index_of(source.points(), key, path);
    table[static_cast<std::size_t>(p)] = index_of(target.points(), text(value, child(path, key)), child(path, key));
  }
  for (std::size_t p = 0; p < table.size(); ++p) {
    if (table[p] < 0) parse_fail(path, "no image for point \"" + source.points()[p] + "\"");
  }
  return table;
}

Json map_json(const ContinuousMap& f) {
  Json out = Json::object();
  for (std::size_t p = 0; p < f.source().size(); ++p) {
    out[f.source().point(static_cast<int>(p))] = f.target().point(f(static_cast<int>(p)));
  }
  return out;
}

Elem element(const FinLattice& l, const SpacePtr& space, const Json& j, const std::string& path) {
  const std::string name = text(j, path);
  if (auto e = l.find(name)) return *e;
  if (space) {
    try {
      const Subset s = parse_point_set(space->points(), name);
      if (auto e = space->open_index(s)) return *e;
    } catch (const ModelError&) {
    }
  }
  throw ModelError(ErrorKind::UnknownName, "at " + path + ": unknown element \"" + name + "\"", name);
}

Implication table_from_json(const LatticePtr& l, const SpacePtr& space, const Json& j, const std::string& path) {
  const std::size_t n = l->size();
  if (array(j, path).size() != n) parse_fail(path, "expected " + std::to_string(n) + " rows");
  OpTable table;
  for (std::size_t a = 0; a < n; ++a) {
    const std::string rp = child(path, a);
    if (array(j[a], rp).size() != n) parse_fail(rp, "expected " + std::to_string(n) + " entries");
    for (std::size_t b = 0; b < n; ++b) table.push_back(element(*l, space, j[a][b], child(rp, b)));
  }
  return at_path(path, [&] { return Implication::validate(l, std::move(table)); });
}

std::size_t line_of(std::string_view text, std::size_t byte, std::size_t& column) {
  std::size_t line = 1;
  column = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return line;
}

}  // namespace

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t column = 0;
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    const std::size_t line = line_of(text, byte, column);
    std::string what = e.what();
    const auto cut = what.find("syntax error");
    throw ModelError(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                                                (cut == std::string::npos ? what : what.substr(cut)));
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json_text(buf.str());
  } catch (const ModelError& e) {
    throw ModelError(e.kind(), path + ": " + e.message());
  }
}

Subset parse_point_set(std::span<const std::string> points, std::string_view text) {
  const auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  const auto find = [&](std::string_view name) -> std::optional<int> {
    for (std::size_t k = 0; k < points.size(); ++k) {
      if (points[k] == name) return static_cast<int>(k);
    }
    return std::nullopt;
  };
  text = trim(text);
  if (auto p = find(text)) return bit(*p);
  if (text == "K" || text == "X") return full_set(points.size());
  if (text == "∅") return 0;
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw ModelError(ErrorKind::UnknownName, "not a point or point set", std::string(text));
  }
  text = trim(text.substr(1, text.size() - 2));
  Subset s = 0;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto name = trim(text.substr(0, comma));
    const auto p = find(name);
    if (!p) throw ModelError(ErrorKind::UnknownName, "unknown point", std::string(name));
    s |= bit(*p);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
  }
  return s;
}

LatticePtr lattice_from_json(const Json& j) {
  if (const Json* c = j.is_object() ? optional_field(j, "chain") : nullptr) {
    auto pool = names(*c, "/chain");
    return at_path("/chain", [&] { return chain(std::move(pool)); });
  }
  auto pool = names(field(j, "", "elements"), "/elements");
  const auto leq = order_matrix(j, pool, "");
  return at_path("", [&] { return make_lattice(std::move(pool), leq); });
}

Json to_json(const FinLattice& l) {
  Json leq = Json::array();
  for (std::size_t a = 0; a < l.size(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < l.size(); ++b) row.push_back(l.leq(static_cast<Elem>(a), static_cast<Elem>(b)) ? 1 : 0);
    leq.push_back(std::move(row));
  }
  return Json{{"elements", l.names()}, {"leq", std::move(leq)}};
}

namespace {

SpacePtr space_at(const Json& j, const std::string& path) {
  auto pts = names(field(j, path, "points"), child(path, "points"));
  std::vector<Subset> opens;
  const std::string op = child(path, "opens");
  std::size_t k = 0;
  for (const auto& o : array(field(j, path, "opens"), op)) opens.push_back(point_set(o, pts, child(op, k++)));
  return at_path(path, [&] { return FinSpace::make(std::move(pts), std::move(opens)); });
}

}  // namespace

SpacePtr space_from_json(const Json& j) { return space_at(j, ""); }

Json to_json(const FinSpace& x) {
  Json opens = Json::array();
  for (Subset u : x.opens()) opens.push_back(point_list(x.points(), u));
  return Json{{"points", x.points()}, {"opens", std::move(opens)}};
}

ContinuousMap map_from_json(const Json& j) {
  auto s = space_at(field(j, "", "source"), "/source");
  auto t = space_at(field(j, "", "target"), "/target");
  auto table = point_map(field(j, "", "map"), *s, *t, "/map");
  return at_path("/map", [&] { return ContinuousMap::make(s, t, std::move(table)); });
}

ImplicationModel implication_from_json(const Json& j) {
  if (!j.is_object()) parse_fail("", "expected an object");
  SpacePtr space;
  LatticePtr l;
  if (const Json* s = optional_field(j, "space")) {
    space = space_at(*s, "/space");
    l = space->lattice();
  } else {
    const Json& lj = field(j, "", "lattice");
    try {
      l = lattice_from_json(lj);
    } catch (const ModelError& e) {
      throw ModelError(e.kind(), "at /lattice: " + e.message(), e.witness());
    }
  }
  return {table_from_json(l, space, field(j, "", "table"), "/table"), space};
}

Json table_to_json(const Implication& imp) {
  const auto& l = imp.lattice();
  Json rows = Json::array();
  for (std::size_t a = 0; a < l.size(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < l.size(); ++b) row.push_back(l.name(imp(static_cast<Elem>(a), static_cast<Elem>(b))));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const ImplicationClass& cls, const FinLattice& l) {
  Json out{{"open", cls.open},
           {"closed", cls.closed},
           {"weakly_boolean", cls.weakly_boolean},
           {"meet_internalizing", cls.meet_internalizing},
           {"join_internalizing", cls.join_internalizing}};
  out["core"] = cls.core ? Json(l.name(*cls.core)) : Json(nullptr);
  if (cls.not_open_witness) out["not_open_witness"] = {l.name(cls.not_open_witness->first), l.name(cls.not_open_witness->second)};
  if (cls.not_closed_witness) {
    out["not_closed_witness"] = {l.name(cls.not_closed_witness->first), l.name(cls.not_closed_witness->second)};
  }
  return out;
}

KNFrame frame_from_json(const Json& j) {
  RawFrame raw;
  raw.points = names(field(j, "", "points"), "/points");
  raw.leq = order_matrix(j, raw.points, "");
  std::size_t k = 0;
  for (const auto& pr : array(field(j, "", "R"), "/R")) {
    const std::string pp = child("/R", k++);
    if (!pr.is_array() || pr.size() != 2) parse_fail(pp, "expected a pair");
    raw.relation.emplace_back(index_of(raw.points, text(pr[0], child(pp, 0)), pp), index_of(raw.points, text(pr[1], child(pp, 1)), pp));
  }
  if (const Json* b = optional_field(j, "B")) {
    std::vector<Subset> sets;
    k = 0;
    for (const auto& s : array(*b, "/B")) sets.push_back(point_set(s, raw.points, child("/B", k++)));
    raw.algebra = std::move(sets);
  }
  if (const Json* nb = optional_field(j, "N")) {
    if (!nb->is_object()) parse_fail("/N", "expected an object from points to lists of sets");
    std::vector<std::vector<Subset>> families(raw.points.size());
    for (const auto& [key, value] : nb->items()) {
      const std::string np = child("/N", key);
      auto& fam = families[static_cast<std::size_t>(index_of(raw.points, key, "/N"))];
      k = 0;
      for (const auto& s : array(value, np)) fam.push_back(point_set(s, raw.points, child(np, k++)));
    }
    raw.neighbourhoods = std::move(families);
  }
  return at_path("", [&] { return KNFrame::validate(raw); });
}

Json to_json(const KNFrame& frame) {
  const auto raw = frame.raw();
  Json leq = Json::array();
  for (const auto& row : raw.leq) {
    Json r = Json::array();
    for (bool b : row) r.push_back(b ? 1 : 0);
    leq.push_back(std::move(r));
  }
  Json rel = Json::array();
  for (const auto& [x, y] : raw.relation) rel.push_back({frame.point(x), frame.point(y)});
  Json out{{"points", frame.points()}, {"leq", std::move(leq)}, {"R", std::move(rel)}};
  Json b = Json::array();
  for (Subset s : frame.algebra()) b.push_back(point_list(frame.points(), s));
  out["B"] = std::move(b);
  Json n = Json::object();
  for (std::size_t x = 0; x < frame.size(); ++x) {
    Json fam = Json::array();
    for (Subset s : frame.neighbourhoods(static_cast<int>(x))) fam.push_back(point_list(frame.points(), s));
    n[frame.point(static_cast<int>(x))] = std::move(fam);
  }
  out["N"] = std::move(n);
  return out;
}

AdjointData adjoint_from_json(const Json& j) {
  LatticePtr l;
  try {
    l = lattice_from_json(field(j, "", "lattice"));
  } catch (const ModelError& e) {
    throw ModelError(e.kind(), "at /lattice: " + e.message(), e.witness());
  }
  const auto endo = [&](const char* key) {
    const std::string p = child("", key);
    const Json& m = field(j, "", key);
    std::vector<Elem> table;
    if (m.is_array()) {
      if (m.size() != l->size()) parse_fail(p, "expected " + std::to_string(l->size()) + " entries");
      for (std::size_t a = 0; a < m.size(); ++a) table.push_back(element(*l, nullptr, m[a], child(p, a)));
    } else if (m.is_object()) {
      table.assign(l->size(), -1);
      for (const auto& [key2, value] : m.items()) {
        table[static_cast<std::size_t>(index_of(l->names(), key2, p))] = element(*l, nullptr, value, child(p, key2));
      }
      for (std::size_t a = 0; a < table.size(); ++a) {
        if (table[a] < 0) parse_fail(p, "no value for element \"" + l->name(static_cast<Elem>(a)) + "\"");
      }
    } else {
      parse_fail(p, "expected an object or an array");
    }
    return at_path(p, [&] { return MonotoneMap::make(l, l, std::move(table)); });
  };
  auto nabla = endo("nabla");
  auto f = endo("F");
  return at_path("", [&] { return AdjointData::make(std::move(nabla), std::move(f)); });
}

SpaceCategory category_from_json(const Json& j) {
  const Json& spaces = field(j, "", "spaces");
  if (!spaces.is_object()) parse_fail("/spaces", "expected an object from names to spaces");
  std::vector<std::string> object_names;
  std::vector<SpacePtr> objects;
  for (const auto& [key, value] : spaces.items()) {
    object_names.push_back(key);
    objects.push_back(space_at(value, child("/spaces", key)));
  }
  const Json& maps = field(j, "", "maps");
  if (maps.is_string()) {
    if (maps.get<std::string>() != "all") parse_fail("/maps", "expected a list of maps or \"all\"");
    return at_path("", [&] { return full_category(std::move(object_names), std::move(objects)); });
  }
  std::vector<CategoryMap> list;
  std::size_t k = 0;
  for (const auto& m : array(maps, "/maps")) {
    const std::string mp = child("/maps", k++);
    const int s = index_of(object_names, text(field(m, mp, "source"), child(mp, "source")), child(mp, "source"));
    const int t = index_of(object_names, text(field(m, mp, "target"), child(mp, "target")), child(mp, "target"));
    const auto& sx = objects[static_cast<std::size_t>(s)];
    const auto& tx = objects[static_cast<std::size_t>(t)];
    auto table = point_map(field(m, mp, "map"), *sx, *tx, child(mp, "map"));
    std::string name = m.contains("name") ? text(m["name"], child(mp, "name")) : "m" + std::to_string(k - 1);
    list.push_back({std::move(name), s, t, at_path(mp, [&] { return ContinuousMap::make(sx, tx, std::move(table)); })});
  }
  return at_path("", [&] { return SpaceCategory::make(std::move(object_names), std::move(objects), std::move(list)); });
}

Json to_json(const SpaceCategory& c) {
  Json spaces = Json::object();
  for (std::size_t x = 0; x < c.size(); ++x) spaces[c.names()[x]] = to_json(*c.objects()[x]);
  Json maps = Json::array();
  for (const auto& m : c.maps()) {
    maps.push_back({{"name", m.name}, {"source", c.name(m.source)}, {"target", c.name(m.target)}, {"map", map_json(m.map)}});
  }
  return Json{{"spaces", std::move(spaces)}, {"maps", std::move(maps)}};
}

FiberAssignment assignment_from_json(const SpaceCategory& c, const Json& j) {
  if (!j.is_object()) parse_fail("", "expected an object from object names to lists of tables");
  FiberAssignment out(c.size());
  for (const auto& [key, value] : j.items()) {
    const int x = at_path("/", [&] { return c.find(key); });
    const std::string p = child("", key);
    std::vector<Implication> fiber;
    std::size_t k = 0;
    for (const auto& t : array(value, p)) {
      fiber.push_back(table_from_json(c.object(x)->lattice(), c.object(x), t, child(p, k++)));
    }
    out[static_cast<std::size_t>(x)] = make_fiber(std::move(fiber));
  }
  return out;
}

Json to_json(const SpaceCategory& c, const FiberAssignment& a) {
  Json out = Json::object();
  for (std::size_t x = 0; x < c.size(); ++x) {
    Json fiber = Json::array();
    for (const auto& imp : a[x]) fiber.push_back(table_to_json(imp));
    out[c.names()[x]] = std::move(fiber);
  }
  return out;
}

}  // namespace geoimp
