#include "equicolor/json_io.hpp"

#include <string>

#include "equicolor/errors.hpp"
#include "equicolor/rational.hpp"

namespace equicolor {

namespace {

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InvalidInput(std::string("json: missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidInput(std::string("json: field \"") + key + "\" has the wrong type");
  }
}

void check_schema(const Json& j) {
  if (field<int>(j, "schema") != kSchemaVersion)
    throw InvalidInput("json: unsupported schema version");
}

ReductionKind parse_kind(const std::string& s) {
  if (s == "identity") return ReductionKind::identity;
  if (s == "pad") return ReductionKind::pad;
  if (s == "strip") return ReductionKind::strip;
  throw InvalidInput("json: unknown reduction kind " + s);
}

}  // namespace

Json coloring_to_json(const Coloring& c) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["r"] = c.num_classes();
  j["assignment"] = c.assignment();
  j["class_sizes"] = c.class_sizes();
  return j;
}

Coloring coloring_from_json(const Json& j) {
  check_schema(j);
  const int r = field<int>(j, "r");
  if (r < 1) throw InvalidInput("json: r must be positive");
  Coloring c = Coloring::from_assignment(r, field<std::vector<int>>(j, "assignment"));
  if (j.contains("class_sizes") && field<std::vector<int>>(j, "class_sizes") != c.class_sizes())
    throw InvalidInput("json: class_sizes disagree with the assignment");
  return c;
}

Json move_to_json(const Move& m) {
  Json j;
  j["vertex"] = m.vertex;
  j["from"] = m.from;
  j["to"] = m.to;
  j["tag"] = m.tag;
  j["step"] = m.step;
  return j;
}

Move move_from_json(const Json& j) {
  Move m;
  m.vertex = field<int>(j, "vertex");
  m.from = field<int>(j, "from");
  m.to = field<int>(j, "to");
  m.tag = field<std::string>(j, "tag");
  m.step = field<int>(j, "step");
  return m;
}

Json moves_to_json(std::span<const Move> moves) {
  Json arr = Json::array();
  for (const Move& m : moves) arr.push_back(move_to_json(m));
  return arr;
}

std::vector<Move> moves_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("json: moves must be an array");
  std::vector<Move> out;
  for (const Json& m : j) out.push_back(move_from_json(m));
  return out;
}

Json digraph_to_json(const ClassDigraph& d, int heldout) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["r"] = d.r();
  j["s"] = d.s();
  j["heldout"] = heldout;
  j["deficient"] = d.deficient();
  j["coloring"] = d.coloring().assignment();
  j["a"] = d.a();
  j["accessible"] = d.accessible_classes();
  j["terminal"] = d.terminal_classes();
  j["nonaccessible"] = d.nonaccessible_classes();
  Json arcs = Json::array();
  for (int i = 0; i < d.r(); ++i)
    for (int k = 0; k < d.r(); ++k)
      if (i != k && d.has_arc(i, k))
        arcs.push_back({{"from", i}, {"to", k}, {"witnesses", d.witnesses(i, k).size()}});
  j["arcs"] = std::move(arcs);
  Json weights = Json::object();
  if (d.deficient() >= 0 && d.b() > 0) {
    for (int c : d.accessible_classes()) {
      WeightQuery q = d.weight(c, {});
      Json row = Json::object();
      for (std::size_t i = 0; i < q.vertices.size(); ++i)
        row[std::to_string(q.vertices[i])] = to_string(q.values[i]);
      weights[std::to_string(c)] = std::move(row);
    }
  }
  j["weights"] = std::move(weights);
  return j;
}

Json stats_to_json(const SolverStats& st) {
  Json j;
  j["edges_readded"] = st.edges_readded;
  j["fix_phases"] = st.fix_phases;
  j["improvement_rounds"] = st.improvement_rounds;
  j["pattern_rounds"] = st.pattern_rounds;
  j["fallback_rounds"] = st.fallback_rounds;
  j["fallback_nodes"] = st.fallback_nodes;
  j["candidates_tried"] = st.candidates_tried;
  j["max_rounds_in_phase"] = st.max_rounds_in_phase;
  Json counts = Json::object();
  for (const auto& [k, v] : st.pattern_counts) counts[k] = v;
  j["pattern_counts"] = std::move(counts);
  return j;
}

Json trace_to_json(const RunTrace& t) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["r"] = t.r;
  j["mode"] = to_string(t.mode);
  j["seed"] = t.seed;
  Json red;
  red["kind"] = to_string(t.reduction.kind);
  red["original_n"] = t.reduction.original_n;
  red["t"] = t.reduction.t;
  red["stripped"] = t.reduction.stripped;
  j["reduction"] = std::move(red);
  Json events = Json::array();
  for (const FixEvent& ev : t.events) {
    Json e;
    e["x"] = ev.x;
    e["y"] = ev.y;
    e["conflict"] = ev.conflict;
    if (ev.conflict) {
      e["patterns"] = ev.patterns;
      e["moves"] = moves_to_json(ev.moves);
    }
    events.push_back(std::move(e));
  }
  j["events"] = std::move(events);
  return j;
}

RunTrace trace_from_json(const Json& j) {
  check_schema(j);
  RunTrace t;
  t.r = field<int>(j, "r");
  t.mode = parse_mode(field<std::string>(j, "mode"));
  t.seed = field<std::uint64_t>(j, "seed");
  const Json red = field<Json>(j, "reduction");
  t.reduction.kind = parse_kind(field<std::string>(red, "kind"));
  t.reduction.r = t.r;
  t.reduction.original_n = field<int>(red, "original_n");
  t.reduction.t = field<int>(red, "t");
  t.reduction.stripped = field<std::vector<int>>(red, "stripped");
  if (t.reduction.kind == ReductionKind::strip) {
    std::vector<char> gone(static_cast<std::size_t>(std::max(t.reduction.original_n, 0)), 0);
    for (int v : t.reduction.stripped) {
      if (v < 0 || v >= t.reduction.original_n) throw InvalidInput("json: stripped vertex out of range");
      gone[v] = 1;
    }
    for (int v = 0; v < t.reduction.original_n; ++v)
      if (!gone[v]) t.reduction.kept.push_back(v);
  }
  const Json events = field<Json>(j, "events");
  if (!events.is_array()) throw InvalidInput("json: events must be an array");
  for (const Json& e : events) {
    FixEvent ev;
    ev.x = field<int>(e, "x");
    ev.y = field<int>(e, "y");
    ev.conflict = field<bool>(e, "conflict");
    if (ev.conflict) {
      ev.patterns = field<std::vector<std::string>>(e, "patterns");
      ev.moves = moves_from_json(field<Json>(e, "moves"));
    }
    t.events.push_back(std::move(ev));
  }
  return t;
}

}  // namespace equicolor
