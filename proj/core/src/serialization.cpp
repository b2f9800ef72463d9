#include <algorithm>
#include <array>

#include "cyclat/serialization.hpp"

namespace cyclat {

namespace {

template <class T>
T field(const Json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(0, std::string(where) + ": missing \"" + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string(where) + ": bad \"" + key + "\": " + e.what());
  }
}

Json split_to_json(const std::optional<EdgeSplit>& s) {
  if (!s) return nullptr;
  return {{"edge", s->edge}, {"first", s->first}, {"second", s->second}, {"vertex", s->vertex}};
}

std::optional<EdgeSplit> split_from_json(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  const Json& s = j.at(key);
  return EdgeSplit{field<EdgeId>(s, "edge", key), field<EdgeId>(s, "first", key),
                   field<EdgeId>(s, "second", key), field<VertexId>(s, "vertex", key)};
}

}  // namespace

std::vector<EdgeVector> BasisDocument::vectors(const Multigraph& g) const {
  std::vector<EdgeVector> out;
  out.reserve(cycles.size() + doubled.size());
  for (const auto& c : cycles) out.push_back(EdgeVector::indicator(g, c));
  for (EdgeId t : doubled) {
    EdgeVector v = EdgeVector::zero(g);
    v.at(g, t) = 2;
    out.push_back(std::move(v));
  }
  return out;
}

BasisDocument basis_document(const Multigraph& g, const CycleBasis& basis) {
  BasisDocument doc;
  doc.graph = format_edge_list(g);
  if (basis.tree) {
    const auto t = basis.tree->tree_edges();
    doc.tree.assign(t.begin(), t.end());
    std::sort(doc.tree.begin(), doc.tree.end());
  }
  doc.cycles = basis.cycles;
  for (const Provenance& p : basis.provenance) doc.provenance.push_back(p.tag());
  return doc;
}

BasisDocument basis_document(const Multigraph& g, const SimpleBasis& basis) {
  BasisDocument doc;
  doc.graph = format_edge_list(g);
  const auto t = basis.tree.tree_edges();
  doc.tree.assign(t.begin(), t.end());
  std::sort(doc.tree.begin(), doc.tree.end());
  for (const auto& [e, cycle] : basis.cycle_part) {
    doc.cycles.push_back(cycle);
    doc.provenance.push_back("fundamental(" + std::to_string(e) + ")");
  }
  doc.doubled = basis.doubled_part;
  return doc;
}

Json to_json(const BasisDocument& doc) {
  Json j;
  j["graph"] = doc.graph;
  j["tree"] = doc.tree;
  Json cycles = Json::array();
  for (std::size_t i = 0; i < doc.cycles.size(); ++i) {
    cycles.push_back({{"edges", doc.cycles[i]},
                      {"provenance", i < doc.provenance.size() ? doc.provenance[i] : ""}});
  }
  j["cycles"] = std::move(cycles);
  if (!doc.doubled.empty()) j["doubled"] = doc.doubled;
  j["determinant"] = doc.determinant ? Json(doc.determinant->str()) : Json(nullptr);
  j["certified"] = doc.certified;
  return j;
}

BasisDocument basis_document_from_json(const Json& j) {
  BasisDocument doc;
  if (!j.is_object()) throw ParseError(0, "basis: expected a JSON object");
  // The graph echo is optional; without it verify skips the graph check.
  if (j.contains("graph")) doc.graph = field<std::string>(j, "graph", "basis");
  if (j.contains("tree")) doc.tree = field<std::vector<EdgeId>>(j, "tree", "basis");
  const Json& cycles = j.contains("cycles") ? j.at("cycles") : Json();
  if (!cycles.is_array()) throw ParseError(0, "basis: \"cycles\" must be an array");
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const std::string where = "cycle " + std::to_string(i);
    doc.cycles.push_back(field<std::vector<EdgeId>>(cycles[i], "edges", where.c_str()));
    const Json& tag = cycles[i].value("provenance", Json(""));
    doc.provenance.push_back(tag.is_string() ? tag.get<std::string>() : "");
  }
  if (j.contains("doubled")) doc.doubled = field<std::vector<EdgeId>>(j, "doubled", "basis");
  if (j.contains("determinant") && j.at("determinant").is_string()) {
    try {
      doc.determinant = Integer(j.at("determinant").get<std::string>());
    } catch (const std::exception&) {
      throw ParseError(0, "basis: \"determinant\" is not a decimal integer");
    }
  }
  doc.certified = j.value("certified", false);
  return doc;
}

Json graph_to_json(const Multigraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.id, e.u, e.v});
  Json j;
  j["vertices"] = std::vector<VertexId>(g.vertices().begin(), g.vertices().end());
  j["labels"] = std::vector<std::string>(g.labels().begin(), g.labels().end());
  j["edges"] = std::move(edges);
  return j;
}

Multigraph graph_from_json(const Json& j) {
  auto vertices = field<std::vector<VertexId>>(j, "vertices", "graph");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = field<std::vector<std::string>>(j, "labels", "graph");
  std::vector<Edge> edges;
  for (const auto& triple : field<std::vector<std::array<int, 3>>>(j, "edges", "graph")) {
    edges.push_back({triple[0], triple[1], triple[2]});
  }
  try {
    return Multigraph(std::move(vertices), std::move(edges), std::move(labels));
  } catch (const ArgumentError& e) {
    throw ParseError(0, std::string("graph: ") + e.what());
  }
}

Json to_json(const ExtensionStep& step) {
  Json j;
  j["kind"] = std::string(1, kind_letter(step.kind));
  j["new_edge"] = step.new_edge;
  j["a"] = step.a;
  j["b"] = step.b;
  j["split_f"] = split_to_json(step.split_f);
  j["split_g"] = split_to_json(step.split_g);
  return j;
}

ExtensionStep extension_step_from_json(const Json& j) {
  ExtensionStep step;
  const auto kind = field<std::string>(j, "kind", "step");
  if (kind == "A") {
    step.kind = ExtensionKind::A;
  } else if (kind == "B") {
    step.kind = ExtensionKind::B;
  } else if (kind == "C") {
    step.kind = ExtensionKind::C;
  } else {
    throw ParseError(0, "step: unknown kind '" + kind + "'");
  }
  step.new_edge = field<EdgeId>(j, "new_edge", "step");
  step.a = field<VertexId>(j, "a", "step");
  step.b = field<VertexId>(j, "b", "step");
  step.split_f = split_from_json(j, "split_f");
  step.split_g = split_from_json(j, "split_g");
  return step;
}

Json to_json(const ExtensionSequence& seq) {
  Json steps = Json::array();
  for (const auto& step : seq.steps) steps.push_back(to_json(step));
  Json j;
  j["base"] = graph_to_json(seq.base);
  j["steps"] = std::move(steps);
  return j;
}

ExtensionSequence extension_sequence_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("base") || !j.contains("steps") || !j.at("steps").is_array()) {
    throw ParseError(0, "extension sequence needs \"base\" and \"steps\"");
  }
  ExtensionSequence seq;
  seq.base = graph_from_json(j.at("base"));
  for (const Json& s : j.at("steps")) seq.steps.push_back(extension_step_from_json(s));
  return seq;
}

}  // namespace cyclat
