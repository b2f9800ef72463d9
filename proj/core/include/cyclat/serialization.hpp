#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cyclat/lattice_basis.hpp"
#include "cyclat/topo_extension.hpp"

namespace cyclat {

using Json = nlohmann::ordered_json;

/// The basis report exchanged by `basis` and `verify`:
///   { "graph": edge-list text, "tree": [ids], "cycles": [{"edges", "provenance"}],
///     "doubled": [ids] (simple bases only), "determinant": "decimal", "certified": bool }
struct BasisDocument {
  std::string graph;
  std::vector<EdgeId> tree;
  std::vector<std::vector<EdgeId>> cycles;
  std::vector<std::string> provenance;
  /// Tree edges t contributing the non-cycle vector 2 chi_t.
  std::vector<EdgeId> doubled;
  std::optional<Integer> determinant;
  bool certified = false;

  /// Cycle indicators followed by the doubled edges.
  std::vector<EdgeVector> vectors(const Multigraph& g) const;
};

BasisDocument basis_document(const Multigraph& g, const CycleBasis& basis);
BasisDocument basis_document(const Multigraph& g, const SimpleBasis& basis);

Json to_json(const BasisDocument& doc);
/// Throws ParseError naming the offending field.
BasisDocument basis_document_from_json(const Json& j);

/// {"vertices": [ids], "labels": [...], "edges": [[id, u, v], ...]}; ids are kept.
Json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const Json& j);

Json to_json(const ExtensionStep& step);
ExtensionStep extension_step_from_json(const Json& j);

/// {"base": graph, "steps": [...]}; replayable through apply_extension.
Json to_json(const ExtensionSequence& seq);
ExtensionSequence extension_sequence_from_json(const Json& j);

}  // namespace cyclat
