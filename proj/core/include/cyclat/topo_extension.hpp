#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cyclat/edge_vector.hpp"
#include "cyclat/lattice_basis.hpp"
#include "cyclat/multigraph.hpp"

namespace cyclat {

enum class ExtensionKind { A, B, C };

char kind_letter(ExtensionKind kind);

/// Subdivision of an edge f = (x, y) of H by a new vertex: first = (x, vertex),
/// second = (vertex, y).
struct EdgeSplit {
  EdgeId edge = kNoId;
  EdgeId first = kNoId;
  EdgeId second = kNoId;
  VertexId vertex = kNoId;

  bool operator==(const EdgeSplit&) const = default;
};

/// One topological one-edge extension H -> G. The new edge joins a and b.
/// Kind B subdivides `split_f` at a; kind C also subdivides `split_g` at b.
struct ExtensionStep {
  ExtensionKind kind = ExtensionKind::A;
  EdgeId new_edge = kNoId;
  VertexId a = kNoId;
  VertexId b = kNoId;
  std::optional<EdgeSplit> split_f;
  std::optional<EdgeSplit> split_g;

  bool operator==(const ExtensionStep&) const = default;
};

/// Kind A: new edge between existing (possibly equal) a and b.
ExtensionStep extension_a(const Multigraph& h, VertexId a, VertexId b);
/// Kind B: subdivide f by a fresh vertex and join it to existing b.
ExtensionStep extension_b(const Multigraph& h, EdgeId f, VertexId b);
/// Kind C: subdivide distinct f and g and join the two fresh vertices.
ExtensionStep extension_c(const Multigraph& h, EdgeId f, EdgeId g);

/// Throws ArgumentError if the step does not fit H (dangling references,
/// reused ids, f = g for kind C).
void validate_extension(const Multigraph& h, const ExtensionStep& step);

Multigraph apply_extension(const Multigraph& h, const ExtensionStep& step);

/// Image of an edge of H in G: itself, or both halves when it was subdivided.
std::vector<EdgeId> edge_image(const ExtensionStep& step, EdgeId e);

/// The embedding of Z^E(H) into Z^E(G): subdivided coordinates are copied
/// onto both halves, the new edge gets 0.
EdgeVector embed_vector(const Multigraph& h, const Multigraph& g, const ExtensionStep& step,
                        const EdgeVector& x);
EdgeVector embed_vector(const Multigraph& h, const ExtensionStep& step, const EdgeVector& x);

/// Image of an edge set (e.g. a cycle) under the embedding, sorted.
std::vector<EdgeId> embed_cycle(const ExtensionStep& step, std::span<const EdgeId> cycle);

struct ExtensionSequence {
  Multigraph base;  // a single vertex
  std::vector<ExtensionStep> steps;

  /// G_0, G_1, ..., G_k obtained by applying the steps in order.
  std::vector<Multigraph> replay() const;
  Multigraph result() const;
};

/// Builds a sequence whose last graph is exactly G (same vertex and edge ids,
/// endpoints possibly listed in the other order). Paths of G are found by
/// depth-first search and turned into one step each; edges joining two
/// branch vertices are added as single-edge steps right away. The sequence
/// has m - n + 1 steps. Throws PreconditionError unless G is 3-edge-connected.
ExtensionSequence extension_sequence(const Multigraph& g);

/// Cycles extending a basis of H to one of G (1, 2 or 3 cycles by kind).
/// Kind A uses the path between a and b in `tree` when given, otherwise a
/// breadth-first path in H; kinds B and C use breadth-first paths in H minus
/// the subdivided edges.
std::vector<std::vector<EdgeId>> extending_cycles(const Multigraph& h, const ExtensionStep& step,
                                                  const SpanningForest* tree = nullptr);

/// Embedded basis followed by the extending cycles.
CycleBasis extend_basis(const Multigraph& h, const CycleBasis& basis, const ExtensionStep& step,
                        int step_number = -1);

struct CompatibleChain {
  ExtensionSequence sequence;
  /// Basis of G_k; cycle i was introduced at step provenance[i].step.
  CycleBasis basis;
  /// Basis of every G_i (empty unless prefixes were requested).
  std::vector<CycleBasis> prefixes;
  /// Number of basis cycles after each step.
  std::vector<std::size_t> sizes;
};

/// Extension sequence plus nested bases built step by step, keeping a spanning
/// tree of every G_i so kind-A cycles close a tree path.
CompatibleChain compatible_chain(const Multigraph& g, bool record_prefixes = false);
CompatibleChain compatible_chain(const ExtensionSequence& sequence, bool record_prefixes = false);

/// Final basis of the compatible chain. Connected graphs that are not
/// 3-edge-connected are cosimplified, each component is handled on its own
/// and the bases are lifted back.
CycleBasis topological_basis(const Multigraph& g);

}  // namespace cyclat
