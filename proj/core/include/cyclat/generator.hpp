#pragma once

#include <cstdint>

#include "cyclat/topo_extension.hpp"

namespace cyclat {

struct GeneratorOptions {
  std::size_t steps = 8;
  std::uint64_t seed = 1;
  /// 0 means unbounded. Steps that would exceed a bound are not sampled; the
  /// run stops early when no kind fits.
  std::size_t max_vertices = 0;
  std::size_t max_edges = 0;
};

struct GeneratedInstance {
  /// Starts from the single vertex 0; ids follow the extension constructors.
  ExtensionSequence sequence;
  /// sequence.result() renumbered to 0..n-1 and 0..m-1.
  Multigraph graph;
};

/// Random 3-edge-connected multigraph grown from one vertex by extensions.
/// Each step picks a kind uniformly among those that fit, then its targets
/// (vertices for A, edges for B and C) uniformly.
GeneratedInstance generate(const GeneratorOptions& options);

/// Same process steered to exactly n vertices and m edges (m - n + 1 steps).
/// Throws ArgumentError when the sampled sequence cannot reach (n, m); any
/// m >= 2n - 1 works.
GeneratedInstance generate_sized(std::size_t n, std::size_t m, std::uint64_t seed);

/// Seed of instance `index` in a batch, independent of batch size and order.
std::uint64_t instance_seed(std::uint64_t seed, std::size_t index);

}  // namespace cyclat
