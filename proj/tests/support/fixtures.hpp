#pragma once

#include <string>
#include <vector>

#include <cyclat/cyclat.hpp>

namespace cyclat::testing {

struct Fixture {
  std::string name;
  Multigraph graph;
  bool three_edge_connected;
};

std::string data_path(const std::string& file);
Multigraph load(const std::string& name);  // "k4" -> tests/data/k4.txt

/// Every file in tests/data, in name order.
std::vector<Fixture> all_fixtures();
std::vector<Fixture> three_edge_connected_fixtures();

/// Random 3-edge-connected instances from `generate`, with 2..max_steps steps
/// drawn per instance. Deterministic in `seed`.
std::vector<Multigraph> random_corpus(std::size_t count, std::uint64_t seed,
                                      std::size_t max_edges, std::size_t max_vertices = 0,
                                      std::size_t max_steps = 16);

}  // namespace cyclat::testing
