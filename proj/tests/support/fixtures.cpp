#include "fixtures.hpp"

#include <algorithm>
#include <filesystem>
#include <random>

namespace cyclat::testing {

std::string data_path(const std::string& file) {
  return std::string(CYCLAT_TEST_DATA_DIR) + "/" + file;
}

Multigraph load(const std::string& name) { return read_edge_list_file(data_path(name + ".txt")); }

std::vector<Fixture> all_fixtures() {
  std::vector<std::string> names;
  for (const auto& entry : std::filesystem::directory_iterator(CYCLAT_TEST_DATA_DIR)) {
    if (entry.path().extension() == ".txt") names.push_back(entry.path().stem().string());
  }
  std::sort(names.begin(), names.end());
  std::vector<Fixture> out;
  for (const auto& name : names) {
    Multigraph g = load(name);
    const bool ok = is_three_edge_connected(g);
    out.push_back({name, std::move(g), ok});
  }
  return out;
}

std::vector<Fixture> three_edge_connected_fixtures() {
  auto all = all_fixtures();
  std::erase_if(all, [](const Fixture& f) { return !f.three_edge_connected; });
  return all;
}

std::vector<Multigraph> random_corpus(std::size_t count, std::uint64_t seed, std::size_t max_edges,
                                      std::size_t max_vertices, std::size_t max_steps) {
  std::mt19937_64 rng(seed);
  std::vector<Multigraph> out;
  for (std::size_t i = 0; i < count; ++i) {
    GeneratorOptions opt;
    opt.steps = 2 + rng() % (max_steps - 1);
    opt.seed = rng();
    opt.max_edges = max_edges;
    opt.max_vertices = max_vertices;
    out.push_back(generate(opt).graph);
  }
  return out;
}

}  // namespace cyclat::testing
