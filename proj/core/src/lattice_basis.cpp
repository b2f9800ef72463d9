#include "cyclat/lattice_basis.hpp"

#include <algorithm>

#include "cyclat/oracle.hpp"

namespace cyclat {

void require_three_edge_connected(const Multigraph& g) {
  if (auto why = three_edge_connectivity_violation(g)) {
    throw PreconditionError("graph is not 3-edge-connected: " + *why);
  }
}

std::vector<EdgeVector> SimpleBasis::vectors(const Multigraph& g) const {
  std::vector<EdgeVector> out;
  out.reserve(cycle_part.size() + doubled_part.size());
  for (const auto& [e, cycle] : cycle_part) out.push_back(EdgeVector::indicator(g, cycle));
  for (EdgeId t : doubled_part) {
    EdgeVector x = EdgeVector::zero(g);
    x.at(g, t) = 2;
    out.push_back(std::move(x));
  }
  return out;
}

SimpleBasis simple_basis(const Multigraph& g, const SpanningForest& tree) {
  require_three_edge_connected(g);
  const FundamentalCycleMatrix x(g, tree);
  SimpleBasis basis;
  basis.tree = tree;
  for (EdgeId e : x.non_tree_edges()) basis.cycle_part.emplace_back(e, x.cycle(e));
  basis.doubled_part.assign(x.tree_edges().begin(), x.tree_edges().end());
  return basis;
}

Integer lattice_determinant(const Multigraph& g) {
  require_three_edge_connected(g);
  return Integer(1) << (g.num_vertices() - 1);
}

MembershipCertificate is_lattice_member(const Multigraph& g, const EdgeVector& p) {
  p.check_dimension(g);
  MembershipCertificate cert;
  const SeriesPartition part = bridges_and_series_classes(g);
  for (EdgeId b : part.bridges) {
    if (!p.at(g, b).is_zero()) {
      cert.reason = "non-zero on bridge " + std::to_string(b);
      return cert;
    }
  }
  for (const auto& cls : part.classes) {
    for (EdgeId e : cls) {
      if (p.at(g, e) != p.at(g, cls.front())) {
        cert.reason = "edges " + std::to_string(cls.front()) + " and " + std::to_string(e) +
                      " are in series but have different coordinates";
        return cert;
      }
    }
  }
  for (VertexId v : g.vertices()) {
    Integer sum = 0;
    for (EdgeId e : g.incident(v)) {
      sum += g.edge(e).is_loop() ? 2 * p.at(g, e) : p.at(g, e);
    }
    if (sum % 2 != 0) {
      cert.reason = "odd sum at vertex " + g.label(v);
      return cert;
    }
  }
  std::vector<EdgeId> odd;
  for (const Edge& e : g.edges()) {
    if (p.at(g, e.id) % 2 != 0) odd.push_back(e.id);
  }
  cert.member = true;
  cert.odd_cycles = decompose_into_cycles(g, odd);
  cert.even_part = p;
  for (const auto& cycle : cert.odd_cycles) cert.even_part -= EdgeVector::indicator(g, cycle);
  return cert;
}

SimpleCoordinates express_in_simple_basis(const Multigraph& g, const SpanningForest& tree,
                                          const EdgeVector& p) {
  require_three_edge_connected(g);
  const MembershipCertificate cert = is_lattice_member(g, p);
  if (!cert.member) throw MembershipError("vector is not in the cycle lattice: " + cert.reason);
  const FundamentalCycleMatrix x(g, tree);
  SimpleCoordinates coords;
  for (EdgeId e : x.non_tree_edges()) coords.cycle.push_back(p.at(g, e));
  for (EdgeId t : x.tree_edges()) {
    Integer s = 0;
    for (EdgeId e : x.row(t)) s += p.at(g, e);
    const Integer diff = p.at(g, t) - s;
    if (diff % 2 != 0) {
      throw InternalError("odd cut sum at tree edge " + std::to_string(t));
    }
    coords.doubled.push_back(diff / 2);
  }
  return coords;
}

EdgeVector reassemble(const Multigraph& g, const SimpleBasis& basis,
                      const SimpleCoordinates& coords) {
  if (coords.cycle.size() != basis.cycle_part.size() ||
      coords.doubled.size() != basis.doubled_part.size()) {
    throw ArgumentError("coordinate count does not match the basis");
  }
  EdgeVector p = EdgeVector::zero(g);
  for (std::size_t i = 0; i < coords.cycle.size(); ++i) {
    p.add_scaled(coords.cycle[i], EdgeVector::indicator(g, basis.cycle_part[i].second));
  }
  for (std::size_t i = 0; i < coords.doubled.size(); ++i) {
    p.at(g, basis.doubled_part[i]) += 2 * coords.doubled[i];
  }
  return p;
}

std::vector<SignedCycle> double_edge_combination(const Multigraph& g, EdgeId e) {
  require_three_edge_connected(g);
  const Edge& ed = g.edge(e);
  if (ed.is_loop()) return {{2, {e}}};

  const std::vector<EdgeId> removed{e};
  const Multigraph h = minor(g, removed, {}).result;
  const PathSystem paths = edge_disjoint_paths(h, ed.u, ed.v, 2);
  if (!paths.complete) {
    throw InternalError("fewer than two edge-disjoint paths avoid edge " + std::to_string(e));
  }
  std::vector<SignedCycle> out;
  std::vector<EdgeId> both;
  for (const auto& path : paths.paths) {
    std::vector<EdgeId> cycle = path;
    cycle.push_back(e);
    std::sort(cycle.begin(), cycle.end());
    if (!is_cycle(g, cycle)) throw InternalError("path plus edge is not a cycle");
    out.push_back({1, std::move(cycle)});
    both.insert(both.end(), path.begin(), path.end());
  }
  for (auto& cycle : decompose_into_cycles(g, both)) out.push_back({-1, std::move(cycle)});
  return out;
}

std::string Provenance::tag() const {
  std::string s = lifted ? "lifted:" : "";
  switch (origin) {
    case CycleOrigin::fundamental:
      return s + "fundamental(" + std::to_string(edge) + ")";
    case CycleOrigin::semi_fundamental:
      return s + "semi-fundamental(" + std::to_string(edge) + "," + std::to_string(partner) +
             "," + std::to_string(tree_edge) + ")";
    case CycleOrigin::extension:
      return s + "extension(" + std::to_string(step) + "," + std::string(1, extension_case) + ")";
  }
  return s;
}

std::vector<EdgeVector> CycleBasis::vectors(const Multigraph& g) const {
  std::vector<EdgeVector> out;
  out.reserve(cycles.size());
  for (const auto& c : cycles) out.push_back(EdgeVector::indicator(g, c));
  return out;
}

CycleBasis fundamental_cycles(const Multigraph& g, const SpanningForest& tree) {
  const FundamentalCycleMatrix x(g, tree);
  CycleBasis basis;
  basis.tree = tree;
  for (EdgeId e : x.non_tree_edges()) {
    basis.cycles.push_back(x.cycle(e));
    Provenance p;
    p.edge = e;
    basis.provenance.push_back(p);
  }
  return basis;
}

CycleBasis lift_basis(const Multigraph& g, const Cosimplification& cos,
                      std::span<const CycleBasis> component_bases) {
  const auto components = connected_components(cos.hat_graph);
  if (components.size() != component_bases.size()) {
    throw ArgumentError("expected " + std::to_string(components.size()) +
                        " component bases, got " + std::to_string(component_bases.size()));
  }
  std::vector<int> component_of(static_cast<std::size_t>(cos.hat_graph.vertex_id_bound()), -1);
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (VertexId v : components[c]) component_of[v] = static_cast<int>(c);
  }
  std::vector<int> section_of(static_cast<std::size_t>(cos.hat_graph.edge_id_bound()), -1);
  for (std::size_t i = 0; i < cos.section.size(); ++i) {
    section_of[cos.section[i].first] = static_cast<int>(i);
  }

  CycleBasis lifted;
  for (std::size_t c = 0; c < component_bases.size(); ++c) {
    const CycleBasis& basis = component_bases[c];
    if (basis.provenance.size() != basis.cycles.size()) {
      throw ArgumentError("basis provenance does not match its cycles");
    }
    for (std::size_t i = 0; i < basis.cycles.size(); ++i) {
      std::vector<EdgeId> cycle;
      for (EdgeId rep : basis.cycles[i]) {
        if (!cos.hat_graph.has_edge(rep) ||
            component_of[cos.hat_graph.edge(rep).u] != static_cast<int>(c)) {
          throw ArgumentError("edge " + std::to_string(rep) + " is not in component " +
                              std::to_string(c) + " of the cosimplification");
        }
        const auto& cls = cos.section[section_of[rep]].second;
        cycle.insert(cycle.end(), cls.begin(), cls.end());
      }
      std::sort(cycle.begin(), cycle.end());
      if (!is_cycle(g, cycle)) throw InternalError("lifted edge set is not a cycle of G");
      lifted.cycles.push_back(std::move(cycle));
      Provenance p = basis.provenance[i];
      p.lifted = true;
      lifted.provenance.push_back(p);
    }
  }
  return lifted;
}

std::vector<EdgeId> semi_fundamental_cycle(const FundamentalCycleMatrix& x, EdgeId e, EdgeId f) {
  const auto a = x.cycle(e);
  const auto b = x.cycle(f);
  std::vector<EdgeId> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Integer basis_determinant(const Multigraph& g, std::span<const std::vector<EdgeId>> cycles) {
  return abs(exact_determinant(indicator_matrix(g, cycles)));
}

}  // namespace cyclat
