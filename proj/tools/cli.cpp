#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include <cyclat/cyclat.hpp>

namespace cyclat::cli {

namespace {

// Exhaustive oracles (cycle enumeration, HNF) only run up to this many edges.
constexpr std::size_t kOracleEdgeLimit = 14;

enum class Output { json, text };

struct Check {
  std::string name;
  std::string status;  // passed, failed or skipped
  std::string detail;
};

bool any_failed(const std::vector<Check>& checks) {
  return std::any_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.status == "failed"; });
}

Json to_json(const std::vector<Check>& checks) {
  Json out = Json::array();
  for (const Check& c : checks) {
    out.push_back({{"check", c.name}, {"status", c.status}, {"detail", c.detail}});
  }
  return out;
}

void print_checks(std::ostream& out, const std::vector<Check>& checks) {
  for (const Check& c : checks) out << c.name << ": " << c.status << " (" << c.detail << ")\n";
}

std::string join(std::span<const int> ids) {
  std::string s;
  for (int x : ids) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

Json vertex_labels(const Multigraph& g, std::span<const VertexId> vs) {
  Json out = Json::array();
  for (VertexId v : vs) out.push_back(g.label(v));
  return out;
}

void require_connected(const Multigraph& g) {
  const auto components = connected_components(g);
  if (components.size() <= 1) return;
  std::string msg = "graph is disconnected (" + std::to_string(components.size()) + " components):";
  for (const auto& c : components) {
    msg += " {";
    for (std::size_t i = 0; i < c.size(); ++i) msg += (i ? ", " : "") + g.label(c[i]);
    msg += "}";
  }
  throw PreconditionError(msg);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

// Rank and determinant of the cycle lattice, measured on one coordinate per
// series class (all coordinates when G is 3-edge-connected).
struct LatticeShape {
  std::size_t rank = 0;
  Integer determinant = 1;
  std::vector<EdgeId> coordinates;
};

LatticeShape lattice_shape(const Multigraph& g) {
  LatticeShape s;
  if (is_three_edge_connected(g)) {
    s.rank = g.num_edges();
    s.determinant = lattice_determinant(g);
    s.coordinates = g.edge_ids();
    return s;
  }
  const Cosimplification cos = cosimplify(g);
  s.rank = cos.hat_graph.num_edges();
  s.determinant = Integer(1) << (cos.hat_graph.num_vertices() -
                                 connected_components(cos.hat_graph).size());
  for (const auto& [rep, cls] : cos.section) s.coordinates.push_back(rep);
  return s;
}

struct Certification {
  std::vector<Check> checks;
  std::optional<Integer> determinant;
};

Certification certify(const Multigraph& g, const BasisDocument& doc) {
  Certification out;
  auto& checks = out.checks;

  if (!doc.graph.empty()) {
    const bool same = doc.graph == format_edge_list(g);
    checks.push_back({"graph", same ? "passed" : "failed",
                      same ? "matches the input" : "basis was built for a different graph"});
  }

  std::string bad;
  for (std::size_t i = 0; i < doc.cycles.size() && bad.empty(); ++i) {
    for (EdgeId e : doc.cycles[i]) {
      if (!g.has_edge(e)) bad = "entry " + std::to_string(i) + " uses unknown edge " + std::to_string(e);
    }
    if (bad.empty() && !is_cycle(g, doc.cycles[i])) {
      bad = "entry " + std::to_string(i) + " {" + join(doc.cycles[i]) + "} is not a cycle";
    }
  }
  for (EdgeId t : doc.doubled) {
    if (bad.empty() && !g.has_edge(t)) bad = "doubled edge " + std::to_string(t) + " is unknown";
  }
  checks.push_back({"cycles", bad.empty() ? "passed" : "failed",
                    bad.empty() ? std::to_string(doc.cycles.size()) + " valid cycles" : bad});
  if (!bad.empty()) return out;

  const auto vectors = doc.vectors(g);
  for (std::size_t i = 0; i < vectors.size() && bad.empty(); ++i) {
    const auto cert = is_lattice_member(g, vectors[i]);
    if (!cert.member) bad = "vector " + std::to_string(i) + ": " + cert.reason;
  }
  checks.push_back({"membership", bad.empty() ? "passed" : "failed",
                    bad.empty() ? "every vector lies in the cycle lattice" : bad});

  const LatticeShape shape = lattice_shape(g);
  const bool full = vectors.size() == shape.rank;
  checks.push_back({"cardinality", full ? "passed" : "failed",
                    std::to_string(vectors.size()) + " vectors, lattice rank " +
                        std::to_string(shape.rank)});
  if (full) {
    IntegerMatrix m(shape.rank, shape.rank);
    for (std::size_t r = 0; r < shape.rank; ++r) {
      for (std::size_t c = 0; c < shape.rank; ++c) m(r, c) = vectors[c].at(g, shape.coordinates[r]);
    }
    const Integer det = abs(exact_determinant(m));
    out.determinant = det;
    checks.push_back({"determinant", det == shape.determinant ? "passed" : "failed",
                      "|det| = " + det.str() + ", expected " + shape.determinant.str()});
  } else {
    checks.push_back({"determinant", "skipped", "basis has the wrong cardinality"});
  }

  if (g.num_edges() <= kOracleEdgeLimit) {
    const auto all = enumerate_cycles(g);
    const bool equal = hnf_lattices_equal(indicator_matrix(g, all),
                                          IntegerMatrix::from_columns(g.num_edges(), vectors));
    checks.push_back({"hnf", equal ? "passed" : "failed",
                      "compared with " + std::to_string(all.size()) + " enumerated cycles"});
  } else {
    checks.push_back({"hnf", "skipped",
                      "more than " + std::to_string(kOracleEdgeLimit) + " edges"});
  }
  return out;
}

VertexId resolve_vertex(const Multigraph& g, const std::string& token) {
  for (VertexId v : g.vertices()) {
    if (g.label(v) == token) return v;
  }
  throw ArgumentError("unknown vertex '" + token + "'");
}

void print_basis_text(std::ostream& out, const BasisDocument& doc) {
  for (std::size_t i = 0; i < doc.cycles.size(); ++i) {
    out << doc.provenance[i] << ": " << join(doc.cycles[i]) << '\n';
  }
  for (EdgeId t : doc.doubled) out << "doubled: " << t << '\n';
  out << "determinant " << (doc.determinant ? doc.determinant->str() : "unknown") << '\n';
  out << "certified " << (doc.certified ? "true" : "false") << '\n';
}

int cmd_analyze(const Multigraph& g, Output output, std::ostream& out) {
  const auto components = connected_components(g);
  const auto violation = three_edge_connectivity_violation(g);
  const SeriesPartition parts = bridges_and_series_classes(g);
  std::vector<std::vector<EdgeId>> series;
  for (const auto& cls : parts.classes) {
    if (cls.size() > 1) series.push_back(cls);
  }
  const Cosimplification cos = cosimplify(g);

  if (output == Output::text) {
    out << "vertices " << g.num_vertices() << "\nedges " << g.num_edges() << "\ncomponents "
        << components.size() << "\n3-edge-connected " << (violation ? "no" : "yes") << '\n';
    if (violation) out << "reason " << *violation << '\n';
    out << "bridges " << join(parts.bridges) << '\n';
    for (const auto& cls : series) out << "series class " << join(cls) << '\n';
    out << "cosimplification " << cos.hat_graph.num_vertices() << " vertices, "
        << cos.hat_graph.num_edges() << " edges, "
        << connected_components(cos.hat_graph).size() << " components\n";
    return kOk;
  }

  Json comps = Json::array();
  for (const auto& c : components) comps.push_back(vertex_labels(g, c));
  Json j;
  j["vertices"] = g.num_vertices();
  j["edges"] = g.num_edges();
  j["components"] = std::move(comps);
  j["three_edge_connected"] = !violation.has_value();
  j["violation"] = violation ? Json(*violation) : Json(nullptr);
  j["bridges"] = parts.bridges;
  j["series_classes"] = series;
  j["cosimplification"] = {{"vertices", cos.hat_graph.num_vertices()},
                           {"edges", cos.hat_graph.num_edges()},
                           {"components", connected_components(cos.hat_graph).size()},
                           {"deleted", cos.bridges},
                           {"contracted", cos.contracted}};
  out << j.dump(2) << '\n';
  return kOk;
}

struct BasisOptions {
  std::string method = "semi-fundamental";
  std::string tree_seed;
  bool verify = false;
};

int cmd_basis(const Multigraph& g, const BasisOptions& opt, Output output, std::ostream& out,
              std::ostream& err) {
  require_connected(g);
  std::optional<VertexId> root;
  if (!opt.tree_seed.empty()) {
    if (opt.method == "topological") {
      throw ArgumentError("--tree-seed applies to the simple and semi-fundamental methods");
    }
    root = resolve_vertex(g, opt.tree_seed);
  }

  BasisDocument doc;
  if (opt.method == "simple") {
    require_three_edge_connected(g);
    doc = basis_document(g, simple_basis(g, spanning_forest(g, root)));
  } else if (opt.method == "semi-fundamental") {
    doc = basis_document(g, semi_fundamental_basis(g, spanning_forest(g, root)).basis);
  } else {
    doc = basis_document(g, topological_basis(g));
  }
  doc.determinant = lattice_shape(g).determinant;

  std::vector<Check> checks;
  if (opt.verify) {
    Certification cert = certify(g, doc);
    checks = std::move(cert.checks);
    doc.determinant = cert.determinant;
    doc.certified = !any_failed(checks);
  }

  if (output == Output::text) {
    print_basis_text(out, doc);
    if (opt.verify) print_checks(out, checks);
  } else {
    Json j = to_json(doc);
    if (opt.verify) j["verification"] = to_json(checks);
    out << j.dump(2) << '\n';
  }
  if (opt.verify && !doc.certified) {
    err << "error: basis failed certification\n";
    return kVerificationFailure;
  }
  return kOk;
}

int cmd_verify(const Multigraph& g, const std::string& basis_path, Output output,
               std::ostream& out, std::ostream& err) {
  const BasisDocument doc = basis_document_from_json(read_json_file(basis_path));
  const Certification cert = certify(g, doc);
  const bool accepted = !any_failed(cert.checks);
  if (output == Output::text) {
    out << (accepted ? "accepted" : "rejected") << '\n';
    print_checks(out, cert.checks);
  } else {
    Json j;
    j["accepted"] = accepted;
    j["determinant"] = cert.determinant ? Json(cert.determinant->str()) : Json(nullptr);
    j["checks"] = to_json(cert.checks);
    out << j.dump(2) << '\n';
  }
  if (!accepted) {
    for (const Check& c : cert.checks) {
      if (c.status == "failed") err << "rejected: " << c.name << ": " << c.detail << '\n';
    }
    return kVerificationFailure;
  }
  return kOk;
}

int cmd_extend(const Multigraph& g, bool verify, Output output, std::ostream& out,
               std::ostream& err) {
  require_connected(g);
  require_three_edge_connected(g);
  const CompatibleChain chain = compatible_chain(g, verify);
  const auto& steps = chain.sequence.steps;

  std::vector<Check> checks;
  std::vector<Integer> dets;
  if (verify) {
    const auto graphs = chain.sequence.replay();
    const bool replayed = same_edges(graphs.back(), g);
    checks.push_back({"replay", replayed ? "passed" : "failed",
                      std::to_string(steps.size()) + " steps"});
    std::string bad_det, bad_ratio, bad_3ec, bad_nested;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const Multigraph& gi = graphs[i];
      if (bad_3ec.empty() && !is_three_edge_connected(gi)) bad_3ec = "G_" + std::to_string(i);
      const Integer det = basis_determinant(gi, chain.prefixes[i].cycles);
      dets.push_back(det);
      if (bad_det.empty() && det != lattice_determinant(gi)) {
        bad_det = "G_" + std::to_string(i) + ": " + det.str();
      }
      if (i == 0) continue;
      const ExtensionStep& s = steps[i - 1];
      const Integer want = s.kind == ExtensionKind::A ? 1 : s.kind == ExtensionKind::B ? 2 : 4;
      if (bad_ratio.empty() && dets[i] != dets[i - 1] * want) bad_ratio = "step " + std::to_string(i);
      for (const auto& c : chain.prefixes[i - 1].cycles) {
        const auto image = embed_cycle(s, c);
        if (bad_nested.empty() && std::find(chain.prefixes[i].cycles.begin(),
                                            chain.prefixes[i].cycles.end(),
                                            image) == chain.prefixes[i].cycles.end()) {
          bad_nested = "step " + std::to_string(i);
        }
      }
    }
    auto add = [&](const char* name, const std::string& bad, const char* ok) {
      checks.push_back({name, bad.empty() ? "passed" : "failed", bad.empty() ? ok : bad});
    };
    add("three_edge_connected", bad_3ec, "every intermediate graph");
    add("determinants", bad_det, "every prefix basis has |det| = 2^(n_i - 1)");
    add("ratios", bad_ratio, "1, 2, 4 for kinds A, B, C");
    add("nested", bad_nested, "every embedded prefix basis is contained in the next");
  }

  if (output == Output::text) {
    for (std::size_t i = 0; i < steps.size(); ++i) {
      out << "step " << i + 1 << ' ' << kind_letter(steps[i].kind) << " edge " << steps[i].new_edge
          << " basis " << chain.sizes[i];
      if (verify) out << " det " << dets[i + 1];
      out << '\n';
    }
    if (verify) print_checks(out, checks);
  } else {
    Json stages = Json::array();
    for (std::size_t i = 0; i < steps.size(); ++i) {
      Json s = {{"step", i + 1},
                {"kind", std::string(1, kind_letter(steps[i].kind))},
                {"new_edge", steps[i].new_edge},
                {"basis_size", chain.sizes[i]}};
      if (verify) s["determinant"] = dets[i + 1].str();
      stages.push_back(std::move(s));
    }
    BasisDocument doc = basis_document(g, chain.basis);
    doc.determinant = lattice_determinant(g);
    doc.certified = verify && !any_failed(checks);
    Json j;
    j["sequence"] = to_json(chain.sequence);
    j["chain"] = std::move(stages);
    j["basis"] = to_json(doc);
    if (verify) j["verification"] = to_json(checks);
    out << j.dump(2) << '\n';
  }
  if (any_failed(checks)) {
    err << "error: compatible chain failed verification\n";
    return kVerificationFailure;
  }
  return kOk;
}

struct HullOptions {
  std::optional<std::uint64_t> characteristic;
  std::string group;
};

int cmd_hull(const Multigraph& g, const HullOptions& opt, Output output, std::ostream& out,
             std::ostream& err) {
  if (opt.characteristic.has_value() == !opt.group.empty()) {
    throw ArgumentError("hull needs exactly one of --char and --group");
  }
  const bool small = g.num_edges() <= kOracleEdgeLimit;
  std::vector<std::vector<EdgeId>> cycles;
  if (small) cycles = enumerate_cycles(g);

  Json j;
  HullReport report;
  std::optional<bool> verified;
  std::string summary;
  if (opt.characteristic) {
    const FieldSpec field = parse_field_spec(std::to_string(*opt.characteristic));
    report = hull_dimension_report(g, field);
    if (small) {
      const IntegerMatrix m = indicator_matrix(g, cycles);
      const std::size_t rank = field.characteristic == 0 ? rank_rational(m)
                                                         : rank_mod_p(m, field.characteristic);
      verified = rank == report.dimension;
    }
    j["characteristic"] = field.characteristic;
    j["dimension"] = report.dimension;
    summary = "dimension " + std::to_string(report.dimension);
  } else {
    const AbelianGroupSpec group = parse_group_spec(opt.group);
    report = hull_group_report(g, group);
    if (small) {
      std::vector<EdgeVector> vectors;
      for (const auto& c : cycles) vectors.push_back(EdgeVector::indicator(g, c));
      try {
        verified = group_span_size(g.num_edges(), vectors, group.as_finite_group()) ==
                   report.structure.order();
      } catch (const CapacityError&) {
      }
    }
    Json factors = Json::array();
    for (const auto& f : report.structure.factors) factors.push_back(f.order());
    j["group"] = group.describe();
    j["factors"] = std::move(factors);
    j["structure"] = report.structure.describe();
    j["order"] = report.structure.order().str();
    summary = "structure " + report.structure.describe() + " order " + report.structure.order().str();
  }
  j["verified"] = verified.value_or(false);
  j["derived"] = report.derived;
  if (report.derived) {
    j["bridges"] = report.bridges;
    j["series_classes"] = report.series_classes;
  }

  if (output == Output::text) {
    out << summary << "\nverified " << (verified.value_or(false) ? "true" : "false") << '\n';
    if (report.derived) out << "derived from the cosimplification\n";
  } else {
    out << j.dump(2) << '\n';
  }
  if (verified == false) {
    err << "error: enumerated cycles disagree with the hull formula\n";
    return kVerificationFailure;
  }
  return kOk;
}

struct GenOptions {
  std::size_t steps = 8;
  std::uint64_t seed = 1;
  std::size_t count = 1;
  std::size_t max_vertices = 0;
  std::size_t max_edges = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::string out_dir;
  bool sequence = false;
};

int cmd_gen(const GenOptions& opt, std::ostream& out) {
  if ((opt.vertices == 0) != (opt.edges == 0)) {
    throw ArgumentError("--vertices and --edges go together");
  }
  if (!opt.out_dir.empty()) std::filesystem::create_directories(opt.out_dir);
  Json sequences = Json::array();
  for (std::size_t i = 0; i < opt.count; ++i) {
    const std::uint64_t seed = opt.count == 1 ? opt.seed : instance_seed(opt.seed, i);
    const GeneratedInstance inst =
        opt.vertices > 0 ? generate_sized(opt.vertices, opt.edges, seed)
                         : generate({opt.steps, seed, opt.max_vertices, opt.max_edges});
    if (opt.sequence) {
      sequences.push_back(to_json(inst.sequence));
      continue;
    }
    const std::string text = format_edge_list(inst.graph);
    if (!opt.out_dir.empty()) {
      const auto path = std::filesystem::path(opt.out_dir) / ("instance_" + std::to_string(i) + ".txt");
      std::ofstream file(path);
      file << "# seed " << seed << '\n' << text;
      if (!file) throw ArgumentError("cannot write " + path.string());
      out << path.string() << '\n';
    } else {
      if (i > 0) out << '\n';
      out << "# seed " << seed << '\n' << text;
    }
  }
  if (opt.sequence) out << (opt.count == 1 ? sequences[0] : sequences).dump(2) << '\n';
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cycle lattice bases of multigraphs", "cyclat"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output_name = "json";
  app.add_option("--output", output_name, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::string input;
  auto* analyze = app.add_subcommand("analyze", "Bridges, series classes and cosimplification");
  analyze->add_option("file", input, "edge-list file")->required();

  BasisOptions basis_opt;
  auto* basis = app.add_subcommand("basis", "Construct a lattice basis");
  basis->add_option("--method", basis_opt.method)
      ->check(CLI::IsMember({"simple", "semi-fundamental", "topological"}));
  basis->add_option("--tree-seed", basis_opt.tree_seed, "root vertex of the BFS spanning tree");
  basis->add_flag("--verify", basis_opt.verify, "certify determinant and lattice equality");
  basis->add_option("file", input, "edge-list file")->required();

  std::string basis_path;
  auto* verify = app.add_subcommand("verify", "Check a basis JSON document against a graph");
  verify->add_option("file", input, "edge-list file")->required();
  verify->add_option("basis", basis_path, "basis JSON")->required();

  bool extend_verify = false;
  auto* extend = app.add_subcommand("extend", "Extension sequence and compatible chain");
  extend->add_flag("--verify", extend_verify, "certify every prefix basis");
  extend->add_option("file", input, "edge-list file")->required();

  HullOptions hull_opt;
  auto* hull = app.add_subcommand("hull", "Linear hull over a prime field or finite group");
  auto* char_opt = hull->add_option("--char", hull_opt.characteristic, "0 or a prime");
  auto* group_opt = hull->add_option("--group", hull_opt.group, "e.g. 2^2,3");
  char_opt->excludes(group_opt);
  hull->add_option("file", input, "edge-list file")->required();

  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "Random 3-edge-connected multigraphs");
  gen->add_option("--steps", gen_opt.steps, "extension steps");
  gen->add_option("--seed", gen_opt.seed);
  gen->add_option("--count", gen_opt.count)->check(CLI::PositiveNumber);
  gen->add_option("--max-vertices", gen_opt.max_vertices);
  gen->add_option("--max-edges", gen_opt.max_edges);
  gen->add_option("--vertices", gen_opt.vertices, "exact size mode, with --edges");
  gen->add_option("--edges", gen_opt.edges);
  gen->add_option("--out-dir", gen_opt.out_dir, "write instance_<i>.txt files");
  gen->add_flag("--sequence", gen_opt.sequence, "emit extension-sequence JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const Output output = output_name == "text" ? Output::text : Output::json;
  try {
    if (gen->parsed()) return cmd_gen(gen_opt, out);
    const Multigraph g = read_edge_list_file(input);
    if (analyze->parsed()) return cmd_analyze(g, output, out);
    if (basis->parsed()) return cmd_basis(g, basis_opt, output, out, err);
    if (verify->parsed()) return cmd_verify(g, basis_path, output, out, err);
    if (extend->parsed()) return cmd_extend(g, extend_verify, output, out, err);
    if (hull->parsed()) return cmd_hull(g, hull_opt, output, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputStructure;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kInputStructure;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace cyclat::cli
