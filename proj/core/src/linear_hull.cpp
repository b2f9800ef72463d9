#include <algorithm>
#include <charconv>
#include <map>

#include "cyclat/linear_hull.hpp"

namespace cyclat {

std::uint64_t PrimePowerFactor::order() const {
  std::uint64_t out = 1;
  for (int i = 0; i < exponent; ++i) out *= prime;
  return out;
}

Integer AbelianGroupSpec::order() const {
  Integer out = 1;
  for (const auto& f : factors) out *= f.order();
  return out;
}

FiniteAbelianGroup AbelianGroupSpec::as_finite_group() const {
  FiniteAbelianGroup out;
  for (const auto& f : factors) out.factor_orders.push_back(f.order());
  return out;
}

std::string AbelianGroupSpec::describe() const {
  if (factors.empty()) return "0";
  std::map<PrimePowerFactor, std::size_t> counts;
  for (const auto& f : factors) ++counts[f];
  std::string out;
  for (const auto& [f, count] : counts) {
    if (!out.empty()) out += " + ";
    out += "C" + std::to_string(f.order()) + "^" + std::to_string(count);
  }
  return out;
}

namespace {

std::uint64_t parse_unsigned(std::string_view token, std::string_view what) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) {
    throw ArgumentError("invalid " + std::string(what) + " '" + std::string(token) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

PrimePowerFactor as_prime_power(std::uint64_t q) {
  if (q < 2) throw ArgumentError("group factor " + std::to_string(q) + " must exceed 1");
  for (std::uint64_t p = 2; p * p <= q; ++p) {
    if (q % p != 0) continue;
    PrimePowerFactor f{p, 0};
    while (q % p == 0) {
      q /= p;
      ++f.exponent;
    }
    if (q != 1) throw ArgumentError("group factor is not a prime power");
    return f;
  }
  return {q, 1};
}

void check_field(FieldSpec field) {
  if (field.characteristic != 0 && !is_prime(field.characteristic)) {
    throw ArgumentError("characteristic " + std::to_string(field.characteristic) +
                        " is neither 0 nor prime");
  }
}

std::size_t dimension_formula(std::size_t m, std::size_t n, FieldSpec field) {
  return field.characteristic == 2 ? m - n + 1 : m;
}

void add_structure(AbelianGroupSpec& out, std::size_t m, std::size_t n,
                   const AbelianGroupSpec& group) {
  for (const auto& f : group.factors) {
    if (f.prime != 2) {
      out.factors.insert(out.factors.end(), m, f);
      continue;
    }
    out.factors.insert(out.factors.end(), m - n + 1, f);
    if (f.exponent > 1) out.factors.insert(out.factors.end(), n - 1, {2, f.exponent - 1});
  }
}

// Per-component (m, n) of the cosimplification.
std::vector<std::pair<std::size_t, std::size_t>> cosimplified_sizes(const Multigraph& g,
                                                                    HullReport& report) {
  const Cosimplification cos = cosimplify(g);
  report.derived = true;
  report.bridges = cos.bridges.size();
  for (const auto& [rep, cls] : cos.section) {
    if (cls.size() > 1) ++report.series_classes;
  }
  std::vector<std::pair<std::size_t, std::size_t>> sizes;
  for (const auto& component : connected_components(cos.hat_graph)) {
    const Multigraph sub = induced_subgraph(cos.hat_graph, component);
    sizes.emplace_back(sub.num_edges(), sub.num_vertices());
  }
  return sizes;
}

// Columns of `vectors` reduced into [0, p); p = 0 leaves them unchanged.
IntegerMatrix reduced(const Multigraph& g, std::span<const EdgeVector> vectors,
                      std::uint64_t p) {
  IntegerMatrix out = IntegerMatrix::from_columns(g.num_edges(), vectors);
  if (p == 0) return out;
  for (std::size_t r = 0; r < out.rows(); ++r) {
    for (std::size_t c = 0; c < out.cols(); ++c) {
      Integer& x = out(r, c);
      x %= p;
      if (x < 0) x += p;
    }
  }
  return out;
}

void check_rank(const IntegerMatrix& m, std::uint64_t p, std::size_t expected) {
  const std::size_t rank = p == 0 ? rank_rational(m) : rank_mod_p(m, p);
  if (rank != expected || m.cols() != expected) {
    throw InternalError("basis reduced modulo " + std::to_string(p) + " has " +
                        std::to_string(m.cols()) + " vectors of rank " + std::to_string(rank) +
                        ", expected " + std::to_string(expected));
  }
}

// Greedy GF(2)-independent subset, in input order.
std::vector<EdgeVector> independent_mod_2(const Multigraph& g,
                                          std::span<const EdgeVector> vectors) {
  const std::size_t words = (g.num_edges() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows;
  std::vector<std::size_t> pivots;
  std::vector<EdgeVector> out;
  for (const EdgeVector& v : vectors) {
    std::vector<std::uint64_t> bits(words, 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (boost::multiprecision::bit_test(boost::multiprecision::abs(v[i]), 0)) {
        bits[i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if ((bits[pivots[r] / 64] >> (pivots[r] % 64)) & 1) {
        for (std::size_t w = 0; w < words; ++w) bits[w] ^= rows[r][w];
      }
    }
    auto it = std::find_if(bits.begin(), bits.end(), [](std::uint64_t w) { return w != 0; });
    if (it == bits.end()) continue;
    const std::size_t word = static_cast<std::size_t>(it - bits.begin());
    pivots.push_back(word * 64 + static_cast<std::size_t>(__builtin_ctzll(*it)));
    rows.push_back(std::move(bits));
    out.push_back(v);
  }
  return out;
}

}  // namespace

AbelianGroupSpec parse_group_spec(std::string_view text) {
  AbelianGroupSpec out;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view token = trim(text.substr(0, comma));
    const auto caret = token.find('^');
    if (caret == std::string_view::npos) {
      out.factors.push_back(as_prime_power(parse_unsigned(token, "group factor")));
    } else {
      const std::uint64_t p = parse_unsigned(trim(token.substr(0, caret)), "prime");
      const std::uint64_t k = parse_unsigned(trim(token.substr(caret + 1)), "exponent");
      if (!is_prime(p)) throw ArgumentError(std::to_string(p) + " is not prime");
      if (k < 1 || k > 62) throw ArgumentError("exponent must lie in [1, 62]");
      out.factors.push_back({p, static_cast<int>(k)});
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

FieldSpec parse_field_spec(std::string_view text) {
  FieldSpec field{parse_unsigned(trim(text), "characteristic")};
  check_field(field);
  return field;
}

std::size_t hull_dimension(const Multigraph& g, FieldSpec field) {
  check_field(field);
  require_three_edge_connected(g);
  return dimension_formula(g.num_edges(), g.num_vertices(), field);
}

AbelianGroupSpec hull_group_structure(const Multigraph& g, const AbelianGroupSpec& group) {
  require_three_edge_connected(g);
  AbelianGroupSpec out;
  add_structure(out, g.num_edges(), g.num_vertices(), group);
  return out;
}

HullReport hull_dimension_report(const Multigraph& g, FieldSpec field) {
  check_field(field);
  HullReport report;
  if (is_three_edge_connected(g)) {
    report.dimension = dimension_formula(g.num_edges(), g.num_vertices(), field);
    return report;
  }
  for (const auto& [m, n] : cosimplified_sizes(g, report)) {
    report.dimension += dimension_formula(m, n, field);
  }
  return report;
}

HullReport hull_group_report(const Multigraph& g, const AbelianGroupSpec& group) {
  HullReport report;
  if (is_three_edge_connected(g)) {
    report.structure = hull_group_structure(g, group);
    return report;
  }
  for (const auto& [m, n] : cosimplified_sizes(g, report)) add_structure(report.structure, m, n, group);
  return report;
}

IntegerMatrix hull_basis_mod_p(const Multigraph& g, FieldSpec field, const CycleBasis& basis) {
  const std::size_t dim = hull_dimension(g, field);
  const std::uint64_t p = field.characteristic;
  if (p != 2) {
    const auto vectors = basis.vectors(g);
    auto out = reduced(g, vectors, p);
    check_rank(out, p, dim);
    return out;
  }
  std::vector<std::vector<EdgeId>> fundamental;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis.provenance.size() == basis.size() &&
        basis.provenance[i].origin == CycleOrigin::fundamental) {
      fundamental.push_back(basis.cycles[i]);
    }
  }
  std::vector<EdgeVector> vectors;
  if (fundamental.size() == dim) {
    for (const auto& c : fundamental) vectors.push_back(EdgeVector::indicator(g, c));
  } else {
    vectors = independent_mod_2(g, basis.vectors(g));
  }
  auto out = reduced(g, vectors, 2);
  check_rank(out, 2, dim);
  return out;
}

IntegerMatrix hull_basis_mod_p(const Multigraph& g, FieldSpec field, const SimpleBasis& basis) {
  const std::size_t dim = hull_dimension(g, field);
  const std::uint64_t p = field.characteristic;
  std::vector<EdgeVector> vectors;
  if (p == 2) {
    for (const auto& [e, cycle] : basis.cycle_part) vectors.push_back(EdgeVector::indicator(g, cycle));
  } else {
    vectors = basis.vectors(g);
  }
  auto out = reduced(g, vectors, p);
  check_rank(out, p, dim);
  return out;
}

}  // namespace cyclat
