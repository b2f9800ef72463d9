#include "reference.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace cyclat::testing {

Integer cofactor_determinant(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n > 9) throw std::invalid_argument("cofactor expansion is limited to 9x9");
  if (n == 1) return m[0][0];
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<Integer>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    const Integer term = m[0][c] * cofactor_determinant(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

std::vector<std::vector<Integer>> to_rows(const IntegerMatrix& m) {
  std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
  }
  return rows;
}

namespace {

using RMatrix = std::vector<std::vector<Rational>>;

RMatrix to_rational(const IntegerMatrix& m) {
  RMatrix out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = Rational(m(r, c));
  }
  return out;
}

// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(RMatrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const Rational lead = a[row][c];
    for (auto& x : a[row]) x /= lead;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t k = 0; k < a[r].size(); ++k) a[r][k] -= f * a[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

Integer rational_determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
  RMatrix a = to_rational(m);
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  if (boost::multiprecision::denominator(det) != 1) throw std::logic_error("non-integral determinant");
  return boost::multiprecision::numerator(det);
}

std::optional<std::vector<Rational>> rational_solve(const IntegerMatrix& a,
                                                    const std::vector<Integer>& b) {
  RMatrix aug = to_rational(a);
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(Rational(b.at(r)));
  const auto pivots = rref(aug, a.cols() + 1);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  if (pivots.size() != a.cols()) throw std::logic_error("columns are not independent");
  std::vector<Rational> x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][a.cols()];
  return x;
}

bool in_lattice_of(const IntegerMatrix& basis, const std::vector<Integer>& v) {
  const auto x = rational_solve(basis, v);
  if (!x) return false;
  return std::all_of(x->begin(), x->end(),
                     [](const Rational& q) { return boost::multiprecision::denominator(q) == 1; });
}

bool same_lattice(const IntegerMatrix& a, const IntegerMatrix& b) {
  for (std::size_t c = 0; c < b.cols(); ++c) {
    if (!in_lattice_of(a, b.column(c))) return false;
  }
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (!in_lattice_of(b, a.column(c))) return false;
  }
  return true;
}

std::vector<std::vector<EdgeId>> brute_force_cycles(const Multigraph& g) {
  const std::size_t m = g.num_edges();
  if (m > 20) throw std::invalid_argument("too many edges for subset enumeration");
  const auto edges = g.edges();
  std::vector<std::vector<EdgeId>> out;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::map<VertexId, int> degree;
    std::map<VertexId, std::vector<VertexId>> adj;
    std::vector<EdgeId> chosen;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(mask >> i & 1u)) continue;
      const Edge& e = edges[i];
      chosen.push_back(e.id);
      degree[e.u] += 1;
      degree[e.v] += 1;
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    if (!std::all_of(degree.begin(), degree.end(), [](const auto& d) { return d.second == 2; })) {
      continue;
    }
    std::set<VertexId> seen{degree.begin()->first};
    std::vector<VertexId> stack{degree.begin()->first};
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : adj[v]) {
        if (seen.insert(w).second) stack.push_back(w);
      }
    }
    if (seen.size() != degree.size()) continue;
    std::sort(chosen.begin(), chosen.end());
    out.push_back(std::move(chosen));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool brute_force_three_edge_connected(const Multigraph& g) {
  if (g.num_vertices() == 0) return false;
  const auto edges = g.edges();
  auto connected_without = [&](std::size_t x, std::size_t y) {
    std::map<VertexId, std::vector<VertexId>> adj;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (i == x || i == y) continue;
      adj[edges[i].u].push_back(edges[i].v);
      adj[edges[i].v].push_back(edges[i].u);
    }
    std::set<VertexId> seen{g.vertices().front()};
    std::vector<VertexId> stack{g.vertices().front()};
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : adj[v]) {
        if (seen.insert(w).second) stack.push_back(w);
      }
    }
    return seen.size() == g.num_vertices();
  };
  const std::size_t none = edges.size();
  for (std::size_t x = 0; x <= none; ++x) {
    for (std::size_t y = x; y <= none; ++y) {
      if (!connected_without(x, y)) return false;
    }
  }
  return true;
}

std::size_t brute_force_span_size(const std::vector<std::vector<int>>& vectors,
                                  const std::vector<int>& factor_orders) {
  const std::size_t dim = vectors.empty() ? 0 : vectors.front().size();
  const std::size_t width = factor_orders.size();
  // All group elements a = (a_1, ..., a_r).
  std::vector<std::vector<int>> elements{{}};
  for (int q : factor_orders) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : elements) {
      for (int x = 0; x < q; ++x) {
        next.push_back(prefix);
        next.back().push_back(x);
      }
    }
    elements = std::move(next);
  }
  std::set<std::vector<int>> span{std::vector<int>(dim * width, 0)};
  for (const auto& v : vectors) {
    std::set<std::vector<int>> next;
    for (const auto& s : span) {
      for (const auto& a : elements) {
        std::vector<int> t = s;
        for (std::size_t e = 0; e < dim; ++e) {
          for (std::size_t j = 0; j < width; ++j) {
            const int q = factor_orders[j];
            t[e * width + j] = ((t[e * width + j] + a[j] * v[e]) % q + q) % q;
          }
        }
        next.insert(std::move(t));
      }
    }
    span = std::move(next);
  }
  return span.size();
}

std::size_t brute_force_rank_mod_p(const std::vector<std::vector<int>>& vectors, int p) {
  std::size_t size = brute_force_span_size(vectors, {p});
  std::size_t rank = 0;
  while (size > 1) {
    size /= static_cast<std::size_t>(p);
    ++rank;
  }
  return rank;
}

int brute_force_tree_diameter(const Multigraph& g, const SpanningForest& tree) {
  std::map<VertexId, std::vector<VertexId>> adj;
  for (EdgeId t : tree.tree_edges()) {
    const Edge& e = g.edge(t);
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  int best = 0;
  for (VertexId s : g.vertices()) {
    std::map<VertexId, int> dist{{s, 0}};
    std::queue<VertexId> queue;
    queue.push(s);
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop();
      best = std::max(best, dist[v]);
      for (VertexId w : adj[v]) {
        if (dist.emplace(w, dist[v] + 1).second) queue.push(w);
      }
    }
  }
  return best;
}

std::vector<std::vector<int>> small_vectors(const Multigraph& g,
                                            const std::vector<std::vector<EdgeId>>& cycles) {
  std::vector<std::vector<int>> out;
  for (const auto& c : cycles) {
    std::vector<int> v(g.num_edges(), 0);
    for (EdgeId e : c) v[g.edge_index(e)] += 1;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace cyclat::testing
