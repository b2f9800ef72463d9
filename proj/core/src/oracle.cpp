#include "cyclat/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>

namespace cyclat {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ArgumentError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntegerMatrix IntegerMatrix::from_columns(std::size_t rows, std::span<const EdgeVector> columns) {
  IntegerMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw ArgumentError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

std::vector<Integer> IntegerMatrix::column(std::size_t c) const {
  std::vector<Integer> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntegerMatrix indicator_matrix(const Multigraph& g,
                               std::span<const std::vector<EdgeId>> cycles) {
  IntegerMatrix m(g.num_edges(), cycles.size());
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    for (EdgeId e : cycles[c]) m(g.edge_index(e), c) += 1;
  }
  return m;
}

std::vector<std::vector<EdgeId>> enumerate_cycles(const Multigraph& g, std::size_t limit) {
  std::vector<std::vector<EdgeId>> cycles;
  auto record = [&](std::vector<EdgeId> cycle) {
    if (cycles.size() == limit) {
      throw CapacityError("more than " + std::to_string(limit) + " cycles");
    }
    std::sort(cycle.begin(), cycle.end());
    cycles.push_back(std::move(cycle));
  };
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) record({e.id});
  }

  // Each cycle is found from its least vertex s, walking through larger
  // vertices only, and kept in the orientation whose first edge has the
  // smaller id of the two edges at s.
  std::vector<char> on_path(static_cast<std::size_t>(g.vertex_id_bound()), 0);
  std::vector<EdgeId> path;
  for (VertexId s : g.vertices()) {
    const std::size_t s_index = g.vertex_index(s);
    on_path[s] = 1;
    std::function<void(VertexId)> extend = [&](VertexId x) {
      for (EdgeId e : g.incident(x)) {
        const Edge& ed = g.edge(e);
        if (ed.is_loop()) continue;
        if (!path.empty() && e == path.back()) continue;
        const VertexId y = g.opposite(e, x);
        if (y == s) {
          if (!path.empty() && path.front() < e) {
            std::vector<EdgeId> cycle = path;
            cycle.push_back(e);
            record(std::move(cycle));
          }
          continue;
        }
        if (on_path[y] || g.vertex_index(y) < s_index) continue;
        on_path[y] = 1;
        path.push_back(e);
        extend(y);
        path.pop_back();
        on_path[y] = 0;
      }
    };
    extend(s);
    on_path[s] = 0;
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

Integer exact_determinant(const IntegerMatrix& input) {
  if (input.rows() != input.cols()) {
    throw ArgumentError("determinant of a " + std::to_string(input.rows()) + "x" +
                        std::to_string(input.cols()) + " matrix");
  }
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntegerMatrix m = input;
  Integer previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(k, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

struct ExtendedGcd {
  Integer g, s, t;  // s*a + t*b = g > 0
};

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (!r.is_zero()) {
    const Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

}  // namespace

IntegerMatrix hermite_normal_form(const IntegerMatrix& m) {
  const std::size_t rows = m.rows();
  std::vector<std::vector<Integer>> basis;
  std::vector<int> column_of_pivot(rows, -1);

  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::vector<Integer> v = m.column(c);
    for (std::size_t i = 0; i < rows; ++i) {
      if (v[i].is_zero()) continue;
      const int slot = column_of_pivot[i];
      if (slot < 0) {
        if (v[i] < 0) {
          for (Integer& x : v) x = -x;
        }
        column_of_pivot[i] = static_cast<int>(basis.size());
        basis.push_back(std::move(v));
        break;
      }
      // Unimodular 2x2 column operation clearing v[i] against the pivot.
      std::vector<Integer>& h = basis[slot];
      const auto [g, s, t] = extended_gcd(h[i], v[i]);
      const Integer a = h[i] / g, b = v[i] / g;
      for (std::size_t r = i; r < rows; ++r) {
        const Integer hr = h[r], vr = v[r];
        h[r] = s * hr + t * vr;
        v[r] = a * vr - b * hr;
      }
    }
  }

  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < rows; ++i) {
    if (column_of_pivot[i] >= 0) pivots.push_back(i);
  }
  IntegerMatrix out(rows, pivots.size());
  for (std::size_t j = 0; j < pivots.size(); ++j) {
    const auto& col = basis[column_of_pivot[pivots[j]]];
    for (std::size_t r = 0; r < rows; ++r) out(r, j) = col[r];
  }
  for (std::size_t j = 0; j < pivots.size(); ++j) {
    const std::size_t p = pivots[j];
    const Integer pivot = out(p, j);
    for (std::size_t k = 0; k < j; ++k) {
      const Integer q = floor_div(out(p, k), pivot);
      if (q.is_zero()) continue;
      for (std::size_t r = p; r < rows; ++r) out(r, k) -= q * out(r, j);
    }
  }
  return out;
}

bool hnf_lattices_equal(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows() != b.rows()) {
    throw ArgumentError("lattices live in dimensions " + std::to_string(a.rows()) +
                        " and " + std::to_string(b.rows()));
  }
  return hermite_normal_form(a) == hermite_normal_form(b);
}

bool hnf_contains(const IntegerMatrix& hnf, std::span<const Integer> v) {
  if (v.size() != hnf.rows()) throw ArgumentError("vector length does not match lattice");
  std::vector<Integer> r(v.begin(), v.end());
  std::size_t j = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const bool is_pivot = j < hnf.cols() && !hnf(i, j).is_zero();
    if (!is_pivot) {
      if (!r[i].is_zero()) return false;
      continue;
    }
    const Integer pivot = hnf(i, j);
    if (r[i] % pivot != 0) return false;
    const Integer q = r[i] / pivot;
    if (!q.is_zero()) {
      for (std::size_t k = i; k < r.size(); ++k) r[k] -= q * hnf(k, j);
    }
    ++j;
  }
  return true;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::size_t rank_mod_p(const IntegerMatrix& m, std::uint64_t p) {
  if (!is_prime(p)) throw ArgumentError(std::to_string(p) + " is not prime");
  if (p > std::numeric_limits<std::uint32_t>::max()) {
    throw ArgumentError("modulus too large");
  }
  const Integer modulus = p;
  std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Integer x = m(r, c) % modulus;
      if (x < 0) x += modulus;
      a[r][c] = x.convert_to<std::uint64_t>();
    }
  }
  auto power = [p](std::uint64_t base, std::uint64_t exp) {
    std::uint64_t result = 1;
    while (exp) {
      if (exp & 1) result = result * base % p;
      base = base * base % p;
      exp >>= 1;
    }
    return result;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && a[pivot][c] == 0) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[pivot], a[rank]);
    const std::uint64_t inv = power(a[rank][c], p - 2);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (a[r][c] == 0) continue;
      const std::uint64_t f = a[r][c] * inv % p;
      for (std::size_t k = c; k < m.cols(); ++k) {
        a[r][k] = (a[r][k] + (p - f) * a[rank][k]) % p;
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_rational(const IntegerMatrix& input) {
  IntegerMatrix m = input;
  Integer previous = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(rank, k));
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      for (std::size_t k = c + 1; k < m.cols(); ++k) {
        m(r, k) = (m(r, k) * m(rank, c) - m(r, c) * m(rank, k)) / previous;
      }
      m(r, c) = 0;
    }
    previous = m(rank, c);
    ++rank;
  }
  return rank;
}

std::uint64_t FiniteAbelianGroup::order() const {
  std::uint64_t n = 1;
  for (std::uint64_t q : factor_orders) n *= q;
  return n;
}

std::uint64_t group_span_size(std::size_t num_edges, std::span<const EdgeVector> vectors,
                              const FiniteAbelianGroup& group, std::uint64_t cap) {
  // Coordinates of A^E in mixed radix: digit (e, j) has radix q_j.
  std::vector<std::uint64_t> radix;
  for (std::size_t e = 0; e < num_edges; ++e) {
    for (std::uint64_t q : group.factor_orders) {
      if (q == 0) throw ArgumentError("cyclic factor of order 0");
      radix.push_back(q);
    }
  }
  std::uint64_t size = 1;
  for (std::uint64_t q : radix) {
    if (size > cap / q) {
      throw CapacityError("|A|^|E| exceeds the closure cap of " + std::to_string(cap));
    }
    size *= q;
  }
  const std::size_t r = group.factor_orders.size();
  std::vector<std::vector<std::uint64_t>> generators;
  for (const EdgeVector& v : vectors) {
    if (v.size() != num_edges) throw ArgumentError("generator length mismatch");
    for (std::size_t j = 0; j < r; ++j) {
      const Integer q = group.factor_orders[j];
      std::vector<std::uint64_t> digits(radix.size(), 0);
      for (std::size_t e = 0; e < num_edges; ++e) {
        Integer x = v[e] % q;
        if (x < 0) x += q;
        digits[e * r + j] = x.convert_to<std::uint64_t>();
      }
      generators.push_back(std::move(digits));
    }
  }

  auto decode = [&](std::uint64_t index) {
    std::vector<std::uint64_t> digits(radix.size());
    for (std::size_t i = 0; i < radix.size(); ++i) {
      digits[i] = index % radix[i];
      index /= radix[i];
    }
    return digits;
  };
  auto encode = [&](const std::vector<std::uint64_t>& digits) {
    std::uint64_t index = 0;
    for (std::size_t i = radix.size(); i-- > 0;) index = index * radix[i] + digits[i];
    return index;
  };

  std::vector<char> seen(size, 0);
  std::deque<std::uint64_t> queue{0};
  seen[0] = 1;
  std::uint64_t count = 1;
  while (!queue.empty()) {
    const auto digits = decode(queue.front());
    queue.pop_front();
    for (const auto& gen : generators) {
      auto next = digits;
      for (std::size_t i = 0; i < next.size(); ++i) next[i] = (next[i] + gen[i]) % radix[i];
      const std::uint64_t index = encode(next);
      if (!seen[index]) {
        seen[index] = 1;
        ++count;
        queue.push_back(index);
      }
    }
  }
  return count;
}

}  // namespace cyclat
