#include "cyclat/edge_vector.hpp"

#include <algorithm>

namespace cyclat {

EdgeVector EdgeVector::indicator(const Multigraph& g, std::span<const EdgeId> edges) {
  EdgeVector x(g.num_edges());
  for (EdgeId e : edges) x.coords_[g.edge_index(e)] += 1;
  return x;
}

bool EdgeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Integer& c) { return c.is_zero(); });
}

std::vector<EdgeId> EdgeVector::support(const Multigraph& g) const {
  check_dimension(g);
  std::vector<EdgeId> ids;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!coords_[i].is_zero()) ids.push_back(g.edges()[i].id);
  }
  return ids;
}

EdgeVector& EdgeVector::operator+=(const EdgeVector& other) {
  if (other.size() != size()) throw ArgumentError("edge vector dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

EdgeVector& EdgeVector::operator-=(const EdgeVector& other) {
  if (other.size() != size()) throw ArgumentError("edge vector dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

EdgeVector& EdgeVector::operator*=(const Integer& scalar) {
  for (Integer& c : coords_) c *= scalar;
  return *this;
}

void EdgeVector::add_scaled(const Integer& scalar, const EdgeVector& other) {
  if (other.size() != size()) throw ArgumentError("edge vector dimension mismatch");
  if (scalar.is_zero()) return;
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += scalar * other.coords_[i];
}

void EdgeVector::check_dimension(const Multigraph& g) const {
  if (coords_.size() != g.num_edges()) {
    throw ArgumentError("edge vector has " + std::to_string(coords_.size()) +
                        " coordinates, graph has " + std::to_string(g.num_edges()) +
                        " edges");
  }
}

}  // namespace cyclat
