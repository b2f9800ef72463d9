#pragma once

#include <span>
#include <vector>

#include "cyclat/multigraph.hpp"

namespace cyclat {

/// Integer vector in Z^E. Coordinates are stored in the dense edge order of
/// the graph the vector belongs to (`Multigraph::edge_index`).
class EdgeVector {
 public:
  EdgeVector() = default;
  explicit EdgeVector(std::size_t size) : coords_(size) {}
  explicit EdgeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}

  static EdgeVector zero(const Multigraph& g) { return EdgeVector(g.num_edges()); }
  /// Characteristic vector of an edge set (repeated ids accumulate).
  static EdgeVector indicator(const Multigraph& g, std::span<const EdgeId> edges);

  std::size_t size() const noexcept { return coords_.size(); }
  std::span<const Integer> coords() const noexcept { return coords_; }

  Integer& operator[](std::size_t pos) { return coords_[pos]; }
  const Integer& operator[](std::size_t pos) const { return coords_[pos]; }

  Integer& at(const Multigraph& g, EdgeId e) { return coords_.at(g.edge_index(e)); }
  const Integer& at(const Multigraph& g, EdgeId e) const {
    return coords_.at(g.edge_index(e));
  }

  bool is_zero() const;
  /// Edges with a non-zero coordinate, in id order.
  std::vector<EdgeId> support(const Multigraph& g) const;

  EdgeVector& operator+=(const EdgeVector& other);
  EdgeVector& operator-=(const EdgeVector& other);
  EdgeVector& operator*=(const Integer& scalar);
  /// this += scalar * other
  void add_scaled(const Integer& scalar, const EdgeVector& other);

  friend EdgeVector operator+(EdgeVector a, const EdgeVector& b) { return a += b; }
  friend EdgeVector operator-(EdgeVector a, const EdgeVector& b) { return a -= b; }
  friend EdgeVector operator*(const Integer& s, EdgeVector a) { return a *= s; }
  bool operator==(const EdgeVector&) const = default;

  /// Throws ArgumentError unless the vector has one coordinate per edge of g.
  void check_dimension(const Multigraph& g) const;

 private:
  std::vector<Integer> coords_;
};

}  // namespace cyclat
