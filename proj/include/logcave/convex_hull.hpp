#pragma once

#include <vector>

#include "logcave/numeric.hpp"

namespace logcave {

using RationalPoint = std::vector<Rational>;

/// Exact convex hull of finitely many rational points in R^D, of any dimension <= D.
class ConvexHull {
 public:
  /// normal·x <= offset (or == offset for the affine-hull equations).
  struct Halfspace {
    RationalPoint normal;
    Rational offset;
  };

  ConvexHull() = default;
  /// Throws std::invalid_argument on an empty set or points of differing length.
  explicit ConvexHull(std::vector<RationalPoint> points);

  int ambient_dimension() const { return ambient_; }
  /// Dimension of the affine hull.
  int dimension() const { return dimension_; }
  /// Extreme points in lexicographic order.
  const std::vector<RationalPoint>& vertices() const { return vertices_; }
  const std::vector<Halfspace>& facets() const { return facets_; }
  const std::vector<Halfspace>& equations() const { return equations_; }

  bool contains(const RationalPoint& x) const;
  /// D-dimensional Euclidean volume; zero for a degenerate hull.
  Rational volume() const { return volume_; }

  bool operator==(const ConvexHull& other) const { return vertices_ == other.vertices_; }

 private:
  int ambient_ = 0;
  int dimension_ = 0;
  std::vector<RationalPoint> vertices_;
  std::vector<Halfspace> facets_;
  std::vector<Halfspace> equations_;
  Rational volume_;
};

}  // namespace logcave
