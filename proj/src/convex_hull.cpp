#include "logcave/convex_hull.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace logcave {

namespace {

Rational dot(const RationalPoint& a, const RationalPoint& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RationalPoint minus(const RationalPoint& a, const RationalPoint& b) {
  RationalPoint out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

// Basis of {n : M n = 0} for M already in RREF with the given pivots.
std::vector<RationalPoint> null_space(const RationalMatrix& m, const std::vector<std::size_t>& pivots,
                                      std::size_t cols) {
  std::vector<RationalPoint> out;
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalPoint v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

struct Facet {
  std::vector<std::size_t> vertices;  // sorted
  RationalPoint normal;
  Rational offset;
};

// Hyperplane through `dim` points of R^dim, oriented so that `inside` lies strictly below.
Facet make_facet(std::vector<std::size_t> ids, const std::vector<RationalPoint>& pts,
                 const RationalPoint& inside) {
  const std::size_t dim = inside.size();
  std::sort(ids.begin(), ids.end());
  RationalMatrix diffs;
  for (std::size_t i = 1; i < ids.size(); ++i) diffs.push_back(minus(pts[ids[i]], pts[ids[0]]));
  const auto pivots = rref(diffs, dim);
  auto normals = null_space(diffs, pivots, dim);
  if (normals.size() != 1) throw std::logic_error("degenerate facet in hull construction");
  RationalPoint n = std::move(normals.front());
  Rational off = dot(n, pts[ids[0]]);
  if (dot(n, inside) > off) {
    for (auto& x : n) x = -x;
    off = -off;
  }
  return {std::move(ids), std::move(n), std::move(off)};
}

}  // namespace

ConvexHull::ConvexHull(std::vector<RationalPoint> points) {
  if (points.empty()) throw std::invalid_argument("convex hull of an empty set");
  ambient_ = static_cast<int>(points.front().size());
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != ambient_) throw std::invalid_argument("hull points differ in length");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const std::size_t D = static_cast<std::size_t>(ambient_);

  // Affine hull: equations, and pivot coordinates that parametrize it.
  RationalMatrix span;
  for (std::size_t i = 1; i < points.size(); ++i) span.push_back(minus(points[i], points[0]));
  const auto pivots = rref(span, D);
  dimension_ = static_cast<int>(pivots.size());
  for (auto& n : null_space(span, pivots, D)) {
    Rational off = dot(n, points[0]);
    equations_.push_back({std::move(n), std::move(off)});
  }
  const std::size_t r = pivots.size();
  if (r == 0) {
    vertices_ = points;
    return;
  }
  std::vector<RationalPoint> proj(points.size(), RationalPoint(r));
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < r; ++j) proj[i][j] = points[i][pivots[j]];
  auto lift = [&](const RationalPoint& n) {
    RationalPoint full(D, 0);
    for (std::size_t j = 0; j < r; ++j) full[pivots[j]] = n[j];
    return full;
  };

  std::vector<bool> extreme(points.size(), false);
  if (r == 1) {
    const auto [lo, hi] = std::minmax_element(proj.begin(), proj.end());
    extreme[static_cast<std::size_t>(lo - proj.begin())] = true;
    extreme[static_cast<std::size_t>(hi - proj.begin())] = true;
    facets_.push_back({lift({1}), (*hi)[0]});
    facets_.push_back({lift({-1}), -(*lo)[0]});
    if (D == 1) volume_ = (*hi)[0] - (*lo)[0];
  } else {
    // Initial simplex from greedily chosen affinely independent points.
    std::vector<std::size_t> simplex{0};
    RationalMatrix basis;
    for (std::size_t i = 1; i < proj.size() && simplex.size() < r + 1; ++i) {
      RationalMatrix trial = basis;
      trial.push_back(minus(proj[i], proj[0]));
      if (rank(trial) == trial.size()) {
        basis = std::move(trial);
        simplex.push_back(i);
      }
    }
    RationalPoint centre(r, 0);
    for (auto i : simplex)
      for (std::size_t j = 0; j < r; ++j) centre[j] += proj[i][j];
    for (auto& x : centre) x /= static_cast<long>(simplex.size());

    std::vector<Facet> facets;
    for (std::size_t skip = 0; skip < simplex.size(); ++skip) {
      std::vector<std::size_t> ids;
      for (std::size_t t = 0; t < simplex.size(); ++t)
        if (t != skip) ids.push_back(simplex[t]);
      facets.push_back(make_facet(std::move(ids), proj, centre));
    }
    std::vector<bool> used(proj.size(), false);
    for (auto i : simplex) used[i] = true;
    for (std::size_t i = 0; i < proj.size(); ++i) {
      if (used[i]) continue;
      std::vector<Facet> kept;
      std::map<std::vector<std::size_t>, int> ridges;
      for (auto& f : facets) {
        if (dot(f.normal, proj[i]) > f.offset) {
          for (std::size_t drop = 0; drop < f.vertices.size(); ++drop) {
            std::vector<std::size_t> ridge;
            for (std::size_t t = 0; t < f.vertices.size(); ++t)
              if (t != drop) ridge.push_back(f.vertices[t]);
            ++ridges[ridge];
          }
        } else {
          kept.push_back(std::move(f));
        }
      }
      if (kept.size() == facets.size()) {
        facets = std::move(kept);
        continue;
      }
      for (const auto& [ridge, count] : ridges) {
        if (count != 1) continue;
        std::vector<std::size_t> ids = ridge;
        ids.push_back(i);
        kept.push_back(make_facet(std::move(ids), proj, centre));
      }
      facets = std::move(kept);
    }

    // A boundary vertex is extreme when its incident facet normals span R^r.
    std::map<std::size_t, RationalMatrix> incident;
    for (const auto& f : facets)
      for (auto v : f.vertices) incident[v].push_back(f.normal);
    for (auto& [v, normals] : incident)
      if (rank(normals) == r) extreme[v] = true;

    std::set<std::pair<RationalPoint, Rational>> planes;
    for (const auto& f : facets) {
      // Scale so the first nonzero entry has magnitude one, to merge coplanar pieces.
      Rational scale = 0;
      for (const auto& x : f.normal)
        if (x != 0) {
          scale = abs(x);
          break;
        }
      RationalPoint n = f.normal;
      for (auto& x : n) x /= scale;
      planes.emplace(std::move(n), f.offset / scale);
    }
    for (const auto& [n, off] : planes) facets_.push_back({lift(n), off});

    if (r == D) {
      Rational total = 0;
      for (const auto& f : facets) {
        RationalMatrix m;
        for (auto v : f.vertices) m.push_back(minus(proj[v], centre));
        total += abs(determinant(std::move(m)));
      }
      volume_ = total / Rational(factorial(D));
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    if (extreme[i]) vertices_.push_back(points[i]);
}

bool ConvexHull::contains(const RationalPoint& x) const {
  if (static_cast<int>(x.size()) != ambient_) throw std::invalid_argument("point has the wrong dimension");
  if (dimension_ == 0) return x == vertices_.front();
  for (const auto& e : equations_)
    if (dot(e.normal, x) != e.offset) return false;
  for (const auto& f : facets_)
    if (dot(f.normal, x) > f.offset) return false;
  return true;
}

}  // namespace logcave
