#include "jenga/geometry.hpp"

#include <algorithm>
#include <numeric>

namespace jenga {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

void add_coord(Point3& p, int axis, int delta) {
  if (axis == 0) p.x += delta;
  else if (axis == 1) p.y += delta;
  else p.z += delta;
}

// Dense occupancy over the bounding box padded by one empty cell.
class OccupancyGrid {
 public:
  explicit OccupancyGrid(const VoxelSet& v) {
    if (v.empty()) return;
    lo_ = hi_ = v.cells().front();
    for (const Cell& c : v.cells()) {
      lo_.x = std::min(lo_.x, c.x); hi_.x = std::max(hi_.x, c.x);
      lo_.y = std::min(lo_.y, c.y); hi_.y = std::max(hi_.y, c.y);
      lo_.z = std::min(lo_.z, c.z); hi_.z = std::max(hi_.z, c.z);
    }
    add_coord(lo_, 0, -1); add_coord(lo_, 1, -1); add_coord(lo_, 2, -1);
    add_coord(hi_, 0, 1); add_coord(hi_, 1, 1); add_coord(hi_, 2, 1);
    dx_ = hi_.x - lo_.x + 1;
    dy_ = hi_.y - lo_.y + 1;
    dz_ = hi_.z - lo_.z + 1;
    bits_.assign(static_cast<std::size_t>(dx_) * dy_ * dz_, 0);
    for (const Cell& c : v.cells()) bits_[index(c)] = 1;
  }

  bool at(const Cell& c) const {
    if (c.x < lo_.x || c.x > hi_.x || c.y < lo_.y || c.y > hi_.y || c.z < lo_.z ||
        c.z > hi_.z) {
      return false;
    }
    return bits_[index(c)] != 0;
  }

 private:
  std::size_t index(const Cell& c) const {
    return (static_cast<std::size_t>(c.z - lo_.z) * dy_ + (c.y - lo_.y)) * dx_ + (c.x - lo_.x);
  }

  Point3 lo_{}, hi_{};
  int dx_ = 0, dy_ = 0, dz_ = 0;
  std::vector<unsigned char> bits_;
};

}  // namespace

// ---------------------------------------------------------------------------
// VoxelSet

VoxelSet::VoxelSet(std::vector<Cell> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool VoxelSet::contains(const Cell& c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

VoxelSet VoxelSet::translated(int dx, int dy, int dz) const {
  std::vector<Cell> moved = cells_;
  for (Cell& c : moved) {
    c.x += dx;
    c.y += dy;
    c.z += dz;
  }
  return VoxelSet(std::move(moved));
}

VoxelSet voxelize(const Configuration& c) {
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(block_count(c)) * static_cast<std::size_t>(c.n));
  for (int i = 1; i <= levels_count(c); ++i) {
    const Axis axis = c.axis(i);
    const int z = i - 1;
    for (int slot : c.level(i).occupied_slots()) {
      for (int t = 0; t < c.n; ++t) {
        cells.push_back(axis == Axis::X ? Cell{t, slot - 1, z} : Cell{slot - 1, t, z});
      }
    }
  }
  return VoxelSet(std::move(cells));
}

// ---------------------------------------------------------------------------
// Boundary extraction

SurfaceComplex complex_from_quads(const std::vector<std::array<Point3, 4>>& quads,
                                  const std::vector<std::pair<int, int>>& normals) {
  SurfaceComplex s;
  std::vector<Point3> points;
  points.reserve(quads.size() * 4);
  for (const auto& q : quads) points.insert(points.end(), q.begin(), q.end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  auto vertex_index = [&](const Point3& p) {
    return static_cast<int>(std::lower_bound(points.begin(), points.end(), p) - points.begin());
  };

  struct Keyed {
    std::array<int, 4> sorted;
    Face face;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(quads.size());
  for (std::size_t i = 0; i < quads.size(); ++i) {
    Keyed k;
    for (int j = 0; j < 4; ++j) k.face.vertices[j] = vertex_index(quads[i][j]);
    k.face.axis = normals[i].first;
    k.face.sign = normals[i].second;
    k.sorted = k.face.vertices;
    std::sort(k.sorted.begin(), k.sorted.end());
    keyed.push_back(k);
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.sorted != b.sorted) return a.sorted < b.sorted;
    if (a.face.axis != b.face.axis) return a.face.axis < b.face.axis;
    return a.face.sign < b.face.sign;
  });

  std::vector<std::pair<int, int>> edge_keys;
  edge_keys.reserve(keyed.size() * 4);
  for (const Keyed& k : keyed) {
    for (int j = 0; j < 4; ++j) {
      const int a = k.face.vertices[j];
      const int b = k.face.vertices[(j + 1) % 4];
      edge_keys.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  std::sort(edge_keys.begin(), edge_keys.end());
  edge_keys.erase(std::unique(edge_keys.begin(), edge_keys.end()), edge_keys.end());

  s.vertices.resize(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) s.vertices[i].position = points[i];
  s.edges.resize(edge_keys.size());
  for (std::size_t i = 0; i < edge_keys.size(); ++i) {
    s.edges[i].a = edge_keys[i].first;
    s.edges[i].b = edge_keys[i].second;
  }
  s.faces.reserve(keyed.size());
  for (const Keyed& k : keyed) {
    Face f = k.face;
    const int fi = static_cast<int>(s.faces.size());
    for (int j = 0; j < 4; ++j) {
      const int a = f.vertices[j];
      const int b = f.vertices[(j + 1) % 4];
      const std::pair<int, int> key{std::min(a, b), std::max(a, b)};
      const int ei = static_cast<int>(
          std::lower_bound(edge_keys.begin(), edge_keys.end(), key) - edge_keys.begin());
      f.edges[j] = ei;
      s.edges[static_cast<std::size_t>(ei)].faces.push_back(fi);
      s.vertices[static_cast<std::size_t>(a)].faces.push_back(fi);
    }
    s.faces.push_back(f);
  }
  return s;
}

SurfaceComplex extract_boundary(const VoxelSet& v) {
  const OccupancyGrid grid(v);
  std::vector<std::array<Point3, 4>> quads;
  std::vector<std::pair<int, int>> normals;
  for (const Cell& c : v.cells()) {
    for (int axis = 0; axis < 3; ++axis) {
      for (int sign : {-1, 1}) {
        Cell neighbour = c;
        add_coord(neighbour, axis, sign);
        if (grid.at(neighbour)) continue;

        const int u = (axis + 1) % 3;
        const int w = (axis + 2) % 3;
        Point3 p0 = c;
        if (sign > 0) add_coord(p0, axis, 1);
        Point3 p1 = p0;
        add_coord(p1, u, 1);
        Point3 p2 = p1;
        add_coord(p2, w, 1);
        Point3 p3 = p0;
        add_coord(p3, w, 1);
        // e_u x e_w = e_axis, so (p0,p1,p2,p3) winds counter-clockwise about +axis.
        if (sign > 0) quads.push_back({p0, p1, p2, p3});
        else quads.push_back({p0, p3, p2, p1});
        normals.emplace_back(axis, sign);
      }
    }
  }
  return complex_from_quads(quads, normals);
}

// ---------------------------------------------------------------------------
// Validation

std::string to_string(ViolationKind kind) {
  return kind == ViolationKind::NonManifoldEdge ? "NonManifoldEdge" : "NonManifoldVertex";
}

ValidationReport validate_closed_surface(const SurfaceComplex& s) {
  ValidationReport report;
  for (const Edge& e : s.edges) {
    if (e.faces.size() != 2) {
      report.violations.push_back({ViolationKind::NonManifoldEdge,
                                   s.vertices[static_cast<std::size_t>(e.a)].position,
                                   s.vertices[static_cast<std::size_t>(e.b)].position});
    }
  }

  // lk(v): edges of faces around v that do not touch v; it must be connected.
  std::vector<int> nodes;
  std::vector<std::pair<int, int>> link;
  for (std::size_t vi = 0; vi < s.vertices.size(); ++vi) {
    nodes.clear();
    link.clear();
    for (int fi : s.vertices[vi].faces) {
      const Face& f = s.faces[static_cast<std::size_t>(fi)];
      int at = 0;
      while (f.vertices[at] != static_cast<int>(vi)) ++at;
      const int w1 = f.vertices[(at + 1) % 4];
      const int w2 = f.vertices[(at + 2) % 4];
      const int w3 = f.vertices[(at + 3) % 4];
      link.emplace_back(w1, w2);
      link.emplace_back(w2, w3);
      nodes.insert(nodes.end(), {w1, w2, w3});
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    DisjointSets sets(nodes.size());
    auto local = [&](int w) {
      return static_cast<std::size_t>(std::lower_bound(nodes.begin(), nodes.end(), w) -
                                      nodes.begin());
    };
    for (const auto& [a, b] : link) sets.unite(local(a), local(b));
    bool connected = true;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (sets.find(i) != 0) {
        connected = false;
        break;
      }
    }
    if (!connected) {
      const Point3 p = s.vertices[vi].position;
      report.violations.push_back({ViolationKind::NonManifoldVertex, p, p});
    }
  }
  report.is_closed_surface = report.violations.empty();
  return report;
}

// ---------------------------------------------------------------------------
// Components

namespace {

std::vector<std::size_t> face_roots(const SurfaceComplex& s, DisjointSets& sets) {
  for (const Edge& e : s.edges) {
    for (std::size_t i = 1; i < e.faces.size(); ++i) {
      sets.unite(static_cast<std::size_t>(e.faces[0]), static_cast<std::size_t>(e.faces[i]));
    }
  }
  std::vector<std::size_t> roots(s.faces.size());
  for (std::size_t i = 0; i < s.faces.size(); ++i) roots[i] = sets.find(i);
  return roots;
}

}  // namespace

int count_components(const SurfaceComplex& s) {
  DisjointSets sets(s.faces.size());
  const std::vector<std::size_t> roots = face_roots(s, sets);
  int count = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (roots[i] == i) ++count;
  }
  return count;
}

std::vector<SurfaceComplex> connected_components(const SurfaceComplex& s) {
  DisjointSets sets(s.faces.size());
  const std::vector<std::size_t> roots = face_roots(s, sets);

  // Roots are the smallest face index in each piece, so pieces come out
  // ordered by their first face.
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (roots[i] == i) order.push_back(i);
  }
  std::vector<SurfaceComplex> pieces;
  pieces.reserve(order.size());
  for (std::size_t root : order) {
    std::vector<std::array<Point3, 4>> quads;
    std::vector<std::pair<int, int>> normals;
    for (std::size_t fi = 0; fi < s.faces.size(); ++fi) {
      if (roots[fi] != root) continue;
      const Face& f = s.faces[fi];
      std::array<Point3, 4> q;
      for (int j = 0; j < 4; ++j) {
        q[j] = s.vertices[static_cast<std::size_t>(f.vertices[j])].position;
      }
      quads.push_back(q);
      normals.emplace_back(f.axis, f.sign);
    }
    pieces.push_back(complex_from_quads(quads, normals));
  }
  return pieces;
}

}  // namespace jenga
