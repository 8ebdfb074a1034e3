#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "jenga/config.hpp"

namespace jenga {

struct Point3 {
  int x = 0;
  int y = 0;
  int z = 0;

  friend bool operator==(const Point3&, const Point3&) = default;
  friend auto operator<=>(const Point3&, const Point3&) = default;
};

/// A unit cube [x,x+1] x [y,y+1] x [z,z+1], named by its minimum corner.
using Cell = Point3;

/// Finite set of occupied unit cells, kept sorted and duplicate free.
class VoxelSet {
 public:
  VoxelSet() = default;
  explicit VoxelSet(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  bool contains(const Cell& c) const;

  VoxelSet translated(int dx, int dy, int dz) const;

  friend bool operator==(const VoxelSet&, const VoxelSet&) = default;

 private:
  std::vector<Cell> cells_;
};

/// Block i of the configuration becomes n collinear cells at height z = i-1.
VoxelSet voxelize(const Configuration& c);

/// Unit square on the boundary. `axis` is the normal direction (0=x, 1=y,
/// 2=z) and `sign` is +1 when the outward normal points along +axis.
/// Vertices are listed counter-clockwise seen from outside.
struct Face {
  std::array<int, 4> vertices{};
  std::array<int, 4> edges{};
  int axis = 0;
  int sign = 1;

  friend bool operator==(const Face&, const Face&) = default;
};

struct Edge {
  int a = 0;  // a < b
  int b = 0;
  std::vector<int> faces;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Vertex {
  Point3 position;
  std::vector<int> faces;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Quad boundary complex. Vertices are sorted by position, edges by their
/// vertex pair and faces by their sorted vertex tuple, so equal solids give
/// identical complexes.
struct SurfaceComplex {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<Face> faces;

  long euler_characteristic() const {
    return static_cast<long>(vertices.size()) - static_cast<long>(edges.size()) +
           static_cast<long>(faces.size());
  }

  friend bool operator==(const SurfaceComplex&, const SurfaceComplex&) = default;
};

/// Builds the complex from the boundary squares of the solid (the region
/// z < 0 counts as empty, so bottom faces are kept).
SurfaceComplex extract_boundary(const VoxelSet& v);

/// Assembles a complex from unit quads given by corner positions (outward
/// counter-clockwise). Used by extract_boundary and by mesh import.
SurfaceComplex complex_from_quads(const std::vector<std::array<Point3, 4>>& quads,
                                  const std::vector<std::pair<int, int>>& normals);

enum class ViolationKind { NonManifoldEdge, NonManifoldVertex };

struct Violation {
  ViolationKind kind;
  Point3 a;  // vertex position, or first edge endpoint
  Point3 b;  // second edge endpoint (== a for vertex violations)
};

std::string to_string(ViolationKind kind);

struct ValidationReport {
  bool is_closed_surface = true;
  std::vector<Violation> violations;
};

ValidationReport validate_closed_surface(const SurfaceComplex& s);

/// Splits the complex into face-connected pieces (faces sharing an edge).
std::vector<SurfaceComplex> connected_components(const SurfaceComplex& s);

/// Number of face-connected pieces without materializing them.
int count_components(const SurfaceComplex& s);

}  // namespace jenga
