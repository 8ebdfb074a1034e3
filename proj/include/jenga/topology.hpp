#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jenga/config.hpp"
#include "jenga/geometry.hpp"

namespace jenga {

/// Occupancy of the 8 unit cells around a lattice point. Bit o is set when
/// the cell on the positive x side (o & 1), positive y side (o & 2) and
/// positive z side (o & 4) of the point is occupied.
using OctantPattern = std::uint8_t;

OctantPattern octant_pattern(const VoxelSet& v, const Point3& p);

enum class VertexTag { TypeI, TypeII, TypeIII, FlatPlanar, FlatEdge, ConcaveCorner, Other };

std::string to_string(VertexTag tag);

/// Angles are kept in integer quarter turns (units of pi/2).
struct VertexClass {
  VertexTag tag = VertexTag::Other;
  int corner_count = 0;
  int defect = 0;  // 4 - corner_count

  friend bool operator==(const VertexClass&, const VertexClass&) = default;
};

/// Classifies the local solid up to the 48 symmetries of the cube.
VertexClass classify_vertex(OctantPattern pattern);

/// Image of `pattern` under symmetry `index` in [0, 48).
OctantPattern transform_pattern(OctantPattern pattern, int index);

/// Sum of angular defects over all vertices, in quarter turns.
long defect_sum(const SurfaceComplex& s);

/// Genus from V - E + F. Throws on invalid or disconnected input.
int genus_euler(const SurfaceComplex& s);
/// Genus from the total angular defect. Throws on invalid or disconnected input.
int genus_descartes(const SurfaceComplex& s);

struct FloorCounts {
  int type2 = 0;
  int type3 = 0;

  friend bool operator==(const FloorCounts&, const FloorCounts&) = default;
};

struct DefectCensus {
  int type1 = 0;
  int type2 = 0;
  int type3 = 0;
  /// Counts of every other class seen on the surface.
  std::map<VertexTag, int> other_counts;
  /// Vertices outside Types I/II/III with nonzero defect.
  int other_defect_bearing = 0;
  /// per_floor[i] holds the Type II/III vertices on the plane z = i.
  std::vector<FloorCounts> per_floor;
  long defect_total = 0;
  bool excluded_topmost = false;
};

/// Counts surface vertices by class. With `exclude_topmost` the topmost level
/// is lifted off first, so the counts describe the tower beneath it.
DefectCensus vertex_census(const SurfaceComplex& s, const Configuration& c,
                           bool exclude_topmost);

/// -N_I/8 + N_II/8 + N_III/4 + 1
int lemma_genus_from_census(const DefectCensus& census);

struct TypeCounts {
  long type1 = 0;
  long type2 = 0;
  long type3 = 0;

  friend bool operator==(const TypeCounts&, const TypeCounts&) = default;
};

struct ClosedFormCounts {
  TypeCounts printed;
  /// Even n only: N_II = 2(n-2)(4k-7) in place of the printed 8(n-2)(4k-7).
  std::optional<TypeCounts> corrected_candidate;
  /// Odd n only: per-floor Type II/III counts, floors 0 .. x-1.
  std::vector<FloorCounts> per_floor;
};

ClosedFormCounts closed_form_counts(const GameParams& p);

long closed_form_genus(const GameParams& p);

/// ((n^2-1)(x-4) + 2l(n-1)) / 4 for the odd tower with x levels and l bottom
/// blocks (exact division is checked).
long odd_genus_formula(int n, int x, int l);

struct GenusResult {
  int genus_euler = 0;
  int genus_descartes = 0;
  long chi = 0;
  DefectCensus census;
};

/// Voxelizes, validates and measures a tower. Throws InvalidSurface or
/// Disconnected when the boundary is not one closed surface.
GenusResult analyze(const Configuration& c, bool exclude_topmost = false);

/// Genus of the tower, or nullopt when its boundary is not a single closed
/// surface.
std::optional<int> checked_genus(const Configuration& c);

/// Sum of the genera of the pieces of a closed, possibly disconnected,
/// surface; nullopt when the boundary is not a closed surface.
std::optional<int> solid_genus(const Configuration& c);

/// Defect carried by the topmost level: total defect of the tower minus the
/// total defect of the tower without its top level (quarter turns).
long topmost_defect(const Configuration& c);

struct MovingTrickReport {
  NkDecomposition decomposition;
  Configuration before;
  Configuration after;
  int genus_before = 0;
  int genus_after = 0;
  long formula_genus = 0;  // odd_genus_formula(n, x-1, (n+1)/2 + 1)
  bool holds = false;
};

/// The l = 1 case: slides the single bottom block from the middle slot to the
/// right-most slot and compares the genera with each other and with the
/// formula evaluated at x-1 levels and (n+1)/2 + 1 bottom blocks.
MovingTrickReport moving_trick(const GameParams& p);
bool moving_trick_check(const GameParams& p);

}  // namespace jenga
