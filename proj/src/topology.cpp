#include "jenga/topology.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace jenga {

namespace {

constexpr std::array<std::array<int, 3>, 6> kAxisPermutations{{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

constexpr OctantPattern octants(std::initializer_list<int> list) {
  OctantPattern p = 0;
  for (int o : list) p = static_cast<OctantPattern>(p | (1U << o));
  return p;
}

// Reference solids, one per named class.
constexpr OctantPattern kTypeI = octants({7});                 // x>=0, y>=0, z>=0
constexpr OctantPattern kTypeII = octants({2, 3, 6});          // [x<=0 or z<=0] and y>=0
constexpr OctantPattern kTypeIII = octants({2, 3, 4, 6});      // [x<=0, z>=0] or [y>=0, z<=0]
constexpr OctantPattern kHalfSpace = octants({0, 1, 2, 3});
constexpr OctantPattern kQuarterSpace = octants({0, 1});
constexpr OctantPattern kThreeQuarterSpace = static_cast<OctantPattern>(~kQuarterSpace);
constexpr OctantPattern kConcaveCorner = static_cast<OctantPattern>(~octants({0}));

int corner_count(OctantPattern p) {
  int faces = 0;
  for (int o = 0; o < 8; ++o) {
    for (int axis = 0; axis < 3; ++axis) {
      if (o & (1 << axis)) continue;
      const int other = o | (1 << axis);
      if (((p >> o) & 1U) != ((p >> other) & 1U)) ++faces;
    }
  }
  return faces;
}

OctantPattern canonical(OctantPattern p) {
  OctantPattern best = p;
  for (int i = 0; i < 48; ++i) best = std::min(best, transform_pattern(p, i));
  return best;
}

std::array<VertexClass, 256> build_class_table() {
  const OctantPattern type1 = canonical(kTypeI);
  const OctantPattern type2 = canonical(kTypeII);
  const OctantPattern type3 = canonical(kTypeIII);
  const OctantPattern planar = canonical(kHalfSpace);
  const OctantPattern edge_in = canonical(kQuarterSpace);
  const OctantPattern edge_out = canonical(kThreeQuarterSpace);
  const OctantPattern concave = canonical(kConcaveCorner);

  std::array<VertexClass, 256> table{};
  for (int raw = 1; raw < 255; ++raw) {
    const auto p = static_cast<OctantPattern>(raw);
    const OctantPattern c = canonical(p);
    VertexClass vc;
    vc.corner_count = corner_count(p);
    vc.defect = 4 - vc.corner_count;
    if (c == type1) vc.tag = VertexTag::TypeI;
    else if (c == type2) vc.tag = VertexTag::TypeII;
    else if (c == type3) vc.tag = VertexTag::TypeIII;
    else if (c == planar) vc.tag = VertexTag::FlatPlanar;
    else if (c == edge_in || c == edge_out) vc.tag = VertexTag::FlatEdge;
    else if (c == concave) vc.tag = VertexTag::ConcaveCorner;
    else vc.tag = VertexTag::Other;
    table[static_cast<std::size_t>(raw)] = vc;
  }
  return table;
}

const std::array<VertexClass, 256>& class_table() {
  static const std::array<VertexClass, 256> table = build_class_table();
  return table;
}

void require_single_closed_surface(const SurfaceComplex& s) {
  const ValidationReport report = validate_closed_surface(s);
  if (!report.is_closed_surface) {
    const Violation& v = report.violations.front();
    throw Error(ErrorCode::InvalidSurface,
                "not a closed surface: " + to_string(v.kind) + " at (" +
                    std::to_string(v.a.x) + "," + std::to_string(v.a.y) + "," +
                    std::to_string(v.a.z) + ")");
  }
  if (s.faces.empty()) throw Error(ErrorCode::InvalidSurface, "empty surface");
  const int pieces = count_components(s);
  if (pieces != 1) {
    throw Error(ErrorCode::Disconnected,
                "surface has " + std::to_string(pieces) + " components; split it first");
  }
}

Configuration without_top(const Configuration& c) {
  Configuration lower = c;
  lower.levels.pop_back();
  return lower;
}

}  // namespace

std::string to_string(VertexTag tag) {
  switch (tag) {
    case VertexTag::TypeI: return "TypeI";
    case VertexTag::TypeII: return "TypeII";
    case VertexTag::TypeIII: return "TypeIII";
    case VertexTag::FlatPlanar: return "FlatPlanar";
    case VertexTag::FlatEdge: return "FlatEdge";
    case VertexTag::ConcaveCorner: return "ConcaveCorner";
    case VertexTag::Other: return "Other";
  }
  return "Other";
}

OctantPattern transform_pattern(OctantPattern pattern, int index) {
  const auto& perm = kAxisPermutations[static_cast<std::size_t>(index / 8)];
  const int flips = index % 8;
  OctantPattern out = 0;
  for (int o = 0; o < 8; ++o) {
    if (!((pattern >> o) & 1U)) continue;
    int image = 0;
    for (int axis = 0; axis < 3; ++axis) {
      const int bit = ((o >> perm[static_cast<std::size_t>(axis)]) & 1) ^ ((flips >> axis) & 1);
      image |= bit << axis;
    }
    out = static_cast<OctantPattern>(out | (1U << image));
  }
  return out;
}

OctantPattern octant_pattern(const VoxelSet& v, const Point3& p) {
  OctantPattern out = 0;
  for (int o = 0; o < 8; ++o) {
    const Cell c{p.x - 1 + (o & 1), p.y - 1 + ((o >> 1) & 1), p.z - 1 + ((o >> 2) & 1)};
    if (v.contains(c)) out = static_cast<OctantPattern>(out | (1U << o));
  }
  return out;
}

VertexClass classify_vertex(OctantPattern pattern) {
  if (pattern == 0 || pattern == 0xFF) {
    throw Error(ErrorCode::IllegalOperation,
                "octant pattern is all empty or all full: not a surface vertex");
  }
  return class_table()[pattern];
}

long defect_sum(const SurfaceComplex& s) {
  long total = 0;
  for (const Vertex& v : s.vertices) total += 4 - static_cast<long>(v.faces.size());
  return total;
}

int genus_euler(const SurfaceComplex& s) {
  require_single_closed_surface(s);
  const long chi = s.euler_characteristic();
  if (chi % 2 != 0) {
    throw Error(ErrorCode::NonIntegral, "odd Euler characteristic " + std::to_string(chi));
  }
  return static_cast<int>((2 - chi) / 2);
}

int genus_descartes(const SurfaceComplex& s) {
  require_single_closed_surface(s);
  // sum(kappa) = 4 pi (1 - g); one full 4 pi is 8 quarter turns.
  const long total = defect_sum(s);
  if (total % 8 != 0) {
    throw Error(ErrorCode::NonIntegral,
                "total defect " + std::to_string(total) + " quarter turns is not a multiple of 4 pi");
  }
  return static_cast<int>(1 - total / 8);
}

DefectCensus vertex_census(const SurfaceComplex& s, const Configuration& c,
                           bool exclude_topmost) {
  check_configuration(c);
  if (!(extract_boundary(voxelize(c)) == s)) {
    throw Error(ErrorCode::Mismatch, "surface is not the boundary of the configuration");
  }
  DefectCensus census;
  const bool lift = exclude_topmost && levels_count(c) >= 2;
  const Configuration counted = lift ? without_top(c) : c;
  const VoxelSet voxels = voxelize(counted);
  const SurfaceComplex surface = lift ? extract_boundary(voxels) : s;
  census.excluded_topmost = lift;
  census.per_floor.assign(static_cast<std::size_t>(levels_count(counted)) + 1, FloorCounts{});

  for (const Vertex& v : surface.vertices) {
    const VertexClass vc = classify_vertex(octant_pattern(voxels, v.position));
    census.defect_total += vc.defect;
    const auto floor = static_cast<std::size_t>(v.position.z);
    switch (vc.tag) {
      case VertexTag::TypeI:
        ++census.type1;
        break;
      case VertexTag::TypeII:
        ++census.type2;
        ++census.per_floor[floor].type2;
        break;
      case VertexTag::TypeIII:
        ++census.type3;
        ++census.per_floor[floor].type3;
        break;
      default:
        ++census.other_counts[vc.tag];
        if (vc.defect != 0) ++census.other_defect_bearing;
        break;
    }
  }
  return census;
}

int lemma_genus_from_census(const DefectCensus& census) {
  if (census.other_defect_bearing != 0) {
    throw Error(ErrorCode::UnsupportedCensus,
                std::to_string(census.other_defect_bearing) +
                    " defect-bearing vertices outside Types I/II/III");
  }
  const long numerator = -census.type1 + census.type2 + 2L * census.type3 + 8;
  if (numerator % 8 != 0) {
    throw Error(ErrorCode::NonIntegral, "census does not give an integral genus");
  }
  return static_cast<int>(numerator / 8);
}

ClosedFormCounts closed_form_counts(const GameParams& p) {
  check_params(p, 3);
  const long n = p.n;
  const long k = p.k;
  ClosedFormCounts out;
  if (p.n % 2 == 0) {
    out.printed = {4 + 2 * n, 8 * (n - 2) * (4 * k - 7), 2 * (n - 2) * (n - 2) * (k - 2)};
    TypeCounts candidate = out.printed;
    candidate.type2 = 2 * (n - 2) * (4 * k - 7);
    out.corrected_candidate = candidate;
    return out;
  }
  const NkDecomposition d = solve_nk_decomposition(p);
  if (d.l < 2) {
    throw Error(ErrorCode::UnsupportedCensus,
                "vertex-count formulae do not hold for a single bottom block (l = 1)");
  }
  const long x = d.x;
  const long l = d.l;
  out.printed = {4 + 4 * l, 4 * (x - 3) * (n - 1) + 4 * (l - 1),
                 (x - 4) * (n - 1) * (n - 1) + 2 * (l - 1) * (n - 1)};
  for (long i = 0; i < x; ++i) {
    FloorCounts f;
    if (i == 0 || i == x - 1) f.type2 = 0;
    else if (i == 1) f.type2 = static_cast<int>(2 * (n - 1) + 4 * (l - 1));
    else if (i == x - 2) f.type2 = static_cast<int>(2 * (n - 1));
    else f.type2 = static_cast<int>(4 * (n - 1));

    if (i == 0 || i == x - 1 || i == x - 2) f.type3 = 0;
    else if (i == 1) f.type3 = static_cast<int>(2 * (l - 1) * (n - 1));
    else f.type3 = static_cast<int>((n - 1) * (n - 1));
    out.per_floor.push_back(f);
  }
  return out;
}

long closed_form_genus(const GameParams& p) {
  check_params(p, 2);
  const long n = p.n;
  const long k = p.k;
  return p.n % 2 == 0 ? n * (n - 2) * (k - 2) / 2 : n * (n - 1) * (k - 2) / 2;
}

long odd_genus_formula(int n, int x, int l) {
  const long numerator =
      (static_cast<long>(n) * n - 1) * (x - 4) + 2L * l * (n - 1);
  if (numerator % 4 != 0) {
    throw Error(ErrorCode::NonIntegral, "odd genus formula is not integral here");
  }
  return numerator / 4;
}

GenusResult analyze(const Configuration& c, bool exclude_topmost) {
  check_configuration(c);
  const SurfaceComplex s = extract_boundary(voxelize(c));
  GenusResult r;
  r.chi = s.euler_characteristic();
  r.genus_euler = genus_euler(s);
  r.genus_descartes = genus_descartes(s);
  r.census = vertex_census(s, c, exclude_topmost);
  return r;
}

std::optional<int> checked_genus(const Configuration& c) {
  if (c.levels.empty()) return std::nullopt;
  const SurfaceComplex s = extract_boundary(voxelize(c));
  if (!validate_closed_surface(s).is_closed_surface || count_components(s) != 1) {
    return std::nullopt;
  }
  return static_cast<int>((2 - s.euler_characteristic()) / 2);
}

std::optional<int> solid_genus(const Configuration& c) {
  if (c.levels.empty()) return std::nullopt;
  const SurfaceComplex s = extract_boundary(voxelize(c));
  if (!validate_closed_surface(s).is_closed_surface) return std::nullopt;
  return static_cast<int>((2L * count_components(s) - s.euler_characteristic()) / 2);
}

long topmost_defect(const Configuration& c) {
  check_configuration(c);
  if (levels_count(c) < 2) {
    throw Error(ErrorCode::ParamOutOfRange, "topmost defect needs at least two levels");
  }
  return defect_sum(extract_boundary(voxelize(c))) -
         defect_sum(extract_boundary(voxelize(without_top(c))));
}

MovingTrickReport moving_trick(const GameParams& p) {
  MovingTrickReport r;
  r.decomposition = solve_nk_decomposition(p);
  if (r.decomposition.l != 1) {
    throw Error(ErrorCode::ParamOutOfRange,
                "moving trick applies to l = 1 only; here l = " +
                    std::to_string(r.decomposition.l));
  }
  r.before = make_nk_configuration(p);
  r.after = r.before;
  Level& bottom = r.after.level(1);
  bottom.clear((p.n + 1) / 2);
  bottom.set(p.n);
  r.genus_before = analyze(r.before).genus_euler;
  r.genus_after = analyze(r.after).genus_euler;
  r.formula_genus = odd_genus_formula(p.n, r.decomposition.x - 1, (p.n + 1) / 2 + 1);
  r.holds = r.genus_before == r.genus_after && r.genus_after == r.formula_genus;
  return r;
}

bool moving_trick_check(const GameParams& p) { return moving_trick(p).holds; }

}  // namespace jenga
