#include <doctest.h>

#include <random>

#include "jenga/topology.hpp"
#include "oracles.hpp"

using namespace jenga;

namespace {

// Faces meeting at the centre of a 2x2x2 block filled per the pattern,
// counted on the block's own boundary.
int faces_at_centre(OctantPattern p) {
  std::set<oracle::CellKey> cells;
  for (int o = 0; o < 8; ++o) {
    if (p & (1 << o)) cells.insert({o & 1, (o >> 1) & 1, (o >> 2) & 1});
  }
  const oracle::BruteSurface s = oracle::brute_surface(cells);
  const auto it = s.faces_at_vertex.find({1, 1, 1});
  return it == s.faces_at_vertex.end() ? 0 : it->second;
}

DefectCensus census_of(const Configuration& c, bool exclude) {
  return vertex_census(extract_boundary(voxelize(c)), c, exclude);
}

}  // namespace

TEST_CASE("vertex defects agree with counted incident faces") {
  for (int raw = 1; raw < 255; ++raw) {
    const auto p = static_cast<OctantPattern>(raw);
    const VertexClass vc = classify_vertex(p);
    CHECK(vc.corner_count == faces_at_centre(p));
    CHECK(vc.defect == 4 - vc.corner_count);
  }
  CHECK_THROWS_AS(classify_vertex(0), Error);
  CHECK_THROWS_AS(classify_vertex(255), Error);
}

TEST_CASE("named classes and their defects") {
  const VertexClass convex = classify_vertex(0x80);
  CHECK(convex.tag == VertexTag::TypeI);
  CHECK(convex.defect == 1);
  CHECK(classify_vertex(0x4C).tag == VertexTag::TypeII);
  CHECK(classify_vertex(0x4C).defect == -1);
  CHECK(classify_vertex(0x5C).tag == VertexTag::TypeIII);
  CHECK(classify_vertex(0x5C).defect == -2);
  CHECK(classify_vertex(0x0F).tag == VertexTag::FlatPlanar);
  CHECK(classify_vertex(0x03).tag == VertexTag::FlatEdge);
  CHECK(classify_vertex(0xFC).tag == VertexTag::FlatEdge);
  CHECK(classify_vertex(0xFE).tag == VertexTag::ConcaveCorner);
  CHECK(classify_vertex(0xFE).defect == 1);
}

TEST_CASE("classification is invariant under the cube symmetries") {
  for (int raw = 1; raw < 255; ++raw) {
    const auto p = static_cast<OctantPattern>(raw);
    const VertexClass vc = classify_vertex(p);
    for (int i = 0; i < 48; ++i) {
      CHECK(classify_vertex(transform_pattern(p, i)) == vc);
    }
  }
  CHECK(transform_pattern(0x80, 0) == 0x80);
}

TEST_CASE("unit cube") {
  const SurfaceComplex s = extract_boundary(VoxelSet({{0, 0, 0}}));
  CHECK(defect_sum(s) == 8);
  CHECK(genus_euler(s) == 0);
  CHECK(genus_descartes(s) == 0);
  for (const Vertex& v : s.vertices) {
    CHECK(classify_vertex(octant_pattern(VoxelSet({{0, 0, 0}}), v.position)).tag ==
          VertexTag::TypeI);
  }
}

TEST_CASE("both genus methods agree with a direct Euler count") {
  std::mt19937 rng(2024);
  int valid = 0;
  for (int i = 0; i < 1500 && valid < 400; ++i) {
    const Configuration c = oracle::random_tower(rng, 6, 6);
    const SurfaceComplex s = extract_boundary(voxelize(c));
    const auto cells = oracle::cells_of(c);
    if (!validate_closed_surface(s).is_closed_surface || oracle::cell_components(cells) != 1) {
      CHECK_FALSE(checked_genus(c).has_value());
      continue;
    }
    ++valid;
    const oracle::BruteSurface b = oracle::brute_surface(cells);
    const int ge = genus_euler(s);
    CHECK(ge == genus_descartes(s));
    CHECK(2 - 2 * ge == b.chi());
    CHECK(defect_sum(s) == 4 * b.chi());
    CHECK(defect_sum(s) == b.defect_quarter_turns());
    CHECK(checked_genus(c) == ge);
  }
  CHECK(valid >= 100);
}

TEST_CASE("invalid and disconnected solids are rejected") {
  const SurfaceComplex split = extract_boundary(voxelize(parse_box_description("n 3\n#.#\n")));
  CHECK_THROWS_AS(genus_euler(split), Error);
  try {
    genus_descartes(split);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Disconnected);
  }
  const SurfaceComplex pinched = extract_boundary(VoxelSet({{0, 0, 0}, {1, 1, 1}}));
  try {
    genus_euler(pinched);
    FAIL("expected a failure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidSurface);
  }
  CHECK(solid_genus(parse_box_description("n 3\n#.#\n")) == 0);
}

TEST_CASE("initial towers have genus zero") {
  for (int n = 2; n <= 9; ++n) {
    for (int k = 2; k <= 8; ++k) CHECK(analyze(make_initial({n, k})).genus_euler == 0);
  }
}

TEST_CASE("genus of the canonical towers") {
  CHECK(analyze(make_nk_configuration({5, 3})).genus_euler == 10);
  CHECK(analyze(make_nk_configuration({6, 3})).genus_euler == 12);
  CHECK(analyze(make_nk_configuration({5, 5})).genus_descartes == 30);
  for (int k = 3; k <= 8; ++k) CHECK(analyze(make_nk_configuration({2, k})).genus_euler == 0);
  CHECK(closed_form_genus({5, 3}) == 10);
  CHECK(closed_form_genus({6, 3}) == 12);
  CHECK(closed_form_genus({2, 7}) == 0);
  CHECK(odd_genus_formula(5, 5, 2) == 10);
}

TEST_CASE("census counts follow the incident face counts") {
  for (int n = 2; n <= 7; ++n) {
    for (int k = 3; k <= 5; ++k) {
      const Configuration c = make_nk_configuration({n, k});
      DefectCensus census = census_of(c, false);
      const oracle::BruteSurface b = oracle::brute_surface(oracle::cells_of(c));
      CHECK(census.type1 + census.other_counts[VertexTag::ConcaveCorner] ==
            b.count_vertices_with(3));
      CHECK(census.type2 == b.count_vertices_with(5));
      CHECK(census.type3 == b.count_vertices_with(6));
      CHECK(census.defect_total == b.defect_quarter_turns());
    }
  }
}

TEST_CASE("odd census with the topmost level left out") {
  const DefectCensus c = census_of(make_nk_configuration({5, 3}), true);
  CHECK(c.excluded_topmost);
  CHECK(c.type1 == 12);
  CHECK(c.type2 == 36);
  CHECK(c.type3 == 24);
  CHECK(lemma_genus_from_census(c) == 10);

  const ClosedFormCounts closed = closed_form_counts({5, 3});
  CHECK(closed.printed == TypeCounts{12, 36, 24});
  REQUIRE(closed.per_floor.size() == c.per_floor.size());
  for (std::size_t i = 0; i < c.per_floor.size(); ++i) CHECK(closed.per_floor[i] == c.per_floor[i]);
  CHECK_THROWS_AS(closed_form_counts({3, 3}), Error);
}

TEST_CASE("even census: the smaller Type II count is the one that fits") {
  const DefectCensus c = census_of(make_nk_configuration({6, 3}), true);
  CHECK(c.type1 == 16);
  CHECK(c.type2 == 40);
  CHECK(c.type3 == 32);
  const ClosedFormCounts closed = closed_form_counts({6, 3});
  CHECK(closed.printed.type2 == 160);
  REQUIRE(closed.corrected_candidate);
  CHECK(*closed.corrected_candidate == TypeCounts{16, 40, 32});
  CHECK_FALSE(closed.printed == TypeCounts{c.type1, c.type2, c.type3});
}

TEST_CASE("census genus and topmost neutrality for every canonical tower") {
  for (int n = 2; n <= 9; ++n) {
    for (int k = 3; k <= 8; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const Configuration c = make_nk_configuration({n, k});
      const GenusResult g = analyze(c);
      CHECK(lemma_genus_from_census(g.census) == g.genus_euler);
      CHECK(topmost_defect(c) == 0);
      CHECK(g.genus_euler == closed_form_genus({n, k}));
    }
  }
}

TEST_CASE("census must describe the given surface") {
  const Configuration a = make_nk_configuration({3, 3});
  const SurfaceComplex other = extract_boundary(voxelize(make_initial({3, 3})));
  CHECK_THROWS_AS(vertex_census(other, a, false), Error);
}

TEST_CASE("sliding the lone bottom block keeps the genus") {
  for (GameParams p : {GameParams{3, 3}, GameParams{3, 5}, GameParams{7, 5}}) {
    CAPTURE(p.n);
    CAPTURE(p.k);
    const MovingTrickReport r = moving_trick(p);
    CHECK(r.holds);
    CHECK(r.genus_before == closed_form_genus(p));
    CHECK(r.after.level(1).occupied(p.n));
  }
  CHECK_THROWS_AS(moving_trick({5, 3}), Error);
}
