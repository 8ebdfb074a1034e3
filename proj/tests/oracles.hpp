#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "jenga/config.hpp"

// Slow, direct recomputations used to cross-check the library.
namespace oracle {

using CellKey = std::array<int, 3>;

std::set<CellKey> cells_of(const jenga::Configuration& c);

struct BruteSurface {
  long vertices = 0;
  long edges = 0;
  long faces = 0;
  bool every_edge_twice = true;
  // Number of boundary squares meeting at each lattice point.
  std::map<CellKey, int> faces_at_vertex;

  long chi() const { return vertices - edges + faces; }
  long defect_quarter_turns() const;
  int count_vertices_with(int face_count) const;
};

BruteSurface brute_surface(const std::set<CellKey>& cells);

// Face-connected pieces of the solid (cells sharing a square).
int cell_components(const std::set<CellKey>& cells);

struct Decomposition {
  int x = 0;
  int l = 0;
  int solutions = 0;
};

Decomposition brute_decomposition(int n, int k);

// Random tower with nonempty levels; no validity filter.
jenga::Configuration random_tower(std::mt19937& rng, int max_n, int max_levels);

}  // namespace oracle
