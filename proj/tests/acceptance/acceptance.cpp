#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "jenga/deform.hpp"
#include "jenga/game.hpp"
#include "jenga/topology.hpp"
#include "oracles.hpp"

using namespace jenga;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail = what;
      pass = false;
    }
  }
};

std::string params(int n, int k) {
  return "(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

DefectCensus census_of(const Configuration& c, bool exclude) {
  return vertex_census(extract_boundary(voxelize(c)), c, exclude);
}

std::vector<Configuration> small_game_states;  // filled by the search check

Outcome canonical_genus() {
  Outcome o;
  for (int n = 2; n <= 9; ++n) {
    for (int k = 3; k <= 8; ++k) {
      const GenusResult g = analyze(make_nk_configuration({n, k}));
      const long closed = closed_form_genus({n, k});
      o.require(g.genus_euler == closed && g.genus_descartes == closed,
                "genus mismatch at " + params(n, k));
    }
  }
  o.require(analyze(make_nk_configuration({5, 3})).genus_euler == 10, "g(5,3) != 10");
  o.require(analyze(make_nk_configuration({6, 3})).genus_euler == 12, "g(6,3) != 12");
  o.require(analyze(make_nk_configuration({5, 5})).genus_euler == 30, "g(5,5) != 30");
  for (int k = 3; k <= 8; ++k) {
    o.require(analyze(make_nk_configuration({2, k})).genus_euler == 0, "g(2,k) != 0");
  }
  o.detail = o.pass ? "48 towers, n 2..9, k 3..8" : o.detail;
  return o;
}

Outcome gauss_bonnet() {
  Outcome o;
  std::mt19937 rng(20240607);
  int valid = 0;
  int drawn = 0;
  while (valid < 1000) {
    ++drawn;
    const Configuration c = oracle::random_tower(rng, 7, 7);
    if (!checked_genus(c)) continue;
    ++valid;
    const SurfaceComplex s = extract_boundary(voxelize(c));
    const oracle::BruteSurface brute = oracle::brute_surface(oracle::cells_of(c));
    o.require(genus_euler(s) == genus_descartes(s), "methods disagree");
    o.require(defect_sum(s) == 4 * s.euler_characteristic(), "sum of defects != 2 pi chi");
    o.require(s.euler_characteristic() == brute.chi(), "chi differs from direct count");
  }
  if (o.pass) {
    o.detail = std::to_string(valid) + " valid towers out of " + std::to_string(drawn) + " drawn";
  }
  return o;
}

Outcome odd_counts() {
  Outcome o;
  int cases = 0;
  for (int n = 3; n <= 9; n += 2) {
    for (int k = 3; k <= 8; ++k) {
      const NkDecomposition d = solve_nk_decomposition({n, k});
      if (d.l < 2) continue;
      ++cases;
      const DefectCensus geo = census_of(make_nk_configuration({n, k}), true);
      const ClosedFormCounts closed = closed_form_counts({n, k});
      o.require(closed.printed == TypeCounts{geo.type1, geo.type2, geo.type3},
                "totals differ at " + params(n, k));
      bool floors = closed.per_floor.size() == geo.per_floor.size();
      for (std::size_t i = 0; floors && i < geo.per_floor.size(); ++i) {
        floors = closed.per_floor[i] == geo.per_floor[i];
      }
      o.require(floors, "per-floor rows differ at " + params(n, k));
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " towers with l >= 2, totals and floors";
  return o;
}

Outcome even_counts() {
  Outcome o;
  bool printed_fails_63 = false;
  for (int n = 2; n <= 8; n += 2) {
    for (int k = 3; k <= 8; ++k) {
      const Configuration c = make_nk_configuration({n, k});
      const GenusResult g = analyze(c, true);
      o.require(lemma_genus_from_census(g.census) == g.genus_euler,
                "census genus differs at " + params(n, k));
      const TypeCounts geo{g.census.type1, g.census.type2, g.census.type3};
      const ClosedFormCounts closed = closed_form_counts({n, k});
      const bool printed = closed.printed == geo;
      const bool candidate = *closed.corrected_candidate == geo;
      if (n >= 4) o.require(candidate, "candidate differs at " + params(n, k));
      if (n == 6 && k == 3) {
        printed_fails_63 = !printed && geo.type2 == 40 && closed.printed.type2 == 160;
      }
      if (n == 2 || (n == 6 && k == 3)) {
        std::ostringstream note;
        note << params(n, k) << " geometric " << geo.type1 << "/" << geo.type2 << "/"
             << geo.type3 << " printed " << closed.printed.type1 << "/"
             << closed.printed.type2 << "/" << closed.printed.type3 << " candidate "
             << closed.corrected_candidate->type1 << "/" << closed.corrected_candidate->type2
             << "/" << closed.corrected_candidate->type3 << " printed_matches "
             << (printed ? "yes" : "no") << " candidate_matches " << (candidate ? "yes" : "no");
        o.notes.push_back(note.str());
      }
    }
  }
  o.require(printed_fails_63, "printed Type II count unexpectedly fits at (6,3)");
  if (o.pass) {
    o.detail = "census identity holds for n 2..8; candidate fits for n 4..8; printed fails (6,3): 40 vs 160";
  }
  return o;
}

Outcome census_identity() {
  Outcome o;
  int towers = 0;
  for (int n = 2; n <= 9; ++n) {
    for (int k = 3; k <= 8; ++k) {
      const Configuration c = make_nk_configuration({n, k});
      const GenusResult g = analyze(c);
      o.require(lemma_genus_from_census(g.census) == g.genus_euler,
                "census genus differs at " + params(n, k));
      o.require(topmost_defect(c) == 0, "topmost level carries defect at " + params(n, k));
      ++towers;
    }
  }
  if (o.pass) o.detail = std::to_string(towers) + " towers, topmost net defect 0";
  return o;
}

Outcome maximality() {
  Outcome o;
  std::ostringstream detail;
  for (GameParams p : {GameParams{2, 3}, GameParams{3, 2}, GameParams{3, 3}}) {
    SearchOptions options;
    options.collect_states = true;
    const auto start = std::chrono::steady_clock::now();
    const SearchReport r = max_genus_search(p, options);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(!r.hit_budget, "budget hit at " + params(p.n, p.k));
    o.require(r.max_genus == closed_form_genus(p), "maximum differs at " + params(p.n, p.k));
    if (p.n == 3 && p.k == 3) {
      o.require(r.nk_configuration_visited, "Q(3,3) not reached");
      o.require(seconds < 300.0, "(3,3) search too slow");
    }
    detail << params(p.n, p.k) << " max " << r.max_genus << " over " << r.states_visited
           << " states; ";
    small_game_states.insert(small_game_states.end(), r.states.begin(), r.states.end());
  }
  if (o.pass) o.detail = detail.str() + "Q(3,3) visited";
  return o;
}

Outcome moving_trick_cases() {
  Outcome o;
  for (GameParams p : {GameParams{3, 3}, GameParams{3, 5}, GameParams{7, 5}}) {
    o.require(moving_trick_check(p), "fails at " + params(p.n, p.k));
  }
  if (o.pass) o.detail = "(3,3), (3,5), (7,5)";
  return o;
}

Outcome deformation() {
  Outcome o;
  int targets = 0;
  int preprocessed = 0;
  int hat_over = 0;
  for (GameParams p : {GameParams{3, 3}, GameParams{4, 3}}) {
    SearchOptions options;
    options.collect_states = true;
    const SearchReport r = max_genus_search(p, options);
    const std::size_t stride = p.n == 3 ? 1 : 61;
    for (std::size_t i = 0; i < r.states.size(); i += stride) {
      const PipelineReport rep = deform_pipeline(p, r.states[i]);
      if (!rep.applicable) continue;
      ++targets;
      if (rep.preprocessed) ++preprocessed;
      if (!rep.hat_within_bound) ++hat_over;
      const std::string where = params(p.n, p.k) + " state " + std::to_string(i);
      o.require(rep.trace_within_bound, "trace exceeds g(n,k) at " + where);
      o.require(rep.target_within_bound, "g(Q) exceeds g(n,k) at " + where);
      o.require(rep.trace_reaches_target, "trace misses the target at " + where);
      o.require(rep.conserved, "blocks not conserved at " + where);
      o.require(rep.prep_strictly_below, "preprocessing does not lower the genus at " + where);
      o.require(replay_trace(rep.trace.start, rep.trace.steps), "trace does not replay at " + where);
    }
  }
  o.require(targets >= 100, "fewer than 100 targets");
  o.require(preprocessed > 0, "odd preprocessing never triggered");
  o.notes.push_back("reassembled towers above g(n,k): " + std::to_string(hat_over));
  if (o.pass) {
    o.detail = std::to_string(targets) + " targets, " + std::to_string(preprocessed) +
               " with odd preprocessing";
  }
  return o;
}

Outcome play_structure() {
  Outcome o;
  o.require(!small_game_states.empty(), "no states collected");
  for (const Configuration& c : small_game_states) {
    const int s = levels_count(c);
    if (s >= 2) o.require(c.level(s - 1).complete(), "second-from-top level not full");
    if (s >= 3) {
      o.require(c.level(s).count() + c.level(s - 2).count() >= c.n,
                "top and third-from-top hold fewer than n blocks");
    }
  }
  if (o.pass) o.detail = std::to_string(small_game_states.size()) + " states";
  return o;
}

Outcome anchors() {
  Outcome o;
  for (int n = 2; n <= 9; ++n) {
    for (int k = 2; k <= 8; ++k) {
      o.require(analyze(make_initial({n, k})).genus_euler == 0,
                "initial tower not genus 0 at " + params(n, k));
    }
  }
  const VoxelSet cube({{0, 0, 0}});
  const SurfaceComplex s = extract_boundary(cube);
  int type1 = 0;
  for (const Vertex& v : s.vertices) {
    if (classify_vertex(octant_pattern(cube, v.position)).tag == VertexTag::TypeI) ++type1;
  }
  o.require(type1 == 8, "unit cube N_I != 8");
  o.require(defect_sum(s) == 8, "unit cube total defect != 4 pi");
  if (o.pass) o.detail = "initial towers genus 0; unit cube N_I = 8, total defect 4 pi";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> checks{
      {"closed-form genus of the canonical towers", canonical_genus},
      {"Euler and defect genus agree on random towers", gauss_bonnet},
      {"odd vertex counts", odd_counts},
      {"even vertex counts", even_counts},
      {"census genus identity and neutral top level", census_identity},
      {"exhaustive maximum at desk scale", maximality},
      {"sliding the single bottom block", moving_trick_cases},
      {"deformation never exceeds the bound", deformation},
      {"shape invariants of play", play_structure},
      {"trivial anchors", anchors},
  };
  int failures = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    Outcome o;
    try {
      o = checks[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::printf("criterion %zu %s %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL",
                checks[i].first.c_str(), o.detail.c_str());
    for (const std::string& note : o.notes) std::printf("  note: %s\n", note.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
