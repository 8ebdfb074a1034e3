#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "jenga/config.hpp"

namespace jenga {

/// Take the block at (remove_level, remove_slot) and put it into place_slot
/// of the topmost incomplete level, or of a fresh level when the top is
/// complete.
struct Move {
  int remove_level = 0;
  int remove_slot = 0;
  int place_slot = 0;

  friend bool operator==(const Move&, const Move&) = default;
  friend auto operator<=>(const Move&, const Move&) = default;
};

/// "L<level> S<slot> -> S<slot>"
std::string to_string(const Move& m);

struct GameRules {
  /// Lets the mover take a block out of the topmost level itself.
  bool allow_top_removal = false;
};

std::vector<Move> legal_moves(const Configuration& c, const GameRules& rules = {});

/// Applies a move after checking it against the rules.
Configuration apply_move(const Configuration& c, const Move& m, const GameRules& rules = {});

/// Least image under the reflections of the tower footprint (identity,
/// mirror in x, mirror in y, half turn).
Configuration canonicalize(const Configuration& c);

struct SearchOptions {
  std::size_t max_states = 5'000'000;
  bool use_symmetry = true;
  bool track_witness = true;
  bool collect_states = false;
  int threads = 1;
  GameRules rules;
};

struct SearchReport {
  std::size_t states_visited = 0;
  int max_genus = 0;
  /// Moves from the initial tower to the first maximizing state (BFS order,
  /// lexicographically least among shortest sequences).
  std::vector<Move> witness;
  Configuration witness_state;
  bool hit_budget = false;
  bool nk_configuration_visited = false;
  std::size_t dead_ends = 0;
  int depth = 0;
  /// Every visited state (as first reached) when collect_states is set.
  std::vector<Configuration> states;
};

SearchReport max_genus_search(const GameParams& p, const SearchOptions& options = {});

/// A move sequence turning `start` into `target`, built greedily: discard the
/// lowest surplus blocks first and fill the top level toward the target.
/// Returns nullopt when the greedy plan gets stuck.
std::optional<std::vector<Move>> plan_moves(const Configuration& start,
                                            const Configuration& target,
                                            const GameRules& rules = {});

/// Replays moves from `start`, checking each one.
Configuration replay(const Configuration& start, const std::vector<Move>& moves,
                     const GameRules& rules = {});

}  // namespace jenga
