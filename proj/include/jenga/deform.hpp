#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jenga/config.hpp"

namespace jenga {

/// A block position. Level 0 stands for the reserve pool (slot ignored).
struct Site {
  int level = 0;
  int slot = 0;

  bool is_reserve() const { return level == 0; }

  friend bool operator==(const Site&, const Site&) = default;
};

enum class DeformKind { Slide, Load, Insert };

std::string to_string(DeformKind kind);

struct DeformOp {
  DeformKind kind = DeformKind::Slide;
  Site source;
  Site target;

  friend bool operator==(const DeformOp&, const DeformOp&) = default;
};

/// Working configuration plus the number of blocks held in reserve.
struct DeformState {
  Configuration config;
  int reserve = 0;

  friend bool operator==(const DeformState&, const DeformState&) = default;
};

/// Slide: same level, source occupied, target empty.
/// Load: target is the topmost level, or a fresh level right above it.
/// Insert: target is any other existing level, a fresh level on top, or the
/// reserve pool.
/// Either end may be the reserve pool for Load/Insert. A source level that
/// becomes empty is dropped when it is the top and rejected otherwise.
DeformState apply_deform(const DeformState& state, const DeformOp& op);
Configuration apply_deform(const Configuration& c, const DeformOp& op);

enum class DeformPhase { Prep2, Prep3, A1, A2, A3, Return };

std::string to_string(DeformPhase phase);

struct DeformStep {
  DeformPhase phase = DeformPhase::A1;
  DeformOp op;
  int genus = 0;
};

struct DeformTrace {
  DeformState start;
  std::vector<DeformStep> steps;
  DeformState final_state;
};

/// Levels 2 .. s-2 of c as a configuration of their own.
Configuration strip_prime(const Configuration& c);

/// Deforms source_prime into target_prime. Blocks missing from the source are
/// drawn from a reserve pool that starts with `reserve` blocks.
DeformTrace deform_algorithm(const Configuration& source_prime,
                             const Configuration& target_prime, int reserve = 0);

/// Puts the first level and the upper two levels of `original` back around
/// the deformed middle part.
Configuration reassemble_hat(const Configuration& c3, const Configuration& original);

struct OddPreprocess {
  Configuration q2;
  Configuration q3;
  int genus_q2 = 0;
  int genus_q3 = 0;
  std::vector<DeformStep> steps;
};

/// Moves the top-level blocks of an odd canonical tower into the gaps two
/// levels below, then tops the first level up to `target_first_level_count`
/// with blocks taken from the new top level.
/// New first-level blocks go to the slots of `preferred` first, then to the
/// leftmost empty slots.
OddPreprocess odd_preprocess(const Configuration& cfg, int target_first_level_count,
                             const std::optional<Level>& preferred = std::nullopt);

struct PipelineReport {
  bool applicable = false;
  bool preprocessed = false;
  long g_nk = 0;
  std::optional<OddPreprocess> prep;
  DeformTrace trace;
  Configuration hat;
  int g_hat = 0;
  int g_target = 0;
  int trace_max_genus = 0;
  bool trace_reaches_target = false;
  bool trace_within_bound = false;
  bool hat_within_bound = false;
  bool target_within_bound = false;
  bool prep_strictly_below = true;
  bool conserved = false;
};

/// The full maximality pipeline for a reachable configuration `target` of the
/// (n,k)-game. Targets with fewer than 4 levels are reported as not
/// applicable.
PipelineReport deform_pipeline(const GameParams& p, const Configuration& target);

/// One line per step: "<phase> <op> <from> <to> genus=<g>".
std::string format_trace(const std::vector<DeformStep>& steps);

/// Replays the steps from `start` and checks each recorded genus.
bool replay_trace(const DeformState& start, const std::vector<DeformStep>& steps,
                  DeformState* final_state = nullptr);

}  // namespace jenga
