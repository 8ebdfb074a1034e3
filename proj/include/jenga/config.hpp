#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "jenga/error.hpp"

namespace jenga {

/// Parameters of an (n,k)-game: n blocks per full level, k initial levels.
/// A block is n unit cells long and one unit wide.
struct GameParams {
  int n = 0;
  int k = 0;

  friend bool operator==(const GameParams&, const GameParams&) = default;
};

/// Throws ParamOutOfRange unless 2 <= n <= Level::kMaxWidth and k >= min_k.
void check_params(const GameParams& p, int min_k = 2);

enum class Axis { X, Y };

/// Level 1 (bottom) runs along X; orientation alternates upward.
constexpr Axis axis_of_level(int level_index) {
  return (level_index % 2 == 1) ? Axis::X : Axis::Y;
}

/// Occupancy of the n slots of one level. Slots are 1-based, left to right in
/// the box description.
class Level {
 public:
  static constexpr int kMaxWidth = 64;

  Level() = default;
  explicit Level(int width, std::uint64_t bits = 0);

  static Level full(int width);
  /// Parses a row of '#' and '.' characters.
  static Level from_row(std::string_view row);

  int width() const { return width_; }
  std::uint64_t bits() const { return bits_; }

  bool occupied(int slot) const;
  void set(int slot);
  void clear(int slot);

  int count() const;
  bool empty() const { return bits_ == 0; }
  bool complete() const { return count() == width_; }

  /// Slot order reversed (mirror image of the level).
  Level reversed() const;
  std::vector<int> occupied_slots() const;
  std::vector<int> empty_slots() const;

  std::string row() const;

  friend bool operator==(const Level&, const Level&) = default;
  friend auto operator<=>(const Level& a, const Level& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  void check_slot(int slot) const;

  std::uint64_t bits_ = 0;
  int width_ = 0;
};

/// A tower: levels ordered bottom to top. `first_level` is the index of
/// levels.front() in the tower it was cut from (1 for whole towers); it fixes
/// the orientation of every level.
struct Configuration {
  int n = 0;
  std::vector<Level> levels;
  int first_level = 1;

  Axis axis(int local_level) const {
    return axis_of_level(first_level + local_level - 1);
  }
  const Level& level(int local_level) const { return levels.at(local_level - 1); }
  Level& level(int local_level) { return levels.at(local_level - 1); }
  const Level& top() const { return levels.back(); }

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// Throws unless n is in range, every level has width n and no level is empty.
void check_configuration(const Configuration& c);

int block_count(const Configuration& c);
int levels_count(const Configuration& c);

Configuration parse_box_description(std::string_view text);
std::string serialize_box_description(const Configuration& c);

Configuration make_initial(const GameParams& p);

/// Level count x and bottom-level block count l of the odd-n canonical tower.
struct NkDecomposition {
  int x = 0;
  int l = 0;

  friend bool operator==(const NkDecomposition&, const NkDecomposition&) = default;
};

NkDecomposition solve_nk_decomposition(const GameParams& p);

/// Bottom-level slots used by the odd-n canonical tower for l blocks.
Level odd_bottom_level(int n, int l);
/// The gapped level of the even-n canonical tower.
Level even_gapped_level(int n);

/// The genus-maximizing (n,k)-configuration.
Configuration make_nk_configuration(const GameParams& p);

}  // namespace jenga
