#include "jenga/config.hpp"

#include <bit>
#include <charconv>
#include <sstream>

namespace jenga {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::LineLength: return "LineLength";
    case ErrorCode::EmptyLevel: return "EmptyLevel";
    case ErrorCode::BadCharacter: return "BadCharacter";
    case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::NotOdd: return "NotOdd";
    case ErrorCode::InvalidSurface: return "InvalidSurface";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NonIntegral: return "NonIntegral";
    case ErrorCode::UnsupportedCensus: return "UnsupportedCensus";
    case ErrorCode::Mismatch: return "Mismatch";
    case ErrorCode::IllegalMove: return "IllegalMove";
    case ErrorCode::IllegalOperation: return "IllegalOperation";
    case ErrorCode::Incompatible: return "Incompatible";
  }
  return "Unknown";
}

void check_params(const GameParams& p, int min_k) {
  if (p.n < 2 || p.n > Level::kMaxWidth || p.k < min_k) {
    std::ostringstream msg;
    msg << "parameters out of range: n=" << p.n << " k=" << p.k
        << " (need 2 <= n <= " << Level::kMaxWidth << ", k >= " << min_k << ")";
    throw Error(ErrorCode::ParamOutOfRange, msg.str());
  }
}

// ---------------------------------------------------------------------------
// Level

Level::Level(int width, std::uint64_t bits) : bits_(bits), width_(width) {
  if (width < 1 || width > kMaxWidth) {
    throw Error(ErrorCode::ParamOutOfRange,
                "level width must be in 1.." + std::to_string(kMaxWidth));
  }
  if (width < kMaxWidth && (bits >> width) != 0) {
    throw Error(ErrorCode::LineLength, "level bits exceed width");
  }
}

Level Level::full(int width) {
  const std::uint64_t bits =
      width == kMaxWidth ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);
  return Level(width, bits);
}

Level Level::from_row(std::string_view row) {
  Level level(static_cast<int>(row.size()));
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] == '#') {
      level.set(static_cast<int>(i) + 1);
    } else if (row[i] != '.') {
      throw Error(ErrorCode::BadCharacter,
                  std::string("unexpected character '") + row[i] + "' in level row");
    }
  }
  return level;
}

void Level::check_slot(int slot) const {
  if (slot < 1 || slot > width_) {
    throw Error(ErrorCode::ParamOutOfRange,
                "slot " + std::to_string(slot) + " outside 1.." + std::to_string(width_));
  }
}

bool Level::occupied(int slot) const {
  check_slot(slot);
  return (bits_ >> (slot - 1)) & 1U;
}

void Level::set(int slot) {
  check_slot(slot);
  bits_ |= std::uint64_t{1} << (slot - 1);
}

void Level::clear(int slot) {
  check_slot(slot);
  bits_ &= ~(std::uint64_t{1} << (slot - 1));
}

int Level::count() const { return std::popcount(bits_); }

Level Level::reversed() const {
  Level out(width_);
  for (int s = 1; s <= width_; ++s) {
    if (occupied(s)) out.set(width_ + 1 - s);
  }
  return out;
}

std::vector<int> Level::occupied_slots() const {
  std::vector<int> slots;
  for (int s = 1; s <= width_; ++s) {
    if (occupied(s)) slots.push_back(s);
  }
  return slots;
}

std::vector<int> Level::empty_slots() const {
  std::vector<int> slots;
  for (int s = 1; s <= width_; ++s) {
    if (!occupied(s)) slots.push_back(s);
  }
  return slots;
}

std::string Level::row() const {
  std::string out(static_cast<std::size_t>(width_), '.');
  for (int s = 1; s <= width_; ++s) {
    if (occupied(s)) out[static_cast<std::size_t>(s - 1)] = '#';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Configuration

void check_configuration(const Configuration& c) {
  if (c.n < 2 || c.n > Level::kMaxWidth) {
    throw Error(ErrorCode::ParamOutOfRange, "n out of range: " + std::to_string(c.n));
  }
  for (std::size_t i = 0; i < c.levels.size(); ++i) {
    if (c.levels[i].width() != c.n) {
      throw Error(ErrorCode::LineLength,
                  "level " + std::to_string(i + 1) + " has width " +
                      std::to_string(c.levels[i].width()) + ", expected " +
                      std::to_string(c.n));
    }
    if (c.levels[i].empty()) {
      throw Error(ErrorCode::EmptyLevel, "level " + std::to_string(i + 1) + " is empty");
    }
  }
}

int block_count(const Configuration& c) {
  int total = 0;
  for (const Level& level : c.levels) total += level.count();
  return total;
}

int levels_count(const Configuration& c) { return static_cast<int>(c.levels.size()); }

Configuration parse_box_description(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  if (lines.empty() || lines.front().substr(0, 2) != "n ") {
    throw Error(ErrorCode::MalformedHeader, "expected header line 'n <integer>'");
  }
  const std::string_view digits = lines.front().substr(2);
  int n = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
    throw Error(ErrorCode::MalformedHeader,
                "header width is not an integer: '" + std::string(digits) + "'");
  }
  if (n < 2 || n > Level::kMaxWidth) {
    throw Error(ErrorCode::MalformedHeader, "header width out of range: " + std::to_string(n));
  }

  Configuration c;
  c.n = n;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string_view row = lines[i];
    if (static_cast<int>(row.size()) != n) {
      throw Error(ErrorCode::LineLength,
                  "line " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                      " characters, expected " + std::to_string(n));
    }
    Level level = Level::from_row(row);
    if (level.empty()) {
      throw Error(ErrorCode::EmptyLevel, "level " + std::to_string(i) + " is empty");
    }
    c.levels.push_back(level);
  }
  if (c.levels.empty()) {
    throw Error(ErrorCode::EmptyLevel, "configuration has no levels");
  }
  return c;
}

std::string serialize_box_description(const Configuration& c) {
  std::string out = "n " + std::to_string(c.n) + "\n";
  for (const Level& level : c.levels) {
    out += level.row();
    out += '\n';
  }
  return out;
}

Configuration make_initial(const GameParams& p) {
  check_params(p);
  Configuration c;
  c.n = p.n;
  c.levels.assign(static_cast<std::size_t>(p.k), Level::full(p.n));
  return c;
}

NkDecomposition solve_nk_decomposition(const GameParams& p) {
  check_params(p, 3);
  if (p.n % 2 == 0) {
    throw Error(ErrorCode::NotOdd, "decomposition needs odd n, got " + std::to_string(p.n));
  }
  const int half_up = (p.n + 1) / 2;
  // nk = n + (n-1)/2 + half_up*(x-3) + l with 1 <= l <= half_up
  const int rest = p.n * p.k - p.n - (p.n - 1) / 2;
  const int middle = (rest - 1) / half_up;
  return NkDecomposition{middle + 3, rest - half_up * middle};
}

Level odd_bottom_level(int n, int l) {
  const int half_up = (n + 1) / 2;
  if (n % 2 == 0 || l < 1 || l > half_up) {
    throw Error(ErrorCode::ParamOutOfRange,
                "bottom level needs odd n and 1 <= l <= (n+1)/2");
  }
  Level bottom(n);
  if (l == 1) {
    bottom.set(half_up);
    return bottom;
  }
  bottom.set(1);
  bottom.set(n);
  for (int slot = 3; bottom.count() < l; slot += 2) bottom.set(slot);
  return bottom;
}

Level even_gapped_level(int n) {
  if (n % 2 != 0 || n < 2) {
    throw Error(ErrorCode::ParamOutOfRange, "gapped level needs even n");
  }
  Level level(n);
  for (int slot = 1; slot <= n - 3; slot += 2) level.set(slot);
  level.set(n);
  return level;
}

namespace {

Level contiguous_from_left(int n, int count) {
  Level level(n);
  for (int s = 1; s <= count; ++s) level.set(s);
  return level;
}

Level odd_slots(int n) {
  Level level(n);
  for (int s = 1; s <= n; s += 2) level.set(s);
  return level;
}

}  // namespace

Configuration make_nk_configuration(const GameParams& p) {
  check_params(p, 3);
  Configuration c;
  c.n = p.n;
  if (p.n % 2 == 0) {
    c.levels.assign(static_cast<std::size_t>(2 * p.k - 3), even_gapped_level(p.n));
    c.levels.push_back(Level::full(p.n));
    c.levels.push_back(contiguous_from_left(p.n, p.n / 2));
    return c;
  }
  const NkDecomposition d = solve_nk_decomposition(p);
  c.levels.push_back(odd_bottom_level(p.n, d.l));
  for (int i = 0; i < d.x - 3; ++i) c.levels.push_back(odd_slots(p.n));
  c.levels.push_back(Level::full(p.n));
  c.levels.push_back(contiguous_from_left(p.n, (p.n - 1) / 2));
  return c;
}

}  // namespace jenga
