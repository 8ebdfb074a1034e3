#include "jenga/game.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "jenga/topology.hpp"

namespace jenga {

namespace {

// Moves permitted by the rules before the closed-surface requirement.
std::vector<Move> candidate_moves(const Configuration& c, const GameRules& rules) {
  std::vector<Move> moves;
  const int top = levels_count(c);
  if (top == 0) return moves;
  const bool top_complete = c.top().complete();
  for (int level = 1; level <= top; ++level) {
    if (level == top && !rules.allow_top_removal) continue;
    if (level == top - 1 && !top_complete) continue;
    const Level& row = c.level(level);
    if (row.count() <= 1) continue;  // would empty the level
    for (int slot : row.occupied_slots()) {
      Level top_after = c.top();
      if (level == top) top_after.clear(slot);
      if (top_after.complete()) {
        for (int place = 1; place <= c.n; ++place) moves.push_back({level, slot, place});
      } else {
        for (int place : top_after.empty_slots()) {
          if (level == top && place == slot) continue;
          moves.push_back({level, slot, place});
        }
      }
    }
  }
  return moves;
}

Configuration apply_unchecked(const Configuration& c, const Move& m) {
  Configuration next = c;
  next.level(m.remove_level).clear(m.remove_slot);
  if (next.top().complete()) next.levels.emplace_back(c.n);
  next.levels.back().set(m.place_slot);
  return next;
}

std::string state_key(const Configuration& c) {
  const std::size_t bytes = static_cast<std::size_t>((c.n + 7) / 8);
  std::string key;
  key.reserve(bytes * c.levels.size());
  for (const Level& level : c.levels) {
    const std::uint64_t bits = level.bits();
    for (std::size_t b = 0; b < bytes; ++b) {
      key.push_back(static_cast<char>((bits >> (8 * b)) & 0xFFU));
    }
  }
  return key;
}

bool level_order_less(const Configuration& a, const Configuration& b) {
  return std::lexicographical_compare(a.levels.begin(), a.levels.end(), b.levels.begin(),
                                      b.levels.end(), [](const Level& x, const Level& y) {
                                        return x.bits() < y.bits();
                                      });
}

template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace

std::string to_string(const Move& m) {
  return "L" + std::to_string(m.remove_level) + " S" + std::to_string(m.remove_slot) +
         " -> S" + std::to_string(m.place_slot);
}

std::vector<Move> legal_moves(const Configuration& c, const GameRules& rules) {
  check_configuration(c);
  std::vector<Move> moves;
  for (const Move& m : candidate_moves(c, rules)) {
    if (checked_genus(apply_unchecked(c, m))) moves.push_back(m);
  }
  return moves;
}

Configuration apply_move(const Configuration& c, const Move& m, const GameRules& rules) {
  check_configuration(c);
  const std::vector<Move> allowed = candidate_moves(c, rules);
  if (std::find(allowed.begin(), allowed.end(), m) == allowed.end()) {
    throw Error(ErrorCode::IllegalMove, "illegal move " + to_string(m));
  }
  Configuration next = apply_unchecked(c, m);
  if (!checked_genus(next)) {
    throw Error(ErrorCode::IllegalMove,
                "move " + to_string(m) + " breaks the tower into a non-surface");
  }
  return next;
}

Configuration canonicalize(const Configuration& c) {
  Configuration best = c;
  for (int mask = 1; mask < 4; ++mask) {
    Configuration image = c;
    for (int i = 1; i <= levels_count(c); ++i) {
      // Mirroring y reverses the slot order of x-running levels, and vice versa.
      const bool flip = c.axis(i) == Axis::X ? (mask & 1) : (mask & 2);
      if (flip) image.level(i) = c.level(i).reversed();
    }
    if (level_order_less(image, best)) best = std::move(image);
  }
  return best;
}

SearchReport max_genus_search(const GameParams& p, const SearchOptions& options) {
  check_params(p, 2);
  if (options.max_states < 1) {
    throw Error(ErrorCode::ParamOutOfRange, "max_states must be at least 1");
  }
  struct Node {
    Configuration config;
    std::size_t parent;
    Move move;
    int genus;
  };
  constexpr std::size_t kRoot = static_cast<std::size_t>(-1);

  auto key_of = [&](const Configuration& c) {
    return state_key(options.use_symmetry ? canonicalize(c) : c);
  };

  std::vector<Node> nodes;
  std::unordered_map<std::string, std::size_t> visited;
  std::unordered_set<std::string> rejected;

  const Configuration initial = make_initial(p);
  const std::optional<int> g0 = checked_genus(initial);
  nodes.push_back({initial, kRoot, Move{}, g0.value_or(0)});
  visited.emplace(key_of(initial), 0);

  SearchReport report;
  std::vector<std::size_t> frontier{0};
  int depth = 0;
  while (!frontier.empty() && !report.hit_budget) {
    // Expand the frontier; children keep (parent, move) order.
    struct Child {
      Move move;
      Configuration config;
      std::string key;
    };
    std::vector<std::vector<Child>> expanded(frontier.size());
    parallel_for(frontier.size(), options.threads, [&](std::size_t i) {
      const Configuration& parent = nodes[frontier[i]].config;
      for (const Move& m : candidate_moves(parent, options.rules)) {
        Configuration child = apply_unchecked(parent, m);
        std::string key = key_of(child);
        expanded[i].push_back({m, std::move(child), std::move(key)});
      }
    });

    struct Pending {
      std::size_t parent;
      Move move;
      Configuration config;
      std::string key;
      std::optional<int> genus;
    };
    std::vector<Pending> pending;
    std::unordered_map<std::string, std::size_t> pending_index;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (Child& child : expanded[i]) {
        if (visited.count(child.key) || rejected.count(child.key) ||
            pending_index.count(child.key)) {
          continue;
        }
        pending_index.emplace(child.key, pending.size());
        pending.push_back({frontier[i], child.move, std::move(child.config), child.key, {}});
      }
    }
    parallel_for(pending.size(), options.threads,
                 [&](std::size_t i) { pending[i].genus = checked_genus(pending[i].config); });

    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const bool any_legal = std::any_of(
          expanded[i].begin(), expanded[i].end(), [&](const Child& child) {
            if (visited.count(child.key)) return true;
            const auto it = pending_index.find(child.key);
            return it != pending_index.end() && pending[it->second].genus.has_value();
          });
      if (!any_legal) ++report.dead_ends;
    }

    std::vector<std::size_t> next;
    for (Pending& item : pending) {
      if (!item.genus) {
        rejected.insert(item.key);
        continue;
      }
      if (nodes.size() >= options.max_states) {
        report.hit_budget = true;
        break;
      }
      visited.emplace(item.key, nodes.size());
      next.push_back(nodes.size());
      nodes.push_back({std::move(item.config), item.parent, item.move, *item.genus});
    }
    if (!next.empty()) ++depth;
    frontier = std::move(next);
  }

  report.states_visited = nodes.size();
  report.depth = depth;
  std::size_t best = 0;
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (nodes[i].genus > nodes[best].genus) best = i;
  }
  report.max_genus = nodes[best].genus;
  report.witness_state = nodes[best].config;
  if (options.track_witness) {
    for (std::size_t at = best; nodes[at].parent != kRoot; at = nodes[at].parent) {
      report.witness.push_back(nodes[at].move);
    }
    std::reverse(report.witness.begin(), report.witness.end());
  }
  if (p.k >= 3) {
    report.nk_configuration_visited = visited.count(key_of(make_nk_configuration(p))) > 0;
  }
  if (options.collect_states) {
    report.states.reserve(nodes.size());
    for (Node& node : nodes) report.states.push_back(std::move(node.config));
  }
  return report;
}

std::optional<std::vector<Move>> plan_moves(const Configuration& start,
                                            const Configuration& target,
                                            const GameRules& rules) {
  check_configuration(start);
  check_configuration(target);
  if (start.n != target.n) return std::nullopt;
  const int target_levels = levels_count(target);
  const std::size_t limit = static_cast<std::size_t>(block_count(start)) * 8 + 16;

  Configuration current = start;
  std::vector<Move> plan;
  while (!(current == target)) {
    if (plan.size() > limit) return std::nullopt;
    const int top = levels_count(current);
    const int place_level = current.top().complete() ? top + 1 : top;
    if (place_level > target_levels) return std::nullopt;

    // Placement: target slots first; spare slots only while the level still
    // has to be completed before the next one opens.
    const Level placed = place_level <= top ? current.level(place_level) : Level(current.n);
    const Level& wanted = target.level(place_level);
    std::vector<int> places;
    for (int s : placed.empty_slots()) {
      if (wanted.occupied(s)) places.push_back(s);
    }
    if (places.empty() && place_level < target_levels) places = placed.empty_slots();
    if (places.empty()) return std::nullopt;

    const std::vector<Move> moves = candidate_moves(current, rules);
    std::optional<Move> chosen;
    for (int level = 1; level <= top && !chosen; ++level) {
      const Level& have = current.level(level);
      for (int slot : have.occupied_slots()) {
        const bool surplus = level > target_levels || !target.level(level).occupied(slot);
        if (!surplus) continue;
        for (int place : places) {
          const Move m{level, slot, place};
          if (std::find(moves.begin(), moves.end(), m) != moves.end() &&
              checked_genus(apply_unchecked(current, m))) {
            chosen = m;
            break;
          }
        }
        if (chosen) break;
      }
    }
    if (!chosen) return std::nullopt;
    current = apply_unchecked(current, *chosen);
    plan.push_back(*chosen);
  }
  return plan;
}

Configuration replay(const Configuration& start, const std::vector<Move>& moves,
                     const GameRules& rules) {
  Configuration current = start;
  for (const Move& m : moves) current = apply_move(current, m, rules);
  return current;
}

}  // namespace jenga
