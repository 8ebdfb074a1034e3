#include "jenga/deform.hpp"

#include <algorithm>
#include <sstream>

#include "jenga/topology.hpp"

namespace jenga {

namespace {

int genus_or_throw(const Configuration& c) {
  const std::optional<int> g = solid_genus(c);
  if (!g) throw Error(ErrorCode::InvalidSurface, "deformation left a non-surface");
  return *g;
}

std::string site_string(const Site& s) {
  if (s.is_reserve()) return "pool";
  return "L" + std::to_string(s.level) + "S" + std::to_string(s.slot);
}

void check_site(const Configuration& c, const Site& s, int max_level) {
  if (s.level < 1 || s.level > max_level || s.slot < 1 || s.slot > c.n) {
    throw Error(ErrorCode::IllegalOperation, "site out of range: " + site_string(s));
  }
}

class Deformer {
 public:
  Deformer(DeformState state, std::vector<DeformStep>& steps)
      : state_(std::move(state)), steps_(steps) {}

  const DeformState& state() const { return state_; }
  int levels() const { return levels_count(state_.config); }

  void run(DeformPhase phase, const DeformOp& op) {
    state_ = apply_deform(state_, op);
    steps_.push_back({phase, op, genus_or_throw(state_.config)});
  }

  void load(DeformPhase phase, int level, int slot) {
    const int top = levels();
    const Level& row = state_.config.top();
    Site target{top + 1, 1};
    if (level != top && !row.complete()) target = {top, row.empty_slots().front()};
    run(phase, {DeformKind::Load, {level, slot}, target});
  }

  // Blocks above `keep` levels, highest and right-most first, then the pool.
  Site spare_block(int keep) const {
    if (levels() > keep) {
      const int top = levels();
      return {top, state_.config.level(top).occupied_slots().back()};
    }
    if (state_.reserve > 0) return {0, 0};
    throw Error(ErrorCode::Incompatible, "not enough blocks to complete the target");
  }

  // Slides surplus blocks onto missing target slots; what remains is loaded
  // onto the top.
  void settle_surplus(DeformPhase phase, int s, const Level& want) {
    const Level have = state_.config.level(s);
    std::vector<int> extra;
    std::vector<int> missing;
    for (int slot = 1; slot <= state_.config.n; ++slot) {
      if (have.occupied(slot) && !want.occupied(slot)) extra.push_back(slot);
      if (!have.occupied(slot) && want.occupied(slot)) missing.push_back(slot);
    }
    std::size_t i = 0;
    for (; i < extra.size() && i < missing.size(); ++i) {
      run(phase, {DeformKind::Slide, {s, extra[i]}, {s, missing[i]}});
    }
    for (; i < extra.size(); ++i) load(phase, s, extra[i]);
  }

  void fill_deficit(DeformPhase phase, int s, const Level& want, int keep) {
    if (levels() < s) {
      const Site from = spare_block(keep);
      run(phase, {DeformKind::Insert, from, {s, want.occupied_slots().front()}});
    }
    const Level have = state_.config.level(s);
    std::vector<int> extra;
    std::vector<int> missing;
    for (int slot = 1; slot <= state_.config.n; ++slot) {
      if (have.occupied(slot) && !want.occupied(slot)) extra.push_back(slot);
      if (!have.occupied(slot) && want.occupied(slot)) missing.push_back(slot);
    }
    std::size_t i = 0;
    for (; i < extra.size() && i < missing.size(); ++i) {
      run(phase, {DeformKind::Slide, {s, extra[i]}, {s, missing[i]}});
    }
    for (std::size_t j = i; j < missing.size(); ++j) {
      run(phase, {DeformKind::Insert, spare_block(keep), {s, missing[j]}});
    }
    for (; i < extra.size(); ++i) load(phase, s, extra[i]);
  }

 private:
  DeformState state_;
  std::vector<DeformStep>& steps_;
};

}  // namespace

std::string to_string(DeformKind kind) {
  switch (kind) {
    case DeformKind::Slide:
      return "slide";
    case DeformKind::Load:
      return "load";
    case DeformKind::Insert:
      return "insert";
  }
  return "?";
}

std::string to_string(DeformPhase phase) {
  switch (phase) {
    case DeformPhase::Prep2:
      return "Q2";
    case DeformPhase::Prep3:
      return "Q3";
    case DeformPhase::A1:
      return "A1";
    case DeformPhase::A2:
      return "A2";
    case DeformPhase::A3:
      return "A3";
    case DeformPhase::Return:
      return "return";
  }
  return "?";
}

DeformState apply_deform(const DeformState& state, const DeformOp& op) {
  const Configuration& c = state.config;
  const int top = levels_count(c);
  DeformState next = state;
  Configuration& out = next.config;

  if (op.kind == DeformKind::Slide) {
    if (op.source.is_reserve() || op.target.is_reserve() || op.source.level != op.target.level) {
      throw Error(ErrorCode::IllegalOperation, "slide must stay within one level");
    }
  } else if (op.kind == DeformKind::Load) {
    if (op.target.is_reserve() || op.target.level < top) {
      throw Error(ErrorCode::IllegalOperation, "load must target the topmost level");
    }
  } else if (!op.target.is_reserve() && op.target.level == op.source.level) {
    throw Error(ErrorCode::IllegalOperation, "insert must change the level");
  }

  if (op.source.is_reserve()) {
    if (next.reserve <= 0) throw Error(ErrorCode::IllegalOperation, "reserve pool is empty");
  } else {
    check_site(c, op.source, top);
    if (!c.level(op.source.level).occupied(op.source.slot)) {
      throw Error(ErrorCode::IllegalOperation, "no block at " + site_string(op.source));
    }
  }

  if (op.target.is_reserve()) {
    ++next.reserve;
  } else {
    check_site(c, op.target, top + 1);
    if (op.target.level == top + 1) out.levels.emplace_back(c.n);
    Level& row = out.level(op.target.level);
    if (row.occupied(op.target.slot)) {
      throw Error(ErrorCode::IllegalOperation, "slot taken at " + site_string(op.target));
    }
    row.set(op.target.slot);
  }

  if (op.source.is_reserve()) {
    --next.reserve;
  } else {
    out.level(op.source.level).clear(op.source.slot);
    if (out.level(op.source.level).empty()) {
      if (op.source.level != levels_count(out)) {
        throw Error(ErrorCode::IllegalOperation, "operation empties an inner level");
      }
      out.levels.pop_back();
    }
  }
  if (out.levels.empty()) throw Error(ErrorCode::IllegalOperation, "no blocks left");
  return next;
}

Configuration apply_deform(const Configuration& c, const DeformOp& op) {
  if (op.source.is_reserve() || op.target.is_reserve()) {
    throw Error(ErrorCode::IllegalOperation, "reserve pool needs a DeformState");
  }
  return apply_deform(DeformState{c, 0}, op).config;
}

Configuration strip_prime(const Configuration& c) {
  check_configuration(c);
  const int s = levels_count(c);
  if (s < 4) throw Error(ErrorCode::IllegalOperation, "stripping needs at least 4 levels");
  Configuration out;
  out.n = c.n;
  out.first_level = c.first_level + 1;
  out.levels.assign(c.levels.begin() + 1, c.levels.end() - 2);
  return out;
}

DeformTrace deform_algorithm(const Configuration& source_prime,
                             const Configuration& target_prime, int reserve) {
  check_configuration(source_prime);
  check_configuration(target_prime);
  if (source_prime.n != target_prime.n ||
      (source_prime.first_level - target_prime.first_level) % 2 != 0) {
    throw Error(ErrorCode::Incompatible, "configurations differ in width or orientation");
  }
  if (reserve < 0) throw Error(ErrorCode::Incompatible, "negative reserve");

  DeformTrace trace;
  trace.start = {source_prime, reserve};
  Deformer d(trace.start, trace.steps);
  const int source_levels = levels_count(source_prime);
  const int target_levels = levels_count(target_prime);

  const auto wanted = [&](int s) -> const Level& { return target_prime.level(s); };
  const auto holds_enough = [&](int s) {
    return s <= d.levels() && d.state().config.level(s).count() >= wanted(s).count();
  };

  for (int s = 1; s <= std::min(source_levels, target_levels); ++s) {
    if (holds_enough(s)) d.settle_surplus(DeformPhase::A1, s, wanted(s));
  }
  for (int s = source_levels + 1; s <= target_levels; ++s) {
    if (holds_enough(s)) d.settle_surplus(DeformPhase::A2, s, wanted(s));
  }
  for (int s = 1; s <= target_levels; ++s) {
    if (s > d.levels() || !(d.state().config.level(s) == wanted(s))) {
      d.fill_deficit(DeformPhase::A3, s, wanted(s), target_levels);
    }
  }
  while (d.levels() > target_levels) {
    const int top = d.levels();
    d.run(DeformPhase::Return, {DeformKind::Insert,
                                {top, d.state().config.level(top).occupied_slots().back()},
                                {0, 0}});
  }
  trace.final_state = d.state();
  return trace;
}

Configuration reassemble_hat(const Configuration& c3, const Configuration& original) {
  check_configuration(c3);
  check_configuration(original);
  const int s = levels_count(original);
  if (s < 4 || c3.n != original.n || c3.first_level != original.first_level + 1) {
    throw Error(ErrorCode::Incompatible, "cannot reassemble around this middle part");
  }
  Configuration out;
  out.n = original.n;
  out.first_level = original.first_level;
  out.levels.push_back(original.level(1));
  out.levels.insert(out.levels.end(), c3.levels.begin(), c3.levels.end());
  out.levels.push_back(original.level(s - 1));
  out.levels.push_back(original.level(s));
  return out;
}

OddPreprocess odd_preprocess(const Configuration& cfg, int target_first_level_count,
                             const std::optional<Level>& preferred) {
  check_configuration(cfg);
  const int n = cfg.n;
  const int x = levels_count(cfg);
  if (n % 2 == 0) throw Error(ErrorCode::NotOdd, "preprocessing applies to odd n only");
  if (x < 3) throw Error(ErrorCode::IllegalOperation, "preprocessing needs at least 3 levels");
  if (target_first_level_count < 1 || target_first_level_count > n) {
    throw Error(ErrorCode::ParamOutOfRange, "first level count out of range");
  }

  OddPreprocess out;
  Deformer d({cfg, 0}, out.steps);
  std::vector<int> top_blocks = cfg.level(x).occupied_slots();
  std::vector<int> gaps = cfg.level(x - 2).empty_slots();
  if (gaps.size() < top_blocks.size()) {
    throw Error(ErrorCode::IllegalOperation, "not enough room two levels below the top");
  }
  std::reverse(gaps.begin(), gaps.end());
  for (std::size_t i = top_blocks.size(); i-- > 0;) {
    d.run(DeformPhase::Prep2,
          {DeformKind::Insert, {x, top_blocks[i]}, {x - 2, gaps[top_blocks.size() - 1 - i]}});
  }
  out.q2 = d.state().config;
  out.genus_q2 = genus_or_throw(out.q2);

  while (d.state().config.level(1).count() < target_first_level_count) {
    const Configuration& c = d.state().config;
    const Level& first = c.level(1);
    int slot = 0;
    if (preferred) {
      for (int s : first.empty_slots()) {
        if (preferred->occupied(s)) {
          slot = s;
          break;
        }
      }
    }
    if (slot == 0) slot = first.empty_slots().front();
    const int top = levels_count(c);
    if (top == 1) throw Error(ErrorCode::IllegalOperation, "ran out of blocks above level 1");
    d.run(DeformPhase::Prep3,
          {DeformKind::Insert, {top, c.level(top).occupied_slots().back()}, {1, slot}});
  }
  out.q3 = d.state().config;
  out.genus_q3 = genus_or_throw(out.q3);
  return out;
}

PipelineReport deform_pipeline(const GameParams& p, const Configuration& target) {
  check_params(p, 3);
  check_configuration(target);
  if (target.n != p.n || target.first_level != 1 || block_count(target) != p.n * p.k) {
    throw Error(ErrorCode::Incompatible, "target is not an (n,k)-game configuration");
  }
  PipelineReport report;
  const Configuration nk = make_nk_configuration(p);
  report.g_nk = closed_form_genus(p);
  report.g_target = genus_or_throw(target);
  report.target_within_bound = report.g_target <= report.g_nk;
  if (levels_count(target) < 4) return report;
  report.applicable = true;

  Configuration source = nk;
  if (p.n % 2 == 1 && target.level(1).count() > nk.level(1).count()) {
    report.prep = odd_preprocess(nk, target.level(1).count(), target.level(1));
    report.preprocessed = true;
    source = report.prep->q3;
    report.prep_strictly_below =
        report.prep->genus_q2 < report.g_nk && report.prep->genus_q3 < report.g_nk;
  }

  const Configuration source_prime = strip_prime(source);
  const Configuration target_prime = strip_prime(target);
  const int reserve = block_count(source) - block_count(source_prime);
  report.trace = deform_algorithm(source_prime, target_prime, reserve);
  report.trace_reaches_target = report.trace.final_state.config == target_prime;
  report.conserved = block_count(report.trace.final_state.config) +
                         report.trace.final_state.reserve ==
                     block_count(source);

  int worst = genus_or_throw(source_prime);
  for (const DeformStep& step : report.trace.steps) worst = std::max(worst, step.genus);
  if (report.prep) {
    for (const DeformStep& step : report.prep->steps) worst = std::max(worst, step.genus);
  }
  report.trace_max_genus = worst;
  report.trace_within_bound = worst <= report.g_nk;

  report.hat = reassemble_hat(report.trace.final_state.config, source);
  const std::optional<int> g_hat = checked_genus(report.hat);
  report.g_hat = g_hat.value_or(-1);
  report.hat_within_bound = g_hat && *g_hat <= report.g_nk;
  return report;
}

std::string format_trace(const std::vector<DeformStep>& steps) {
  std::ostringstream out;
  for (const DeformStep& step : steps) {
    out << to_string(step.phase) << ' ' << to_string(step.op.kind) << ' '
        << site_string(step.op.source) << ' ' << site_string(step.op.target)
        << " genus=" << step.genus << '\n';
  }
  return out.str();
}

bool replay_trace(const DeformState& start, const std::vector<DeformStep>& steps,
                  DeformState* final_state) {
  DeformState state = start;
  for (const DeformStep& step : steps) {
    try {
      state = apply_deform(state, step.op);
    } catch (const Error&) {
      return false;
    }
    const std::optional<int> g = solid_genus(state.config);
    if (!g || *g != step.genus) return false;
  }
  if (final_state) *final_state = state;
  return true;
}

}  // namespace jenga
