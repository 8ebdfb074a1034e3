#include <doctest.h>

#include <set>

#include "jenga/game.hpp"
#include "jenga/topology.hpp"

using namespace jenga;

TEST_CASE("opening moves of the (3,3)-game") {
  const std::vector<Move> expected{
      {1, 1, 1}, {1, 1, 2}, {1, 1, 3}, {1, 2, 1}, {1, 2, 2}, {1, 2, 3},
      {1, 3, 1}, {1, 3, 2}, {1, 3, 3}, {2, 1, 1}, {2, 1, 2}, {2, 1, 3},
      {2, 2, 1}, {2, 2, 2}, {2, 2, 3}, {2, 3, 1}, {2, 3, 2}, {2, 3, 3},
  };
  CHECK(legal_moves(make_initial({3, 3})) == expected);
}

TEST_CASE("the level under an incomplete top is frozen") {
  const Configuration c = parse_box_description("n 3\n###\n###\n###\n#..\n");
  for (const Move& m : legal_moves(c)) {
    CHECK(m.remove_level != 3);
    CHECK(m.remove_level != 4);
    CHECK(m.place_slot != 1);
  }
  CHECK(legal_moves(c).size() == 2 * 3 * 2);
  CHECK_THROWS_AS(apply_move(c, {3, 1, 2}), Error);
  CHECK_THROWS_AS(apply_move(c, {4, 1, 2}), Error);
  CHECK_THROWS_AS(apply_move(c, {1, 1, 1}), Error);
  const Configuration next = apply_move(c, {1, 2, 3});
  CHECK(serialize_box_description(next) == "n 3\n#.#\n###\n###\n#.#\n");
}

TEST_CASE("moves that would empty a level or break the surface are refused") {
  const Configuration c = parse_box_description("n 3\n.#.\n###\n###\n#.#\n");
  for (const Move& m : legal_moves(c)) CHECK(m.remove_level != 1);
  CHECK_THROWS_AS(apply_move(c, {1, 2, 2}), Error);
}

TEST_CASE("top removal when allowed") {
  const Configuration c = parse_box_description("n 3\n###\n###\n##.\n");
  GameRules rules;
  rules.allow_top_removal = true;
  bool from_top = false;
  for (const Move& m : legal_moves(c, rules)) {
    if (m.remove_level == 3) {
      from_top = true;
      CHECK(m.place_slot != m.remove_slot);
    }
  }
  CHECK(from_top);
  CHECK(serialize_box_description(apply_move(c, {3, 1, 3}, rules)) == "n 3\n###\n###\n.##\n");
}

TEST_CASE("move text") { CHECK(to_string(Move{2, 3, 1}) == "L2 S3 -> S1"); }

TEST_CASE("canonical form picks one representative per mirror class") {
  const Configuration a = parse_box_description("n 3\n##.\n#.#\n.##\n");
  const Configuration b = parse_box_description("n 3\n.##\n#.#\n##.\n");
  const Configuration c = parse_box_description("n 3\n##.\n#.#\n##.\n");
  CHECK(canonicalize(a) == canonicalize(b));
  CHECK(canonicalize(canonicalize(a)) == canonicalize(a));
  CHECK_FALSE(canonicalize(a) == canonicalize(c));
  CHECK(checked_genus(canonicalize(a)) == checked_genus(a));
}

TEST_CASE("exhaustive search on small games") {
  SearchOptions options;
  options.collect_states = true;
  const SearchReport r23 = max_genus_search({2, 3}, options);
  CHECK(r23.max_genus == 0);
  CHECK_FALSE(r23.hit_budget);
  const SearchReport r32 = max_genus_search({3, 2}, options);
  CHECK(r32.max_genus == 0);

  const SearchReport r33 = max_genus_search({3, 3}, options);
  CHECK(r33.max_genus == 3);
  CHECK_FALSE(r33.hit_budget);
  CHECK(r33.nk_configuration_visited);
  CHECK(r33.states.size() == r33.states_visited);
  const Configuration end = replay(make_initial({3, 3}), r33.witness);
  CHECK(end == r33.witness_state);
  CHECK(checked_genus(end) == 3);
}

TEST_CASE("symmetry reduction only merges mirror images") {
  SearchOptions plain;
  plain.use_symmetry = false;
  plain.collect_states = true;
  SearchOptions reduced;
  reduced.collect_states = true;
  const SearchReport all = max_genus_search({3, 3}, plain);
  const SearchReport some = max_genus_search({3, 3}, reduced);
  CHECK(all.max_genus == some.max_genus);
  CHECK(all.states_visited > some.states_visited);
  std::set<std::string> a;
  std::set<std::string> b;
  for (const Configuration& c : all.states) a.insert(serialize_box_description(canonicalize(c)));
  for (const Configuration& c : some.states) b.insert(serialize_box_description(canonicalize(c)));
  CHECK(a == b);
}

TEST_CASE("threaded search gives the same report") {
  for (GameParams p : {GameParams{3, 3}, GameParams{2, 4}}) {
    SearchOptions one;
    SearchOptions four;
    four.threads = 4;
    const SearchReport a = max_genus_search(p, one);
    const SearchReport b = max_genus_search(p, four);
    CHECK(a.states_visited == b.states_visited);
    CHECK(a.max_genus == b.max_genus);
    CHECK(a.witness == b.witness);
    CHECK(a.dead_ends == b.dead_ends);
  }
}

TEST_CASE("state budget") {
  SearchOptions options;
  options.max_states = 10;
  const SearchReport r = max_genus_search({3, 3}, options);
  CHECK(r.hit_budget);
  CHECK(r.states_visited == 10);
}

TEST_CASE("shape of every reachable state") {
  SearchOptions options;
  options.collect_states = true;
  for (GameParams p : {GameParams{3, 3}, GameParams{2, 4}}) {
    for (const Configuration& c : max_genus_search(p, options).states) {
      const int s = levels_count(c);
      CHECK(block_count(c) == p.n * p.k);
      if (s >= 2) CHECK(c.level(s - 1).complete());
      if (s >= 3) CHECK(c.level(s).count() + c.level(s - 2).count() >= p.n);
    }
  }
}

TEST_CASE("a scripted path reaches the canonical tower") {
  const auto plan = plan_moves(make_initial({3, 3}), make_nk_configuration({3, 3}));
  REQUIRE(plan);
  const std::vector<Move> expected{{1, 1, 1}, {1, 3, 2}, {2, 2, 3}, {3, 2, 1}};
  CHECK(*plan == expected);
  for (int n = 2; n <= 7; ++n) {
    for (int k = 3; k <= 5; ++k) {
      const Configuration target = make_nk_configuration({n, k});
      const auto moves = plan_moves(make_initial({n, k}), target);
      REQUIRE(moves);
      CHECK(replay(make_initial({n, k}), *moves) == target);
    }
  }
}
