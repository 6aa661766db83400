#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "netbandit/graph.hpp"

using namespace netbandit;

namespace {

// Exact minimum clique cover by exhaustive partition search (K <= 8 only).
// Assigns vertices in order to an existing compatible clique or a new one.
int min_cover_rec(const RelationGraph& g, int v, std::vector<std::vector<int>>& cliques,
                  int best) {
  if (static_cast<int>(cliques.size()) >= best) return best;
  if (v == g.num_arms()) return static_cast<int>(cliques.size());
  // index access: recursion may push/pop on cliques and reallocate it
  for (std::size_t k = 0; k < cliques.size(); ++k) {
    bool ok = true;
    for (int u : cliques[k])
      if (!g.adjacent(u, v)) {
        ok = false;
        break;
      }
    if (ok) {
      cliques[k].push_back(v);
      best = min_cover_rec(g, v + 1, cliques, best);
      cliques[k].pop_back();
    }
  }
  cliques.push_back({v});
  best = min_cover_rec(g, v + 1, cliques, best);
  cliques.pop_back();
  return best;
}

int exact_min_clique_cover(const RelationGraph& g) {
  std::vector<std::vector<int>> cliques;
  return min_cover_rec(g, 0, cliques, g.num_arms() + 1);
}

void check_cover_valid(const RelationGraph& g, const CliqueCover& cover) {
  std::set<int> seen;
  for (const auto& c : cover.cliques) {
    for (std::size_t a = 0; a < c.size(); ++a) {
      CHECK(seen.insert(c[a]).second);  // disjoint
      for (std::size_t b = a + 1; b < c.size(); ++b) CHECK(g.adjacent(c[a], c[b]));
    }
  }
  CHECK(seen.size() == static_cast<std::size_t>(g.num_arms()));
}

}  // namespace

TEST_CASE("build_graph basics") {
  RelationGraph path = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(path.closed_neighborhood(1) == std::vector<int>{0, 1, 2});

  RelationGraph empty = build_graph(3, {});
  for (int i = 0; i < 3; ++i) CHECK(empty.closed_neighborhood(i) == std::vector<int>{i});

  RelationGraph dedup = build_graph(2, {{0, 1}, {1, 0}});
  CHECK(dedup.num_edges() == 1);

  CHECK_THROWS_AS(build_graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("neighborhood symmetry on random graphs") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    RelationGraph g = generate_er(20, 0.4, seed);
    for (int i = 0; i < 20; ++i)
      for (int j : g.neighbors(i)) {
        const auto& nj = g.neighbors(j);
        CHECK(std::binary_search(nj.begin(), nj.end(), i));
      }
  }
}

TEST_CASE("erdos-renyi generation") {
  RelationGraph a = generate_er(100, 0.3, 7);
  RelationGraph b = generate_er(100, 0.3, 7);
  CHECK(a.edges() == b.edges());
  // expected 0.3 * C(100,2) = 1485, sd ~ 32
  CHECK(a.num_edges() > 1485 - 160);
  CHECK(a.num_edges() < 1485 + 160);

  CHECK(generate_er(30, 0.0, 1).num_edges() == 0);
  CHECK(generate_er(30, 1.0, 1).num_edges() == 30 * 29 / 2);
  CHECK_THROWS_AS(generate_er(5, 1.5, 1), std::invalid_argument);
}

TEST_CASE("induced subgraph") {
  RelationGraph path = make_path(4);
  auto sub = induced_subgraph(path, {0, 1, 3});
  CHECK(sub.graph.num_arms() == 3);
  CHECK(sub.graph.edges() == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(sub.old_to_new[3] == 2);

  auto all = induced_subgraph(path, {0, 1, 2, 3});
  CHECK(all.graph.edges() == path.edges());

  auto none = induced_subgraph(path, {});
  CHECK(none.graph.num_arms() == 0);

  CHECK_THROWS_AS(induced_subgraph(path, {7}), std::invalid_argument);
}

TEST_CASE("greedy clique cover") {
  CHECK(greedy_clique_cover(make_complete(3)).size() == 1);
  CHECK(greedy_clique_cover(make_path(4)).size() == 2);
  CHECK(greedy_clique_cover(build_graph(6, {})).size() == 6);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RelationGraph g = generate_er(16, 0.5, seed);
    check_cover_valid(g, greedy_clique_cover(g));
  }
}

TEST_CASE("greedy cover is at least the exact minimum on small graphs") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (double p : {0.2, 0.5, 0.8}) {
      RelationGraph g = generate_er(8, p, seed * 31 + static_cast<int>(p * 10));
      auto greedy = greedy_clique_cover(g);
      check_cover_valid(g, greedy);
      CHECK(static_cast<int>(greedy.size()) >= exact_min_clique_cover(g));
    }
  }
}

TEST_CASE("edge list round trip") {
  std::istringstream in("# comment\n4\n2 3\n0 1 # trailing\n1 0\n");
  RelationGraph g = read_edge_list(in);
  CHECK(g.num_arms() == 4);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});

  std::ostringstream out;
  write_edge_list(g, out);
  CHECK(out.str() == "4\n0 1\n2 3\n");

  std::istringstream back(out.str());
  CHECK(read_edge_list(back).edges() == g.edges());
}
