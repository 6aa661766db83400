#ifndef NETBANDIT_GRAPH_HPP
#define NETBANDIT_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace netbandit {

/// Undirected relation graph over K arms. Immutable after construction.
class RelationGraph {
 public:
  RelationGraph() = default;
  RelationGraph(int num_arms, const std::vector<std::pair<int, int>>& edges);

  int num_arms() const { return num_arms_; }
  std::size_t num_edges() const { return edges_.size(); }

  bool adjacent(int i, int j) const;

  /// Open neighborhood N(i), sorted ascending.
  const std::vector<int>& neighbors(int i) const;

  /// Closed neighborhood N_i = {i} ∪ N(i), sorted ascending.
  const std::vector<int>& closed_neighborhood(int i) const;

  /// Canonical edge list: (i,j) with i < j, sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  void check_vertex(int v) const;

  int num_arms_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> closed_;
  std::vector<std::pair<int, int>> edges_;
};

/// A list of pairwise-disjoint cliques covering some vertex subset.
struct CliqueCover {
  std::vector<std::vector<int>> cliques;
  std::size_t size() const { return cliques.size(); }
};

RelationGraph build_graph(int num_arms, const std::vector<std::pair<int, int>>& edges);

/// G(K, p) Erdos-Renyi graph; each unordered pair is an edge independently
/// with probability p. Deterministic for fixed (num_arms, p, seed).
RelationGraph generate_er(int num_arms, double p, std::uint64_t seed);

RelationGraph make_complete(int num_arms);
RelationGraph make_path(int num_arms);

struct InducedSubgraph {
  RelationGraph graph;
  std::vector<int> vertices;      // new index -> old index, sorted
  std::vector<int> old_to_new;    // old index -> new index, -1 if dropped
};

InducedSubgraph induced_subgraph(const RelationGraph& g, const std::vector<int>& vertices);

/// Greedy cover: repeatedly take the lowest-indexed uncovered vertex and grow
/// a maximal clique among uncovered vertices in index order.
CliqueCover greedy_clique_cover(const RelationGraph& g);

// Edge-list file format: first line K, then one "i j" pair per line.
// Lines starting with '#' are ignored.
RelationGraph read_edge_list(std::istream& in);
RelationGraph read_edge_list_file(const std::string& path);
void write_edge_list(const RelationGraph& g, std::ostream& out);
void write_edge_list_file(const RelationGraph& g, const std::string& path);

}  // namespace netbandit

#endif  // NETBANDIT_GRAPH_HPP
