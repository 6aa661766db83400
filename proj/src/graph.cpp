#include "netbandit/graph.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace netbandit {

RelationGraph::RelationGraph(int num_arms, const std::vector<std::pair<int, int>>& edges)
    : num_arms_(num_arms) {
  if (num_arms < 0) throw std::invalid_argument("num_arms must be nonnegative");
  std::set<std::pair<int, int>> dedup;
  for (auto [i, j] : edges) {
    if (i < 0 || i >= num_arms || j < 0 || j >= num_arms)
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(i) +
                                  "," + std::to_string(j) + ")");
    if (i == j)
      throw std::invalid_argument("self-loop not allowed: " + std::to_string(i));
    dedup.emplace(std::min(i, j), std::max(i, j));
  }
  edges_.assign(dedup.begin(), dedup.end());
  adj_.assign(num_arms, {});
  for (auto [i, j] : edges_) {
    adj_[i].push_back(j);
    adj_[j].push_back(i);
  }
  closed_.resize(num_arms);
  for (int v = 0; v < num_arms; ++v) {
    std::sort(adj_[v].begin(), adj_[v].end());
    closed_[v] = adj_[v];
    closed_[v].insert(std::lower_bound(closed_[v].begin(), closed_[v].end(), v), v);
  }
}

void RelationGraph::check_vertex(int v) const {
  if (v < 0 || v >= num_arms_)
    throw std::invalid_argument("vertex out of range: " + std::to_string(v));
}

bool RelationGraph::adjacent(int i, int j) const {
  check_vertex(i);
  check_vertex(j);
  return std::binary_search(adj_[i].begin(), adj_[i].end(), j);
}

const std::vector<int>& RelationGraph::neighbors(int i) const {
  check_vertex(i);
  return adj_[i];
}

const std::vector<int>& RelationGraph::closed_neighborhood(int i) const {
  check_vertex(i);
  return closed_[i];
}

RelationGraph build_graph(int num_arms, const std::vector<std::pair<int, int>>& edges) {
  return RelationGraph(num_arms, edges);
}

RelationGraph generate_er(int num_arms, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("edge probability must lie in [0,1]");
  std::mt19937_64 gen(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < num_arms; ++i) {
    for (int j = i + 1; j < num_arms; ++j) {
      double u = (gen() >> 11) * 0x1.0p-53;
      if (u < p) edges.emplace_back(i, j);
    }
  }
  return RelationGraph(num_arms, edges);
}

RelationGraph make_complete(int num_arms) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < num_arms; ++i)
    for (int j = i + 1; j < num_arms; ++j) edges.emplace_back(i, j);
  return RelationGraph(num_arms, edges);
}

RelationGraph make_path(int num_arms) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < num_arms; ++i) edges.emplace_back(i, i + 1);
  return RelationGraph(num_arms, edges);
}

InducedSubgraph induced_subgraph(const RelationGraph& g, const std::vector<int>& vertices) {
  InducedSubgraph out;
  out.vertices = vertices;
  std::sort(out.vertices.begin(), out.vertices.end());
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()),
                     out.vertices.end());
  out.old_to_new.assign(g.num_arms(), -1);
  for (std::size_t k = 0; k < out.vertices.size(); ++k) {
    int v = out.vertices[k];
    if (v < 0 || v >= g.num_arms())
      throw std::invalid_argument("subgraph vertex out of range: " + std::to_string(v));
    out.old_to_new[v] = static_cast<int>(k);
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [i, j] : g.edges()) {
    int a = out.old_to_new[i], b = out.old_to_new[j];
    if (a >= 0 && b >= 0) edges.emplace_back(a, b);
  }
  out.graph = RelationGraph(static_cast<int>(out.vertices.size()), edges);
  return out;
}

CliqueCover greedy_clique_cover(const RelationGraph& g) {
  CliqueCover cover;
  std::vector<char> covered(g.num_arms(), 0);
  for (int v = 0; v < g.num_arms(); ++v) {
    if (covered[v]) continue;
    std::vector<int> clique{v};
    covered[v] = 1;
    for (int u = v + 1; u < g.num_arms(); ++u) {
      if (covered[u]) continue;
      bool ok = true;
      for (int w : clique) {
        if (!g.adjacent(u, w)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        clique.push_back(u);
        covered[u] = 1;
      }
    }
    cover.cliques.push_back(std::move(clique));
  }
  return cover;
}

RelationGraph read_edge_list(std::istream& in) {
  std::string line;
  int num_arms = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    auto pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    if (num_arms < 0) {
      if (ls >> num_arms) continue;
      continue;  // blank/comment before header
    }
    int i, j;
    if (ls >> i >> j) edges.emplace_back(i, j);
  }
  if (num_arms < 0) throw std::runtime_error("edge list missing arm count header");
  return RelationGraph(num_arms, edges);
}

RelationGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list: " + path);
  return read_edge_list(in);
}

void write_edge_list(const RelationGraph& g, std::ostream& out) {
  out << g.num_arms() << "\n";
  for (auto [i, j] : g.edges()) out << i << " " << j << "\n";
}

void write_edge_list_file(const RelationGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write edge list: " + path);
  write_edge_list(g, out);
}

}  // namespace netbandit
