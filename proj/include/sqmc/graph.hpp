#ifndef SQMC_GRAPH_HPP
#define SQMC_GRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sqmc {

struct Edge {
  int u = 0;
  int v = 0;
  double w = 0.0;

  friend bool operator==(const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v && a.w == b.w;
  }
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Undirected weighted graph with non-negative edge weights, the problem
// instance everywhere in this suite. Immutable once constructed; endpoints
// are normalized to u < v and validated (no self-loops, no duplicate pairs,
// indices in range). Zero-weight edges are legal and retained.
class WeightedGraph {
 public:
  WeightedGraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool empty() const { return edges_.empty(); }

  // Half the sum of all edge weights, the identity coefficient of the
  // max-cut style objectives.
  double total_weight() const;

  // Per-vertex list of (neighbor, weight).
  std::vector<std::vector<std::pair<int, double>>> adjacency() const;

  // Edge-list text format: first line N, then "i j w" lines, '#' comments.
  static WeightedGraph parse(std::string_view text);
  std::string render() const;

  static WeightedGraph single_edge(double w);
  static WeightedGraph cycle(int n, double w);
  static WeightedGraph complete(int n, double w);
  static WeightedGraph random(int n, double p, double w_max, std::uint64_t seed);

  // Generator spec strings for the CLI: "single_edge:W", "cycle:N:W",
  // "complete:N:W", "random:N:P:WMAX:SEED".
  static WeightedGraph from_generator_spec(const std::string& spec);

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
};

}  // namespace sqmc

#endif  // SQMC_GRAPH_HPP
