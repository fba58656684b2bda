#include "sqmc/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "sqmc/rng.hpp"

namespace sqmc {

namespace {

std::string format_weight(double w) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", w);
  return buf;
}

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

WeightedGraph::WeightedGraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 1) throw std::invalid_argument("vertex count must be >= 1");
  std::set<std::pair<int, int>> seen;
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n_)
      throw std::invalid_argument("edge (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ") out of range");
    if (!(e.w >= 0.0))
      throw std::invalid_argument("negative or non-finite weight on edge (" +
                                  std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    if (!seen.insert({e.u, e.v}).second)
      throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ")");
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::pair{a.u, a.v} < std::pair{b.u, b.v};
  });
}

double WeightedGraph::total_weight() const {
  double sum = 0.0;
  for (const auto& e : edges_) sum += e.w;
  return 0.5 * sum;
}

std::vector<std::vector<std::pair<int, double>>> WeightedGraph::adjacency() const {
  std::vector<std::vector<std::pair<int, double>>> adj(n_);
  for (const auto& e : edges_) {
    adj[e.u].emplace_back(e.v, e.w);
    adj[e.v].emplace_back(e.u, e.w);
  }
  return adj;
}

WeightedGraph WeightedGraph::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_n = false;
  int n = 0;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream fields(line);
    if (!have_n) {
      if (!(fields >> n)) {
        if (fields.eof()) continue;  // blank / comment-only line
        parse_fail(line_no, "expected vertex count");
      }
      std::string rest;
      if (fields >> rest) parse_fail(line_no, "trailing tokens after vertex count");
      if (n < 1) parse_fail(line_no, "vertex count must be >= 1");
      have_n = true;
      continue;
    }
    int i, j;
    double w;
    if (!(fields >> i)) {
      if (fields.eof()) continue;
      parse_fail(line_no, "malformed edge line");
    }
    if (!(fields >> j >> w)) parse_fail(line_no, "malformed edge line");
    std::string rest;
    if (fields >> rest) parse_fail(line_no, "trailing tokens on edge line");
    if (i == j) parse_fail(line_no, "self-loop at vertex " + std::to_string(i));
    if (i < 0 || j < 0 || i >= n || j >= n)
      parse_fail(line_no, "vertex index out of range [0," + std::to_string(n) + ")");
    if (!(w >= 0.0)) parse_fail(line_no, "negative weight");
    edges.push_back({std::min(i, j), std::max(i, j), w});
  }
  if (!have_n) throw ParseError("empty instance: missing vertex count");

  for (std::size_t a = 0; a < edges.size(); ++a)
    for (std::size_t b = a + 1; b < edges.size(); ++b)
      if (edges[a].u == edges[b].u && edges[a].v == edges[b].v)
        throw ParseError("duplicate edge (" + std::to_string(edges[a].u) + "," +
                         std::to_string(edges[a].v) + ")");

  return WeightedGraph(n, std::move(edges));
}

std::string WeightedGraph::render() const {
  std::string out = std::to_string(n_) + "\n";
  for (const auto& e : edges_) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + format_weight(e.w) + "\n";
  }
  return out;
}

WeightedGraph WeightedGraph::single_edge(double w) {
  return WeightedGraph(2, {{0, 1, w}});
}

WeightedGraph WeightedGraph::cycle(int n, double w) {
  if (n < 2) throw std::invalid_argument("cycle needs n >= 2");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, w});
  if (n > 2) edges.push_back({0, n - 1, w});
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph WeightedGraph::complete(int n, double w) {
  if (n < 1) throw std::invalid_argument("complete needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j, w});
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph WeightedGraph::random(int n, double p, double w_max, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random needs n >= 1");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability must be in [0,1]");
  if (w_max < 0.0) throw std::invalid_argument("w_max must be >= 0");
  auto g = rng::make_stream(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double toss = rng::uniform01(g);
      const double w = (1.0 - rng::uniform01(g)) * w_max;  // uniform in (0, w_max]
      if (toss < p) edges.push_back({i, j, w});
    }
  }
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph WeightedGraph::from_generator_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : spec) {
    if (ch == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);

  auto want = [&](std::size_t k) {
    if (parts.size() != k + 1)
      throw std::invalid_argument("generator '" + parts[0] + "' expects " +
                                  std::to_string(k) + " parameters");
  };
  try {
    if (parts[0] == "single_edge") {
      want(1);
      return single_edge(std::stod(parts[1]));
    }
    if (parts[0] == "cycle") {
      want(2);
      return cycle(std::stoi(parts[1]), std::stod(parts[2]));
    }
    if (parts[0] == "complete") {
      want(2);
      return complete(std::stoi(parts[1]), std::stod(parts[2]));
    }
    if (parts[0] == "random") {
      want(4);
      return random(std::stoi(parts[1]), std::stod(parts[2]), std::stod(parts[3]),
                    std::stoull(parts[4]));
    }
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad generator parameters in '" + spec + "'");
  }
  throw std::invalid_argument("unknown generator '" + parts[0] +
                              "' (want single_edge, cycle, complete, random)");
}

}  // namespace sqmc
