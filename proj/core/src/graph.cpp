#include "tilek/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace tilek {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

bool parse_count(std::string_view token, std::size_t& out) {
  if (token.empty()) return false;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

}  // namespace

bool edges_connected(std::size_t alpha, std::size_t beta, const std::vector<Edge>& edges) {
  const std::size_t n = alpha + beta;
  if (n == 0) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::size_t components = n;
  for (const Edge& e : edges) {
    const std::size_t a = find_root(parent, e.white - 1);
    const std::size_t b = find_root(parent, alpha + e.black - 1);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

BipartiteGraph::BipartiteGraph(std::size_t alpha, std::size_t beta, std::vector<Edge> edges)
    : alpha_(alpha), beta_(beta), edges_(std::move(edges)) {
  if (alpha_ == 0 || beta_ == 0) {
    throw GraphError(GraphError::Kind::kEmptyPart, "bipartite graph needs alpha >= 1 and beta >= 1");
  }
  for (const Edge& e : edges_) {
    if (e.white < 1 || e.white > alpha_ || e.black < 1 || e.black > beta_) {
      throw GraphError(GraphError::Kind::kOutOfRange,
                       "edge (" + std::to_string(e.white) + "," + std::to_string(e.black) +
                           ") outside [1," + std::to_string(alpha_) + "]x[1," + std::to_string(beta_) + "]");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw GraphError(GraphError::Kind::kDuplicateEdge,
                     "duplicate edge (" + std::to_string(dup->white) + "," + std::to_string(dup->black) + ")");
  }
  if (!edges_connected(alpha_, beta_, edges_)) {
    throw DisconnectedGraphError("bipartite graph is not connected");
  }
}

BipartiteGraph BipartiteGraph::complete(std::size_t alpha, std::size_t beta) {
  if (alpha == 0 || beta == 0) {
    throw GraphError(GraphError::Kind::kEmptyPart, "complete bipartite graph needs alpha >= 1 and beta >= 1");
  }
  std::vector<Edge> edges;
  edges.reserve(alpha * beta);
  for (std::size_t i = 1; i <= alpha; ++i)
    for (std::size_t j = 1; j <= beta; ++j) edges.push_back({i, j});
  return BipartiteGraph(alpha, beta, std::move(edges));
}

bool BipartiteGraph::contains(std::size_t white, std::size_t black) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{white, black});
}

BipartiteGraph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t alpha = 0;
  std::size_t beta = 0;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto tokens = split_ws(body);
    if (!have_header) {
      if (tokens.size() != 3 || tokens[0] != "bipartite" || !parse_count(tokens[1], alpha) ||
          !parse_count(tokens[2], beta)) {
        throw GraphError(GraphError::Kind::kMalformedHeader,
                         "line " + std::to_string(line_no) + ": expected 'bipartite <alpha> <beta>'");
      }
      have_header = true;
      continue;
    }
    Edge e;
    if (tokens.size() != 2 || !parse_count(tokens[0], e.white) || !parse_count(tokens[1], e.black)) {
      throw GraphError(GraphError::Kind::kMalformedEdge,
                       "line " + std::to_string(line_no) + ": expected '<white> <black>'");
    }
    edges.push_back(e);
  }
  if (!have_header) {
    throw GraphError(GraphError::Kind::kMalformedHeader, "missing 'bipartite <alpha> <beta>' header");
  }
  return BipartiteGraph(alpha, beta, std::move(edges));
}

BipartiteGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

std::string render_graph(const BipartiteGraph& g) {
  std::ostringstream out;
  out << "bipartite " << g.alpha() << ' ' << g.beta() << '\n';
  for (const Edge& e : g.edges()) out << e.white << ' ' << e.black << '\n';
  return out.str();
}

std::string describe(const BipartiteGraph& g) {
  if (g.is_complete()) return "complete:" + std::to_string(g.alpha()) + "," + std::to_string(g.beta());
  return "bipartite:" + std::to_string(g.alpha()) + "," + std::to_string(g.beta()) + "/" +
         std::to_string(g.edge_count());
}

}  // namespace tilek
