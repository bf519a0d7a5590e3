#pragma once

#include <compare>
#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "tilek/error.hpp"

namespace tilek {

/// An edge u_i v_j of a bipartite graph; both indices are 1-based.
struct Edge {
  std::size_t white = 0;
  std::size_t black = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public Error {
 public:
  enum class Kind { kEmptyPart, kMalformedHeader, kMalformedEdge, kOutOfRange, kDuplicateEdge, kDisconnected };

  GraphError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Raised separately because every construction downstream needs a connected link graph.
class DisconnectedGraphError : public GraphError {
 public:
  explicit DisconnectedGraphError(const std::string& what) : GraphError(Kind::kDisconnected, what) {}
};

/// A connected bipartite graph on alpha white vertices u_1..u_alpha and beta black
/// vertices v_1..v_beta. Edges are kept sorted by (white, black); the value is
/// immutable once constructed.
class BipartiteGraph {
 public:
  /// Validates ranges, duplicates and connectivity; throws GraphError on failure.
  BipartiteGraph(std::size_t alpha, std::size_t beta, std::vector<Edge> edges);

  /// kappa(alpha, beta).
  static BipartiteGraph complete(std::size_t alpha, std::size_t beta);

  std::size_t alpha() const noexcept { return alpha_; }
  std::size_t beta() const noexcept { return beta_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool contains(std::size_t white, std::size_t black) const;
  bool is_complete() const noexcept { return edges_.size() == alpha_ * beta_; }
  /// Always true for a constructed value; kept queryable for callers that log it.
  bool is_connected() const noexcept { return true; }

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  std::size_t alpha_;
  std::size_t beta_;
  std::vector<Edge> edges_;
};

/// Connectivity of the undirected graph on alpha + beta vertices with the given edges.
bool edges_connected(std::size_t alpha, std::size_t beta, const std::vector<Edge>& edges);

/// Reads the edge-list format:
///
///     bipartite <alpha> <beta>
///     <i> <j>
///     ...
///
/// Blank lines and lines starting with '#' are skipped; CRLF is accepted.
BipartiteGraph parse_graph(std::istream& in);
BipartiteGraph parse_graph(std::string_view text);

/// Inverse of parse_graph.
std::string render_graph(const BipartiteGraph& g);

/// Short human label, "complete:4,5" for kappa(4,5), otherwise "bipartite:<a>,<b>/<edges>".
std::string describe(const BipartiteGraph& g);

}  // namespace tilek
