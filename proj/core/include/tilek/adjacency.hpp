#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tilek/graph.hpp"
#include "tilek/polygon.hpp"

namespace tilek {

/// The five polygon systems.
enum class SystemKind : std::uint8_t { PointedTile, UnpointedTile, PointedReflect, UnpointedPolygon, PointedStar };

struct SystemSpec {
  SystemKind kind = SystemKind::PointedTile;
  std::size_t t = 2;

  friend bool operator==(const SystemSpec&, const SystemSpec&) = default;
};

/// "pointed-tile", "unpointed-tile", "pointed-reflect", "unpointed-polygon", "pointed-star".
std::string_view kind_name(SystemKind k);
/// Inverse of kind_name; throws PreconditionError on an unknown name.
SystemKind parse_kind(std::string_view name);
bool is_pointed(SystemKind k);

/// Throws PreconditionError when t = 0, t != 2 for a tile kind, or t odd for PointedReflect.
void validate(const SystemSpec& spec);

/// Row/column labels shared by the two matrices of a pair.
struct PolygonIndex {
  std::vector<PointedPolygon> polygons;  // representatives when unpointed
  bool unpointed = false;

  std::string label(std::size_t i) const;
};

/// Square 0/1 matrix over an indexed polygon set.
class AdjacencyMatrix {
 public:
  AdjacencyMatrix() = default;
  AdjacencyMatrix(std::shared_ptr<const PolygonIndex> index, std::string kind);
  /// Unlabelled matrix from explicit rows; every entry must be 0 or 1.
  static AdjacencyMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t dimension() const noexcept { return n_; }
  bool at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v) { entries_[i * n_ + j] = v ? 1 : 0; }

  /// Columns holding a 1 in row i, ascending.
  std::vector<std::size_t> row_support(std::size_t i) const;
  std::vector<std::size_t> row_sums() const;
  AdjacencyMatrix transpose() const;

  const std::string& kind() const noexcept { return kind_; }
  /// Null for from_rows matrices.
  const std::shared_ptr<const PolygonIndex>& index() const noexcept { return index_; }
  std::string label(std::size_t i) const;

  /// Entrywise equality; labels are not compared.
  friend bool operator==(const AdjacencyMatrix& a, const AdjacencyMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  std::shared_ptr<const PolygonIndex> index_;
  std::string kind_;
  std::size_t n_ = 0;
  std::vector<std::uint8_t> entries_;
};

/// (horizontal, vertical): (M_1, M_2) for tiles, (M_V, M_U) for reflected
/// polygons and (M_V*, M_U*) for star polygons. Unpointed kinds lift the
/// pointed pair to edge classes.
struct AdjacencyPair {
  AdjacencyMatrix horizontal;
  AdjacencyMatrix vertical;
};

/// Matrix dimension build_pair would produce, without building anything.
std::size_t pair_dimension(const BipartiteGraph& g, const SystemSpec& spec);

AdjacencyPair build_pair(const BipartiteGraph& g, const SystemSpec& spec);

// Boundary-word conditions, exposed for tests and for direct evaluation.

/// Tile adjacency for t = 2: A = [x1, y1, x2, y2], B = [x3, y3, x4, y4].
/// Horizontal: y1 = ~y4 and x1 != ~x3. Vertical: x2 = ~x3 and y1 != ~y3.
bool tile_horizontal(const PointedPolygon& a, const PointedPolygon& b);
bool tile_vertical(const PointedPolygon& a, const PointedPolygon& b);

/// B keeps the y sides of the reflection of A with offset c and replaces every x side.
/// The reflection sends x_k to ~x_{c+2-k} and y_k to ~y_{c+1-k}, indices mod t.
bool reflect_relabel_x(const PointedPolygon& a, const PointedPolygon& b, std::size_t c);
/// B keeps the x sides of the reflection and replaces every y side.
bool reflect_relabel_y(const PointedPolygon& a, const PointedPolygon& b, std::size_t c);

bool check_symmetric(const AdjacencyMatrix& m);
/// m1 m2 = m2 m1 over the integers.
bool check_commute(const AdjacencyMatrix& m1, const AdjacencyMatrix& m2);
/// For every m1-edge A->B and m2-edge A->C there is exactly one D with m2(B,D) = m1(C,D) = 1.
bool check_uce(const AdjacencyMatrix& m1, const AdjacencyMatrix& m2);
/// Every row and every column of both matrices has a 1.
bool check_no_sources(const AdjacencyMatrix& m1, const AdjacencyMatrix& m2);
/// Every entry of m1 m2 is 0 or 1.
bool check_unambiguous_factorization(const AdjacencyMatrix& m1, const AdjacencyMatrix& m2);

/// Rows of comma-separated 0/1.
std::string to_csv(const AdjacencyMatrix& m);

}  // namespace tilek
