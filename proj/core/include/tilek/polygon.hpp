#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tilek/graph.hpp"

namespace tilek {

enum class Family : std::uint8_t { U, V };

/// A directed side label u_i^r / v_j^r, or its involution partner when barred.
struct Label {
  Family family = Family::U;
  std::uint32_t vertex = 0;       // i in [1,alpha] or j in [1,beta]
  std::uint32_t superscript = 0;  // r in [1,t]
  bool barred = false;

  /// The fixed-point-free involution u_i^r <-> ~u_i^r.
  constexpr Label bar() const noexcept { return {family, vertex, superscript, !barred}; }

  friend auto operator<=>(const Label&, const Label&) = default;
};

/// Symmetry form of a pointed polygon relative to its edge's base polygon
/// A = [u^1, v^1, ..., u^t, v^t]. A and D are rotations, B and C bar-reflections.
enum class Flavor : std::uint8_t { A, B, C, D };

/// Pointed 2t-gon [x_1, y_1, ..., x_t, y_t]: x_k in U, y_k in V, read anticlockwise
/// from the basepoint. Ordering is the canonical (flavor, white, black, r) order,
/// with the boundary word as a final tie-break.
struct PointedPolygon {
  Flavor flavor = Flavor::A;
  std::uint32_t white = 0;
  std::uint32_t black = 0;
  std::uint32_t r = 1;
  std::vector<Label> word;

  std::size_t t() const noexcept { return word.size() / 2; }
  /// 1-based x_k and y_k.
  const Label& x(std::size_t k) const { return word[2 * (k - 1)]; }
  const Label& y(std::size_t k) const { return word[2 * (k - 1) + 1]; }

  friend auto operator<=>(const PointedPolygon&, const PointedPolygon&) = default;
};

/// Equivalence class of pointed polygons that share an edge, i.e. the geometric
/// 2t-gon with basepoint and orientation forgotten. Held by its least member.
struct UnpointedPolygon {
  PointedPolygon representative;

  std::uint32_t white() const noexcept { return representative.white; }
  std::uint32_t black() const noexcept { return representative.black; }

  friend auto operator<=>(const UnpointedPolygon&, const UnpointedPolygon&) = default;
};

/// Boundary word of one symmetry form. Flavors C and D need even t.
PointedPolygon make_polygon(Flavor flavor, std::uint32_t white, std::uint32_t black, std::uint32_t r,
                            std::size_t t);

/// All 2t * |E(g)| pointed polygons in canonical order.
///
/// Even t uses the four flavors A, B, C, D with r in [1, t/2]; odd t uses A and B
/// with r in [1, t]. Both parametrise the same set of boundary words: the t
/// rotations of the base polygon and its t bar-reflections. At t = 2 this is the
/// pointed tile set {A, B, C, D} for every edge.
std::vector<PointedPolygon> enumerate_pointed(const BipartiteGraph& g, std::size_t t);

/// One class per edge, in edge order.
std::vector<UnpointedPolygon> enumerate_unpointed(const BipartiteGraph& g, std::size_t t);

UnpointedPolygon unpointed_class(const PointedPolygon& p);

/// Words reachable from `word` by rotating two sides at a time and by the
/// bar-reflection that fixes x_1's axis. Sorted, without duplicates.
std::vector<std::vector<Label>> symmetry_orbit(const std::vector<Label>& word);

std::string render(const Label& l);
/// "[u1^1, v2^1, u1^2, v2^2]", barred labels prefixed by '~'.
std::string render(const PointedPolygon& p);
/// Same as the representative but with round brackets.
std::string render(const UnpointedPolygon& p);

}  // namespace tilek
