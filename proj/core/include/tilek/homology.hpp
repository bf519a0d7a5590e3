#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tilek/abelian_group.hpp"
#include "tilek/graph.hpp"
#include "tilek/int_matrix.hpp"
#include "tilek/polygon.hpp"

namespace tilek {

/// A 2-dimensional CW-complex with a single 0-cell, so every 1-cell is a loop
/// and the boundary of a 1-cell vanishes.
struct CellComplex2 {
  struct TwoCell {
    std::string name;
    std::vector<std::pair<std::size_t, long>> boundary;  // (one-cell index, coefficient)
  };

  std::size_t zero_cells = 1;
  std::vector<Label> one_cells;
  std::vector<TwoCell> two_cells;

  /// one_cells x two_cells matrix of the cellular boundary map d_2.
  IntMatrix boundary_matrix() const;
};

/// The polyhedron of kappa(alpha, beta) with 2t-gon faces after collapsing the
/// face through u_1, v_1 to a point. Remaining one-cells are u_i^r and v_j^r for
/// i, j >= 2 and every r; two-cells are the faces A'_ij (i, j >= 2) with
/// boundary sum_r (u_i^r + v_j^r), and the collapsed faces X'_i = sum_r u_i^r,
/// Y'_j = sum_r v_j^r. All incidences are +1.
///
/// Throws PreconditionError for non-complete graphs, alpha or beta below 2, or t = 0.
CellComplex2 contracted_complex(const BipartiteGraph& g, std::size_t t);

struct HomologyGroups {
  FgAbelianGroup h0_reduced;
  FgAbelianGroup h0_unreduced;
  FgAbelianGroup h1;
  FgAbelianGroup h2;
  long euler_characteristic = 0;  // from the cell counts
};

/// h1 = coker d_2 and h2 = ker d_2, free of rank (#two-cells - rank d_2).
/// Groups in degree >= 3 vanish for a 2-complex.
HomologyGroups homology_groups(const CellComplex2& c);

}  // namespace tilek
