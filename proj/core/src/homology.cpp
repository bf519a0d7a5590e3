#include "tilek/homology.hpp"

#include "tilek/error.hpp"
#include "tilek/snf.hpp"

namespace tilek {

IntMatrix CellComplex2::boundary_matrix() const {
  IntMatrix d(one_cells.size(), two_cells.size());
  for (std::size_t f = 0; f < two_cells.size(); ++f)
    for (auto [e, coeff] : two_cells[f].boundary) {
      if (e >= one_cells.size()) throw PreconditionError("two-cell boundary references a missing one-cell");
      d(e, f) += coeff;
    }
  return d;
}

CellComplex2 contracted_complex(const BipartiteGraph& g, std::size_t t) {
  if (!g.is_complete()) throw PreconditionError("the contracted complex is defined for complete graphs only");
  if (g.alpha() < 2 || g.beta() < 2) throw PreconditionError("the contracted complex needs alpha, beta >= 2");
  if (t == 0) throw PreconditionError("t must be >= 1");

  const std::size_t alpha = g.alpha();
  const std::size_t beta = g.beta();
  CellComplex2 c;
  // u_i^r sits at (i - 2) * t + (r - 1); v_j^r follows all the u's.
  for (std::size_t i = 2; i <= alpha; ++i)
    for (std::size_t r = 1; r <= t; ++r)
      c.one_cells.push_back({Family::U, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(r), false});
  const std::size_t v_base = c.one_cells.size();
  for (std::size_t j = 2; j <= beta; ++j)
    for (std::size_t r = 1; r <= t; ++r)
      c.one_cells.push_back({Family::V, static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(r), false});

  auto u = [&](std::size_t i, std::size_t r) { return (i - 2) * t + (r - 1); };
  auto v = [&](std::size_t j, std::size_t r) { return v_base + (j - 2) * t + (r - 1); };

  for (std::size_t i = 2; i <= alpha; ++i)
    for (std::size_t j = 2; j <= beta; ++j) {
      CellComplex2::TwoCell f{"A'" + std::to_string(i) + "," + std::to_string(j), {}};
      for (std::size_t r = 1; r <= t; ++r) {
        f.boundary.emplace_back(u(i, r), 1);
        f.boundary.emplace_back(v(j, r), 1);
      }
      c.two_cells.push_back(std::move(f));
    }
  for (std::size_t i = 2; i <= alpha; ++i) {
    CellComplex2::TwoCell f{"X'" + std::to_string(i), {}};
    for (std::size_t r = 1; r <= t; ++r) f.boundary.emplace_back(u(i, r), 1);
    c.two_cells.push_back(std::move(f));
  }
  for (std::size_t j = 2; j <= beta; ++j) {
    CellComplex2::TwoCell f{"Y'" + std::to_string(j), {}};
    for (std::size_t r = 1; r <= t; ++r) f.boundary.emplace_back(v(j, r), 1);
    c.two_cells.push_back(std::move(f));
  }
  return c;
}

HomologyGroups homology_groups(const CellComplex2& c) {
  const IntMatrix d2 = c.boundary_matrix();
  const SnfResult s = snf(d2);
  HomologyGroups h;
  h.h0_reduced = FgAbelianGroup{};
  h.h0_unreduced = FgAbelianGroup::free(c.zero_cells == 0 ? 0 : 1);
  h.h1 = FgAbelianGroup::from_orders(s.diagonal, d2.rows() - s.rank);
  h.h2 = FgAbelianGroup::free(d2.cols() - s.rank);
  h.euler_characteristic = static_cast<long>(c.zero_cells) - static_cast<long>(c.one_cells.size()) +
                           static_cast<long>(c.two_cells.size());
  return h;
}

}  // namespace tilek
