#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "tilek/abelian_group.hpp"
#include "tilek/int_matrix.hpp"

namespace tilek {

/// Smith normal form L * M * R = D with D = diag(d_1, ..., d_rank, 0, ...),
/// d_i > 0 and d_i | d_{i+1}. L and R are unimodular and kept only on request.
struct SnfResult {
  IntVector diagonal;  // the rank nonzero entries, in chain order
  std::size_t rank = 0;
  std::optional<IntMatrix> left;
  std::optional<IntMatrix> right;
};

/// Pivot is the nonzero entry of least absolute value in the remaining block,
/// ties broken by lowest (row, col).
SnfResult snf(const IntMatrix& m, bool keep_transforms = false);

/// Z^rows / (column span of m).
FgAbelianGroup cokernel(const IntMatrix& m);

/// Order of an element of a cyclic or free part; nullopt value means infinite.
struct ElementOrder {
  std::optional<BigInt> value;

  static ElementOrder infinite() { return {}; }
  static ElementOrder finite(BigInt k) { return {std::move(k)}; }
  bool is_finite() const noexcept { return value.has_value(); }

  friend bool operator==(const ElementOrder&, const ElementOrder&) = default;
};

/// "infinite" or the decimal value.
std::string to_string(const ElementOrder& o);

/// Least k >= 1 with k*v in the column lattice of m.
ElementOrder element_order_in_cokernel(const IntMatrix& m, const IntVector& v);

/// Column-style Hermite normal form: a rows x r matrix H whose columns form a basis
/// of the column lattice of m. Column c has a positive pivot in a row strictly
/// below the previous column's pivot, zeros above it, and the entries to the left
/// of each pivot are reduced into [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Whether v lies in the column lattice of the HNF basis h.
bool in_column_lattice(const IntMatrix& h, const IntVector& v);

}  // namespace tilek
