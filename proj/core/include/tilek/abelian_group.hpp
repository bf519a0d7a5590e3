#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tilek/int_matrix.hpp"

namespace tilek {

/// Finitely generated abelian group Z^free_rank + Z/d_1 + ... + Z/d_k in
/// invariant-factor form, 1 < d_1 | d_2 | ... | d_k. Two values compare equal
/// exactly when the groups are isomorphic.
class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;

  /// Canonicalises an arbitrary list of cyclic orders. Throws PreconditionError
  /// for a modulus below 2.
  static FgAbelianGroup from_summands(std::vector<BigInt> torsion_moduli, std::size_t free_rank);
  /// Like from_summands but silently drops moduli equal to 1 (SNF diagonals, closed forms with Z/1).
  static FgAbelianGroup from_orders(std::vector<BigInt> orders, std::size_t free_rank);
  static FgAbelianGroup free(std::size_t rank) { return from_summands({}, rank); }
  static FgAbelianGroup cyclic(const BigInt& n);

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<BigInt>& invariant_factors() const noexcept { return factors_; }
  bool is_trivial() const noexcept { return free_rank_ == 0 && factors_.empty(); }
  bool is_torsion_free() const noexcept { return factors_.empty(); }
  /// |tors|, 1 for a torsion-free group.
  BigInt torsion_order() const;

  friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<BigInt> factors_;
};

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b);
/// a^n, the n-fold direct sum; a^0 is trivial.
FgAbelianGroup power(const FgAbelianGroup& a, std::size_t n);
FgAbelianGroup torsion(const FgAbelianGroup& a);

/// "(Z/2)^2 + Z/4 + Z", "Z^8", "0" for the trivial group.
std::string render(const FgAbelianGroup& a);

}  // namespace tilek
