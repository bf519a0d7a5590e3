#include "tilek/abelian_group.hpp"

#include <algorithm>

#include "tilek/error.hpp"

namespace tilek {

namespace {

// Z/a + Z/b = Z/gcd + Z/lcm. Sweeping every pair (i, j), i < j, leaves
// a_i | a_j: a_i only ever shrinks to a divisor of its earlier values.
std::vector<BigInt> recombine(std::vector<BigInt> a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (sgn(a[j] % a[i]) == 0) continue;
      BigInt g = gcd(a[i], a[j]);
      a[j] = a[i] / g * a[j];
      a[i] = g;
    }
  std::erase_if(a, [](const BigInt& d) { return d == 1; });
  return a;
}

}  // namespace

FgAbelianGroup FgAbelianGroup::from_summands(std::vector<BigInt> torsion_moduli, std::size_t free_rank) {
  for (const BigInt& m : torsion_moduli)
    if (m < 2) throw PreconditionError("torsion modulus must be >= 2, got " + m.get_str());
  FgAbelianGroup g;
  g.free_rank_ = free_rank;
  std::sort(torsion_moduli.begin(), torsion_moduli.end());
  g.factors_ = recombine(std::move(torsion_moduli));
  return g;
}

FgAbelianGroup FgAbelianGroup::from_orders(std::vector<BigInt> orders, std::size_t free_rank) {
  std::vector<BigInt> kept;
  for (BigInt& d : orders) {
    d = abs(d);
    if (d == 0) throw PreconditionError("zero order passed to from_orders");
    if (d != 1) kept.push_back(std::move(d));
  }
  return from_summands(std::move(kept), free_rank);
}

FgAbelianGroup FgAbelianGroup::cyclic(const BigInt& n) {
  if (n == 0) return free(1);
  return from_orders({n}, 0);
}

BigInt FgAbelianGroup::torsion_order() const {
  BigInt p = 1;
  for (const BigInt& d : factors_) p *= d;
  return p;
}

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  std::vector<BigInt> f = a.invariant_factors();
  f.insert(f.end(), b.invariant_factors().begin(), b.invariant_factors().end());
  return FgAbelianGroup::from_summands(std::move(f), a.free_rank() + b.free_rank());
}

FgAbelianGroup power(const FgAbelianGroup& a, std::size_t n) {
  std::vector<BigInt> f;
  for (std::size_t k = 0; k < n; ++k) f.insert(f.end(), a.invariant_factors().begin(), a.invariant_factors().end());
  return FgAbelianGroup::from_summands(std::move(f), a.free_rank() * n);
}

FgAbelianGroup torsion(const FgAbelianGroup& a) { return FgAbelianGroup::from_summands(a.invariant_factors(), 0); }

std::string render(const FgAbelianGroup& a) {
  if (a.is_trivial()) return "0";
  std::vector<std::string> parts;
  const auto& f = a.invariant_factors();
  for (std::size_t i = 0; i < f.size();) {
    std::size_t j = i;
    while (j < f.size() && f[j] == f[i]) ++j;
    const std::string z = "Z/" + f[i].get_str();
    parts.push_back(j - i == 1 ? z : "(" + z + ")^" + std::to_string(j - i));
    i = j;
  }
  if (a.free_rank() == 1) parts.emplace_back("Z");
  else if (a.free_rank() > 1) parts.push_back("Z^" + std::to_string(a.free_rank()));

  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " + " : "") + parts[i];
  return s;
}

}  // namespace tilek
