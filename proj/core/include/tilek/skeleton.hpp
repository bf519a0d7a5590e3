#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tilek/adjacency.hpp"

namespace tilek {

/// 1-skeleton of a 2-rank graph: blue edges from the horizontal matrix,
/// magenta edges from the vertical one, both as out-neighbour lists.
class Skeleton {
 public:
  Skeleton(const AdjacencyMatrix& blue, const AdjacencyMatrix& magenta);
  explicit Skeleton(const AdjacencyPair& pair) : Skeleton(pair.horizontal, pair.vertical) {}
  /// Unlabelled skeleton from explicit edge lists (pairs of 0-based vertices).
  Skeleton(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& blue,
           const std::vector<std::pair<std::size_t, std::size_t>>& magenta);

  std::size_t size() const noexcept { return blue_.size(); }
  const std::vector<std::size_t>& blue(std::size_t v) const { return blue_[v]; }
  const std::vector<std::size_t>& magenta(std::size_t v) const { return magenta_[v]; }
  bool has_blue(std::size_t a, std::size_t b) const;
  bool has_magenta(std::size_t a, std::size_t b) const;
  std::string label(std::size_t v) const;

 private:
  std::vector<std::vector<std::size_t>> blue_;
  std::vector<std::vector<std::size_t>> magenta_;
  std::vector<std::string> labels_;
};

/// Weakly connected components of blue + magenta, by smallest vertex.
std::vector<std::vector<std::size_t>> component_sets(const Skeleton& sk);
std::size_t components(const Skeleton& sk);

/// Strong connectivity of the directed union graph. This is the finite proxy
/// used for cofinality; it is not cofinality itself.
bool is_strongly_connected(const Skeleton& sk);

/// A vertex on a directed cycle of one colour that also receives a second edge
/// of that colour, i.e. a cycle of degree (k,0) or (0,k) with an entrance.
bool has_cycle_with_entrance(const Skeleton& sk);

/// Finite truncation of the aperiodic path: grid(m, n) for 0 <= m, n < length.
struct PathPrefix {
  std::size_t start = 0;
  std::size_t length = 0;
  std::vector<std::size_t> horizontal_word;  // grid(m, 0)
  std::vector<std::size_t> vertical_word;    // grid(0, n)
  std::vector<std::size_t> grid;             // row-major in m: grid[m * length + n]
  std::vector<std::string> labels;           // vertex labels, indexed like the skeleton

  std::size_t at(std::size_t m, std::size_t n) const { return grid[m * length + n]; }
};

enum class FillOrder { RowFirst, ColumnFirst };

/// Position m of the horizontal word: 0 for m even, 1 for m = r^2 + r + 1
/// (r >= 1), 2 otherwise. The three values stand for start, B_1 and B_2.
int aperiodic_slot(std::size_t m);

/// Builds the words x = (A, B_2, A, B_1, A, B_2, A, B_1, ...) and y alike from
/// the two least blue partners B_1 < B_2 and magenta partners C_1 < C_2 of the
/// start vertex, then fills the grid by unique common extension.
///
/// Throws PreconditionError when start lacks two partners of a colour (or they
/// are not bidirectional), and Error when some square has no or several completions.
PathPrefix aperiodic_prefix(const Skeleton& sk, std::size_t start, std::size_t length,
                            FillOrder order = FillOrder::RowFirst);

/// The unique D with magenta(b, D) and blue(c, D); throws Error otherwise.
std::size_t complete_square(const Skeleton& sk, std::size_t b, std::size_t c);

/// True iff no shift q != 0 with |q_1|, |q_2| <= max_shift satisfies
/// grid(p + q) = grid(p) on every p in [max_shift, length)^2 with p + q inside
/// the grid. Restricting p to that window also covers eventual periods that
/// start anywhere up to max_shift. A true result means only "no period found
/// up to the bounds". Throws PreconditionError unless max_shift < length.
bool check_no_period(const PathPrefix& p, std::size_t max_shift);

}  // namespace tilek
