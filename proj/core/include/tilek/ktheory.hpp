#pragma once

#include <optional>
#include <string>

#include "tilek/abelian_group.hpp"
#include "tilek/adjacency.hpp"
#include "tilek/graph.hpp"
#include "tilek/snf.hpp"

namespace tilek {

/// compute_k was asked to run on a pair that fails an axiom it relies on.
class AxiomError : public Error {
 public:
  AxiomError(std::string check, const std::string& what) : Error(what), check_(std::move(check)) {}
  /// "no_sources" or "commute".
  const std::string& check() const noexcept { return check_; }

 private:
  std::string check_;
};

struct KTheoryResult {
  FgAbelianGroup k0;
  FgAbelianGroup k1;
  /// coker(1 - M_a^T, 1 - M_b^T), whose torsion is that of K_0.
  FgAbelianGroup cokernel;
  /// coker(1 - M_a, 1 - M_b), whose torsion is that of K_1.
  FgAbelianGroup cokernel_untransposed;
  std::size_t r0 = 0;
  std::size_t r1 = 0;
  /// Order of the all-ones class in `cokernel`.
  ElementOrder identity_order;
};

/// (1 - a^T, 1 - b^T) when transposed, else (1 - a, 1 - b); n x 2n.
IntMatrix evans_block(const AdjacencyMatrix& a, const AdjacencyMatrix& b, bool transposed = true);

/// K_0 = tors(coker(1 - a^T, 1 - b^T)) + Z^r0 and
/// K_1 = tors(coker(1 - a, 1 - b)) + Z^r1, where r0 = r1 is the sum of the
/// free ranks of the two cokernels. Throws AxiomError when the pair has a
/// source or does not commute.
KTheoryResult compute_k(const AdjacencyMatrix& a, const AdjacencyMatrix& b);

/// Closed form for kappa(alpha, beta). identity_order is empty where no order is stated.
struct Prediction {
  SystemSpec spec;
  FgAbelianGroup k_group;
  std::optional<BigInt> identity_order;
};

/// Throws PreconditionError for non-complete graphs, alpha or beta below 2, or an invalid spec.
Prediction predict(const BipartiteGraph& g, const SystemSpec& spec);
/// Same, straight from the parameters.
Prediction predict(std::size_t alpha, std::size_t beta, const SystemSpec& spec);

struct AxiomChecks {
  bool symmetric = false;  // both matrices
  bool commute = false;
  bool uce = false;
  bool no_sources = false;
  bool factorization = false;

  bool all() const noexcept { return symmetric && commute && uce && no_sources && factorization; }
};

AxiomChecks run_checks(const AdjacencyPair& pair);

struct VerificationReport {
  std::string graph;  // describe(g)
  SystemSpec spec;
  std::size_t dimension = 0;
  AxiomChecks checks;
  std::optional<KTheoryResult> computed;
  std::string compute_error;  // set when compute_k refused
  std::optional<Prediction> predicted;
  std::string prediction_note;  // why there is no prediction
  bool k_match = false;
  std::optional<bool> identity_match;  // empty when no order is stated

  /// Nothing to compare against: the graph or parameters are outside every closed form.
  bool has_prediction() const noexcept { return predicted.has_value() && computed.has_value(); }
  /// K-groups agree and, where an order is stated, the identity orders agree.
  bool match() const noexcept { return has_prediction() && k_match && identity_match.value_or(true); }
};

/// build_pair, every check, compute_k and predict. A refused computation or a
/// missing prediction is recorded in the report instead of thrown.
VerificationReport verify(const BipartiteGraph& g, const SystemSpec& spec);

/// Text form used by the CLI.
std::string render(const VerificationReport& r);

}  // namespace tilek
