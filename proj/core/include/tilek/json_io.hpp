#pragma once

#include <nlohmann/json.hpp>

#include "tilek/abelian_group.hpp"
#include "tilek/adjacency.hpp"
#include "tilek/homology.hpp"
#include "tilek/ktheory.hpp"
#include "tilek/skeleton.hpp"
#include "tilek/snf.hpp"

namespace tilek {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json to_json(const BigInt& v);
/// Finite orders as numbers, otherwise "infinite".
Json to_json(const ElementOrder& o);

/// {"free_rank": r, "invariant_factors": [d_1, ...]}
Json to_json(const FgAbelianGroup& g);
FgAbelianGroup group_from_json(const Json& j);

/// {dimension, kind, row_sums, entries}; entries run-length encode the
/// row-major 0/1 sequence as [[value, count], ...].
Json to_json(const AdjacencyMatrix& m);

/// {start, length, horizontal_word, vertical_word}, vertices as polygon labels.
Json to_json(const PathPrefix& p);

/// {graph, kind, t, checks, computed, predicted, identity_order_computed,
/// identity_order_predicted, match} plus k1, cokernel and notes.
Json to_json(const VerificationReport& r);

/// {alpha, beta, t, h0_reduced, h0_unreduced, h1, h2, euler_characteristic}
Json homology_json(std::size_t alpha, std::size_t beta, std::size_t t, const HomologyGroups& h);

}  // namespace tilek
