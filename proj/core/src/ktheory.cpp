#include "tilek/ktheory.hpp"

#include <numeric>
#include <sstream>

#include "tilek/error.hpp"

namespace tilek {

IntMatrix evans_block(const AdjacencyMatrix& a, const AdjacencyMatrix& b, bool transposed) {
  if (a.dimension() != b.dimension()) throw DimensionError("evans_block: matrices differ in dimension");
  const std::size_t n = a.dimension();
  IntMatrix m(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const bool ea = transposed ? a.at(j, i) : a.at(i, j);
      const bool eb = transposed ? b.at(j, i) : b.at(i, j);
      m(i, j) = (i == j ? 1 : 0) - (ea ? 1 : 0);
      m(i, n + j) = (i == j ? 1 : 0) - (eb ? 1 : 0);
    }
  return m;
}

KTheoryResult compute_k(const AdjacencyMatrix& a, const AdjacencyMatrix& b) {
  if (!check_no_sources(a, b)) throw AxiomError("no_sources", "K-theory needs a 2-graph without sources");
  if (!check_commute(a, b)) throw AxiomError("commute", "K-theory needs commuting vertex matrices");

  const IntMatrix bt = evans_block(a, b, true);
  const IntMatrix bu = evans_block(a, b, false);

  KTheoryResult r;
  r.cokernel = cokernel(bt);
  r.cokernel_untransposed = cokernel(bu);
  r.r0 = r.cokernel.free_rank() + r.cokernel_untransposed.free_rank();
  r.r1 = r.r0;
  r.k0 = direct_sum(torsion(r.cokernel), FgAbelianGroup::free(r.r0));
  r.k1 = direct_sum(torsion(r.cokernel_untransposed), FgAbelianGroup::free(r.r1));
  r.identity_order = element_order_in_cokernel(bt, IntVector(bt.rows(), BigInt(1)));
  return r;
}

namespace {

FgAbelianGroup group(std::initializer_list<std::pair<std::size_t, std::size_t>> cyclic_powers, std::size_t free_rank) {
  std::vector<BigInt> orders;
  for (auto [order, count] : cyclic_powers)
    for (std::size_t k = 0; k < count; ++k) orders.emplace_back(static_cast<unsigned long>(order));
  return FgAbelianGroup::from_orders(std::move(orders), free_rank);
}

FgAbelianGroup pointed_tile_group(std::size_t a, std::size_t b) {
  if (a == 0 && b == 0) return FgAbelianGroup::free(8);
  if (a <= 1) return group({{b, 2}}, 4 * (b + 1));
  const std::size_t g = std::gcd(a, b);
  const std::size_t rank = 2 * (a + 1) * (b + 1);
  if (g == 1) return group({{a, b - a}, {a * b, a + 1}}, rank);
  return group({{a, b - a}, {std::lcm(a, b), a + 1}, {g, a + 2}}, rank);
}

FgAbelianGroup unpointed_group(std::size_t a, std::size_t b) {
  if (a == 0 && b == 0) return FgAbelianGroup::free(2);
  if (a == 0) return group({{2, b}, {2 * b, 1}}, 0);
  return group({{2, (a + 1) * (b + 1) - 1}, {2 * std::gcd(a, b), 1}}, 0);
}

FgAbelianGroup star_group(std::size_t a, std::size_t b, std::size_t t) {
  if (a == 0 && b == 0) return FgAbelianGroup::free(4 * t);
  return group({{std::gcd(a, b), t}}, 2 * t * (a + 1) * (b + 1));
}

}  // namespace

Prediction predict(std::size_t alpha, std::size_t beta, const SystemSpec& spec) {
  validate(spec);
  if (alpha < 2 || beta < 2) throw PreconditionError("closed forms need alpha, beta >= 2");
  // w.l.o.g. a <= b
  std::size_t a = alpha - 2;
  std::size_t b = beta - 2;
  if (a > b) std::swap(a, b);

  Prediction p{spec, {}, std::nullopt};
  switch (spec.kind) {
    case SystemKind::PointedTile:
      p.k_group = pointed_tile_group(a, b);
      break;
    case SystemKind::PointedReflect:
      p.k_group = power(pointed_tile_group(a, b), spec.t / 2);
      break;
    case SystemKind::PointedStar:
      p.k_group = star_group(a, b, spec.t);
      break;
    case SystemKind::UnpointedTile:
    case SystemKind::UnpointedPolygon:
      p.k_group = unpointed_group(a, b);
      break;
  }
  if (alpha >= 3 && beta >= 3) {
    const std::size_t g = std::gcd(a, b);
    const bool halve = !is_pointed(spec.kind) && g % 2 == 0;
    p.identity_order = BigInt(static_cast<unsigned long>(halve ? g / 2 : g));
  }
  return p;
}

Prediction predict(const BipartiteGraph& g, const SystemSpec& spec) {
  if (!g.is_complete()) throw PreconditionError("closed forms exist only for complete bipartite graphs");
  return predict(g.alpha(), g.beta(), spec);
}

AxiomChecks run_checks(const AdjacencyPair& pair) {
  const auto& [h, v] = pair;
  AxiomChecks c;
  c.symmetric = check_symmetric(h) && check_symmetric(v);
  c.commute = check_commute(h, v);
  c.uce = check_uce(h, v);
  c.no_sources = check_no_sources(h, v);
  c.factorization = check_unambiguous_factorization(h, v);
  return c;
}

VerificationReport verify(const BipartiteGraph& g, const SystemSpec& spec) {
  VerificationReport r;
  r.graph = describe(g);
  r.spec = spec;
  const AdjacencyPair pair = build_pair(g, spec);
  r.dimension = pair.horizontal.dimension();
  r.checks = run_checks(pair);
  try {
    r.computed = compute_k(pair.horizontal, pair.vertical);
  } catch (const AxiomError& e) {
    r.compute_error = std::string(e.what()) + " (" + e.check() + " failed)";
  }
  try {
    r.predicted = predict(g, spec);
  } catch (const PreconditionError& e) {
    r.prediction_note = e.what();
  }
  if (r.computed && r.predicted) {
    r.k_match = r.computed->k0 == r.predicted->k_group && r.computed->k1 == r.predicted->k_group;
    if (r.predicted->identity_order) {
      const ElementOrder& got = r.computed->identity_order;
      r.identity_match = got.is_finite() && *got.value == *r.predicted->identity_order;
    }
  }
  return r;
}

namespace {
const char* yes_no(bool b) { return b ? "true" : "false"; }
}  // namespace

std::string render(const VerificationReport& r) {
  std::ostringstream os;
  os << "graph: " << r.graph << "\n";
  os << "kind: " << kind_name(r.spec.kind) << " (t = " << r.spec.t << ", dimension " << r.dimension << ")\n";
  os << "checks: symmetric=" << yes_no(r.checks.symmetric) << " commute=" << yes_no(r.checks.commute)
     << " uce=" << yes_no(r.checks.uce) << " no_sources=" << yes_no(r.checks.no_sources)
     << " factorization=" << yes_no(r.checks.factorization) << "\n";
  if (r.computed) {
    os << "K0 = " << render(r.computed->k0) << "\n";
    os << "K1 = " << render(r.computed->k1) << "\n";
    os << "order of [1] = " << to_string(r.computed->identity_order) << "\n";
  } else {
    os << "K-theory not computed: " << r.compute_error << "\n";
  }
  if (r.predicted) {
    os << "predicted K0 = " << render(r.predicted->k_group) << "\n";
    os << "predicted order of [1] = "
       << (r.predicted->identity_order ? r.predicted->identity_order->get_str() : std::string("not stated")) << "\n";
  } else {
    os << "prediction: not stated (" << r.prediction_note << ")\n";
  }
  if (r.has_prediction()) os << "match: " << yes_no(r.match()) << "\n";
  else os << "match: not applicable\n";
  return os.str();
}

}  // namespace tilek
