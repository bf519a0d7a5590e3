#include "tilek/json_io.hpp"

#include "tilek/error.hpp"

namespace tilek {

Json to_json(const BigInt& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json to_json(const ElementOrder& o) { return o.is_finite() ? to_json(*o.value) : Json("infinite"); }

Json to_json(const FgAbelianGroup& g) {
  Json factors = Json::array();
  for (const BigInt& d : g.invariant_factors()) factors.push_back(to_json(d));
  return Json{{"free_rank", g.free_rank()}, {"invariant_factors", std::move(factors)}};
}

FgAbelianGroup group_from_json(const Json& j) {
  try {
    std::vector<BigInt> f;
    for (const auto& d : j.at("invariant_factors"))
      f.emplace_back(d.is_string() ? d.get<std::string>() : std::to_string(d.get<long long>()));
    return FgAbelianGroup::from_summands(std::move(f), j.at("free_rank").get<std::size_t>());
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed group JSON: ") + e.what());
  }
}

Json to_json(const AdjacencyMatrix& m) {
  Json runs = Json::array();
  const std::size_t n = m.dimension();
  int value = -1;
  std::size_t count = 0;
  for (std::size_t k = 0; k < n * n; ++k) {
    const int e = m.at(k / n, k % n) ? 1 : 0;
    if (e != value && count > 0) {
      runs.push_back(Json::array({value, count}));
      count = 0;
    }
    value = e;
    ++count;
  }
  if (count > 0) runs.push_back(Json::array({value, count}));
  return Json{{"dimension", n}, {"kind", m.kind()}, {"row_sums", m.row_sums()}, {"entries", std::move(runs)}};
}

Json to_json(const PathPrefix& p) {
  auto words = [&](const std::vector<std::size_t>& w) {
    Json out = Json::array();
    for (std::size_t v : w) out.push_back(p.labels.at(v));
    return out;
  };
  return Json{{"start", p.labels.at(p.start)},
              {"length", p.length},
              {"horizontal_word", words(p.horizontal_word)},
              {"vertical_word", words(p.vertical_word)}};
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["graph"] = r.graph;
  j["kind"] = std::string(kind_name(r.spec.kind));
  j["t"] = r.spec.t;
  j["dimension"] = r.dimension;
  j["checks"] = Json{{"symmetric", r.checks.symmetric},
                     {"commute", r.checks.commute},
                     {"uce", r.checks.uce},
                     {"no_sources", r.checks.no_sources},
                     {"factorization", r.checks.factorization}};
  if (r.computed) {
    j["computed"] = to_json(r.computed->k0);
    j["k1"] = to_json(r.computed->k1);
    j["cokernel"] = to_json(r.computed->cokernel);
  } else {
    j["computed"] = nullptr;
    j["compute_error"] = r.compute_error;
  }
  j["predicted"] = r.predicted ? to_json(r.predicted->k_group) : Json("not stated");
  j["identity_order_computed"] = r.computed ? to_json(r.computed->identity_order) : Json(nullptr);
  j["identity_order_predicted"] =
      r.predicted && r.predicted->identity_order ? to_json(*r.predicted->identity_order) : Json("not stated");
  j["match"] = r.has_prediction() ? Json(r.match()) : Json(nullptr);
  if (!r.prediction_note.empty()) j["prediction_note"] = r.prediction_note;
  return j;
}

Json homology_json(std::size_t alpha, std::size_t beta, std::size_t t, const HomologyGroups& h) {
  return Json{{"alpha", alpha},
              {"beta", beta},
              {"t", t},
              {"h0_reduced", to_json(h.h0_reduced)},
              {"h0_unreduced", to_json(h.h0_unreduced)},
              {"h1", to_json(h.h1)},
              {"h2", to_json(h.h2)},
              {"euler_characteristic", h.euler_characteristic}};
}

}  // namespace tilek
