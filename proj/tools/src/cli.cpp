#include "tilek/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "tilek/adjacency.hpp"
#include "tilek/graph.hpp"
#include "tilek/homology.hpp"
#include "tilek/json_io.hpp"
#include "tilek/ktheory.hpp"
#include "tilek/skeleton.hpp"

namespace tilek::cli {

namespace {

struct Common {
  std::string graph = "complete:2,2";
  std::string kind = "pointed-tile";
  std::size_t t = 2;
  std::string format = "text";
  std::size_t max_dim = 5000;
};

BipartiteGraph load_graph(const std::string& spec) {
  if (spec.rfind("complete:", 0) == 0) {
    std::istringstream is(spec.substr(9));
    std::size_t a = 0, b = 0;
    char comma = 0;
    if (!(is >> a >> comma >> b) || comma != ',' || !is.eof())
      throw PreconditionError("graph spec '" + spec + "' is not complete:<alpha>,<beta>");
    if (a == 0 || b == 0) throw PreconditionError("complete graphs need alpha, beta >= 1");
    return BipartiteGraph::complete(a, b);
  }
  if (spec.rfind("file:", 0) == 0) {
    std::ifstream in(spec.substr(5));
    if (!in) throw Error("cannot open graph file '" + spec.substr(5) + "'");
    return parse_graph(in);
  }
  throw PreconditionError("graph spec '" + spec + "' must start with complete: or file:");
}

SystemSpec load_spec(const BipartiteGraph& g, const Common& c) {
  SystemSpec spec{parse_kind(c.kind), c.t};
  const std::size_t dim = pair_dimension(g, spec);
  if (dim > c.max_dim)
    throw PreconditionError("matrix dimension " + std::to_string(dim) + " exceeds --max-dim " +
                            std::to_string(c.max_dim));
  return spec;
}

void add_common(CLI::App* app, Common& c, bool with_kind, const std::vector<std::string>& formats) {
  app->add_option("--graph", c.graph, "complete:<alpha>,<beta> or file:<path>")->required();
  if (with_kind) {
    app->add_option("--kind", c.kind, "pointed-tile, unpointed-tile, pointed-reflect, unpointed-polygon, pointed-star")
        ->capture_default_str();
    app->add_option("--max-dim", c.max_dim, "refuse matrices larger than this")->capture_default_str();
  }
  app->add_option("--t", c.t, "half the number of polygon sides")->capture_default_str();
  app->add_option("--format", c.format)->check(CLI::IsMember(formats))->capture_default_str();
}

int cmd_compute(const Common& c, std::ostream& out) {
  const BipartiteGraph g = load_graph(c.graph);
  const SystemSpec spec = load_spec(g, c);
  const VerificationReport r = verify(g, spec);
  if (c.format == "json") out << to_json(r).dump(2) << "\n";
  else out << render(r);
  if (!r.computed) return kError;
  if (r.has_prediction() && !r.match()) return kMismatch;
  return kOk;
}

int cmd_homology(const Common& c, std::ostream& out) {
  const BipartiteGraph g = load_graph(c.graph);
  const HomologyGroups h = homology_groups(contracted_complex(g, c.t));
  if (c.format == "json") {
    out << homology_json(g.alpha(), g.beta(), c.t, h).dump(2) << "\n";
  } else {
    out << "graph: " << describe(g) << " (t = " << c.t << ")\n"
        << "H0 (reduced) = " << render(h.h0_reduced) << "\n"
        << "H0 (unreduced) = " << render(h.h0_unreduced) << "\n"
        << "H1 = " << render(h.h1) << "\n"
        << "H2 = " << render(h.h2) << "\n"
        << "Hn = 0 for n >= 3\n"
        << "euler characteristic = " << h.euler_characteristic << "\n";
  }
  return kOk;
}

struct SkeletonOptions {
  bool aperiodic = false;
  std::size_t length = 30;
  std::size_t max_shift = 10;
  std::size_t start = 0;
};

int cmd_skeleton(const Common& c, const SkeletonOptions& o, std::ostream& out) {
  const BipartiteGraph g = load_graph(c.graph);
  const SystemSpec spec = load_spec(g, c);
  const Skeleton sk(build_pair(g, spec));
  const auto parts = component_sets(sk);
  const bool strong = is_strongly_connected(sk);
  const bool entrance = has_cycle_with_entrance(sk);

  // Without --aperiodic the prefix is attempted and skipped when the start
  // vertex lacks partners; with it, that is an error.
  std::optional<PathPrefix> prefix;
  std::string skipped;
  try {
    prefix = aperiodic_prefix(sk, o.start, o.length);
  } catch (const PreconditionError& e) {
    if (o.aperiodic) throw;
    skipped = e.what();
  }
  std::optional<bool> no_period;
  if (prefix) no_period = check_no_period(*prefix, o.max_shift);

  if (c.format == "json") {
    Json sizes = Json::array();
    for (const auto& p : parts) sizes.push_back(p.size());
    Json j{{"graph", describe(g)},
           {"kind", std::string(kind_name(spec.kind))},
           {"t", spec.t},
           {"vertices", sk.size()},
           {"components", parts.size()},
           {"component_sizes", sizes},
           {"strongly_connected", strong},
           {"cofinality_proxy", "strong connectivity of the 1-skeleton"},
           {"cycle_with_entrance", entrance},
           {"max_shift", o.max_shift}};
    j["no_period_up_to_bounds"] = no_period ? Json(*no_period) : Json(nullptr);
    if (prefix && o.aperiodic) j["prefix"] = to_json(*prefix);
    if (!skipped.empty()) j["prefix_skipped"] = skipped;
    out << j.dump(2) << "\n";
  } else {
    out << "graph: " << describe(g) << "\n"
        << "kind: " << kind_name(spec.kind) << " (t = " << spec.t << ", " << sk.size() << " vertices)\n"
        << "components: " << parts.size() << "\n"
        << "strongly_connected: " << (strong ? "true" : "false") << " (cofinality proxy)\n"
        << "cycle_with_entrance: " << (entrance ? "true" : "false") << "\n";
    if (no_period) {
      out << "no_period_up_to_bounds: " << (*no_period ? "true" : "false") << " (length " << o.length
          << ", shifts <= " << o.max_shift << ")\n";
    } else {
      out << "no_period_up_to_bounds: not checked (" << skipped << ")\n";
    }
    if (prefix && o.aperiodic) {
      out << "horizontal_word:";
      for (std::size_t v : prefix->horizontal_word) out << " " << sk.label(v);
      out << "\nvertical_word:";
      for (std::size_t v : prefix->vertical_word) out << " " << sk.label(v);
      out << "\n";
    }
  }
  return kOk;
}

int cmd_export(const Common& c, const std::string& which, std::ostream& out) {
  const BipartiteGraph g = load_graph(c.graph);
  const SystemSpec spec = load_spec(g, c);
  const AdjacencyPair pair = build_pair(g, spec);
  const std::vector<const AdjacencyMatrix*> chosen =
      which == "horizontal" ? std::vector{&pair.horizontal}
      : which == "vertical" ? std::vector{&pair.vertical}
                            : std::vector{&pair.horizontal, &pair.vertical};
  if (c.format == "json") {
    Json j = Json::array();
    for (const AdjacencyMatrix* m : chosen) j.push_back(to_json(*m));
    out << (chosen.size() == 1 ? j[0] : j).dump() << "\n";
  } else {
    for (std::size_t k = 0; k < chosen.size(); ++k) {
      if (k) out << "\n";
      out << to_csv(*chosen[k]);
    }
  }
  return kOk;
}

// "3" or "2:6", inclusive.
std::pair<std::size_t, std::size_t> parse_range(const std::string& s, const char* what) {
  std::size_t lo = 0, hi = 0;
  const auto colon = s.find(':');
  try {
    std::size_t used = 0;
    lo = std::stoul(s.substr(0, colon), &used);
    if (used != (colon == std::string::npos ? s.size() : colon)) throw std::invalid_argument(s);
    hi = lo;
    if (colon != std::string::npos) {
      hi = std::stoul(s.substr(colon + 1), &used);
      if (used != s.size() - colon - 1) throw std::invalid_argument(s);
    }
  } catch (const std::logic_error&) {
    throw PreconditionError(std::string(what) + " range '" + s + "' is not <lo>:<hi>");
  }
  if (lo == 0 || lo > hi) throw PreconditionError(std::string(what) + " range '" + s + "' is empty or starts at 0");
  return {lo, hi};
}

struct SweepOptions {
  std::string alpha = "2:6";
  std::string beta = "2:6";
  std::vector<std::string> kinds;
  std::vector<std::size_t> t_values{2};
  std::string format = "csv";
  std::string out_path;
  std::size_t jobs = 1;
  std::size_t max_dim = 5000;
};

struct SweepCell {
  std::size_t alpha = 0;
  std::size_t beta = 0;
  SystemSpec spec;
  std::optional<VerificationReport> report;
  std::string error;

  enum class Outcome { Match, Mismatch, Error } outcome = Outcome::Error;
};

void run_cell(SweepCell& cell, std::size_t max_dim) {
  try {
    const BipartiteGraph g = BipartiteGraph::complete(cell.alpha, cell.beta);
    const std::size_t dim = pair_dimension(g, cell.spec);
    if (dim > max_dim) throw PreconditionError("dimension " + std::to_string(dim) + " exceeds --max-dim");
    cell.report = verify(g, cell.spec);
    if (!cell.report->computed) cell.error = cell.report->compute_error;
    else if (!cell.report->has_prediction()) cell.error = "no closed form: " + cell.report->prediction_note;
    else cell.outcome = cell.report->match() ? SweepCell::Outcome::Match : SweepCell::Outcome::Mismatch;
  } catch (const std::exception& e) {
    cell.error = e.what();
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

void write_cells(const std::vector<SweepCell>& cells, const std::string& format, std::ostream& os) {
  auto order_pred = [](const VerificationReport& r) {
    return r.predicted && r.predicted->identity_order ? r.predicted->identity_order->get_str() : std::string("not stated");
  };
  if (format == "json") {
    Json all = Json::array();
    for (const SweepCell& c : cells) {
      Json j = c.report ? to_json(*c.report) : Json{{"graph", "complete:" + std::to_string(c.alpha) + "," + std::to_string(c.beta)},
                                                    {"kind", std::string(kind_name(c.spec.kind))},
                                                    {"t", c.spec.t}};
      if (!c.error.empty()) j["error"] = c.error;
      all.push_back(std::move(j));
    }
    os << all.dump(2) << "\n";
    return;
  }
  if (format == "csv") os << "alpha,beta,kind,t,k0,k0_predicted,identity_order,identity_order_predicted,match\n";
  for (const SweepCell& c : cells) {
    const VerificationReport* r = c.report ? &*c.report : nullptr;
    const std::string k0 = r && r->computed ? render(r->computed->k0) : "error";
    const std::string kp = r && r->predicted ? render(r->predicted->k_group) : "not stated";
    const std::string io = r && r->computed ? to_string(r->computed->identity_order) : "error";
    const std::string ip = r ? order_pred(*r) : "not stated";
    const std::string m = c.outcome == SweepCell::Outcome::Match      ? "true"
                          : c.outcome == SweepCell::Outcome::Mismatch ? "false"
                                                                      : "error";
    if (format == "csv") {
      os << c.alpha << ',' << c.beta << ',' << kind_name(c.spec.kind) << ',' << c.spec.t << ',' << csv_field(k0) << ','
         << csv_field(kp) << ',' << io << ',' << csv_field(ip) << ',' << m << "\n";
    } else {
      os << "kappa(" << c.alpha << "," << c.beta << ") " << kind_name(c.spec.kind) << " t=" << c.spec.t << ": K0 = " << k0
         << " [predicted " << kp << "], order of [1] = " << io << " [predicted " << ip << "], match: " << m;
      if (!c.error.empty()) os << " (" << c.error << ")";
      os << "\n";
    }
  }
}

int cmd_sweep(const SweepOptions& o, std::ostream& out, std::ostream& err) {
  if (o.kinds.empty()) throw PreconditionError("sweep needs at least one --kind");
  if (o.t_values.empty()) throw PreconditionError("sweep needs at least one --t value");
  const auto [a_lo, a_hi] = parse_range(o.alpha, "alpha");
  const auto [b_lo, b_hi] = parse_range(o.beta, "beta");

  std::vector<SystemSpec> specs;
  for (const std::string& name : o.kinds) {
    const SystemKind k = parse_kind(name);
    for (std::size_t t : o.t_values) {
      validate({k, t});  // every requested t must fit every requested kind
      specs.push_back({k, t});
    }
  }

  std::vector<SweepCell> cells;
  for (std::size_t a = a_lo; a <= a_hi; ++a)
    for (std::size_t b = b_lo; b <= b_hi; ++b)
      for (const SystemSpec& s : specs) cells.push_back({a, b, s, std::nullopt, {}, SweepCell::Outcome::Error});

  std::ofstream file;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) throw Error("cannot write '" + o.out_path + "'");
  }

  const std::size_t jobs = std::clamp<std::size_t>(o.jobs, 1, std::max<std::size_t>(cells.size(), 1));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) run_cell(cells[i], o.max_dim);
  };
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::size_t matches = 0, mismatches = 0, errors = 0;
  for (const SweepCell& c : cells) {
    matches += c.outcome == SweepCell::Outcome::Match;
    mismatches += c.outcome == SweepCell::Outcome::Mismatch;
    errors += c.outcome == SweepCell::Outcome::Error;
  }

  // Records go to the file when one is given; otherwise they take stdout and
  // the summary moves to stderr so the record stream stays parseable.
  std::ostream& records = o.out_path.empty() ? out : file;
  write_cells(cells, o.format, records);
  std::ostream& summary = o.out_path.empty() ? err : out;
  summary << "cells=" << cells.size() << " matches=" << matches << " mismatches=" << mismatches
          << " errors=" << errors << "\n";
  if (file.is_open() && !file) throw Error("write to '" + o.out_path + "' failed");
  if (errors > 0) return kError;
  return mismatches > 0 ? kMismatch : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tile and 2t-gon systems of bipartite graphs: K-theory, homology and 2-rank structure"};
  app.require_subcommand(1);

  Common compute_opts, homology_opts, skeleton_opts, export_opts;
  SkeletonOptions sk_opts;
  SweepOptions sweep_opts;
  std::string which = "both";

  auto* compute = app.add_subcommand("compute", "K-groups, order of [1], axiom checks and closed-form comparison");
  add_common(compute, compute_opts, true, {"text", "json"});

  auto* homology = app.add_subcommand("homology", "homology of the polyhedron of a complete graph");
  add_common(homology, homology_opts, false, {"text", "json"});

  auto* skeleton = app.add_subcommand("skeleton", "components, connectivity, cycles and aperiodic prefix");
  add_common(skeleton, skeleton_opts, true, {"text", "json"});
  skeleton->add_flag("--aperiodic", sk_opts.aperiodic, "require the aperiodic prefix and print its words");
  skeleton->add_option("--length", sk_opts.length, "prefix side length")->capture_default_str();
  skeleton->add_option("--max-shift", sk_opts.max_shift, "largest shift tested for periodicity")->capture_default_str();
  skeleton->add_option("--start", sk_opts.start, "0-based start vertex")->capture_default_str();

  auto* exporter = app.add_subcommand("export", "write the adjacency matrices");
  export_opts.format = "csv";
  add_common(exporter, export_opts, true, {"csv", "json"});
  exporter->add_option("--matrix", which)->check(CLI::IsMember({"horizontal", "vertical", "both"}))->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "verify every cell of a parameter grid");
  sweep->add_option("--alpha", sweep_opts.alpha, "inclusive range lo:hi")->capture_default_str();
  sweep->add_option("--beta", sweep_opts.beta, "inclusive range lo:hi")->capture_default_str();
  sweep->add_option("--kind", sweep_opts.kinds, "system kinds")->delimiter(',');
  sweep->add_option("--t", sweep_opts.t_values, "t values")->delimiter(',')->capture_default_str();
  sweep->add_option("--format", sweep_opts.format)->check(CLI::IsMember({"csv", "json", "text"}))->capture_default_str();
  sweep->add_option("--out", sweep_opts.out_path, "record file; stdout when omitted");
  sweep->add_option("--jobs", sweep_opts.jobs, "worker threads")->envname("TILEK_JOBS")->capture_default_str();
  sweep->add_option("--max-dim", sweep_opts.max_dim, "refuse matrices larger than this")->capture_default_str();

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*compute) return cmd_compute(compute_opts, out);
    if (*homology) return cmd_homology(homology_opts, out);
    if (*skeleton) return cmd_skeleton(skeleton_opts, sk_opts, out);
    if (*exporter) return cmd_export(export_opts, which, out);
    if (*sweep) return cmd_sweep(sweep_opts, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace tilek::cli
