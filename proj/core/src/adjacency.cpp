#include "tilek/adjacency.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <utility>

#include "tilek/error.hpp"

namespace tilek {

namespace {

constexpr std::array<std::pair<SystemKind, std::string_view>, 5> kKindNames{{
    {SystemKind::PointedTile, "pointed-tile"},
    {SystemKind::UnpointedTile, "unpointed-tile"},
    {SystemKind::PointedReflect, "pointed-reflect"},
    {SystemKind::UnpointedPolygon, "unpointed-polygon"},
    {SystemKind::PointedStar, "pointed-star"},
}};

void require_same_dimension(const AdjacencyMatrix& a, const AdjacencyMatrix& b) {
  if (a.dimension() != b.dimension())
    throw DimensionError("adjacency matrices have dimensions " + std::to_string(a.dimension()) + " and " +
                         std::to_string(b.dimension()));
}

using Relation = std::function<bool(const PointedPolygon&, const PointedPolygon&)>;

AdjacencyMatrix evaluate(const std::shared_ptr<const PolygonIndex>& index, const std::string& kind,
                         const Relation& rel) {
  AdjacencyMatrix m(index, kind);
  const auto& p = index->polygons;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (rel(p[i], p[j])) m.set(i, j, true);
  return m;
}

// Class matrix: two edge classes are adjacent iff some representatives are.
AdjacencyMatrix lift(const AdjacencyMatrix& pointed, const std::shared_ptr<const PolygonIndex>& classes,
                     const std::string& kind) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> slot;
  for (std::size_t i = 0; i < classes->polygons.size(); ++i)
    slot[{classes->polygons[i].white, classes->polygons[i].black}] = i;

  const auto& p = pointed.index()->polygons;
  std::vector<std::size_t> cls(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) cls[i] = slot.at({p[i].white, p[i].black});

  AdjacencyMatrix m(classes, kind);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j : pointed.row_support(i)) m.set(cls[i], cls[j], true);
  return m;
}

AdjacencyPair pointed_pair(const BipartiteGraph& g, SystemKind kind, std::size_t t) {
  auto index = std::make_shared<PolygonIndex>(PolygonIndex{enumerate_pointed(g, t), false});
  switch (kind) {
    case SystemKind::PointedTile:
      return {evaluate(index, "M1", tile_horizontal), evaluate(index, "M2", tile_vertical)};
    case SystemKind::PointedReflect: {
      const std::size_t half = t / 2;
      return {evaluate(index, "MV", [](const auto& a, const auto& b) { return reflect_relabel_x(a, b, 0); }),
              evaluate(index, "MU", [half](const auto& a, const auto& b) { return reflect_relabel_y(a, b, half); })};
    }
    case SystemKind::PointedStar:
      return {evaluate(index, "MV*", [](const auto& a, const auto& b) { return reflect_relabel_x(a, b, 0); }),
              evaluate(index, "MU*", [](const auto& a, const auto& b) { return reflect_relabel_y(a, b, 0); })};
    default:
      break;
  }
  throw PreconditionError("not a pointed kind");
}

}  // namespace

std::string_view kind_name(SystemKind k) {
  for (const auto& [kind, name] : kKindNames)
    if (kind == k) return name;
  return "unknown";
}

SystemKind parse_kind(std::string_view name) {
  for (const auto& [kind, n] : kKindNames)
    if (n == name) return kind;
  throw PreconditionError("unknown system kind '" + std::string(name) + "'");
}

bool is_pointed(SystemKind k) {
  return k == SystemKind::PointedTile || k == SystemKind::PointedReflect || k == SystemKind::PointedStar;
}

void validate(const SystemSpec& spec) {
  const std::string name(kind_name(spec.kind));
  if (spec.t == 0) throw PreconditionError(name + ": t must be >= 1");
  if ((spec.kind == SystemKind::PointedTile || spec.kind == SystemKind::UnpointedTile) && spec.t != 2)
    throw PreconditionError(name + " requires t = 2, got t = " + std::to_string(spec.t));
  if (spec.kind == SystemKind::PointedReflect && spec.t % 2 != 0)
    throw PreconditionError(name + " requires even t, got t = " + std::to_string(spec.t));
}

std::string PolygonIndex::label(std::size_t i) const {
  return unpointed ? render(UnpointedPolygon{polygons.at(i)}) : render(polygons.at(i));
}

AdjacencyMatrix::AdjacencyMatrix(std::shared_ptr<const PolygonIndex> index, std::string kind)
    : index_(std::move(index)), kind_(std::move(kind)) {
  n_ = index_ ? index_->polygons.size() : 0;
  entries_.assign(n_ * n_, 0);
}

AdjacencyMatrix AdjacencyMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  AdjacencyMatrix m;
  m.n_ = rows.size();
  m.entries_.assign(m.n_ * m.n_, 0);
  for (std::size_t i = 0; i < m.n_; ++i) {
    if (rows[i].size() != m.n_) throw DimensionError("adjacency matrix rows must be square");
    for (std::size_t j = 0; j < m.n_; ++j) {
      if (rows[i][j] != 0 && rows[i][j] != 1) throw PreconditionError("adjacency entries must be 0 or 1");
      m.set(i, j, rows[i][j] == 1);
    }
  }
  return m;
}

std::vector<std::size_t> AdjacencyMatrix::row_support(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n_; ++j)
    if (at(i, j)) out.push_back(j);
  return out;
}

std::vector<std::size_t> AdjacencyMatrix::row_sums() const {
  std::vector<std::size_t> s(n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) s[i] += entries_[i * n_ + j];
  return s;
}

AdjacencyMatrix AdjacencyMatrix::transpose() const {
  AdjacencyMatrix t = *this;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t.set(j, i, at(i, j));
  return t;
}

std::string AdjacencyMatrix::label(std::size_t i) const {
  return index_ ? index_->label(i) : std::to_string(i);
}

std::size_t pair_dimension(const BipartiteGraph& g, const SystemSpec& spec) {
  validate(spec);
  return is_pointed(spec.kind) ? 2 * spec.t * g.edge_count() : g.edge_count();
}

AdjacencyPair build_pair(const BipartiteGraph& g, const SystemSpec& spec) {
  validate(spec);
  if (is_pointed(spec.kind)) return pointed_pair(g, spec.kind, spec.t);

  // Unpointed tiles lift the tile pair; unpointed 2t-gons lift the reflected
  // pair when t is even and the star pair when t is odd.
  SystemKind base = SystemKind::PointedTile;
  if (spec.kind == SystemKind::UnpointedPolygon) base = spec.t % 2 == 0 ? SystemKind::PointedReflect : SystemKind::PointedStar;
  const AdjacencyPair pointed = pointed_pair(g, base, spec.t);

  std::vector<PointedPolygon> reps;
  for (const UnpointedPolygon& u : enumerate_unpointed(g, spec.t)) reps.push_back(u.representative);
  auto classes = std::make_shared<PolygonIndex>(PolygonIndex{std::move(reps), true});
  return {lift(pointed.horizontal, classes, pointed.horizontal.kind() + "'"),
          lift(pointed.vertical, classes, pointed.vertical.kind() + "'")};
}

bool tile_horizontal(const PointedPolygon& a, const PointedPolygon& b) {
  return a.y(1) == b.y(2).bar() && a.x(1) != b.x(1).bar();
}

bool tile_vertical(const PointedPolygon& a, const PointedPolygon& b) {
  return a.x(2) == b.x(1).bar() && a.y(1) != b.y(1).bar();
}

namespace {

// 1-based index k + shift reduced into [1, t].
std::size_t cyc(long k, std::size_t t) {
  const long n = static_cast<long>(t);
  return static_cast<std::size_t>(((k - 1) % n + n) % n + 1);
}

const Label& reflected_x(const PointedPolygon& a, std::size_t k, std::size_t c) {
  return a.x(cyc(static_cast<long>(c) + 2 - static_cast<long>(k), a.t()));
}
const Label& reflected_y(const PointedPolygon& a, std::size_t k, std::size_t c) {
  return a.y(cyc(static_cast<long>(c) + 1 - static_cast<long>(k), a.t()));
}

}  // namespace

bool reflect_relabel_x(const PointedPolygon& a, const PointedPolygon& b, std::size_t c) {
  const std::size_t t = a.t();
  if (b.t() != t) return false;
  for (std::size_t k = 1; k <= t; ++k) {
    if (b.y(k) != reflected_y(a, k, c).bar()) return false;
    if (b.x(k) == reflected_x(a, k, c).bar()) return false;
  }
  return true;
}

bool reflect_relabel_y(const PointedPolygon& a, const PointedPolygon& b, std::size_t c) {
  const std::size_t t = a.t();
  if (b.t() != t) return false;
  for (std::size_t k = 1; k <= t; ++k) {
    if (b.x(k) != reflected_x(a, k, c).bar()) return false;
    if (b.y(k) == reflected_y(a, k, c).bar()) return false;
  }
  return true;
}

bool check_symmetric(const AdjacencyMatrix& m) {
  for (std::size_t i = 0; i < m.dimension(); ++i)
    for (std::size_t j = i + 1; j < m.dimension(); ++j)
      if (m.at(i, j) != m.at(j, i)) return false;
  return true;
}

namespace {

// Row i of the integer product a * b.
std::vector<std::size_t> product_row(const AdjacencyMatrix& a, const std::vector<std::vector<std::size_t>>& b_rows,
                                     std::size_t i) {
  std::vector<std::size_t> row(a.dimension(), 0);
  for (std::size_t j : a.row_support(i))
    for (std::size_t k : b_rows[j]) ++row[k];
  return row;
}

std::vector<std::vector<std::size_t>> supports(const AdjacencyMatrix& m) {
  std::vector<std::vector<std::size_t>> s(m.dimension());
  for (std::size_t i = 0; i < m.dimension(); ++i) s[i] = m.row_support(i);
  return s;
}

}  // namespace

bool check_commute(const AdjacencyMatrix& m1, const AdjacencyMatrix& m2) {
  require_same_dimension(m1, m2);
  const auto s1 = supports(m1);
  const auto s2 = supports(m2);
  for (std::size_t i = 0; i < m1.dimension(); ++i)
    if (product_row(m1, s2, i) != product_row(m2, s1, i)) return false;
  return true;
}

bool check_uce(const AdjacencyMatrix& m1, const AdjacencyMatrix& m2) {
  require_same_dimension(m1, m2);
  const auto s1 = supports(m1);
  const auto s2 = supports(m2);
  for (std::size_t a = 0; a < m1.dimension(); ++a)
    for (std::size_t b : s1[a])
      for (std::size_t c : s2[a]) {
        std::size_t completions = 0;
        for (std::size_t d : s2[b])
          if (m1.at(c, d)) ++completions;
        if (completions != 1) return false;
      }
  return true;
}

bool check_no_sources(const AdjacencyMatrix& m1, const AdjacencyMatrix& m2) {
  require_same_dimension(m1, m2);
  for (const AdjacencyMatrix* m : {&m1, &m2}) {
    const std::size_t n = m->dimension();
    std::vector<bool> row(n, false);
    std::vector<bool> col(n, false);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (m->at(i, j)) row[i] = col[j] = true;
    if (std::find(row.begin(), row.end(), false) != row.end()) return false;
    if (std::find(col.begin(), col.end(), false) != col.end()) return false;
  }
  return true;
}

bool check_unambiguous_factorization(const AdjacencyMatrix& m1, const AdjacencyMatrix& m2) {
  require_same_dimension(m1, m2);
  const auto s2 = supports(m2);
  for (std::size_t i = 0; i < m1.dimension(); ++i) {
    const auto row = product_row(m1, s2, i);
    if (std::any_of(row.begin(), row.end(), [](std::size_t v) { return v > 1; })) return false;
  }
  return true;
}

std::string to_csv(const AdjacencyMatrix& m) {
  std::string s;
  s.reserve(m.dimension() * m.dimension() * 2);
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    for (std::size_t j = 0; j < m.dimension(); ++j) {
      if (j) s += ',';
      s += m.at(i, j) ? '1' : '0';
    }
    s += '\n';
  }
  return s;
}

}  // namespace tilek
