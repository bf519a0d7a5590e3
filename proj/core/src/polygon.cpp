#include "tilek/polygon.hpp"

#include <algorithm>
#include <set>

#include "tilek/error.hpp"

namespace tilek {

namespace {

// Superscript arithmetic is modulo t with representatives 1..t.
std::uint32_t wrap(long s, std::size_t t) {
  const long n = static_cast<long>(t);
  return static_cast<std::uint32_t>(((s - 1) % n + n) % n + 1);
}

void require_t(std::size_t t) {
  if (t == 0) throw PreconditionError("polygon half-side count t must be >= 1");
}

std::vector<Label> rotate_pair(const std::vector<Label>& w) {
  std::vector<Label> out(w.begin() + 2, w.end());
  out.insert(out.end(), w.begin(), w.begin() + 2);
  return out;
}

// [x_1, y_1, ..., x_t, y_t] -> [~x_1, ~y_t, ~x_t, ~y_{t-1}, ..., ~x_2, ~y_1]
std::vector<Label> bar_reflect(const std::vector<Label>& w) {
  const std::size_t t = w.size() / 2;
  std::vector<Label> out(w.size());
  for (std::size_t k = 1; k <= t; ++k) {
    const std::size_t xs = (t + 1 - k) % t;  // 0-based index of x_{2-k mod t}
    const std::size_t ys = (t - k) % t;      // 0-based index of y_{1-k mod t}
    out[2 * (k - 1)] = w[2 * xs].bar();
    out[2 * (k - 1) + 1] = w[2 * ys + 1].bar();
  }
  return out;
}

}  // namespace

PointedPolygon make_polygon(Flavor flavor, std::uint32_t white, std::uint32_t black, std::uint32_t r,
                            std::size_t t) {
  require_t(t);
  const bool four_flavor = flavor == Flavor::C || flavor == Flavor::D;
  if (four_flavor && t % 2 != 0) throw PreconditionError("flavors C and D need even t");
  const long h = static_cast<long>(t / 2);
  const long rr = static_cast<long>(r);

  PointedPolygon p{flavor, white, black, r, std::vector<Label>(2 * t)};
  for (std::size_t k = 1; k <= t; ++k) {
    const long kk = static_cast<long>(k);
    long sx = 0;
    long sy = 0;
    bool barred = false;
    switch (flavor) {
      case Flavor::A:
        sx = sy = rr + kk - 1;
        break;
      case Flavor::B:
        sx = rr - kk + 1;
        sy = rr - kk;
        barred = true;
        break;
      case Flavor::C:
        sx = h + rr - kk + 1;
        sy = h + rr - kk;
        barred = true;
        break;
      case Flavor::D:
        sx = sy = h + rr + kk - 1;
        break;
    }
    p.word[2 * (k - 1)] = {Family::U, white, wrap(sx, t), barred};
    p.word[2 * (k - 1) + 1] = {Family::V, black, wrap(sy, t), barred};
  }
  return p;
}

std::vector<PointedPolygon> enumerate_pointed(const BipartiteGraph& g, std::size_t t) {
  require_t(t);
  const bool even = t % 2 == 0;
  const std::vector<Flavor> flavors =
      even ? std::vector<Flavor>{Flavor::A, Flavor::B, Flavor::C, Flavor::D} : std::vector<Flavor>{Flavor::A, Flavor::B};
  const std::uint32_t r_max = static_cast<std::uint32_t>(even ? t / 2 : t);

  std::vector<PointedPolygon> out;
  out.reserve(2 * t * g.edge_count());
  for (Flavor f : flavors)
    for (const Edge& e : g.edges())
      for (std::uint32_t r = 1; r <= r_max; ++r)
        out.push_back(make_polygon(f, static_cast<std::uint32_t>(e.white), static_cast<std::uint32_t>(e.black), r, t));
  return out;
}

std::vector<UnpointedPolygon> enumerate_unpointed(const BipartiteGraph& g, std::size_t t) {
  require_t(t);
  std::vector<UnpointedPolygon> out;
  out.reserve(g.edge_count());
  for (const Edge& e : g.edges())
    out.push_back({make_polygon(Flavor::A, static_cast<std::uint32_t>(e.white), static_cast<std::uint32_t>(e.black), 1, t)});
  return out;
}

UnpointedPolygon unpointed_class(const PointedPolygon& p) {
  return {make_polygon(Flavor::A, p.white, p.black, 1, p.t())};
}

std::vector<std::vector<Label>> symmetry_orbit(const std::vector<Label>& word) {
  std::set<std::vector<Label>> seen{word};
  std::vector<std::vector<Label>> frontier{word};
  while (!frontier.empty()) {
    auto w = std::move(frontier.back());
    frontier.pop_back();
    for (auto next : {rotate_pair(w), bar_reflect(w)}) {
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

std::string render(const Label& l) {
  std::string s = l.barred ? "~" : "";
  s += l.family == Family::U ? 'u' : 'v';
  s += std::to_string(l.vertex);
  s += '^';
  s += std::to_string(l.superscript);
  return s;
}

namespace {
std::string render_word(const std::vector<Label>& w, char open, char close) {
  std::string s(1, open);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ", ";
    s += render(w[i]);
  }
  s += close;
  return s;
}
}  // namespace

std::string render(const PointedPolygon& p) { return render_word(p.word, '[', ']'); }

std::string render(const UnpointedPolygon& p) { return render_word(p.representative.word, '(', ')'); }

}  // namespace tilek
