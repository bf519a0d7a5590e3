#include "tilek/skeleton.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "tilek/error.hpp"

namespace tilek {

namespace {

using Adj = std::vector<std::vector<std::size_t>>;

Adj supports(const AdjacencyMatrix& m) {
  Adj s(m.dimension());
  for (std::size_t i = 0; i < m.dimension(); ++i) s[i] = m.row_support(i);
  return s;
}

Adj from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Adj a(n);
  for (auto [s, r] : edges) {
    if (s >= n || r >= n) throw PreconditionError("skeleton edge endpoint out of range");
    a[s].push_back(r);
  }
  for (auto& row : a) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return a;
}

// Tarjan's algorithm, iterative. Returns the component id of each vertex.
std::vector<std::size_t> scc_ids(const Adj& g, std::size_t& count) {
  const std::size_t n = g.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> call;  // (vertex, next edge)
  std::size_t next = 0;
  count = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    call.push_back({root, 0});
    index[root] = low[root] = next++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, e] = call.back();
      if (e < g[v].size()) {
        const std::size_t w = g[v][e++];
        if (index[w] == kUnset) {
          index[w] = low[w] = next++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = count;
        } while (w != v);
        ++count;
      }
      const std::size_t done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  return comp;
}

Adj union_graph(const Skeleton& sk) {
  Adj u(sk.size());
  for (std::size_t v = 0; v < sk.size(); ++v) {
    u[v] = sk.blue(v);
    u[v].insert(u[v].end(), sk.magenta(v).begin(), sk.magenta(v).end());
  }
  return u;
}

bool colour_has_cycle_with_entrance(const Adj& g) {
  std::size_t count = 0;
  const auto comp = scc_ids(g, count);
  std::vector<std::size_t> comp_size(count, 0), in_degree(g.size(), 0);
  std::vector<bool> self_loop(g.size(), false);
  for (std::size_t v = 0; v < g.size(); ++v) {
    ++comp_size[comp[v]];
    for (std::size_t w : g[v]) {
      ++in_degree[w];
      if (w == v) self_loop[v] = true;
    }
  }
  for (std::size_t v = 0; v < g.size(); ++v) {
    const bool on_cycle = comp_size[comp[v]] > 1 || self_loop[v];
    if (on_cycle && in_degree[v] >= 2) return true;
  }
  return false;
}

}  // namespace

Skeleton::Skeleton(const AdjacencyMatrix& blue, const AdjacencyMatrix& magenta)
    : blue_(supports(blue)), magenta_(supports(magenta)) {
  if (blue.dimension() != magenta.dimension()) throw DimensionError("skeleton colours differ in dimension");
  labels_.reserve(blue.dimension());
  for (std::size_t v = 0; v < blue.dimension(); ++v) labels_.push_back(blue.label(v));
}

Skeleton::Skeleton(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& blue,
                   const std::vector<std::pair<std::size_t, std::size_t>>& magenta)
    : blue_(from_pairs(n, blue)), magenta_(from_pairs(n, magenta)) {
  for (std::size_t v = 0; v < n; ++v) labels_.push_back(std::to_string(v));
}

bool Skeleton::has_blue(std::size_t a, std::size_t b) const {
  return std::binary_search(blue_[a].begin(), blue_[a].end(), b);
}

bool Skeleton::has_magenta(std::size_t a, std::size_t b) const {
  return std::binary_search(magenta_[a].begin(), magenta_[a].end(), b);
}

std::string Skeleton::label(std::size_t v) const { return labels_.at(v); }

std::vector<std::vector<std::size_t>> component_sets(const Skeleton& sk) {
  std::vector<std::size_t> parent(sk.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  const Adj u = union_graph(sk);
  for (std::size_t v = 0; v < u.size(); ++v)
    for (std::size_t w : u[v]) {
      const std::size_t a = find(v), b = find(w);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(sk.size(), sk.size());
  for (std::size_t v = 0; v < sk.size(); ++v) {
    const std::size_t r = find(v);
    if (slot[r] == sk.size()) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

std::size_t components(const Skeleton& sk) { return component_sets(sk).size(); }

bool is_strongly_connected(const Skeleton& sk) {
  if (sk.size() == 0) return true;
  std::size_t count = 0;
  scc_ids(union_graph(sk), count);
  return count == 1;
}

bool has_cycle_with_entrance(const Skeleton& sk) {
  Adj blue(sk.size()), magenta(sk.size());
  for (std::size_t v = 0; v < sk.size(); ++v) {
    blue[v] = sk.blue(v);
    magenta[v] = sk.magenta(v);
  }
  return colour_has_cycle_with_entrance(blue) || colour_has_cycle_with_entrance(magenta);
}

int aperiodic_slot(std::size_t m) {
  if (m % 2 == 0) return 0;
  for (std::size_t r = 1; r * r + r + 1 <= m; ++r)
    if (r * r + r + 1 == m) return 1;
  return 2;
}

std::size_t complete_square(const Skeleton& sk, std::size_t b, std::size_t c) {
  std::size_t found = sk.size();
  std::size_t hits = 0;
  for (std::size_t d : sk.magenta(b))
    if (sk.has_blue(c, d)) {
      found = d;
      ++hits;
    }
  if (hits != 1)
    throw Error("square at (" + sk.label(b) + ", " + sk.label(c) + ") has " + std::to_string(hits) +
                " completions; the pair is not a 2-rank graph skeleton");
  return found;
}

namespace {

std::pair<std::size_t, std::size_t> two_partners(const Skeleton& sk, std::size_t v, bool blue) {
  const auto& out = blue ? sk.blue(v) : sk.magenta(v);
  const char* colour = blue ? "blue" : "magenta";
  if (out.size() < 2)
    throw PreconditionError("vertex " + sk.label(v) + " has " + std::to_string(out.size()) + " " + colour +
                            " partners; the aperiodic path needs two");
  for (std::size_t w : {out[0], out[1]}) {
    const bool back = blue ? sk.has_blue(w, v) : sk.has_magenta(w, v);
    if (!back)
      throw PreconditionError(std::string(colour) + " edge " + sk.label(v) + " -> " + sk.label(w) +
                              " has no return edge");
  }
  return {out[0], out[1]};
}

}  // namespace

PathPrefix aperiodic_prefix(const Skeleton& sk, std::size_t start, std::size_t length, FillOrder order) {
  if (start >= sk.size()) throw PreconditionError("start vertex out of range");
  if (length == 0) throw PreconditionError("prefix length must be >= 1");
  const auto [b1, b2] = two_partners(sk, start, true);
  const auto [c1, c2] = two_partners(sk, start, false);
  const std::size_t xs[3] = {start, b1, b2};
  const std::size_t ys[3] = {start, c1, c2};

  PathPrefix p;
  p.start = start;
  p.length = length;
  p.grid.assign(length * length, 0);
  for (std::size_t m = 0; m < length; ++m) {
    p.horizontal_word.push_back(xs[aperiodic_slot(m)]);
    p.vertical_word.push_back(ys[aperiodic_slot(m)]);
    p.grid[m * length] = p.horizontal_word.back();
    p.grid[m] = p.vertical_word.back();
  }
  auto fill = [&](std::size_t m, std::size_t n) {
    p.grid[m * length + n] = complete_square(sk, p.at(m, n - 1), p.at(m - 1, n));
  };
  if (order == FillOrder::RowFirst) {
    for (std::size_t m = 1; m < length; ++m)
      for (std::size_t n = 1; n < length; ++n) fill(m, n);
  } else {
    for (std::size_t n = 1; n < length; ++n)
      for (std::size_t m = 1; m < length; ++m) fill(m, n);
  }
  for (std::size_t v = 0; v < sk.size(); ++v) p.labels.push_back(sk.label(v));
  return p;
}

bool check_no_period(const PathPrefix& p, std::size_t max_shift) {
  if (max_shift >= p.length) throw PreconditionError("max_shift must be smaller than the prefix length");
  const long s = static_cast<long>(max_shift);
  const long len = static_cast<long>(p.length);
  for (long q1 = -s; q1 <= s; ++q1)
    for (long q2 = -s; q2 <= s; ++q2) {
      if (q1 == 0 && q2 == 0) continue;
      bool period = true;
      for (long m = s; m < len && period; ++m)
        for (long n = s; n < len; ++n) {
          const long m2 = m + q1, n2 = n + q2;
          if (m2 < 0 || n2 < 0 || m2 >= len || n2 >= len) continue;
          if (p.at(static_cast<std::size_t>(m), static_cast<std::size_t>(n)) !=
              p.at(static_cast<std::size_t>(m2), static_cast<std::size_t>(n2))) {
            period = false;
            break;
          }
        }
      if (period) return false;
    }
  return true;
}

}  // namespace tilek
