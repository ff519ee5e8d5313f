#include "rhomboid/graph.hpp"

#include <algorithm>
#include <sstream>

#include "rhomboid/error.hpp"

namespace rhomboid {

labeled_digraph::labeled_digraph(std::vector<terminal> vertices,
                                 std::vector<edge> edges, terminal source,
                                 terminal sink)
    : vertices_(std::move(vertices)), edges_(std::move(edges)),
      source_(source), sink_(sink) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw error(errc::integrity, "duplicate vertex");
  std::sort(edges_.begin(), edges_.end(),
            [](const edge& x, const edge& y) { return x.label < y.label; });
  auto same_label = [](const edge& x, const edge& y) {
    return x.label == y.label;
  };
  if (auto it = std::adjacent_find(edges_.begin(), edges_.end(), same_label);
      it != edges_.end())
    throw error(errc::integrity, "duplicate edge label " + it->label.to_string());

  in_.resize(vertices_.size());
  out_.resize(vertices_.size());
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const edge& e = edges_[k];
    auto tail = index_of(e.tail);
    auto head = index_of(e.head);
    if (!tail || !head)
      throw error(errc::integrity,
                  "edge " + e.label.to_string() + " has a missing endpoint");
    if (!(e.tail < e.head))
      throw error(errc::integrity,
                  "edge " + e.label.to_string() + " does not advance");
    out_[*tail].push_back(k);
    in_[*head].push_back(k);
  }

  if (!contains(source_) || !contains(sink_))
    throw error(errc::integrity, "source or sink is not a vertex");
  // In a DAG, a unique in-degree-0 vertex reaches everything and a unique
  // out-degree-0 vertex is reached by everything.
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (in_[v].empty() != (vertices_[v] == source_))
      throw error(errc::integrity, "vertex " + vertices_[v].to_string() +
                                       " breaks the single-source property");
    if (out_[v].empty() != (vertices_[v] == sink_))
      throw error(errc::integrity, "vertex " + vertices_[v].to_string() +
                                       " breaks the single-sink property");
  }
}

std::optional<std::size_t> labeled_digraph::index_of(terminal t) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), t);
  if (it == vertices_.end() || *it != t)
    return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::string_view to_string(subgraph_family family) noexcept {
  switch (family) {
  case subgraph_family::sr:
    return "SR";
  case subgraph_family::sl_basic_upper:
    return "SL_BasicUpper";
  case subgraph_family::sl_upper_basic:
    return "SL_UpperBasic";
  case subgraph_family::sl_basic_lower:
    return "SL_BasicLower";
  case subgraph_family::sl_lower_basic:
    return "SL_LowerBasic";
  case subgraph_family::trap_upper_upper:
    return "Trap_UpperUpper";
  case subgraph_family::trap_lower_lower:
    return "Trap_LowerLower";
  case subgraph_family::para_lower_upper:
    return "Para_LowerUpper";
  case subgraph_family::para_upper_lower:
    return "Para_UpperLower";
  }
  return "?";
}

bool is_single_leaf(subgraph_family f) noexcept {
  return f == subgraph_family::sl_basic_upper ||
         f == subgraph_family::sl_upper_basic ||
         f == subgraph_family::sl_basic_lower ||
         f == subgraph_family::sl_lower_basic;
}

bool is_trapezoidal(subgraph_family f) noexcept {
  return f == subgraph_family::trap_upper_upper ||
         f == subgraph_family::trap_lower_lower;
}

bool is_dipterous(subgraph_family f) noexcept {
  return is_trapezoidal(f) || f == subgraph_family::para_lower_upper ||
         f == subgraph_family::para_upper_lower;
}

labeled_digraph build_sr(std::uint32_t n) {
  if (n == 0)
    throw error(errc::invalid_size, "square rhomboid size must be >= 1");
  std::vector<terminal> vertices;
  std::vector<edge> edges;
  vertices.reserve(3 * std::size_t{n} - 2);
  edges.reserve(n >= 2 ? 7 * std::size_t{n} - 9 : 0);
  for (std::uint32_t p = 1; p <= n; ++p)
    vertices.push_back(basic(p));
  for (std::uint32_t p = 1; p < n; ++p) {
    vertices.push_back(upper(p));
    vertices.push_back(lower(p));
    edges.push_back({basic(p), basic(p + 1), label_b(p)});
    edges.push_back({basic(p), upper(p), label_e(2 * p - 1)});
    edges.push_back({upper(p), basic(p + 1), label_e(2 * p)});
    edges.push_back({basic(p), lower(p), label_d(2 * p - 1)});
    edges.push_back({lower(p), basic(p + 1), label_d(2 * p)});
    if (p + 1 < n) {
      edges.push_back({upper(p), upper(p + 1), label_c(p)});
      edges.push_back({lower(p), lower(p + 1), label_a(p)});
    }
  }
  return {std::move(vertices), std::move(edges), basic(1), basic(n)};
}

labeled_digraph induced_subgraph(const labeled_digraph& g, terminal src,
                                 terminal dst) {
  auto s = g.index_of(src);
  auto t = g.index_of(dst);
  if (!s || !t)
    throw error(errc::range, "terminal " + (s ? dst : src).to_string() +
                                 " is not a vertex of the graph");
  const auto& vs = g.vertices();
  const auto& es = g.edges();
  std::vector<char> forward(vs.size(), 0), backward(vs.size(), 0);

  // Vertices are topologically sorted, so one sweep each way suffices.
  forward[*s] = 1;
  for (std::size_t v = *s; v < vs.size(); ++v) {
    if (!forward[v])
      continue;
    for (std::size_t k : g.out_edges(v))
      forward[*g.index_of(es[k].head)] = 1;
  }
  backward[*t] = 1;
  for (std::size_t v = *t + 1; v-- > 0;) {
    if (!backward[v])
      continue;
    for (std::size_t k : g.in_edges(v))
      backward[*g.index_of(es[k].tail)] = 1;
  }
  if (!forward[*t])
    throw error(errc::empty_subgraph,
                "no path from " + src.to_string() + " to " + dst.to_string());

  std::vector<terminal> vertices;
  for (std::size_t v = 0; v < vs.size(); ++v)
    if (forward[v] && backward[v])
      vertices.push_back(vs[v]);
  std::vector<edge> edges;
  for (const edge& e : es)
    if (forward[*g.index_of(e.tail)] && backward[*g.index_of(e.head)])
      edges.push_back(e);
  return {std::move(vertices), std::move(edges), src, dst};
}

subgraph_kind classify(terminal src, terminal dst) {
  bool ordered = src.position() < dst.position() ||
                 (src == dst && src.is_basic());
  if (!ordered)
    throw error(errc::ordering, "terminal " + dst.to_string() +
                                    " does not follow " + src.to_string());
  using K = terminal_kind;
  using F = subgraph_family;
  F family{};
  switch (src.kind) {
  case K::basic:
    family = dst.kind == K::basic   ? F::sr
             : dst.kind == K::upper ? F::sl_basic_upper
                                    : F::sl_basic_lower;
    break;
  case K::upper:
    family = dst.kind == K::basic   ? F::sl_upper_basic
             : dst.kind == K::upper ? F::trap_upper_upper
                                    : F::para_upper_lower;
    break;
  case K::lower:
    family = dst.kind == K::basic   ? F::sl_lower_basic
             : dst.kind == K::lower ? F::trap_lower_lower
                                    : F::para_lower_upper;
    break;
  }
  std::uint32_t size =
      src.is_basic() ? dst.index - src.index + 1 : dst.index - src.index;
  return {family, size};
}

big_count path_count(const labeled_digraph& g) {
  const auto& vs = g.vertices();
  const auto& es = g.edges();
  std::vector<big_count> paths(vs.size());
  std::size_t s = *g.index_of(g.source());
  paths[s] = 1;
  for (std::size_t v = s + 1; v < vs.size(); ++v)
    for (std::size_t k : g.in_edges(v))
      paths[v] += paths[*g.index_of(es[k].tail)];
  return paths[*g.index_of(g.sink())];
}

std::vector<monomial> enumerate_paths(const labeled_digraph& g,
                                      std::uint64_t limit) {
  big_count count = path_count(g);
  if (count > limit)
    throw error(errc::capacity, "graph has " + count.str() +
                                    " paths, limit is " + std::to_string(limit));

  const auto& es = g.edges();
  std::vector<monomial> out;
  out.reserve(static_cast<std::size_t>(count));

  // Iterative DFS; frame = (vertex, next out-edge slot).
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  std::vector<edge_label> trail;
  std::size_t sink = *g.index_of(g.sink());
  stack.emplace_back(*g.index_of(g.source()), 0);
  while (!stack.empty()) {
    auto& [v, slot] = stack.back();
    if (v == sink) {
      out.emplace_back(trail);
      stack.pop_back();
      if (!trail.empty())
        trail.pop_back();
      continue;
    }
    auto outs = g.out_edges(v);
    if (slot == outs.size()) {
      stack.pop_back();
      if (!trail.empty())
        trail.pop_back();
      continue;
    }
    const edge& e = es[outs[slot++]];
    trail.push_back(e.label);
    stack.emplace_back(*g.index_of(e.head), 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

path_length_range path_length_bounds(const labeled_digraph& g) {
  const auto& vs = g.vertices();
  const auto& es = g.edges();
  std::vector<path_length_range> dist(vs.size());
  std::size_t s = *g.index_of(g.source());
  for (std::size_t v = s + 1; v < vs.size(); ++v) {
    bool first = true;
    for (std::size_t k : g.in_edges(v)) {
      const auto& from = dist[*g.index_of(es[k].tail)];
      if (first) {
        dist[v] = {from.min + 1, from.max + 1};
        first = false;
      } else {
        dist[v].min = std::min(dist[v].min, from.min + 1);
        dist[v].max = std::max(dist[v].max, from.max + 1);
      }
    }
  }
  return dist[*g.index_of(g.sink())];
}

std::vector<edge_label> labels_of(const labeled_digraph& g) {
  std::vector<edge_label> out;
  out.reserve(g.edges().size());
  for (const edge& e : g.edges())
    out.push_back(e.label);
  return out; // edges are label-sorted
}

std::string to_dot(const labeled_digraph& g) {
  std::ostringstream os;
  os << "digraph sr {\n  rankdir=LR;\n";
  for (const terminal& v : g.vertices())
    os << "  " << v.to_string() << ";\n";
  for (const edge& e : g.edges())
    os << "  " << e.tail.to_string() << " -> " << e.head.to_string()
       << " [label=\"" << e.label.to_string() << "\"];\n";
  os << "}\n";
  return os.str();
}

} // namespace rhomboid
