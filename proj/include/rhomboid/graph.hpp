#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rhomboid/label.hpp"
#include "rhomboid/monomial.hpp"

namespace rhomboid {

using big_count = boost::multiprecision::cpp_int;

struct edge {
  terminal tail;
  terminal head;
  edge_label label;

  friend bool operator==(const edge&, const edge&) = default;
};

/*
 * An immutable labeled st-dag.
 *
 * Vertices are kept sorted by terminal order (a topological order) and edges
 * by label. Construction validates the st-dag property: every edge advances in
 * terminal order, labels are distinct, the source is the only vertex without
 * in-edges, the sink the only one without out-edges, and every vertex lies on
 * a source-to-sink path.
 */
class labeled_digraph {
public:
  labeled_digraph(std::vector<terminal> vertices, std::vector<edge> edges,
                  terminal source, terminal sink);

  const std::vector<terminal>& vertices() const noexcept { return vertices_; }
  const std::vector<edge>& edges() const noexcept { return edges_; }
  terminal source() const noexcept { return source_; }
  terminal sink() const noexcept { return sink_; }

  std::optional<std::size_t> index_of(terminal t) const;
  bool contains(terminal t) const { return index_of(t).has_value(); }

  /// Edge positions (into edges()) entering / leaving vertices()[v].
  std::span<const std::size_t> in_edges(std::size_t v) const {
    return in_[v];
  }
  std::span<const std::size_t> out_edges(std::size_t v) const {
    return out_[v];
  }

  friend bool operator==(const labeled_digraph& x, const labeled_digraph& y) {
    return x.source_ == y.source_ && x.sink_ == y.sink_ &&
           x.vertices_ == y.vertices_ && x.edges_ == y.edges_;
  }

private:
  std::vector<terminal> vertices_;
  std::vector<edge> edges_;
  terminal source_;
  terminal sink_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<std::vector<std::size_t>> out_;
};

/// The nine source/sink shapes of SR-family subgraphs.
enum class subgraph_family : std::uint8_t {
  sr,               // basic -> basic
  sl_basic_upper,   // single-leaf, basic -> upper
  sl_upper_basic,   // single-leaf, upper -> basic
  sl_basic_lower,   // single-leaf, basic -> lower
  sl_lower_basic,   // single-leaf, lower -> basic
  trap_upper_upper, // dipterous, trapezoidal
  trap_lower_lower, // dipterous, trapezoidal
  para_lower_upper, // dipterous, parallelogram
  para_upper_lower, // dipterous, parallelogram
};

std::string_view to_string(subgraph_family family) noexcept;

bool is_single_leaf(subgraph_family family) noexcept;
bool is_dipterous(subgraph_family family) noexcept;
bool is_trapezoidal(subgraph_family family) noexcept;

struct subgraph_kind {
  subgraph_family family = subgraph_family::sr;
  std::uint32_t size = 1; ///< number of basic vertices

  friend bool operator==(const subgraph_kind&, const subgraph_kind&) = default;
};

/// Square rhomboid with n basic, n-1 upper and n-1 lower vertices.
/// Throws errc::invalid_size for n == 0.
labeled_digraph build_sr(std::uint32_t n);

/// Vertices and edges lying on at least one directed src -> dst path.
/// Throws errc::range if either terminal is missing, errc::empty_subgraph if
/// dst is unreachable.
labeled_digraph induced_subgraph(const labeled_digraph& g, terminal src,
                                 terminal dst);

/// Family and size from the terminal pair. src must precede dst in terminal
/// order (or equal it, for a basic vertex); otherwise errc::ordering.
subgraph_kind classify(terminal src, terminal dst);

/// Number of source -> sink paths, by dynamic programming.
big_count path_count(const labeled_digraph& g);

/// One monomial per source -> sink path, sorted. Throws errc::capacity when
/// path_count(g) > limit.
std::vector<monomial> enumerate_paths(const labeled_digraph& g,
                                      std::uint64_t limit);

struct path_length_range {
  std::uint64_t min = 0;
  std::uint64_t max = 0;
};

/// Shortest and longest source -> sink path, in edges.
path_length_range path_length_bounds(const labeled_digraph& g);

/// Every distinct label of g, sorted.
std::vector<edge_label> labels_of(const labeled_digraph& g);

/// Graphviz text, vertices in terminal order and edges in label order.
std::string to_dot(const labeled_digraph& g);

} // namespace rhomboid
