#pragma once

#include <optional>

#include "tropid/matrix.hpp"
#include "tropid/word.hpp"

namespace tropid {

struct ColoredEdge {
  int from;
  int to;
  TropValue weight;  // always finite; bottom entries contribute no edge
};

// Union of the factor matrices' weighted digraphs over vertices 0..n-1, one
// layer (color) per factor in product order.
class ColoredDigraph {
 public:
  static ColoredDigraph from_product(const std::vector<TropMatrix>& factors);

  int vertex_count() const { return n_; }
  int layer_count() const { return static_cast<int>(layers_.size()); }
  const std::vector<ColoredEdge>& layer(int k) const { return layers_.at(k); }

 private:
  int n_ = 0;
  std::vector<std::vector<ColoredEdge>> layers_;
};

struct PathEdge {
  int from;
  int to;
  TropValue weight;
  int color;  // layer index the edge came from
};

// Properly colored path: one edge of each color in layer order (a subpath
// keeps the colors of its surviving edges).
struct ProperPath {
  int source = 0;
  int target = 0;
  std::vector<PathEdge> edges;

  long length() const { return static_cast<long>(edges.size()); }
  // Tropical product of the edge weights; the empty path weighs 0.
  TropValue weight() const;
};

// Highest weight over all properly colored i -> j paths, bottom when none.
// Computed by layer-by-layer value propagation, sharing no code with
// mat_mul; equals entry (i, j) of the product of the factors.
TropValue max_weight_entry(const ColoredDigraph& g, int i, int j);

// Whole product matrix recovered entrywise through max_weight_entry.
TropMatrix oracle_product(const ColoredDigraph& g);

// All properly colored i -> j paths, or nullopt when the count exceeds cap.
std::optional<std::vector<ProperPath>> enumerate_proper_paths(
    const ColoredDigraph& g, int i, int j, long cap);

// The unique loop-free subsequence of a path over an acyclic-with-loops
// digraph (triangular factors); rejects paths with backward edges.
ProperPath simple_subpath(const ProperPath& p);

// Word spelled by the colors of p's edges under the concatenation's labels.
Word word_of_path(const ProperPath& p, const std::vector<Variable>& labels);

void write_dot(const ColoredDigraph& g, std::ostream& os);

}  // namespace tropid
