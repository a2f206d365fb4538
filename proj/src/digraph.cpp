#include "tropid/digraph.hpp"

#include <ostream>
#include <stdexcept>

namespace tropid {

ColoredDigraph ColoredDigraph::from_product(const std::vector<TropMatrix>& factors) {
  if (factors.empty())
    throw std::invalid_argument("from_product: empty factor list");
  ColoredDigraph g;
  g.n_ = factors.front().dim();
  for (const TropMatrix& f : factors) {
    if (f.dim() != g.n_)
      throw std::invalid_argument("from_product: dimension mismatch");
    std::vector<ColoredEdge> layer;
    for (int i = 0; i < g.n_; ++i)
      for (int j = 0; j < g.n_; ++j)
        if (!f.at(i, j).is_bottom()) layer.push_back({i, j, f.at(i, j)});
    g.layers_.push_back(std::move(layer));
  }
  return g;
}

TropValue ProperPath::weight() const {
  TropValue w = trop_one();
  for (const PathEdge& e : edges) w = tmul(w, e.weight);
  return w;
}

TropValue max_weight_entry(const ColoredDigraph& g, int i, int j) {
  const int n = g.vertex_count();
  if (i < 0 || i >= n || j < 0 || j >= n)
    throw std::out_of_range("max_weight_entry: vertex out of range");
  // Running best weight per vertex, advanced one color at a time.
  std::vector<TropValue> best(n, trop_zero());
  best[i] = trop_one();
  for (int k = 0; k < g.layer_count(); ++k) {
    std::vector<TropValue> next(n, trop_zero());
    for (const ColoredEdge& e : g.layer(k))
      next[e.to] = tadd(next[e.to], tmul(best[e.from], e.weight));
    best = std::move(next);
  }
  return best[j];
}

TropMatrix oracle_product(const ColoredDigraph& g) {
  TropMatrix m(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int j = 0; j < g.vertex_count(); ++j) m.at(i, j) = max_weight_entry(g, i, j);
  return m;
}

std::optional<std::vector<ProperPath>> enumerate_proper_paths(
    const ColoredDigraph& g, int i, int j, long cap) {
  if (cap <= 0) throw std::invalid_argument("enumerate_proper_paths: cap must be positive");
  std::vector<ProperPath> out;
  std::vector<PathEdge> stack;
  bool overflow = false;

  auto rec = [&](auto&& self, int at, int k) -> void {
    if (overflow) return;
    if (k == g.layer_count()) {
      if (at == j) {
        if (static_cast<long>(out.size()) == cap) {
          overflow = true;
          return;
        }
        out.push_back(ProperPath{i, j, stack});
      }
      return;
    }
    for (const ColoredEdge& e : g.layer(k)) {
      if (e.from != at) continue;
      stack.push_back({e.from, e.to, e.weight, k});
      self(self, e.to, k + 1);
      stack.pop_back();
      if (overflow) return;
    }
  };
  rec(rec, i, 0);
  if (overflow) return std::nullopt;
  return out;
}

ProperPath simple_subpath(const ProperPath& p) {
  ProperPath out{p.source, p.target, {}};
  int at = p.source;
  for (const PathEdge& e : p.edges) {
    if (e.from != at)
      throw std::invalid_argument("simple_subpath: edges do not chain");
    if (e.from > e.to)
      throw std::invalid_argument("simple_subpath: backward edge, graph not acyclic");
    if (e.from != e.to) out.edges.push_back(e);
    at = e.to;
  }
  if (at != p.target)
    throw std::invalid_argument("simple_subpath: path does not reach its target");
  return out;
}

Word word_of_path(const ProperPath& p, const std::vector<Variable>& labels) {
  std::vector<Variable> letters;
  for (const PathEdge& e : p.edges) {
    if (e.color < 0 || e.color >= static_cast<int>(labels.size()))
      throw std::invalid_argument("word_of_path: edge color outside the concatenation");
    letters.push_back(labels[e.color]);
  }
  return Word::from_letters(letters);
}

void write_dot(const ColoredDigraph& g, std::ostream& os) {
  static const char* kPalette[] = {"red",    "blue",  "darkgreen", "orange",
                                   "purple", "brown", "cadetblue", "magenta"};
  os << "digraph colored {\n  rankdir=LR;\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    os << "  " << (v + 1) << ";\n";
  for (int k = 0; k < g.layer_count(); ++k) {
    const char* color = kPalette[k % (sizeof(kPalette) / sizeof(kPalette[0]))];
    for (const ColoredEdge& e : g.layer(k))
      os << "  " << (e.from + 1) << " -> " << (e.to + 1) << " [label=\"c" << (k + 1)
         << ":" << e.weight.str() << "\", color=" << color << "];\n";
  }
  os << "}\n";
}

}  // namespace tropid
