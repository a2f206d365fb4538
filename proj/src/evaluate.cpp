#include "tropid/evaluate.hpp"

#include <stdexcept>

#include "tropid/digraph.hpp"

namespace tropid {

namespace {

const TropMatrix& image_of(const Assignment& a, Variable v) {
  auto it = a.find(v);
  if (it == a.end()) throw std::invalid_argument("evaluate: unbound variable " + v.name());
  return it->second;
}

void require_uniform_dim(const Assignment& a) {
  if (a.empty()) throw std::invalid_argument("evaluate: empty assignment");
  const int n = a.begin()->second.dim();
  for (const auto& [v, m] : a)
    if (m.dim() != n)
      throw std::invalid_argument("evaluate: assignment dimensions differ");
}

}  // namespace

TropMatrix evaluate(const Word& w, const Assignment& a) {
  if (w.empty()) throw std::invalid_argument("evaluate: empty word");
  require_uniform_dim(a);
  const auto& runs = w.runs();
  TropMatrix acc = mat_pow(image_of(a, runs.front().var), runs.front().exp);
  for (std::size_t i = 1; i < runs.size(); ++i)
    acc = mat_mul(acc, mat_pow(image_of(a, runs[i].var), runs[i].exp));
  return acc;
}

TropMatrix evaluate_via_oracle(const Word& w, const Assignment& a) {
  if (w.empty()) throw std::invalid_argument("evaluate: empty word");
  require_uniform_dim(a);
  std::vector<TropMatrix> factors;
  for (Variable v : w.letters()) factors.push_back(image_of(a, v));
  return oracle_product(ColoredDigraph::from_product(factors));
}

bool check(const Identity& id, const Assignment& a) {
  return evaluate(id.lhs(), a) == evaluate(id.rhs(), a);
}

namespace {

Assignment build_assignment(MatrixClass cls, int dim, const SamplerConfig& cfg,
                            FuzzMode mode, long trial,
                            const std::vector<Variable>& vars) {
  Assignment a;
  const std::uint64_t t = static_cast<std::uint64_t>(trial);
  switch (mode) {
    case FuzzMode::Independent: {
      for (std::size_t i = 0; i < vars.size(); ++i)
        a.emplace(vars[i], sample_matrix(cls, dim, cfg, t * vars.size() + i));
      break;
    }
    case FuzzMode::DiagPair: {
      TropMatrix x = sample_matrix(cls, dim, cfg, 2 * t);
      TropMatrix y = sample_matrix(cls, dim, cfg, 2 * t + 1);
      for (int i = 0; i < dim; ++i) y.at(i, i) = x.at(i, i);
      a.emplace(vars[0], std::move(x));
      a.emplace(vars[1], std::move(y));
      break;
    }
    case FuzzMode::ProductPair: {
      const TropMatrix fst = sample_matrix(cls, dim, cfg, 2 * t);
      const TropMatrix snd = sample_matrix(cls, dim, cfg, 2 * t + 1);
      a.emplace(vars[0], mat_mul(fst, snd));
      a.emplace(vars[1], mat_mul(snd, fst));
      break;
    }
  }
  return a;
}

}  // namespace

Verdict fuzz(const Identity& id, MatrixClass cls, int dim, long trials,
             const SamplerConfig& cfg, FuzzMode mode) {
  const std::vector<Variable> vars = id.content();
  if (mode != FuzzMode::Independent && vars.size() != 2)
    throw std::invalid_argument("fuzz: paired modes need a 2-variable identity");
  for (long t = 0; t < trials; ++t) {
    Assignment a = build_assignment(cls, dim, cfg, mode, t, vars);
    if (!check(id, a)) {
      // Independent re-evaluation through the path oracle before reporting.
      if (evaluate_via_oracle(id.lhs(), a) == evaluate_via_oracle(id.rhs(), a))
        throw std::logic_error("fuzz: counterexample failed oracle re-validation");
      return Verdict{t + 1, std::move(a), t};
    }
  }
  return Verdict{trials, std::nullopt, -1};
}

std::optional<Assignment> exhaustive_small_counterexample(
    const Identity& id, int dim, const std::vector<TropValue>& values) {
  if (dim < 1) throw std::invalid_argument("exhaustive sweep: bad dimension");
  if (values.empty()) throw std::invalid_argument("exhaustive sweep: empty value set");

  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) slots.emplace_back(i, j);

  double matrix_count = 1;
  for (std::size_t s = 0; s < slots.size(); ++s) matrix_count *= values.size();
  const std::vector<Variable> vars = id.content();
  double total = 1;
  for (std::size_t v = 0; v < vars.size(); ++v) total *= matrix_count;
  if (total > 2e7)
    throw std::invalid_argument("exhaustive sweep: state space too large");

  std::vector<TropMatrix> candidates;
  candidates.reserve(static_cast<std::size_t>(matrix_count));
  std::vector<std::size_t> odo(slots.size(), 0);
  for (;;) {
    TropMatrix m(dim);
    for (std::size_t s = 0; s < slots.size(); ++s)
      m.at(slots[s].first, slots[s].second) = values[odo[s]];
    candidates.push_back(std::move(m));
    std::size_t s = 0;
    while (s < odo.size() && ++odo[s] == values.size()) odo[s++] = 0;
    if (s == odo.size()) break;
  }

  std::vector<std::size_t> pick(vars.size(), 0);
  for (;;) {
    Assignment a;
    for (std::size_t v = 0; v < vars.size(); ++v) a.emplace(vars[v], candidates[pick[v]]);
    if (!check(id, a)) return a;
    std::size_t v = 0;
    while (v < pick.size() && ++pick[v] == candidates.size()) pick[v++] = 0;
    if (v == pick.size()) break;
  }
  return std::nullopt;
}

}  // namespace tropid
