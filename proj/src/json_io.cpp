#include "tropid/json_io.hpp"

#include <stdexcept>

#include "json.hpp"

namespace tropid {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json matrix_to_value(const TropMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.dim(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  ordered_json out;
  out["n"] = m.dim();
  out["entries"] = std::move(rows);
  return out;
}

TropMatrix matrix_from_value(const ordered_json& v) {
  if (!v.is_object() || !v.contains("n") || !v.contains("entries"))
    throw std::invalid_argument("matrix json: expected {\"n\": ..., \"entries\": ...}");
  const int n = v.at("n").get<int>();
  if (n < 1) throw std::invalid_argument("matrix json: n must be positive");
  const auto& rows = v.at("entries");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw std::invalid_argument("matrix json: entries must hold n rows");
  TropMatrix m(n);
  for (int i = 0; i < n; ++i) {
    const auto& row = rows.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw std::invalid_argument("matrix json: row width differs from n");
    for (int j = 0; j < n; ++j)
      m.at(i, j) = TropValue::parse(row.at(j).get<std::string>());
  }
  return m;
}

ordered_json parse_or_throw(const std::string& text) {
  ordered_json v = ordered_json::parse(text, nullptr, false);
  if (v.is_discarded()) throw std::invalid_argument("malformed json input");
  return v;
}

}  // namespace

std::string matrix_to_json(const TropMatrix& m) { return matrix_to_value(m).dump(); }

TropMatrix matrix_from_json(const std::string& text) {
  return matrix_from_value(parse_or_throw(text));
}

std::string identity_to_json(const Identity& id) {
  ordered_json out;
  out["lhs"] = id.lhs().str();
  out["rhs"] = id.rhs().str();
  return out.dump();
}

Identity identity_from_json(const std::string& text) {
  const ordered_json v = parse_or_throw(text);
  if (!v.is_object() || !v.contains("lhs") || !v.contains("rhs"))
    throw std::invalid_argument("identity json: expected {\"lhs\": ..., \"rhs\": ...}");
  return Identity(Word::parse(v.at("lhs").get<std::string>()),
                  Word::parse(v.at("rhs").get<std::string>()));
}

std::string assignment_to_json(const Assignment& a) {
  ordered_json out;
  for (const auto& [v, m] : a) out[v.name()] = matrix_to_value(m);
  return out.dump();
}

Assignment assignment_from_json(const std::string& text) {
  const ordered_json v = parse_or_throw(text);
  if (!v.is_object()) throw std::invalid_argument("assignment json: expected an object");
  Assignment a;
  for (auto it = v.begin(); it != v.end(); ++it) {
    const Word var = Word::parse(it.key());
    if (var.runs().size() != 1 || var.runs().front().exp != 1)
      throw std::invalid_argument("assignment json: key is not a single variable");
    a.emplace(var.runs().front().var, matrix_from_value(it.value()));
  }
  if (a.empty()) throw std::invalid_argument("assignment json: no variables bound");
  return a;
}

std::string factors_to_json(const std::vector<TropMatrix>& factors) {
  ordered_json out = ordered_json::array();
  for (const TropMatrix& m : factors) out.push_back(matrix_to_value(m));
  return out.dump();
}

std::vector<TropMatrix> factors_from_json(const std::string& text) {
  const ordered_json v = parse_or_throw(text);
  if (!v.is_array() || v.empty())
    throw std::invalid_argument("factors json: expected a nonempty array");
  std::vector<TropMatrix> out;
  for (const auto& item : v) out.push_back(matrix_from_value(item));
  return out;
}

}  // namespace tropid
