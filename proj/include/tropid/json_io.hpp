#pragma once

#include <string>
#include <vector>

#include "tropid/evaluate.hpp"

namespace tropid {

// Matrix: {"n": 2, "entries": [["0","1"],["-inf","2"]]}; entries are exact
// strings ("-inf", integer, or "p/q" with q > 0) and serialize reduced.
std::string matrix_to_json(const TropMatrix& m);
TropMatrix matrix_from_json(const std::string& text);

// Identity: {"lhs": "yx^2y^2x x yx^2y^2x", "rhs": "..."} in the word grammar.
std::string identity_to_json(const Identity& id);
Identity identity_from_json(const std::string& text);

// Assignment: {"x": <matrix>, "y": <matrix>} keyed by variable name.
std::string assignment_to_json(const Assignment& a);
Assignment assignment_from_json(const std::string& text);

// Factor list: [<matrix>, <matrix>, ...] in product order.
std::string factors_to_json(const std::vector<TropMatrix>& factors);
std::vector<TropMatrix> factors_from_json(const std::string& text);

}  // namespace tropid
