#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "strathom/complex.hpp"

namespace strathom {

// {"vertices": ["a","b",...], "maximal_simplices": [["a","b","c"], ...]}
// Loader closes under faces; writer is canonical (vertices sorted
// lexicographically, maximal simplices as sorted label lists).
ComplexPtr complex_from_json(const nlohmann::json& j);
nlohmann::json complex_to_json(const Complex& k);
ComplexPtr load_complex_file(const std::string& path);
void save_complex_file(const Complex& k, const std::string& path);

}  // namespace strathom
