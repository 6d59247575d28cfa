#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace strathom {

// Exact rational scalar used everywhere. All homological ranks in this
// project are statements over Q, so no floating point appears anywhere.
using Q = boost::multiprecision::mpq_rational;

inline std::string q_str(const Q& q) { return q.str(); }

inline Q q_parse(const std::string& s) { return Q(s); }

}  // namespace strathom
