#pragma once

#include <set>
#include <string>

#include "acikit/text_io.hpp"

namespace acik::testing {

inline ACIMatrix mat(const std::string& text) { return parse_matrix(text); }

inline std::set<int> rs(const std::set<int>& s) { return s; }

}  // namespace acik::testing
