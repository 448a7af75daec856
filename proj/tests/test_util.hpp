#pragma once

#include <string_view>

#include "sga/marked_graph.hpp"
#include "sga/strings.hpp"

namespace sga::test {

inline GeneString GS(std::string_view text) { return GeneString::parse(text); }

inline Identity P(int value) { return Identity::pointer(value); }
inline Identity M() { return Identity::marker(); }

// The running example of the paper-scale fixtures used across suites.
inline const char* kRunningU = "5 -2 4 4 -5 3 -6 2 6 b 3 -e";
inline const char* kRunningV = "-4 2 3 -2 4 -e -3 b";
inline const char* kRunningW = "b 2 3 4 2 3 4 e";

} // namespace sga::test
