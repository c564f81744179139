#pragma once

#include <string>
#include <string_view>

#include "apexis/graph.hpp"

namespace apexis {

// graph6: byte n+63, then the upper triangle x[0,1], x[0,2], x[1,2], x[0,3], ...
// packed big-endian into 6-bit groups, each offset by 63, zero padded.
std::string to_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" header and trailing newline.
Graph from_graph6(std::string_view text);

}  // namespace apexis
