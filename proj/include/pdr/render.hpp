// Dual-graph rendering: Graphviz DOT, or an ASCII layout with the central
// vertex followed by one chain per line, weights in brackets and optional
// fundamental-cycle coefficients in parentheses.
#pragma once

#include <string>

#include "pdr/resolution.hpp"

namespace pdr {

enum class RenderFormat { dot, ascii };

std::string render_graph(const DualGraph& g, const FundamentalCycle* z, RenderFormat format);

}  // namespace pdr
