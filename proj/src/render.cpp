#include "pdr/render.hpp"

#include <sstream>

namespace pdr {

namespace {

void check_shape(const DualGraph& g, const FundamentalCycle* z) {
  if (!z) return;
  if (z->branch_coeffs.size() != g.branches().size())
    throw domain_error("render_graph: cycle shape does not match graph");
  for (std::size_t i = 0; i < g.branches().size(); ++i)
    if (z->branch_coeffs[i].size() != g.branches()[i].size())
      throw domain_error("render_graph: cycle shape does not match graph");
}

std::string render_dot(const DualGraph& g, const FundamentalCycle* z) {
  std::ostringstream out;
  out << "graph dual_graph {\n";
  out << "  node [shape=circle];\n";
  auto label = [&](long long weight, const long long* coeff) {
    std::string s = "-" + std::to_string(weight);
    if (coeff) s += "\\nz=" + std::to_string(*coeff);
    return s;
  };
  out << "  v0 [label=\"" << label(g.central_weight(), z ? &z->n0 : nullptr) << "\"];\n";
  for (std::size_t i = 0; i < g.branches().size(); ++i) {
    const auto& entries = g.branches()[i].entries();
    for (std::size_t j = 0; j < entries.size(); ++j) {
      const long long* coeff = z ? &z->branch_coeffs[i][j] : nullptr;
      out << "  v" << i + 1 << "_" << j << " [label=\"" << label(entries[j], coeff) << "\"];\n";
    }
  }
  for (std::size_t i = 0; i < g.branches().size(); ++i) {
    const auto& entries = g.branches()[i].entries();
    for (std::size_t j = 0; j < entries.size(); ++j) {
      if (j == 0)
        out << "  v0 -- v" << i + 1 << "_0;\n";
      else
        out << "  v" << i + 1 << "_" << j - 1 << " -- v" << i + 1 << "_" << j << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string render_ascii(const DualGraph& g, const FundamentalCycle* z) {
  std::ostringstream out;
  auto vertex = [&](long long weight, const long long* coeff) {
    std::string s = "[-" + std::to_string(weight) + "]";
    if (coeff) s += "(" + std::to_string(*coeff) + ")";
    return s;
  };
  out << "E0 " << vertex(g.central_weight(), z ? &z->n0 : nullptr) << "\n";
  for (std::size_t i = 0; i < g.branches().size(); ++i) {
    const auto& entries = g.branches()[i].entries();
    out << "  +- E" << i + 1 << ": ";
    for (std::size_t j = 0; j < entries.size(); ++j) {
      if (j) out << " - ";
      out << vertex(entries[j], z ? &z->branch_coeffs[i][j] : nullptr);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace

std::string render_graph(const DualGraph& g, const FundamentalCycle* z, RenderFormat format) {
  check_shape(g, z);
  return format == RenderFormat::dot ? render_dot(g, z) : render_ascii(g, z);
}

}  // namespace pdr
