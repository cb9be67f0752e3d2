// Star-shaped dual graph of the minimal good resolution, the fundamental
// cycle, and the multiplicity -Z^2.
//
// The graph has one central vertex of self-intersection -s and one chain
// per fraction c/d, the chain weights being the HJ expansion of d/c.  The
// fundamental cycle is the smallest nonzero effective cycle Z with
// Z·E <= 0 at every vertex; its central coefficient is the least n with
// deg[nD] >= 0 and the branch coefficients follow the ceiling recursion
// n_{j+1} = ceil(n_j / e_{j+1}) over the suffix values e of each chain.
#pragma once

#include <optional>
#include <vector>

#include "pdr/divisor.hpp"
#include "pdr/hj.hpp"

namespace pdr {

class DualGraph {
 public:
  DualGraph(long long central_weight, std::vector<HjSequence> branches);

  long long central_weight() const { return central_weight_; }
  const std::vector<HjSequence>& branches() const { return branches_; }
  std::size_t vertex_count() const;

  friend bool operator==(const DualGraph&, const DualGraph&) = default;

 private:
  long long central_weight_;
  std::vector<HjSequence> branches_;
};

// Nonnegative coefficients on the vertices of a DualGraph, central first.
struct FundamentalCycle {
  long long n0 = 0;
  std::vector<std::vector<long long>> branch_coeffs;

  long long total() const;
  friend bool operator==(const FundamentalCycle&, const FundamentalCycle&) = default;
};

struct MultiplicityReport {
  long long value = 0;
  FundamentalCycle cycle;
  DualGraph graph;
};

// Vertex reference: branch < 0 means the central vertex, otherwise
// (branch, pos) indexes into branch chains, pos 0 adjacent to the center.
struct VertexRef {
  int branch = -1;
  int pos = 0;
  friend bool operator==(const VertexRef&, const VertexRef&) = default;
};

enum class CycleCheckStatus { valid_fundamental, violation, smaller_cycle_found };

struct CycleCheck {
  CycleCheckStatus status = CycleCheckStatus::valid_fundamental;
  std::optional<VertexRef> violation_vertex;         // set for violation
  std::optional<FundamentalCycle> smaller;           // set for smaller_cycle_found
  unsigned long long nodes_explored = 0;
};

// Requires an ample divisor and either s >= 2 or (s = 1 and r >= 3); other
// configurations would put a (-1)-curve in a contractible position and are
// refused with unsupported_error.
DualGraph dual_graph(const NormalizedDivisor& d);

// Z·E_v for every vertex of g under the coefficients z (adjacent vertices
// meet once, self-intersection is the negated weight).  Central value
// first, then branch vertices in chain order.
std::vector<long long> intersection_numbers(const DualGraph& g, const FundamentalCycle& z);

// The ceiling-recursion cycle with prescribed central coefficient l >= 1:
// the smallest cycle among those with that central coefficient satisfying
// Z·E <= 0 away from the center.  Satisfies F_l·E0 = -deg[lD].
FundamentalCycle cycle_with_central(const NormalizedDivisor& d, long long l);

// Smallest n >= 1 with deg[nD] >= 0 (<= period for an ample divisor).
long long min_nonnegative_multiple(const NormalizedDivisor& d);

// Requires is_rational_singularity(d); precondition_error otherwise.
FundamentalCycle fundamental_cycle(const NormalizedDivisor& d);

// Independent oracle: confirms z satisfies Z·E <= 0 everywhere and is the
// componentwise minimum among all nonzero effective cycles bounded by z
// (exhaustive search with constraint pruning).  search_cap bounds the
// number of search nodes; exceeding it throws domain_error.
CycleCheck verify_cycle(const DualGraph& g, const FundamentalCycle& z,
                        unsigned long long search_cap = 200'000'000ULL);

// Second independent route: grow from a single vertex, repeatedly adding
// any vertex with Z·E > 0 until none remains.  Yields the fundamental
// cycle of any negative-definite resolution graph.
FundamentalCycle laufer_fundamental_cycle(const DualGraph& g);

// -Z^2 = n0(s-2) + sum n_ij (b_ij - 2) + 2 as a pure formula on a graph
// and cycle of matching shape.
long long multiplicity_value(const DualGraph& g, const FundamentalCycle& z);

// e(R) = -Z^2 for the fundamental cycle; requires a rational singularity
// in the supported graph regime.
MultiplicityReport multiplicity(const NormalizedDivisor& d);

}  // namespace pdr
