#include "pdr/resolution.hpp"

#include <algorithm>
#include <limits>

namespace pdr {

DualGraph::DualGraph(long long central_weight, std::vector<HjSequence> branches)
    : central_weight_(central_weight), branches_(std::move(branches)) {}

std::size_t DualGraph::vertex_count() const {
  std::size_t n = 1;
  for (const auto& b : branches_) n += b.size();
  return n;
}

long long FundamentalCycle::total() const {
  long long t = n0;
  for (const auto& chain : branch_coeffs)
    for (long long c : chain) t = checked_add(t, c);
  return t;
}

DualGraph dual_graph(const NormalizedDivisor& d) {
  long long s = d.s();
  if (s <= 0 || (s == 1 && d.r() < 3))
    throw unsupported_error("dual_graph: unsupported configuration s=" + std::to_string(s) +
                            ", r=" + std::to_string(d.r()) +
                            " (central curve would be contractible)");
  if (!d.is_ample())
    throw domain_error("dual_graph: divisor is not ample: " + d.str());
  std::vector<HjSequence> branches;
  branches.reserve(d.r());
  for (const auto& a : d.fractions())
    branches.push_back(hj_expand(a.reciprocal()));
  return DualGraph(s, std::move(branches));
}

std::vector<long long> intersection_numbers(const DualGraph& g, const FundamentalCycle& z) {
  if (z.branch_coeffs.size() != g.branches().size())
    throw domain_error("intersection_numbers: cycle shape does not match graph");
  std::vector<long long> out;
  out.reserve(g.vertex_count());
  long long central = checked_mul(-g.central_weight(), z.n0);
  for (std::size_t i = 0; i < g.branches().size(); ++i) {
    if (z.branch_coeffs[i].size() != g.branches()[i].size())
      throw domain_error("intersection_numbers: cycle shape does not match graph");
    if (!z.branch_coeffs[i].empty()) central = checked_add(central, z.branch_coeffs[i][0]);
  }
  out.push_back(central);
  for (std::size_t i = 0; i < g.branches().size(); ++i) {
    const auto& weights = g.branches()[i].entries();
    const auto& coeffs = z.branch_coeffs[i];
    for (std::size_t j = 0; j < weights.size(); ++j) {
      long long v = checked_mul(-weights[j], coeffs[j]);
      v = checked_add(v, j == 0 ? z.n0 : coeffs[j - 1]);
      if (j + 1 < weights.size()) v = checked_add(v, coeffs[j + 1]);
      out.push_back(v);
    }
  }
  return out;
}

long long min_nonnegative_multiple(const NormalizedDivisor& d) {
  if (!d.is_ample())
    throw domain_error("min_nonnegative_multiple: divisor is not ample: " + d.str());
  auto sd = detail::SmallDivisor::from(d);
  long long n_max = period(d);
  for (long long n = 1; n <= n_max; ++n)
    if (sd.deg_floor(n) >= 0) return n;
  // deg[ND] = N*deg(D) >= 1 for the period N, so this is unreachable.
  throw internal_error("min_nonnegative_multiple: no n <= period with deg[nD] >= 0");
}

FundamentalCycle cycle_with_central(const NormalizedDivisor& d, long long l) {
  if (l < 1) throw domain_error("cycle_with_central: central coefficient must be >= 1");
  DualGraph g = dual_graph(d);
  FundamentalCycle z;
  z.n0 = l;
  z.branch_coeffs.reserve(g.branches().size());
  for (const auto& branch : g.branches()) {
    auto tails = hj_tails(branch);
    std::vector<long long> coeffs(tails.size());
    long long prev = l;
    for (std::size_t j = 0; j < tails.size(); ++j) {
      // ceil(prev / e_j) with e_j = num/den > 1.
      mpz_class v = (Rational(prev) / tails[j]).ceil();
      coeffs[j] = to_int64(v);
      prev = coeffs[j];
    }
    z.branch_coeffs.push_back(std::move(coeffs));
  }
  return z;
}

FundamentalCycle fundamental_cycle(const NormalizedDivisor& d) {
  if (!is_rational_singularity(d).rational)
    throw precondition_error("fundamental_cycle: " + d.str() + " is not a rational singularity");
  return cycle_with_central(d, min_nonnegative_multiple(d));
}

namespace {

// Flat vertex order: central, then each branch chain outward.
struct FlatGraph {
  std::vector<long long> weight;
  std::vector<VertexRef> ref;
  std::vector<std::vector<int>> neighbors;

  explicit FlatGraph(const DualGraph& g) {
    weight.push_back(g.central_weight());
    ref.push_back(VertexRef{-1, 0});
    for (int i = 0; i < static_cast<int>(g.branches().size()); ++i) {
      const auto& entries = g.branches()[i].entries();
      for (int j = 0; j < static_cast<int>(entries.size()); ++j) {
        weight.push_back(entries[j]);
        ref.push_back(VertexRef{i, j});
      }
    }
    neighbors.resize(weight.size());
    int idx = 1;
    for (const auto& branch : g.branches()) {
      int first = idx;
      int len = static_cast<int>(branch.size());
      for (int j = 0; j < len; ++j) {
        int v = first + j;
        if (j == 0) {
          neighbors[0].push_back(v);
          neighbors[v].push_back(0);
        } else {
          neighbors[v - 1].push_back(v);
          neighbors[v].push_back(v - 1);
        }
      }
      idx += len;
    }
  }

  long long dot(const std::vector<long long>& z, int v) const {
    long long acc = checked_mul(-weight[v], z[v]);
    for (int u : neighbors[v]) acc = checked_add(acc, z[u]);
    return acc;
  }
};

std::vector<long long> flatten(const FundamentalCycle& z) {
  std::vector<long long> out;
  out.push_back(z.n0);
  for (const auto& chain : z.branch_coeffs)
    for (long long c : chain) out.push_back(c);
  return out;
}

FundamentalCycle unflatten(const DualGraph& g, const std::vector<long long>& flat) {
  FundamentalCycle z;
  z.n0 = flat[0];
  std::size_t idx = 1;
  for (const auto& branch : g.branches()) {
    std::vector<long long> chain(branch.size());
    for (std::size_t j = 0; j < branch.size(); ++j) chain[j] = flat[idx++];
    z.branch_coeffs.push_back(std::move(chain));
  }
  return z;
}

}  // namespace

CycleCheck verify_cycle(const DualGraph& g, const FundamentalCycle& z,
                        unsigned long long search_cap) {
  FlatGraph fg(g);
  std::vector<long long> cap = flatten(z);
  const int n = static_cast<int>(cap.size());

  CycleCheck result;

  // Direct inequality check first: a candidate with some Z·E > 0 is
  // refuted without any search.
  {
    auto nums = intersection_numbers(g, z);
    for (int v = 0; v < n; ++v) {
      if (nums[v] > 0) {
        result.status = CycleCheckStatus::violation;
        result.violation_vertex = fg.ref[v];
        return result;
      }
    }
  }

  // Exhaustive search of the box [0, cap]: DFS in flat order, checking each
  // vertex constraint as soon as its last neighbor is assigned.  Members
  // are the nonzero cycles with Z·E <= 0 everywhere; the fundamental cycle
  // is their componentwise minimum and lies in the box whenever the
  // candidate is itself a member.
  std::vector<int> last_check(n, -1);  // constraints to check after assigning position k
  for (int v = 0; v < n; ++v) {
    int last = v;
    for (int u : fg.neighbors[v]) last = std::max(last, u);
    last_check[v] = last;
  }
  std::vector<std::vector<int>> checks_at(n);
  for (int v = 0; v < n; ++v) checks_at[last_check[v]].push_back(v);

  // First-chain-vertex positions feed the central constraint; their partial
  // sum is monotone, so it prunes early.
  std::vector<int> first_positions;
  {
    int idx = 1;
    for (const auto& branch : g.branches()) {
      if (!branch.empty()) first_positions.push_back(idx);
      idx += static_cast<int>(branch.size());
    }
  }

  std::vector<long long> cur(n, 0);
  std::vector<long long> best;  // componentwise min over members
  unsigned long long nodes = 0;

  auto dfs = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      bool nonzero = std::any_of(cur.begin(), cur.end(), [](long long c) { return c != 0; });
      if (!nonzero) return;
      if (best.empty()) {
        best = cur;
      } else {
        for (int v = 0; v < n; ++v) best[v] = std::min(best[v], cur[v]);
      }
      return;
    }
    bool is_first = std::find(first_positions.begin(), first_positions.end(), depth) !=
                    first_positions.end();
    for (long long v = 0; v <= cap[depth]; ++v) {
      if (++nodes > search_cap) throw domain_error("verify_cycle: search cap exceeded");
      cur[depth] = v;
      if (is_first) {
        long long partial = 0;
        for (int p : first_positions) {
          if (p > depth) break;
          partial = checked_add(partial, cur[p]);
        }
        if (partial > checked_mul(fg.weight[0], cur[0])) break;  // grows with v
      }
      bool ok = true;
      for (int c : checks_at[depth]) {
        if (fg.dot(cur, c) > 0) { ok = false; break; }
      }
      if (ok) self(self, depth + 1);
    }
    cur[depth] = 0;
  };
  dfs(dfs, 0);
  result.nodes_explored = nodes;

  if (best.empty())
    throw internal_error("verify_cycle: candidate satisfies Z·E <= 0 but was not found");
  // The componentwise minimum of members is itself a member.
  {
    auto m = unflatten(g, best);
    auto nums = intersection_numbers(g, m);
    for (long long v : nums)
      if (v > 0) throw internal_error("verify_cycle: componentwise minimum violates Z·E <= 0");
  }
  if (best == cap) {
    result.status = CycleCheckStatus::valid_fundamental;
  } else {
    result.status = CycleCheckStatus::smaller_cycle_found;
    result.smaller = unflatten(g, best);
  }
  return result;
}

FundamentalCycle laufer_fundamental_cycle(const DualGraph& g) {
  FlatGraph fg(g);
  const int n = static_cast<int>(fg.weight.size());
  std::vector<long long> z(n, 0);
  z[0] = 1;
  // Each step increases the total coefficient by 1 and the fundamental
  // cycle bounds the growth, so the loop terminates on resolution graphs.
  const unsigned long long cap = 100'000'000ULL;
  unsigned long long steps = 0;
  for (;;) {
    int grow = -1;
    for (int v = 0; v < n; ++v) {
      if (fg.dot(z, v) > 0) { grow = v; break; }
    }
    if (grow < 0) break;
    ++z[grow];
    if (++steps > cap)
      throw internal_error("laufer_fundamental_cycle: growth did not terminate");
  }
  return unflatten(g, z);
}

long long multiplicity_value(const DualGraph& g, const FundamentalCycle& z) {
  if (z.branch_coeffs.size() != g.branches().size())
    throw domain_error("multiplicity_value: cycle shape does not match graph");
  long long value = checked_mul(z.n0, g.central_weight() - 2);
  for (std::size_t i = 0; i < g.branches().size(); ++i) {
    const auto& weights = g.branches()[i].entries();
    if (z.branch_coeffs[i].size() != weights.size())
      throw domain_error("multiplicity_value: cycle shape does not match graph");
    for (std::size_t j = 0; j < weights.size(); ++j)
      value = checked_add(value, checked_mul(z.branch_coeffs[i][j], weights[j] - 2));
  }
  return checked_add(value, 2);
}

MultiplicityReport multiplicity(const NormalizedDivisor& d) {
  DualGraph g = dual_graph(d);
  FundamentalCycle z = fundamental_cycle(d);
  long long value = multiplicity_value(g, z);
  return MultiplicityReport{value, std::move(z), std::move(g)};
}

}  // namespace pdr
