#include "pdr/analyze.hpp"

#include <json.hpp>

#include <sstream>

#include "pdr/render.hpp"

namespace pdr {

namespace {

bool supported_regime(const NormalizedDivisor& d) {
  return d.s() >= 2 || (d.s() == 1 && d.r() >= 3);
}

// Independent replay of facts that must hold whenever the inputs satisfy
// their hypotheses; a violation is a bug in this library, not bad input.
void cross_check(const NormalizedDivisor& d, const AnalysisReport& r) {
  long long s = d.s();
  long long points = static_cast<long long>(d.r());
  if (s >= points && !r.rationality.rational)
    throw internal_error("cross-check failed: s >= r but divisor reported non-rational");
  if (s + 2 <= points && r.rationality.rational)
    throw internal_error("cross-check failed: s + 2 <= r but divisor reported rational");
  for (const auto& pv : r.prime_verdicts) {
    if (!pv.verdict.f_rational) {
      if (s >= points)
        throw internal_error("cross-check failed: s >= r but not F-rational at p=" +
                             std::to_string(pv.p));
      if (r.period % pv.p != 0)
        throw internal_error("cross-check failed: p does not divide any denominator but not "
                             "F-rational at p=" + std::to_string(pv.p));
      if (d.degree() >= Rational(1) && pv.p >= points - 1)
        throw internal_error("cross-check failed: deg >= 1 and p >= r-1 but not F-rational at p=" +
                             std::to_string(pv.p));
      if (s + 1 != points)
        throw internal_error("cross-check failed: not F-rational but s + 1 != r");
    }
  }
  if (r.graph && r.cycle) {
    auto check = verify_cycle(*r.graph, *r.cycle);
    if (check.status != CycleCheckStatus::valid_fundamental)
      throw internal_error("cross-check failed: fundamental cycle rejected by the search oracle");
    if (laufer_fundamental_cycle(*r.graph) != *r.cycle)
      throw internal_error("cross-check failed: fundamental cycle differs from the growth oracle");
  }
}

}  // namespace

AnalysisReport analyze(const std::string& input_text, const QDivisor& d,
                       const AnalysisOptions& options) {
  AnalysisReport r;
  r.input_text = input_text;
  r.input = d;
  NormalizedDivisor nd = normalize(d);
  r.degree = nd.degree();
  if (!nd.is_ample())
    throw domain_error("analyze: divisor is not ample (degree " + r.degree.str() + ")");
  r.normalized = nd;
  r.period = period(nd);
  r.rationality = is_rational_singularity(nd);

  if (!r.rationality.rational) {
    r.skip_reason = "not a rational singularity";
  } else if (!supported_regime(nd)) {
    r.skip_reason = "unsupported graph regime (s = " + std::to_string(nd.s()) +
                    ", r = " + std::to_string(nd.r()) + ")";
  } else {
    r.graph = dual_graph(nd);
    r.cycle = fundamental_cycle(nd);
    r.multiplicity = multiplicity_value(*r.graph, *r.cycle);
  }

  if (r.rationality.rational) {
    for (long long p : options.primes)
      r.prime_verdicts.push_back(PrimeVerdict{p, is_f_rational(nd, p)});
    r.failing = failing_primes(nd);
  }

  if (options.match_tables) {
    r.matches_e3 = match_families(nd, 3);
    r.matches_e4 = match_families(nd, 4);
  }

  if (options.verify) {
    cross_check(nd, r);
    r.verified = true;
  }
  return r;
}

namespace {

nlohmann::ordered_json graph_to_json(const DualGraph& g) {
  nlohmann::ordered_json j;
  j["central_weight"] = g.central_weight();
  auto branches = nlohmann::ordered_json::array();
  for (const auto& b : g.branches()) branches.push_back(b.entries());
  j["branches"] = std::move(branches);
  return j;
}

nlohmann::ordered_json cycle_to_json(const FundamentalCycle& z) {
  nlohmann::ordered_json j;
  j["central"] = z.n0;
  j["branches"] = z.branch_coeffs;
  return j;
}

nlohmann::ordered_json match_list_json(const std::vector<FamilyMatch>& ms, int table) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& m : ms) {
    nlohmann::ordered_json j;
    j["family"] = m.family_id;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    const auto& fams = families(table);
    for (const auto& f : fams) {
      if (f.id == m.family_id) {
        for (std::size_t i = 0; i < f.params.size(); ++i) params[f.params[i]] = m.params[i];
        break;
      }
    }
    j["params"] = std::move(params);
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace

std::string report_to_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = "pdring.analysis/1";
  j["input"] = r.input_text;
  nlohmann::ordered_json terms = nlohmann::ordered_json::object();
  for (const auto& [label, coeff] : r.input.terms()) terms[label] = coeff.str();
  j["terms"] = std::move(terms);
  j["normalized"] = nlohmann::ordered_json::object();
  j["normalized"]["s"] = r.normalized->s();
  auto fr = nlohmann::ordered_json::array();
  for (const auto& a : r.normalized->fractions()) fr.push_back(a.str());
  j["normalized"]["fractions"] = std::move(fr);
  j["degree"] = r.degree.str();
  j["period"] = r.period;

  j["rational_singularity"] = nlohmann::ordered_json::object();
  j["rational_singularity"]["verdict"] = r.rationality.rational ? "rational" : "not_rational";
  if (!r.rationality.rational) {
    j["rational_singularity"]["witness_n"] = *r.rationality.witness_n;
    j["rational_singularity"]["witness_value"] = *r.rationality.witness_value;
  }

  if (r.graph) {
    j["dual_graph"] = graph_to_json(*r.graph);
    j["fundamental_cycle"] = cycle_to_json(*r.cycle);
    j["multiplicity"] = *r.multiplicity;
  } else {
    j["dual_graph"] = nullptr;
    j["skip_reason"] = r.skip_reason;
  }

  auto verdicts = nlohmann::ordered_json::array();
  for (const auto& pv : r.prime_verdicts) {
    nlohmann::ordered_json v;
    v["p"] = pv.p;
    v["verdict"] = pv.verdict.f_rational ? "f_rational" : "not_f_rational";
    if (!pv.verdict.f_rational) {
      const auto& w = *pv.verdict.witness;
      v["witness"] = {{"n", w.n},
                      {"deg_neg", w.deg_neg},
                      {"support_size", w.support_size},
                      {"value", w.value},
                      {"coefficients", w.coefficients}};
    }
    verdicts.push_back(std::move(v));
  }
  j["f_rationality"] = std::move(verdicts);
  if (r.failing) {
    j["failing_primes"] = *r.failing;
  } else {
    j["failing_primes"] = nullptr;
  }
  j["matches"] = nlohmann::ordered_json::object();
  j["matches"]["e3"] = match_list_json(r.matches_e3, 3);
  j["matches"]["e4"] = match_list_json(r.matches_e4, 4);
  j["verified"] = r.verified;
  return j.dump(2) + "\n";
}

std::string report_to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "input:       " << r.input_text << "\n";
  out << "normalized:  " << r.normalized->str() << "\n";
  out << "degree:      " << r.degree.str() << "\n";
  out << "period:      " << r.period << "\n";
  if (r.rationality.rational) {
    out << "rationality: rational singularity\n";
  } else {
    out << "rationality: NOT rational (deg[" << *r.rationality.witness_n
        << "D] = " << *r.rationality.witness_value << ")\n";
  }
  if (r.graph) {
    out << "multiplicity: " << *r.multiplicity << "\n";
    out << "dual graph with fundamental cycle:\n";
    out << render_graph(*r.graph, &*r.cycle, RenderFormat::ascii);
  } else {
    out << "resolution:  skipped (" << r.skip_reason << ")\n";
  }
  for (const auto& pv : r.prime_verdicts) {
    out << "p = " << pv.p << ": ";
    if (pv.verdict.f_rational) {
      out << "F-rational\n";
    } else {
      const auto& w = *pv.verdict.witness;
      out << "not F-rational (n = " << w.n << ", deg[-pnD] = " << w.deg_neg
          << ", support = " << w.support_size << ", value = " << w.value << ")\n";
    }
  }
  if (r.failing) {
    out << "failing primes: {";
    bool first = true;
    for (long long p : *r.failing) {
      if (!first) out << ", ";
      out << p;
      first = false;
    }
    out << "}\n";
  }
  auto print_matches = [&](const char* name, const std::vector<FamilyMatch>& ms, int table) {
    out << name << " matches: ";
    if (ms.empty()) {
      out << "none\n";
      return;
    }
    for (std::size_t i = 0; i < ms.size(); ++i) {
      if (i) out << ", ";
      out << ms[i].family_id;
      const auto& fams = families(table);
      for (const auto& f : fams) {
        if (f.id != ms[i].family_id) continue;
        if (!f.params.empty()) {
          out << "(";
          for (std::size_t k = 0; k < f.params.size(); ++k) {
            if (k) out << ",";
            out << f.params[k] << "=" << ms[i].params[k];
          }
          out << ")";
        }
        break;
      }
    }
    out << "\n";
  };
  print_matches("e=3", r.matches_e3, 3);
  print_matches("e=4", r.matches_e4, 4);
  if (r.verified) out << "cross-checks: passed\n";
  return out.str();
}

}  // namespace pdr
