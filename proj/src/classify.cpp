#include "pdr/classify.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

#include "pdr/classify_expr.hpp"
#include "pdr/hj.hpp"

namespace pdr {

namespace {

Rational eval_slot(const Slot& slot, const std::vector<long long>& params) {
  long long num = slot.num->eval(params);
  long long den = slot.den->eval(params);
  if (den <= 0) throw internal_error("slot " + slot.text + ": nonpositive denominator");
  if (num < 0) throw internal_error("slot " + slot.text + ": negative numerator");
  if (num >= den) throw internal_error("slot " + slot.text + ": value not in [0,1)");
  if (num != 0 && std::gcd(num, den) != 1)
    throw internal_error("slot " + slot.text + ": instantiated fraction not in lowest terms");
  return Rational(num, den);
}

void check_params(const Family& f, const std::vector<long long>& params) {
  if (params.size() != f.params.size())
    throw domain_error("family " + f.id + ": expected " + std::to_string(f.params.size()) +
                       " parameters, got " + std::to_string(params.size()));
  for (std::size_t i = 0; i < params.size(); ++i)
    if (params[i] < f.param_min[i])
      throw domain_error("family " + f.id + ": parameter " + f.params[i] + " = " +
                         std::to_string(params[i]) + " below its lower bound " +
                         std::to_string(f.param_min[i]));
}

std::string param_string(const Family& f, const std::vector<long long>& params) {
  if (params.empty()) return "";
  std::string out = "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ",";
    out += f.params[i] + "=" + std::to_string(params[i]);
  }
  return out + ")";
}

}  // namespace

NormalizedDivisor instantiate_family(const Family& f, const std::vector<long long>& params) {
  check_params(f, params);
  std::vector<Rational> fractions;
  fractions.reserve(f.slots.size());
  for (const auto& slot : f.slots) {
    Rational v = eval_slot(slot, params);
    if (!v.is_zero()) fractions.push_back(v);
  }
  return NormalizedDivisor(f.s, std::move(fractions));
}

void for_each_instantiation(const Family& f, long long max_param, long long max_denominator,
                            const std::function<void(const std::vector<long long>&,
                                                     const NormalizedDivisor&)>& fn) {
  if (max_param < 0) throw domain_error("for_each_instantiation: max_param must be >= 0");
  std::vector<long long> params(f.params.size(), 0);
  for (std::size_t i = 0; i < params.size(); ++i) params[i] = f.param_min[i];

  auto slot_dens_ok = [&]() {
    if (max_denominator <= 0) return true;
    for (const auto& slot : f.slots)
      if (slot.den->eval(params) > max_denominator) return false;
    return true;
  };

  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == params.size()) {
      if (slot_dens_ok()) fn(params, instantiate_family(f, params));
      return;
    }
    for (long long v = f.param_min[i]; v <= max_param; ++v) {
      params[i] = v;
      self(self, i + 1);
    }
    params[i] = f.param_min[i];
  };
  rec(rec, 0);
}

NormalizedDivisor canonical_order(const NormalizedDivisor& d) {
  struct Keyed {
    Rational value;
    TSignature sig;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(d.r());
  for (const auto& a : d.fractions())
    keyed.push_back({a, t_signature(hj_expand(a.reciprocal()))});
  std::stable_sort(keyed.begin(), keyed.end(), [](const Keyed& x, const Keyed& y) {
    if (x.sig.empty() != y.sig.empty()) return x.sig.empty();
    if (x.sig.entries() != y.sig.entries()) return x.sig < y.sig;
    return x.value < y.value;
  });
  std::vector<Rational> ordered;
  ordered.reserve(keyed.size());
  for (auto& k : keyed) ordered.push_back(k.value);
  return NormalizedDivisor(d.s(), std::move(ordered));
}

namespace {

// Per-slot parameter assignments whose denominator stays <= max_den.
// Denominators are nondecreasing in every parameter, so each loop can stop
// as soon as the bound is crossed.
struct SlotChoice {
  std::vector<long long> sub_params;  // values for slot.param_indices, in order
  Rational value;
};

std::vector<SlotChoice> slot_choices(const Family& f, const Slot& slot, long long max_den) {
  std::vector<SlotChoice> out;
  std::vector<long long> params(f.params.size(), 0);
  for (std::size_t i = 0; i < params.size(); ++i) params[i] = f.param_min[i];
  const auto& idx = slot.param_indices;

  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (slot.den->eval(params) > max_den) return;
    if (k == idx.size()) {
      SlotChoice c;
      for (int pi : idx) c.sub_params.push_back(params[pi]);
      c.value = eval_slot(slot, params);
      out.push_back(std::move(c));
      return;
    }
    int pi = idx[k];
    const long long guard = std::max<long long>(max_den, 1) + 64;
    for (long long v = f.param_min[pi];; ++v) {
      if (v - f.param_min[pi] > guard)
        throw internal_error("slot " + slot.text + ": denominator not increasing");
      params[pi] = v;
      if (slot.den->eval(params) > max_den) break;
      self(self, k + 1);
    }
    params[pi] = f.param_min[pi];
  };
  rec(rec, 0);
  return out;
}

}  // namespace

std::vector<FamilyMatch> match_families(const NormalizedDivisor& d, int table) {
  std::vector<FamilyMatch> matches;
  auto target = d.sorted_fractions();
  long long max_den = 1;
  for (const auto& a : target) max_den = std::max(max_den, to_int64(a.den()));

  for (const Family& f : families(table)) {
    if (f.s != d.s()) continue;
    // Candidate values per slot, restricted to 0 or a member of the target
    // multiset.
    std::vector<std::vector<SlotChoice>> cands(f.slots.size());
    bool feasible = true;
    for (std::size_t si = 0; si < f.slots.size() && feasible; ++si) {
      for (auto& c : slot_choices(f, f.slots[si], max_den)) {
        if (c.value.is_zero() ||
            std::find(target.begin(), target.end(), c.value) != target.end())
          cands[si].push_back(std::move(c));
      }
      if (cands[si].empty()) feasible = false;
    }
    if (!feasible) continue;

    std::vector<Rational> remaining = target;
    std::vector<long long> params(f.params.size(), 0);
    auto rec = [&](auto&& self, std::size_t si) -> void {
      if (si == f.slots.size()) {
        if (remaining.empty()) matches.push_back(FamilyMatch{f.id, params});
        return;
      }
      for (const auto& c : cands[si]) {
        bool took = false;
        std::vector<Rational>::iterator it;
        if (!c.value.is_zero()) {
          it = std::find(remaining.begin(), remaining.end(), c.value);
          if (it == remaining.end()) continue;
          remaining.erase(it);
          took = true;
        }
        for (std::size_t k = 0; k < c.sub_params.size(); ++k)
          params[f.slots[si].param_indices[k]] = c.sub_params[k];
        self(self, si + 1);
        if (took) remaining.push_back(c.value);
      }
    };
    rec(rec, 0);
  }
  return matches;
}

std::vector<Rational> proper_fractions(long long max_denominator) {
  std::vector<Rational> out;
  for (long long den = 2; den <= max_denominator; ++den)
    for (long long num = 1; num < den; ++num)
      if (std::gcd(num, den) == 1) out.emplace_back(num, den);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Candidate {
  long long s;
  std::vector<int> picks;  // nondecreasing indices into the fraction list
};

std::vector<Candidate> corpus_candidates(const EnumerationBounds& bounds,
                                         const std::vector<Rational>& fractions) {
  // Guard against accidentally huge enumerations.
  double count = 0;
  for (long long k = 0; k <= bounds.max_points; ++k) {
    double c = 1;
    for (long long i = 0; i < k; ++i)
      c = c * (static_cast<double>(fractions.size()) + i) / (i + 1);
    count += c;
  }
  count *= static_cast<double>(bounds.max_s);
  if (count > 5e7)
    throw domain_error("corpus enumeration too large (" + std::to_string(count) + " candidates)");

  std::vector<Candidate> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<int> picks;
  auto rec = [&](auto&& self, int from, long long left) -> void {
    for (long long s = 1; s <= bounds.max_s; ++s) out.push_back({s, picks});
    if (left == 0) return;
    for (int i = from; i < static_cast<int>(fractions.size()); ++i) {
      picks.push_back(i);
      self(self, i, left - 1);
      picks.pop_back();
    }
  };
  rec(rec, 0, bounds.max_points);
  return out;
}

NormalizedDivisor candidate_divisor(const Candidate& c, const std::vector<Rational>& fractions) {
  std::vector<Rational> fr;
  fr.reserve(c.picks.size());
  for (int i : c.picks) fr.push_back(fractions[i]);
  return NormalizedDivisor(c.s, std::move(fr));
}

bool supported_regime(const NormalizedDivisor& d) {
  return d.s() >= 2 || (d.s() == 1 && d.r() >= 3);
}

int resolve_workers(int workers) {
  if (workers > 0) return workers;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

}  // namespace

void for_each_corpus_divisor(const EnumerationBounds& bounds,
                             const std::function<void(const NormalizedDivisor&)>& fn) {
  auto fractions = proper_fractions(bounds.max_denominator);
  for (const auto& c : corpus_candidates(bounds, fractions))
    fn(candidate_divisor(c, fractions));
}

ClassificationReport enumerate_and_verify(const EnumerationBounds& bounds, int target_e,
                                          int workers) {
  if (target_e != 3 && target_e != 4)
    throw domain_error("enumerate_and_verify: target multiplicity must be 3 or 4");
  auto fractions = proper_fractions(bounds.max_denominator);
  auto candidates = corpus_candidates(bounds, fractions);

  auto process_range = [&](std::size_t lo, std::size_t hi) {
    ClassificationReport part;
    part.target_e = target_e;
    for (std::size_t i = lo; i < hi; ++i) {
      ++part.enumerated;
      NormalizedDivisor d = candidate_divisor(candidates[i], fractions);
      if (!d.is_ample()) continue;
      ++part.ample;
      if (!is_rational_singularity(d).rational) continue;
      ++part.rational;
      if (!supported_regime(d)) continue;
      DualGraph g = dual_graph(d);
      FundamentalCycle z = cycle_with_central(d, min_nonnegative_multiple(d));
      if (multiplicity_value(g, z) != target_e) continue;
      ++part.of_target_multiplicity;
      auto matches = match_families(d, target_e);
      if (matches.empty()) {
        part.mismatches.push_back(d.str());
      } else {
        ++part.matched;
        for (const auto& m : matches) ++part.family_coverage[m.family_id];
      }
    }
    return part;
  };

  ClassificationReport report;
  report.target_e = target_e;
  report.bounds = bounds;

  int n_workers = resolve_workers(workers);
  if (n_workers <= 1 || candidates.size() < 1024) {
    ClassificationReport part = process_range(0, candidates.size());
    report.enumerated = part.enumerated;
    report.ample = part.ample;
    report.rational = part.rational;
    report.of_target_multiplicity = part.of_target_multiplicity;
    report.matched = part.matched;
    report.mismatches = std::move(part.mismatches);
    report.family_coverage = std::move(part.family_coverage);
  } else {
    std::vector<ClassificationReport> parts(n_workers);
    std::vector<std::thread> threads;
    std::size_t chunk = (candidates.size() + n_workers - 1) / n_workers;
    for (int w = 0; w < n_workers; ++w) {
      std::size_t lo = std::min(candidates.size(), w * chunk);
      std::size_t hi = std::min(candidates.size(), lo + chunk);
      threads.emplace_back([&, w, lo, hi]() { parts[w] = process_range(lo, hi); });
    }
    for (auto& t : threads) t.join();
    for (const auto& part : parts) {
      report.enumerated += part.enumerated;
      report.ample += part.ample;
      report.rational += part.rational;
      report.of_target_multiplicity += part.of_target_multiplicity;
      report.matched += part.matched;
      report.mismatches.insert(report.mismatches.end(), part.mismatches.begin(),
                               part.mismatches.end());
      for (const auto& [id, n] : part.family_coverage) report.family_coverage[id] += n;
    }
  }

  // Table direction: every bounded instantiation must be an ample rational
  // singularity of the target multiplicity.
  for (const Family& f : families(target_e)) {
    for_each_instantiation(
        f, bounds.max_param, bounds.max_family_denominator,
        [&](const std::vector<long long>& params, const NormalizedDivisor& d) {
          ++report.instantiations;
          std::string tag = f.id + param_string(f, params) + " = " + d.str();
          if (!d.is_ample()) {
            report.instantiation_failures.push_back(tag + ": not ample");
            return;
          }
          if (!is_rational_singularity(d).rational) {
            report.instantiation_failures.push_back(tag + ": not a rational singularity");
            return;
          }
          if (!supported_regime(d)) {
            report.instantiation_failures.push_back(tag + ": unsupported graph regime");
            return;
          }
          DualGraph g = dual_graph(d);
          FundamentalCycle z = cycle_with_central(d, min_nonnegative_multiple(d));
          long long e = multiplicity_value(g, z);
          if (e != target_e)
            report.instantiation_failures.push_back(tag + ": multiplicity " + std::to_string(e));
        });
  }
  return report;
}

ThresholdReport threshold_report(int target_e, const std::vector<long long>& primes,
                                 long long max_param, long long max_denominator, int workers) {
  if (target_e != 3 && target_e != 4)
    throw domain_error("threshold_report: target multiplicity must be 3 or 4");
  for (long long p : primes)
    if (!is_prime(p)) throw domain_error("threshold_report: " + std::to_string(p) + " is not prime");

  ThresholdReport report;
  report.target_e = target_e;
  report.primes = primes;
  report.max_param = max_param;
  report.max_denominator = max_denominator;

  struct Item {
    const Family* family;
    std::vector<long long> params;
  };
  std::vector<Item> items;
  for (const Family& f : families(target_e))
    for_each_instantiation(f, max_param, max_denominator,
                           [&](const std::vector<long long>& params, const NormalizedDivisor&) {
                             items.push_back({&f, params});
                           });
  report.instantiations = static_cast<long long>(items.size());

  using Failures = std::map<long long, std::vector<ThresholdFailure>>;
  auto process_range = [&](std::size_t lo, std::size_t hi) {
    Failures out;
    for (std::size_t i = lo; i < hi; ++i) {
      const auto& item = items[i];
      NormalizedDivisor d = instantiate_family(*item.family, item.params);
      if (!is_rational_singularity(d).rational)
        throw internal_error("threshold_report: table instantiation " + d.str() +
                             " is not a rational singularity");
      auto sd = detail::SmallDivisor::from(d);
      long long n_max = period(d);
      for (long long p : primes) {
        long long witness = detail::first_criterion_failure(sd, p, n_max);
        if (witness != 0)
          out[p].push_back(ThresholdFailure{p, item.family->id, item.params, d.str(),
                                            detail::criterion_value_small(sd, p, witness)});
      }
    }
    return out;
  };

  int n_workers = resolve_workers(workers);
  std::vector<Failures> parts;
  if (n_workers <= 1 || items.size() < 256) {
    parts.push_back(process_range(0, items.size()));
  } else {
    parts.resize(n_workers);
    std::vector<std::thread> threads;
    std::size_t chunk = (items.size() + n_workers - 1) / n_workers;
    for (int w = 0; w < n_workers; ++w) {
      std::size_t lo = std::min(items.size(), w * chunk);
      std::size_t hi = std::min(items.size(), lo + chunk);
      threads.emplace_back([&, w, lo, hi]() { parts[w] = process_range(lo, hi); });
    }
    for (auto& t : threads) t.join();
  }
  for (long long p : primes) report.failures_by_prime[p];
  for (const auto& part : parts)
    for (const auto& [p, fails] : part)
      report.failures_by_prime[p].insert(report.failures_by_prime[p].end(), fails.begin(),
                                         fails.end());
  return report;
}

namespace {

nlohmann::ordered_json bounds_to_json(const EnumerationBounds& b) {
  return nlohmann::ordered_json{{"max_s", b.max_s},
                                {"max_points", b.max_points},
                                {"max_denominator", b.max_denominator},
                                {"max_param", b.max_param},
                                {"max_family_denominator", b.max_family_denominator}};
}

nlohmann::ordered_json failure_to_json(const ThresholdFailure& f) {
  nlohmann::ordered_json j;
  j["family"] = f.family_id;
  j["params"] = f.params;
  j["divisor"] = f.divisor;
  j["witness"] = {{"n", f.witness.n},
                  {"p", f.witness.p},
                  {"deg_neg", f.witness.deg_neg},
                  {"support_size", f.witness.support_size},
                  {"value", f.witness.value}};
  return j;
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string report_to_json(const ClassificationReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = "pdring.classification/1";
  j["target_multiplicity"] = r.target_e;
  j["bounds"] = bounds_to_json(r.bounds);
  j["enumerated"] = r.enumerated;
  j["ample"] = r.ample;
  j["rational"] = r.rational;
  j["of_target_multiplicity"] = r.of_target_multiplicity;
  j["matched"] = r.matched;
  j["mismatches"] = r.mismatches;
  j["instantiations"] = r.instantiations;
  j["instantiation_failures"] = r.instantiation_failures;
  j["family_coverage"] = nlohmann::ordered_json::object();
  for (const Family& f : families(r.target_e)) {
    auto it = r.family_coverage.find(f.id);
    j["family_coverage"][f.id] = it == r.family_coverage.end() ? 0 : it->second;
  }
  j["clean"] = r.clean();
  return dump(j);
}

std::string report_to_text(const ClassificationReport& r) {
  std::ostringstream out;
  out << "classification check, target multiplicity " << r.target_e << "\n";
  out << "  corpus: " << r.enumerated << " candidates, " << r.ample << " ample, " << r.rational
      << " rational, " << r.of_target_multiplicity << " of multiplicity " << r.target_e << ", "
      << r.matched << " matched\n";
  if (r.mismatches.empty()) {
    out << "  no divisor of multiplicity " << r.target_e << " outside the table\n";
  } else {
    out << "  MISMATCHES (" << r.mismatches.size() << "):\n";
    for (const auto& m : r.mismatches) out << "    " << m << "\n";
  }
  out << "  table: " << r.instantiations << " instantiations checked\n";
  if (r.instantiation_failures.empty()) {
    out << "  every instantiation is rational with multiplicity " << r.target_e << "\n";
  } else {
    out << "  INSTANTIATION FAILURES (" << r.instantiation_failures.size() << "):\n";
    for (const auto& m : r.instantiation_failures) out << "    " << m << "\n";
  }
  out << "  family coverage:\n";
  for (const Family& f : families(r.target_e)) {
    auto it = r.family_coverage.find(f.id);
    out << "    " << f.id << ": " << (it == r.family_coverage.end() ? 0 : it->second) << "\n";
  }
  return out.str();
}

std::string report_to_json(const ThresholdReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = "pdring.threshold/1";
  j["target_multiplicity"] = r.target_e;
  j["primes"] = r.primes;
  j["max_param"] = r.max_param;
  j["max_denominator"] = r.max_denominator;
  j["instantiations"] = r.instantiations;
  j["failures_by_prime"] = nlohmann::ordered_json::object();
  for (const auto& [p, fails] : r.failures_by_prime) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& f : fails) arr.push_back(failure_to_json(f));
    j["failures_by_prime"][std::to_string(p)] = {{"count", fails.size()},
                                                 {"failures", std::move(arr)}};
  }
  return dump(j);
}

std::string report_to_text(const ThresholdReport& r) {
  std::ostringstream out;
  out << "threshold check, target multiplicity " << r.target_e << ", " << r.instantiations
      << " instantiations, parameters <= " << r.max_param;
  if (r.max_denominator > 0) out << ", denominators <= " << r.max_denominator;
  out << "\n";
  for (const auto& [p, fails] : r.failures_by_prime) {
    if (fails.empty()) {
      out << "  p = " << p << ": all F-rational\n";
    } else {
      out << "  p = " << p << ": " << fails.size() << " failures, e.g. " << fails.front().divisor
          << " (" << fails.front().family_id << ", witness n=" << fails.front().witness.n
          << ", value " << fails.front().witness.value << ")\n";
    }
  }
  return out.str();
}

}  // namespace pdr
