// The multiplicity-3 and multiplicity-4 classification tables as data,
// instantiation and matching against them, exhaustive cross-checking of
// the tables at bounded scale, and the characteristic thresholds (p >= 7
// for e = 3, p >= 11 for e = 4, both sharp).
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "pdr/divisor.hpp"
#include "pdr/frational.hpp"
#include "pdr/resolution.hpp"

namespace pdr {

namespace detail {
struct Expr;
}

// One fraction slot of a family: numerator/denominator as integer
// expressions in the family's parameters, transcribed from the table.
// Denominators are built from nonnegative literals with + and * only, so
// they are nondecreasing in every parameter; slot values are reduced as
// printed (checked at instantiation).
struct Slot {
  std::string text;
  std::shared_ptr<const detail::Expr> num;
  std::shared_ptr<const detail::Expr> den;
  std::vector<int> param_indices;  // parameters appearing in this slot
};

struct Family {
  std::string id;     // positional: "e3.1".."e3.10", "e4.1".."e4.39"
  int table;          // 3 or 4
  long long s;
  std::vector<std::string> params;
  std::vector<long long> param_min;  // admissibility lower bound per parameter
  std::vector<Slot> slots;
};

const std::vector<Family>& e3_families();
const std::vector<Family>& e4_families();
const std::vector<Family>& families(int table);

struct FamilyMatch {
  std::string family_id;
  std::vector<long long> params;
  friend bool operator==(const FamilyMatch&, const FamilyMatch&) = default;
};

struct EnumerationBounds {
  long long max_s = 4;
  long long max_points = 5;
  long long max_denominator = 9;    // corpus fraction denominators
  long long max_param = 8;          // family parameter values
  long long max_family_denominator = 60;  // instantiated slot denominators, 0 = unbounded
};

// Evaluates the family's slots at the given parameters (admissible: each
// >= its lower bound), drops value-0 slots, and returns the normalized
// divisor.  Slot values must come out in [0,1) and already reduced;
// anything else is a transcription bug and throws internal_error.
NormalizedDivisor instantiate_family(const Family& f, const std::vector<long long>& params);

// Calls fn for every admissible parameter assignment with entries
// <= max_param whose instantiated slot denominators are all
// <= max_denominator (0 = unbounded).
void for_each_instantiation(const Family& f, long long max_param, long long max_denominator,
                            const std::function<void(const std::vector<long long>&,
                                                     const NormalizedDivisor&)>& fn);

// Reorders the fractions by the tables' convention: entries whose
// reciprocal has empty T-signature first, then by signature, ascending
// value within a class.
NormalizedDivisor canonical_order(const NormalizedDivisor& d);

// All (family, parameters) in the e3/e4 table whose instantiation equals d
// as a multiset.  Parameter search is bounded by the largest target
// denominator (slot denominators grow in every parameter).
std::vector<FamilyMatch> match_families(const NormalizedDivisor& d, int table);

// All reduced fractions c/d with 0 < c/d < 1 and d <= max_denominator,
// ascending.
std::vector<Rational> proper_fractions(long long max_denominator);

// Every (s; multiset) with 1 <= s <= max_s and up to max_points fractions
// drawn (with repetition) from proper_fractions(max_denominator), in a
// fixed deterministic order.  Includes non-ample combinations; consumers
// filter.
void for_each_corpus_divisor(const EnumerationBounds& bounds,
                             const std::function<void(const NormalizedDivisor&)>& fn);

struct ClassificationReport {
  int target_e = 3;
  EnumerationBounds bounds;
  // Corpus direction: every rational-singularity divisor of the target
  // multiplicity must match a family.
  long long enumerated = 0;   // all candidates, ample or not
  long long ample = 0;
  long long rational = 0;
  long long of_target_multiplicity = 0;
  long long matched = 0;
  std::vector<std::string> mismatches;  // unmatched divisors; must be empty
  std::map<std::string, long long> family_coverage;
  // Table direction: every bounded instantiation must be an ample rational
  // singularity of the target multiplicity.
  long long instantiations = 0;
  std::vector<std::string> instantiation_failures;  // must be empty

  bool clean() const { return mismatches.empty() && instantiation_failures.empty(); }
};

ClassificationReport enumerate_and_verify(const EnumerationBounds& bounds, int target_e,
                                          int workers = 0);

struct ThresholdFailure {
  long long p = 0;
  std::string family_id;
  std::vector<long long> params;
  std::string divisor;
  BnRecord witness;
};

struct ThresholdReport {
  int target_e = 3;
  std::vector<long long> primes;
  long long max_param = 8;
  long long max_denominator = 0;
  long long instantiations = 0;
  std::map<long long, std::vector<ThresholdFailure>> failures_by_prime;

  bool prime_fails(long long p) const {
    auto it = failures_by_prime.find(p);
    return it != failures_by_prime.end() && !it->second.empty();
  }
};

// For each prime, sweeps every bounded instantiation of the target table
// through the F-rationality criterion and records the failures.
ThresholdReport threshold_report(int target_e, const std::vector<long long>& primes,
                                 long long max_param, long long max_denominator = 0,
                                 int workers = 0);

std::string report_to_json(const ClassificationReport& r);
std::string report_to_text(const ClassificationReport& r);
std::string report_to_json(const ThresholdReport& r);
std::string report_to_text(const ThresholdReport& r);

}  // namespace pdr
