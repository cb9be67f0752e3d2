// One-stop analysis: normalize, decide rationality, build the resolution
// data, sweep the requested primes through the F-rationality criterion,
// compute the failing-prime set and table matches, and optionally replay
// the independent cross-checks.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pdr/classify.hpp"
#include "pdr/divisor.hpp"
#include "pdr/frational.hpp"
#include "pdr/resolution.hpp"

namespace pdr {

struct AnalysisOptions {
  std::vector<long long> primes;
  bool verify = false;       // run verify_cycle and the theorem cross-checks
  bool match_tables = true;  // match against the e=3 / e=4 tables
};

struct PrimeVerdict {
  long long p = 0;
  FRationalVerdict verdict;
};

struct AnalysisReport {
  std::string input_text;
  QDivisor input;
  std::optional<NormalizedDivisor> normalized;
  Rational degree;
  long long period = 0;
  RationalityVerdict rationality;

  // Present when the divisor is rational and the graph regime is
  // supported; skip_reason explains absence otherwise.
  std::optional<DualGraph> graph;
  std::optional<FundamentalCycle> cycle;
  std::optional<long long> multiplicity;
  std::string skip_reason;

  std::vector<PrimeVerdict> prime_verdicts;           // rational divisors only
  std::optional<std::set<long long>> failing;         // rational divisors only
  std::vector<FamilyMatch> matches_e3, matches_e4;

  bool verified = false;  // true when --verify ran (it throws on failure)
};

// Throws domain_error when the normalized divisor is not ample; --verify
// failures throw internal_error.
AnalysisReport analyze(const std::string& input_text, const QDivisor& d,
                       const AnalysisOptions& options);

std::string report_to_json(const AnalysisReport& r);
std::string report_to_text(const AnalysisReport& r);

}  // namespace pdr
