// F-rationality in characteristic p for rational singularities, decided by
// the degree criterion on B_n = -p[-nD] + [-pnD]:
//
//   R is F-rational  <=>  deg[-pnD] + deg(B_n)_red <= 1  for all n >= 1.
//
// On the normalized form the coefficient of B_n at point i is
// floor(p*n*a_i) - p*floor(n*a_i) (zero at the central point), and
// deg[-pnD] = -pns + sum_i floor(p*n*a_i).  B_{n+N} = B_n for the period N
// and deg[-p(n+N)D] only decreases, so n = 1..N decides.
#pragma once

#include <optional>
#include <set>
#include <vector>

#include "pdr/divisor.hpp"

namespace pdr {

struct BnRecord {
  long long n = 0;
  long long p = 0;
  long long support_size = 0;             // deg(B_n)_red
  long long deg_neg = 0;                  // deg[-pnD]
  long long value = 0;                    // their sum
  std::vector<long long> coefficients;    // B_n coefficient per point, audit trail
};

struct FRationalVerdict {
  bool f_rational = false;
  std::optional<BnRecord> witness;  // smallest failing n when not F-rational
};

// Exact B_n data for one (p, n); p must be prime, n >= 1.
BnRecord criterion_value(const NormalizedDivisor& d, long long p, long long n);

// Requires is_rational_singularity(d) (precondition_error otherwise).
FRationalVerdict is_f_rational(const NormalizedDivisor& d, long long p);

// The exact finite set of primes where d fails F-rationality.  Failures
// can only occur at primes dividing some denominator, so exactly the prime
// divisors of period(d) are tested.
std::set<long long> failing_primes(const NormalizedDivisor& d);

bool is_prime(long long n);
std::vector<long long> primes_up_to(long long n);

namespace detail {

// Inner-loop form of criterion_value over the int64 view; validation of p
// and the rationality precondition is the caller's job.
BnRecord criterion_value_small(const SmallDivisor& sd, long long p, long long n);

// Smallest n in [1, n_max] with criterion value >= 2, or 0 when the whole
// range passes.  Allocation-free version of the sweep in is_f_rational.
long long first_criterion_failure(const SmallDivisor& sd, long long p, long long n_max);

}  // namespace detail

}  // namespace pdr
