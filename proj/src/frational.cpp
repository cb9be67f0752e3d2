#include "pdr/frational.hpp"

#include <limits>

namespace pdr {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

std::vector<long long> primes_up_to(long long n) {
  std::vector<long long> out;
  for (long long p = 2; p <= n; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

namespace detail {

BnRecord criterion_value_small(const SmallDivisor& sd, long long p, long long n) {
  BnRecord rec;
  rec.n = n;
  rec.p = p;
  __int128 deg_neg = -static_cast<__int128>(p) * n * sd.s;
  long long support = 0;
  rec.coefficients.reserve(sd.frac.size());
  for (const auto& [c, d] : sd.frac) {
    __int128 pn_c = static_cast<__int128>(p) * n * c;
    __int128 floor_pn = pn_c / d;  // positive operands
    __int128 n_c = static_cast<__int128>(n) * c;
    __int128 coeff = floor_pn - static_cast<__int128>(p) * (n_c / d);
    deg_neg += floor_pn;
    long long coeff64 = static_cast<long long>(coeff);
    rec.coefficients.push_back(coeff64);
    if (coeff64 != 0) ++support;
  }
  constexpr __int128 lo = std::numeric_limits<long long>::min();
  constexpr __int128 hi = std::numeric_limits<long long>::max();
  if (deg_neg < lo || deg_neg > hi) throw std::overflow_error("criterion_value overflow");
  rec.deg_neg = static_cast<long long>(deg_neg);
  rec.support_size = support;
  rec.value = checked_add(rec.deg_neg, rec.support_size);
  return rec;
}

long long first_criterion_failure(const SmallDivisor& sd, long long p, long long n_max) {
  for (long long n = 1; n <= n_max; ++n) {
    __int128 value = -static_cast<__int128>(p) * n * sd.s;
    for (const auto& [c, d] : sd.frac) {
      __int128 floor_pn = static_cast<__int128>(p) * n * c / d;
      value += floor_pn;
      if (floor_pn != p * (static_cast<__int128>(n) * c / d)) ++value;  // support point
    }
    if (value >= 2) return n;
  }
  return 0;
}

}  // namespace detail

BnRecord criterion_value(const NormalizedDivisor& d, long long p, long long n) {
  if (!is_prime(p)) throw domain_error("criterion_value: p = " + std::to_string(p) + " is not prime");
  if (n < 1) throw domain_error("criterion_value: n must be >= 1");
  return detail::criterion_value_small(detail::SmallDivisor::from(d), p, n);
}

FRationalVerdict is_f_rational(const NormalizedDivisor& d, long long p) {
  if (!is_prime(p)) throw domain_error("is_f_rational: p = " + std::to_string(p) + " is not prime");
  if (!is_rational_singularity(d).rational)
    throw precondition_error("is_f_rational: " + d.str() + " is not a rational singularity");
  auto sd = detail::SmallDivisor::from(d);
  long long witness = detail::first_criterion_failure(sd, p, period(d));
  if (witness == 0) return FRationalVerdict{true, std::nullopt};
  return FRationalVerdict{false, detail::criterion_value_small(sd, p, witness)};
}

std::set<long long> failing_primes(const NormalizedDivisor& d) {
  if (!is_rational_singularity(d).rational)
    throw precondition_error("failing_primes: " + d.str() + " is not a rational singularity");
  long long m = period(d);
  std::set<long long> candidates;
  for (long long q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      candidates.insert(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) candidates.insert(m);
  std::set<long long> failing;
  for (long long p : candidates)
    if (!is_f_rational(d, p).f_rational) failing.insert(p);
  return failing;
}

}  // namespace pdr
