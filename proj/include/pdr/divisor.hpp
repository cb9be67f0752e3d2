// Q-divisors on the projective line and their normalized standard form
//
//   D = s*P0 - sum_i (c_i/d_i) * P_i,     0 < c_i/d_i < 1,
//
// together with the exact computation of deg[nD] and the rational-
// singularity test (deg[nD] >= -1 for every n >= 1, decided by one period).
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdr/errors.hpp"
#include "pdr/rational.hpp"

namespace pdr {

// Finite formal sum of labeled points with rational coefficients.
// Zero coefficients are dropped on construction.
class QDivisor {
 public:
  QDivisor() = default;
  explicit QDivisor(std::map<std::string, Rational> terms);

  // Adds coeff to the label's coefficient (creating or erasing as needed).
  void add(const std::string& label, const Rational& coeff);

  const std::map<std::string, Rational>& terms() const { return terms_; }
  Rational degree() const;

  // deg[nD] computed directly on the raw coefficients; the oracle used to
  // test that normalization preserves every deg[nD].
  mpz_class deg_floor_raw(long long n) const;

 private:
  std::map<std::string, Rational> terms_;
};

// The pair (s; multiset of fractions) every divisor reduces to; the only
// data any invariant in this library depends on.  Fraction order is
// preserved as given (it drives branch order in the dual graph); equality
// is multiset equality.
class NormalizedDivisor {
 public:
  NormalizedDivisor(long long s, std::vector<Rational> fractions);

  long long s() const { return s_; }
  const std::vector<Rational>& fractions() const { return fractions_; }
  std::size_t r() const { return fractions_.size(); }
  Rational degree() const;
  bool is_ample() const { return degree() > Rational(0); }

  std::vector<Rational> sorted_fractions() const;
  friend bool operator==(const NormalizedDivisor& a, const NormalizedDivisor& b);

  // "(s; a_1, ..., a_r)" with fractions in stored order.
  std::string str() const;

 private:
  long long s_;
  std::vector<Rational> fractions_;
};

struct RationalityVerdict {
  bool rational = false;
  // Present iff not rational: smallest n with deg[nD] <= -2 and that value.
  std::optional<long long> witness_n;
  std::optional<long long> witness_value;
};

// Moves all integer parts onto a fresh central point; each coefficient a
// contributes ceil(a) to s and the fractional part ceil(a) - a (if nonzero)
// to the fraction list, sorted ascending.  Preserves degree and deg[nD]
// for every n.  The result may be non-ample; downstream operations reject
// that themselves.
NormalizedDivisor normalize(const QDivisor& d);

// deg[nD] = n*s - sum_i ceil(n * c_i/d_i), n >= 1.
long long deg_floor(const NormalizedDivisor& d, long long n);

// Smallest N >= 1 with N*D integral: lcm of the fraction denominators.
long long period(const NormalizedDivisor& d);

// deg[nD] >= -1 for all n >= 1, decided on n = 1..period(d); sound because
// deg[(n+N)D] = deg[nD] + N*deg(D) and N*deg(D) is a positive integer.
// Requires an ample divisor (domain_error otherwise).
RationalityVerdict is_rational_singularity(const NormalizedDivisor& d);

namespace detail {

// int64 view of a normalized divisor for the hot scan loops; products are
// formed in 128-bit so any divisor whose parts fit in int64 is safe.
struct SmallDivisor {
  long long s = 0;
  std::vector<std::pair<long long, long long>> frac;  // (c_i, d_i), 0 < c < d

  static SmallDivisor from(const NormalizedDivisor& d);
  long long deg_floor(long long n) const;
};

}  // namespace detail

}  // namespace pdr
