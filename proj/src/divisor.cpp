#include "pdr/divisor.hpp"

#include <algorithm>
#include <limits>

namespace pdr {

QDivisor::QDivisor(std::map<std::string, Rational> terms) : terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

void QDivisor::add(const std::string& label, const Rational& coeff) {
  auto [it, inserted] = terms_.emplace(label, coeff);
  if (!inserted) it->second = it->second + coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational QDivisor::degree() const {
  Rational sum(0);
  for (const auto& [label, coeff] : terms_) sum = sum + coeff;
  return sum;
}

mpz_class QDivisor::deg_floor_raw(long long n) const {
  mpz_class sum(0);
  for (const auto& [label, coeff] : terms_)
    sum += (Rational(n) * coeff).floor();
  return sum;
}

NormalizedDivisor::NormalizedDivisor(long long s, std::vector<Rational> fractions)
    : s_(s), fractions_(std::move(fractions)) {
  for (const auto& a : fractions_)
    if (a <= Rational(0) || a >= Rational(1))
      throw domain_error("NormalizedDivisor: fraction " + a.str() + " not in (0,1)");
}

Rational NormalizedDivisor::degree() const {
  Rational sum(0);
  for (const auto& a : fractions_) sum = sum + a;
  return Rational(s_) - sum;
}

std::vector<Rational> NormalizedDivisor::sorted_fractions() const {
  auto copy = fractions_;
  std::sort(copy.begin(), copy.end());
  return copy;
}

bool operator==(const NormalizedDivisor& a, const NormalizedDivisor& b) {
  return a.s_ == b.s_ && a.sorted_fractions() == b.sorted_fractions();
}

std::string NormalizedDivisor::str() const {
  std::string out = "(" + std::to_string(s_) + ";";
  for (const auto& a : fractions_) out += " " + a.str();
  out += ")";
  return out;
}

NormalizedDivisor normalize(const QDivisor& d) {
  mpz_class s(0);
  std::vector<Rational> fractions;
  for (const auto& [label, coeff] : d.terms()) {
    mpz_class up = coeff.ceil();
    s += up;
    Rational frac = Rational(up, 1) - coeff;
    if (!frac.is_zero()) fractions.push_back(frac);
  }
  std::sort(fractions.begin(), fractions.end());
  return NormalizedDivisor(to_int64(s), std::move(fractions));
}

long long deg_floor(const NormalizedDivisor& d, long long n) {
  if (n < 1) throw domain_error("deg_floor: n must be >= 1");
  mpz_class sum = to_mpz(n) * to_mpz(d.s());
  for (const auto& a : d.fractions())
    sum -= (Rational(n) * a).ceil();
  return to_int64(sum);
}

long long period(const NormalizedDivisor& d) {
  mpz_class l(1);
  for (const auto& a : d.fractions())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.den().get_mpz_t());
  return to_int64(l);
}

RationalityVerdict is_rational_singularity(const NormalizedDivisor& d) {
  if (!d.is_ample())
    throw domain_error("is_rational_singularity: divisor is not ample: " + d.str());
  auto sd = detail::SmallDivisor::from(d);
  long long n_max = period(d);
  for (long long n = 1; n <= n_max; ++n) {
    long long v = sd.deg_floor(n);
    if (v <= -2) return RationalityVerdict{false, n, v};
  }
  return RationalityVerdict{true, std::nullopt, std::nullopt};
}

namespace detail {

SmallDivisor SmallDivisor::from(const NormalizedDivisor& d) {
  SmallDivisor sd;
  sd.s = d.s();
  sd.frac.reserve(d.r());
  for (const auto& a : d.fractions())
    sd.frac.emplace_back(to_int64(a.num()), to_int64(a.den()));
  return sd;
}

long long SmallDivisor::deg_floor(long long n) const {
  __int128 sum = static_cast<__int128>(s) * n;
  for (const auto& [c, dnm] : frac) {
    __int128 prod = static_cast<__int128>(n) * c;
    sum -= (prod + dnm - 1) / dnm;  // ceil for positive operands
  }
  constexpr __int128 lo = std::numeric_limits<long long>::min();
  constexpr __int128 hi = std::numeric_limits<long long>::max();
  if (sum < lo || sum > hi) throw std::overflow_error("deg_floor overflow");
  return static_cast<long long>(sum);
}

}  // namespace detail

}  // namespace pdr
