#include "pdr/hj.hpp"

namespace pdr {

HjSequence::HjSequence(std::vector<long long> entries) : entries_(std::move(entries)) {
  for (long long b : entries_)
    if (b < 2) throw domain_error("HjSequence: entry " + std::to_string(b) + " < 2");
}

TSignature::TSignature(std::vector<long long> entries) : entries_(std::move(entries)) {
  for (long long b : entries_)
    if (b < 3) throw domain_error("TSignature: entry " + std::to_string(b) + " < 3");
}

HjSequence hj_expand(const Rational& x) {
  if (x <= Rational(1)) throw domain_error("hj_expand: input must be > 1, got " + x.str());
  std::vector<long long> entries;
  Rational rest = x;
  for (;;) {
    mpz_class b = rest.ceil();
    entries.push_back(to_int64(b));
    if (rest.is_integer()) break;
    // 1/(b - rest) is again > 1 and has a strictly smaller denominator,
    // so the loop terminates.
    rest = (Rational(b, 1) - rest).reciprocal();
  }
  return HjSequence(std::move(entries));
}

Rational hj_eval(const HjSequence& seq) {
  if (seq.empty()) throw domain_error("hj_eval: empty sequence");
  const auto& e = seq.entries();
  Rational value(e.back());
  for (std::size_t i = e.size() - 1; i-- > 0;)
    value = Rational(e[i]) - value.reciprocal();
  return value;
}

std::vector<Rational> hj_tails(const HjSequence& seq) {
  if (seq.empty()) throw domain_error("hj_tails: empty sequence");
  const auto& e = seq.entries();
  std::vector<Rational> tails(e.size());
  Rational value(e.back());
  tails.back() = value;
  for (std::size_t i = e.size() - 1; i-- > 0;) {
    value = Rational(e[i]) - value.reciprocal();
    tails[i] = value;
  }
  return tails;
}

TSignature t_signature(const HjSequence& seq) {
  if (seq.empty()) throw domain_error("t_signature: empty sequence");
  std::vector<long long> sig;
  for (long long b : seq.entries())
    if (b != 2) sig.push_back(b);
  return TSignature(std::move(sig));
}

Rational hj_closed_form_two_n_two(long long a, long long n, long long b) {
  if (n < 2) throw domain_error("hj_closed_form_two_n_two: n must be >= 2");
  if (a < 0 || b < 0) throw domain_error("hj_closed_form_two_n_two: parameters must be >= 0");
  mpz_class A = to_mpz(a), N = to_mpz(n), B = to_mpz(b);
  mpz_class num = ((A + 1) * N - (2 * A + 1)) * B + (A + 1) * N - A;
  mpz_class den = (A * N - (2 * A - 1)) * B + A * N - (A - 1);
  return Rational(num, den);
}

Rational hj_closed_form_two3two3two(long long a, long long b, long long c) {
  if (a < 0 || b < 0 || c < 0)
    throw domain_error("hj_closed_form_two3two3two: parameters must be >= 0");
  mpz_class A = to_mpz(a), B = to_mpz(b), C = to_mpz(c);
  mpz_class num = ((A + 2) * B + 3 * A + 5) * C + (2 * A + 4) * B + 5 * A + 8;
  mpz_class den = ((A + 1) * B + 3 * A + 2) * C + (2 * A + 2) * B + 5 * A + 3;
  return Rational(num, den);
}

}  // namespace pdr
