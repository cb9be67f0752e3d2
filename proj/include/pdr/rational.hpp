// Exact rational scalar used throughout: unbounded integers, always in
// lowest terms, denominator > 0, zero represented as 0/1.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace pdr {

// gmpxx lacks long long overloads; long is 64-bit on every platform this
// library targets.
static_assert(sizeof(long) == 8, "64-bit long required");
inline mpz_class to_mpz(long long v) { return mpz_class(static_cast<long>(v)); }

class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long long n) : q_(static_cast<long>(n)) {}  // NOLINT: implicit on purpose
  Rational(long long num, long long den) : q_(static_cast<long>(num), static_cast<long>(den)) {
    canonicalize();
  }
  Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) { canonicalize(); }
  explicit Rational(const mpq_class& q) : q_(q) { canonicalize(); }

  // Accepts "n", "n/d", optional leading '-'.
  static Rational parse(const std::string& text);

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  mpz_class floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
  }
  mpz_class ceil() const {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
  }

  Rational reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    return Rational(q_.get_den(), q_.get_num());
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
  }
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) >= 0; }

  // "n" for integers, "n/d" otherwise.
  std::string str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

 private:
  void canonicalize() {
    if (q_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    q_.canonicalize();
  }

  mpq_class q_;
};

// Checked narrowing for combinatorial outputs (graph weights, cycle
// coefficients, degrees); values beyond int64 are outside the supported
// range of the downstream algorithms.
long long to_int64(const mpz_class& z);

long long checked_mul(long long a, long long b);
long long checked_add(long long a, long long b);

// Mathematical floor/ceil of a/b for b > 0 (round toward -inf / +inf).
long long floor_div(long long a, long long b);
long long ceil_div(long long a, long long b);

}  // namespace pdr
