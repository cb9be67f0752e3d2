// Hirzebruch-Jung continued fractions over exact rationals.
//
// [[b1,...,bm]] = b1 - 1/(b2 - 1/(... - 1/bm)).  Every rational x > 1 has a
// unique expansion with all entries >= 2; it encodes the chain of rational
// curves resolving a cyclic quotient singularity, so entries double as
// negated self-intersection numbers elsewhere in this library.
#pragma once

#include <vector>

#include "pdr/errors.hpp"
#include "pdr/rational.hpp"

namespace pdr {

// Finite sequence of integers >= 2.  May be empty only where an empty
// signature-like object is meaningful; the expansion of a rational never is.
class HjSequence {
 public:
  HjSequence() = default;
  explicit HjSequence(std::vector<long long> entries);

  const std::vector<long long>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  long long operator[](std::size_t i) const { return entries_[i]; }

  friend bool operator==(const HjSequence&, const HjSequence&) = default;

 private:
  std::vector<long long> entries_;
};

// Ordered subsequence of the entries that exceed 2; empty iff all entries
// were 2.  Used to sort classification rows into their canonical order.
class TSignature {
 public:
  TSignature() = default;
  explicit TSignature(std::vector<long long> entries);

  const std::vector<long long>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const TSignature&, const TSignature&) = default;
  friend bool operator<(const TSignature& a, const TSignature& b) {
    return a.entries_ < b.entries_;
  }

 private:
  std::vector<long long> entries_;
};

// Unique all->=2 expansion of x > 1.  Throws domain_error for x <= 1.
HjSequence hj_expand(const Rational& x);

// Right-to-left evaluation; result is > 1 for any nonempty all->=2 input.
// Throws domain_error on the empty sequence.
Rational hj_eval(const HjSequence& seq);

// Suffix values e_j = [[b_j,...,b_m]]; same length as the input, first
// element equals hj_eval(seq), last equals b_m.
std::vector<Rational> hj_tails(const HjSequence& seq);

TSignature t_signature(const HjSequence& seq);

// Closed forms for the two sequence shapes that appear in the
// classification tables, evaluated directly from their explicit fractions:
//
//   [[(2)^a, n, (2)^b]]      (n >= 2)
//   [[(2)^a, 3, (2)^b, 3, (2)^c]]
Rational hj_closed_form_two_n_two(long long a, long long n, long long b);
Rational hj_closed_form_two3two3two(long long a, long long b, long long c);

}  // namespace pdr
