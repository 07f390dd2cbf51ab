#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <vector>

#include "cstar/rational.hpp"

namespace cstar {

// Hirzebruch-Jung continued fractions:
//
//   [k_1,...,k_n] = k_1 - 1/(k_2 - 1/(... - 1/k_n))
//
// With every entry >= 2 the value is always > 1 and the map between such
// chains and rationals > 1 is a bijection.

// A resolution chain (k_1,...,k_n).  Non-empty, every entry >= 2.  By
// convention weights[0] = k_1 is the entry adjacent to the star center
// (respectively to sigma_inf for dual chains).
class Chain {
 public:
  explicit Chain(std::vector<std::int64_t> w) : w_(std::move(w)) {
    if (w_.empty()) throw std::invalid_argument("chain must be non-empty");
    for (auto k : w_)
      if (k < 2) throw std::invalid_argument("chain entry must be >= 2");
  }
  Chain(std::initializer_list<std::int64_t> w)
      : Chain(std::vector<std::int64_t>(w)) {}

  const std::vector<std::int64_t>& weights() const { return w_; }
  std::size_t size() const { return w_.size(); }
  std::int64_t operator[](std::size_t j) const { return w_[j]; }

  Chain reversed() const {
    std::vector<std::int64_t> v(w_.rbegin(), w_.rend());
    return Chain(std::move(v));
  }

  friend bool operator==(const Chain&, const Chain&) = default;
  friend std::strong_ordering operator<=>(const Chain& a, const Chain& b) {
    return a.w_ <=> b.w_;  // lexicographic; used to canonicalize chain lists
  }

 private:
  std::vector<std::int64_t> w_;
};

// Exact value of [w_1,...,w_n].  The raw-vector overload exists for callers
// that hold weight lists outside the Chain invariant; a zero intermediate
// denominator (impossible for entries >= 2) is reported, not divided by.
inline Rational cf_eval(const std::vector<std::int64_t>& w) {
  if (w.empty())
    throw std::invalid_argument("empty chain has no continued-fraction value");
  Rational x = w.back();
  for (auto it = w.rbegin() + 1; it != w.rend(); ++it) {
    if (x == 0)
      throw std::domain_error("continued fraction hits a zero denominator");
    x = Rational(*it) - 1 / x;
  }
  return x;
}

inline Rational cf_eval(const Chain& c) { return cf_eval(c.weights()); }

// Value of the reversed chain [k_n,...,k_1].
inline Rational cf_eval_reversed(const Chain& c) {
  std::vector<std::int64_t> v(c.weights().rbegin(), c.weights().rend());
  return cf_eval(v);
}

// Greedy ceiling expansion: the unique chain with entries >= 2 whose value is
// r.  Terminates because the numerator strictly decreases: for r = p/q > 1 in
// lowest terms, 1/(ceil(r) - r) has numerator q < p.  The loop works on the
// raw pair: with c = ceil(p/q) and rem = p - floor(p/q) q, the next value
// 1/(c - p/q) is q/(q - rem), and gcd(q, q - rem) = gcd(q, p) = 1, so the
// pair stays in lowest terms without renormalizing.
inline Chain hj_expand(const Rational& r) {
  if (r <= 1) throw std::invalid_argument("expansion requires value > 1");
  Int p = numerator(r), q = denominator(r);
  std::vector<std::int64_t> out;
  for (;;) {
    Int c, rem;
    divide_qr(p, q, c, rem);
    if (rem != 0) ++c;  // ceiling; p, q > 0 here
    if (c > std::numeric_limits<std::int64_t>::max())
      throw std::overflow_error("chain entry exceeds supported range");
    out.push_back(c.convert_to<std::int64_t>());
    if (rem == 0) break;
    const Int next = q - rem;
    p = q;
    q = next;
  }
  return Chain(std::move(out));
}

// Dual chain (l_1,...,l_m) of (k_1,...,k_n), defined by
//
//   1/[k_n,...,k_1] + 1/[l_m,...,l_1] = 1.
//
// With r = [k_n,...,k_1], the reversed dual [l_m,...,l_1] equals r/(r-1), so
// the dual is the greedy expansion of r/(r-1) read in reversed orientation.
// l_1 is the entry adjacent to sigma_inf.  dual_chain is an involution.
inline Chain dual_chain(const Chain& c) {
  const Rational r = cf_eval_reversed(c);
  // for r = p/q in lowest terms, r/(r-1) = p/(p-q), again in lowest terms
  return hj_expand(Rational(numerator(r), numerator(r) - denominator(r)))
      .reversed();
}

}  // namespace cstar
