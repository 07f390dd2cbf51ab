#pragma once

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cstar/blowup.hpp"
#include "cstar/quadform.hpp"

namespace cstar {

// The four equivalent validity conditions for moduli data (g; k; k^i_j):
//
//   1. an ample certificate on D_inf = sigma_inf + sum tau^i_j exists;
//   2. the intersection form of D_0 (the star) is negative definite;
//   3. sum_i 1/[k^i_1,...,k^i_{n_i}] < k          (center-outward order);
//   4. sum_i 1/[l^i_1,...,l^i_{m_i}] > s - k      (duals, from sigma_inf out).
//
// Conditions 2, 3, 4 are linked through the center pivot of the star form,
// -k + sum_i 1/[k^i_1,...,k^i_{n_i}], and through the dual-pair identity
// 1/[k_1,...,k_n] + 1/[l_1,...,l_m] = 1.  Note that the *center-outward*
// sum is the pivot condition; the reversed-order sum belongs to a different
// star (reversing a chain changes which end meets the center) and its truth
// value can genuinely differ -- e.g. k=1 with chains (2,3),(2,3): outward sum
// 6/5, reversed sum 4/5.  cond3_detail reports both values.

struct ValidationReport {
  std::int64_t genus = 0;
  std::int64_t k = 0;
  std::int64_t s = 0;
  Rational sum;  // sum_i 1/[k^i_1,...,k^i_{n_i}], exact
  bool valid = false;
};

struct Cond3Detail {
  Rational sum_outward;
  Rational sum_reversed;
  bool outward_ok = false;
  bool reversed_ok = false;
};

struct Cond4Detail {
  Rational sum;            // sum_i 1/[l^i_1,...,l^i_{m_i}]
  std::int64_t threshold;  // s - k
  bool ok = false;
};

inline Cond3Detail cond3_detail(const ModuliData& md) {
  Cond3Detail d;
  d.sum_outward = 0;
  d.sum_reversed = 0;
  for (const auto& c : md.chains) {
    d.sum_outward += 1 / cf_eval(c);
    d.sum_reversed += 1 / cf_eval_reversed(c);
  }
  d.outward_ok = d.sum_outward < md.k;
  d.reversed_ok = d.sum_reversed < md.k;
  return d;
}

inline bool cond3_sum(const ModuliData& md) {
  return cond3_detail(md).outward_ok;
}

inline ValidationReport validate_moduli(const ModuliData& md) {
  ValidationReport r;
  r.genus = md.genus;
  r.k = md.k;
  r.s = md.s();
  r.sum = cond3_detail(md).sum_outward;
  r.valid = r.sum < md.k;
  return r;
}

inline bool cond2_negdef(const ModuliData& md) {
  return is_negative_definite(intersection_matrix(star_graph(md)));
}

inline Cond4Detail cond4_detail(const ModuliData& md) {
  Cond4Detail d;
  d.sum = 0;
  for (const auto& c : md.chains) d.sum += 1 / cf_eval(dual_chain(c));
  d.threshold = md.s() - md.k;
  d.ok = d.sum > d.threshold;
  return d;
}

inline bool cond4_sum(const ModuliData& md) { return cond4_detail(md).ok; }

// Positive integer coefficients of the candidate ample divisor
// Y = a sigma_inf + sum_{i,j} a^i_j tau^i_j on the dual side of the model.
struct AmpleCertificate {
  Int a;                                 // coefficient of sigma_inf, >= 1
  std::vector<std::vector<Int>> coeffs;  // per chain: a^i_1,...,a^i_{m_i}
};

// Y is ample iff Y . C > 0 for every component C of D_inf:
//
//   tau^i_j:    -l^i_j a^i_j + a^i_{j-1} + a^i_{j+1} > 0
//               (a^i_0 = a since tau^i_1 meets sigma_inf; a^i_{m_i+1} = 0
//                since tau^i_{m_i} meets e_i, which is not in Y);
//   sigma_inf:  a(k-s) + sum_i a^i_1 > 0
//               (sigma_inf meets tau^i_1 of every branch).
inline bool verify_certificate(const ModuliData& md,
                               const AmpleCertificate& cert) {
  const auto s = static_cast<std::size_t>(md.s());
  if (cert.a < 1 || cert.coeffs.size() != s) return false;
  Int inf_sum = cert.a * (md.k - md.s());
  for (std::size_t i = 0; i < s; ++i) {
    const Chain l = dual_chain(md.chains[i]);
    const auto& a = cert.coeffs[i];
    if (a.size() != l.size()) return false;
    for (const auto& v : a)
      if (v < 1) return false;
    for (std::size_t j = 0; j < l.size(); ++j) {
      const Int prev = (j == 0) ? cert.a : a[j - 1];
      const Int next = (j + 1 < l.size()) ? a[j + 1] : Int(0);
      if (-l[j] * a[j] + prev + next <= 0) return false;
    }
    inf_sum += a[0];
  }
  return inf_sum > 0;
}

// Constructive solver.  Writing x_j = a^i_{j-1}/a^i_j, the branch
// inequalities become x_j > l_j - 1/x_{j+1} with the terminal x_m > l_m, so
// any ratios strictly above the continued-fraction tails L_j = [l_j,...,l_m]
// satisfy the branch, and the sigma_inf inequality becomes
// sum_i 1/x^i_1 > s - k.  Condition 4 (sum_i 1/L^i_1 > s - k) leaves slack T;
// choosing x^i_1 below 1/(1/L^i_1 - T/s) preserves the global inequality, and
// each later ratio is picked as the midpoint of its feasible interval
// (L_{j+1}, 1/(l_j - x_j)).  Back-substitution gives exact rational
// coefficients; clearing denominators yields the integer certificate (the
// inequalities are homogeneous).  Returns nothing when the conditions fail,
// in which case no certificate exists at all.
inline std::optional<AmpleCertificate> solve_ample(const ModuliData& md) {
  const auto s = static_cast<std::size_t>(md.s());
  std::vector<std::vector<Rational>> tails(s);  // L_j per chain, 0-based
  std::vector<Chain> duals;
  duals.reserve(s);
  Rational sum = 0;  // sum_i 1/L^i_1, the condition-4 quantity
  for (std::size_t i = 0; i < s; ++i) {
    const Chain l = dual_chain(md.chains[i]);
    const std::size_t m = l.size();
    tails[i].resize(m);
    Rational t = l[m - 1];
    tails[i][m - 1] = t;
    for (std::size_t j = m - 1; j-- > 0;) {
      t = Rational(l[j]) - 1 / t;
      tails[i][j] = t;
    }
    sum += 1 / tails[i][0];
    duals.push_back(l);
  }
  if (sum <= md.s() - md.k) return std::nullopt;
  AmpleCertificate cert;

  const Rational T = sum - (md.s() - md.k);  // > 0
  std::vector<std::vector<Rational>> alpha(s);  // a^i_j / a, exact
  for (std::size_t i = 0; i < s; ++i) {
    const Chain& l = duals[i];
    const std::size_t m = l.size();
    const Rational g = 1 / tails[i][0] - T / Rational(md.s());
    const Rational u1 = (g > 0) ? Rational(1 / g) : Rational(tails[i][0] + 1);
    Rational x = (tails[i][0] + u1) / 2;
    alpha[i].resize(m);
    alpha[i][0] = 1 / x;
    for (std::size_t j = 0; j + 1 < m; ++j) {
      const Rational u = (x < l[j]) ? Rational(1 / (Rational(l[j]) - x))
                                    : Rational(tails[i][j + 1] + 1);
      x = (tails[i][j + 1] + u) / 2;
      alpha[i][j + 1] = alpha[i][j] / x;
    }
  }

  Int d = 1;
  for (const auto& ch : alpha)
    for (const auto& q : ch) d = lcm(d, denominator(q));
  cert.a = d;
  cert.coeffs.resize(s);
  Int g = d;
  for (std::size_t i = 0; i < s; ++i) {
    cert.coeffs[i].reserve(alpha[i].size());
    for (const auto& q : alpha[i]) {
      cert.coeffs[i].push_back(numerator(q) * (d / denominator(q)));
      g = gcd(g, cert.coeffs[i].back());
    }
  }
  if (g > 1) {
    cert.a /= g;
    for (auto& ch : cert.coeffs)
      for (auto& v : ch) v /= g;
  }
  return cert;
}

namespace detail {
// Suffix feasibility table for one dual chain over the coefficient box
// [1..bound]: entry (u,v) [1-based] says the branch inequalities from
// position j on are satisfiable with a^i_{j-1} = u, a^i_j = v and all later
// coefficients in the box.  Returned for j = 1, where u plays the role of a.
inline std::vector<std::vector<bool>> branch_feasibility(
    const Chain& l, std::int64_t bound) {
  const auto b = static_cast<std::size_t>(bound);
  const std::size_t m = l.size();
  std::vector<std::vector<bool>> cur(b + 1, std::vector<bool>(b + 1, false));
  for (std::size_t u = 1; u <= b; ++u)
    for (std::size_t v = 1; v <= b; ++v)
      cur[u][v] = static_cast<std::int64_t>(u) >
                  l[m - 1] * static_cast<std::int64_t>(v);
  for (std::size_t j = m - 1; j-- > 0;) {
    std::vector<std::vector<bool>> next(b + 1,
                                        std::vector<bool>(b + 1, false));
    for (std::size_t v = 1; v <= b; ++v)
      for (std::size_t u = 1; u <= b; ++u) {
        const std::int64_t need = l[j] * static_cast<std::int64_t>(v) -
                                  static_cast<std::int64_t>(u) + 1;
        const std::size_t w0 =
            need < 1 ? 1 : static_cast<std::size_t>(need);
        for (std::size_t w = w0; w <= b; ++w)
          if (cur[v][w]) {
            next[u][v] = true;
            break;
          }
      }
    cur = std::move(next);
  }
  return cur;
}
}  // namespace detail

// Exact decision: does any certificate with every coefficient (including a)
// in [1..bound] exist?  Branches are independent once a is fixed, and the
// sigma_inf inequality is monotone in each a^i_1, so it suffices to compare
// the per-branch maxima against a(s-k).
inline bool exists_certificate_bounded(const ModuliData& md,
                                       std::int64_t bound) {
  if (bound < 1) return false;
  const auto s = static_cast<std::size_t>(md.s());
  if (s == 0) return md.k >= 1;  // a = 1 already works
  std::vector<std::vector<std::vector<bool>>> tables;
  tables.reserve(s);
  for (const auto& c : md.chains)
    tables.push_back(detail::branch_feasibility(dual_chain(c), bound));
  const auto b = static_cast<std::size_t>(bound);
  for (std::size_t a = 1; a <= b; ++a) {
    Int best_sum = 0;
    bool ok = true;
    for (std::size_t i = 0; i < s && ok; ++i) {
      std::size_t best = 0;
      for (std::size_t v = b; v >= 1; --v)
        if (tables[i][a][v]) {
          best = v;
          break;
        }
      if (best == 0)
        ok = false;
      else
        best_sum += best;
    }
    if (ok && Int(a) * (md.k - md.s()) + best_sum > 0) return true;
  }
  return false;
}

struct EquivalenceReport {
  bool cond1_found = false;
  bool cond2 = false;
  bool cond3 = false;
  bool cond4 = false;
  std::optional<AmpleCertificate> certificate;
  Rational center_pivot;        // last pivot of the star diagonal form
  Rational cond3_sum_outward;
  Rational cond3_sum_reversed;
  bool cond3_reversed_ok = false;
  Rational cond4_sum;
  std::int64_t cond4_threshold = 0;
  std::int64_t search_bound = 0;  // > 0 when the bounded refutation ran
  bool bounded_search_found = false;
  bool agreement = false;
};

inline EquivalenceReport equivalence_report(const ModuliData& md,
                                            std::int64_t search_bound = 12) {
  EquivalenceReport r;
  const Cond3Detail c3 = cond3_detail(md);
  r.cond3 = c3.outward_ok;
  r.cond3_sum_outward = c3.sum_outward;
  r.cond3_sum_reversed = c3.sum_reversed;
  r.cond3_reversed_ok = c3.reversed_ok;
  const Cond4Detail c4 = cond4_detail(md);
  r.cond4 = c4.ok;
  r.cond4_sum = c4.sum;
  r.cond4_threshold = c4.threshold;
  r.cond2 = cond2_negdef(md);
  r.center_pivot = star_diagonal(star_graph(md)).back();
  r.certificate = solve_ample(md);
  r.cond1_found = r.certificate.has_value();
  if (!r.cond1_found) {
    r.search_bound = search_bound;
    r.bounded_search_found = exists_certificate_bounded(md, search_bound);
  }
  r.agreement = r.cond2 == r.cond3 && r.cond3 == r.cond4 &&
                r.cond1_found == r.cond2 &&
                (r.cond1_found || !r.bounded_search_found);
  return r;
}

struct EnumerationBounds {
  std::int64_t k_max = 3;
  std::int64_t s_max = 3;
  std::int64_t n_max = 2;
  std::int64_t w_max = 4;
  std::int64_t search_bound = 12;
};

// All chains of length 1..n_max with entries 2..w_max, lexicographically
// sorted (the canonical order used to de-duplicate chain multisets).
inline std::vector<Chain> enumerate_chains(std::int64_t n_max,
                                           std::int64_t w_max) {
  std::vector<Chain> out;
  std::vector<std::int64_t> cur;
  const std::function<void()> rec = [&] {
    if (!cur.empty()) out.emplace_back(cur);
    if (static_cast<std::int64_t>(cur.size()) == n_max) return;
    for (std::int64_t w = 2; w <= w_max; ++w) {
      cur.push_back(w);
      rec();
      cur.pop_back();
    }
  };
  rec();
  std::sort(out.begin(), out.end());
  return out;
}

// Every moduli datum with genus 0, 1 <= k <= k_max and at most s_max chains
// drawn (with repetition) from enumerate_chains(n_max, w_max); chain lists
// are canonicalized to non-decreasing lexicographic order, so permuted data
// appears exactly once.
inline void enumerate_moduli(const EnumerationBounds& b,
                             const std::function<void(const ModuliData&)>& f) {
  const std::vector<Chain> pool = enumerate_chains(b.n_max, b.w_max);
  std::vector<Chain> picked;
  for (std::int64_t k = 1; k <= b.k_max; ++k) {
    const std::function<void(std::size_t)> rec = [&](std::size_t from) {
      f(ModuliData(0, k, picked));
      if (static_cast<std::int64_t>(picked.size()) == b.s_max) return;
      for (std::size_t i = from; i < pool.size(); ++i) {
        picked.push_back(pool[i]);
        rec(i);
        picked.pop_back();
      }
    };
    rec(0);
  }
}

struct EnumerationSummary {
  EnumerationBounds bounds;
  std::int64_t instances = 0;
  std::int64_t valid = 0;
  std::int64_t invalid = 0;
  std::int64_t certificates = 0;
  std::int64_t refutations = 0;           // bounded search confirming none
  std::int64_t disagreements = 0;
  std::int64_t cond3_reversal_mismatches = 0;  // reported, not a disagreement
  std::vector<std::string> failures;           // first few descriptions
};

namespace detail {
inline std::string chain_list_str(const std::vector<Chain>& cs) {
  std::ostringstream os;
  if (cs.empty()) return "(none)";
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) os << " ";
    os << "(";
    for (std::size_t j = 0; j < cs[i].size(); ++j)
      os << (j ? "," : "") << cs[i][j];
    os << ")";
  }
  return os.str();
}
}  // namespace detail

// Exhaustive cross-check over the bounded family: the four conditions must
// agree (with certificates verified and refutations searched), the dual-pair
// identity must hold, every model must pass the index bookkeeping, and every
// fiber bamboo must contract back to its base under both order rules.
// Reversing every chain is additionally compared for condition 3 and counted
// separately: the reversed data is a different star, so mismatches are
// expected and are not defects.
inline EnumerationSummary enumerate_and_crosscheck(const EnumerationBounds& b) {
  EnumerationSummary sum;
  sum.bounds = b;
  enumerate_moduli(b, [&](const ModuliData& md) {
    sum.instances += 1;
    const auto fail = [&](const std::string& what) {
      sum.disagreements += 1;
      if (sum.failures.size() < 5)
        sum.failures.push_back("k=" + std::to_string(md.k) + " chains " +
                               detail::chain_list_str(md.chains) + ": " + what);
    };

    const EquivalenceReport rep = equivalence_report(md, b.search_bound);
    if (rep.cond3)
      sum.valid += 1;
    else
      sum.invalid += 1;
    if (!rep.agreement) fail("conditions disagree");
    if (rep.cond1_found) {
      sum.certificates += 1;
      if (!verify_certificate(md, *rep.certificate))
        fail("certificate rejected");
    } else if (!rep.bounded_search_found) {
      sum.refutations += 1;
    }

    for (const auto& c : md.chains) {
      const Chain l = dual_chain(c);
      if (1 / cf_eval_reversed(c) + 1 / cf_eval_reversed(l) != 1)
        fail("dual identity broken");
      const Bamboo fb = build_fiber_bamboo(md.k, c);
      const auto left = contract_to_base(fb, ContractionOrder::LeftmostFirst);
      const auto right =
          contract_to_base(fb, ContractionOrder::RightmostFirst);
      if (!left.ok || !right.ok || left.k != md.k || right.k != md.k ||
          left.trace != right.trace)
        fail("contraction round-trip broken");
      if (left.trace.size() != c.size() + l.size() + 1)
        fail("contraction trace length off");
      if (!reversal_check(md.k, c)) fail("reversal configuration broken");
    }

    if (!model_cs_check(build_model(md))) fail("index bookkeeping broken");

    if (cond3_sum(md.with_reversed_chains()) != rep.cond3)
      sum.cond3_reversal_mismatches += 1;
  });
  return sum;
}

}  // namespace cstar
