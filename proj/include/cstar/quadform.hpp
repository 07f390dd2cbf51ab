#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cstar/stargraph.hpp"

namespace cstar {

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using DiagonalForm = std::vector<Rational>;

inline bool is_symmetric(const IntersectionMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

// Exact symmetric Gaussian elimination in the given vertex order; returns the
// pivot produced at each eliminated vertex, in that order.  Division only
// happens by pivots of already-eliminated vertices, which must be nonzero (a
// zero pivot may legitimately appear at the last position).
inline DiagonalForm symmetric_pivots(const IntersectionMatrix& m,
                                     const std::vector<Eigen::Index>& order) {
  if (!is_symmetric(m))
    throw std::invalid_argument("matrix must be symmetric");
  if (static_cast<Eigen::Index>(order.size()) != m.rows())
    throw std::invalid_argument("elimination order must cover every vertex");
  RatMatrix a = m.cast<Rational>();
  std::vector<bool> done(order.size(), false);
  DiagonalForm pivots;
  pivots.reserve(order.size());
  for (std::size_t step = 0; step < order.size(); ++step) {
    const Eigen::Index p = order[step];
    if (p < 0 || p >= m.rows() || done[p])
      throw std::invalid_argument("elimination order must be a permutation");
    done[p] = true;
    const Rational piv = a(p, p);
    pivots.push_back(piv);
    if (step + 1 == order.size()) break;
    if (piv == 0)
      throw std::domain_error("zero pivot before the final vertex");
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (done[i] || a(i, p) == 0) continue;
      const Rational f = a(i, p) / piv;
      for (Eigen::Index j = 0; j < m.rows(); ++j) {
        if (done[j] || a(p, j) == 0) continue;
        a(i, j) -= f * a(p, j);
      }
      a(i, p) = 0;
      a(p, i) = 0;
    }
  }
  return pivots;
}

// Diagonal of the chain form: (-[k_1], -[k_2,k_1], ..., -[k_n,...,k_1]).
// These are the natural-order elimination pivots of the tridiagonal matrix
// diag(-k_1..-k_n) with unit off-diagonal; every pivot is < -1.
inline DiagonalForm chain_diagonal(const Chain& c) {
  DiagonalForm out;
  out.reserve(c.size());
  Rational d = c[0];
  out.push_back(-d);
  for (std::size_t j = 1; j < c.size(); ++j) {
    d = Rational(c[j]) - 1 / d;
    out.push_back(-d);
  }
  return out;
}

// Diagonal of the star form, eliminating each chain from its outer end
// inward: per chain (-[k_n], -[k_{n-1},k_n], ..., -[k_1,...,k_n]), and the
// center pivot -k + sum_i 1/[k^i_1,...,k^i_{n_i}] last.  The center pivot is
// the Schur complement of the center and does not depend on the chain
// elimination order; the star is negative definite iff it is < 0.
inline DiagonalForm star_diagonal(const StarGraph& g) {
  DiagonalForm out;
  Rational center = g.center_weight;
  for (const auto& c : g.chains) {
    std::vector<Rational> tails(c.size());
    Rational t = c[c.size() - 1];
    tails[c.size() - 1] = t;
    for (std::size_t j = c.size() - 1; j-- > 0;) {
      t = Rational(c[j]) - 1 / t;
      tails[j] = t;
    }
    for (std::size_t j = c.size(); j-- > 0;) out.push_back(-tails[j]);
    center += 1 / tails[0];  // 1/[k_1,...,k_n]
  }
  out.push_back(center);
  return out;
}

// Exact test via symmetric elimination: the form is negative definite iff
// every pivot is < 0, for any pivot order (each step is a congruence, and a
// pivot >= 0 exhibits a vector with q(v) >= 0).  Eliminating from the last
// row upward keeps tree-ordered matrices (center row first, chains after)
// free of fill-in, and a pivot >= 0 stops early, so no division by zero.
inline bool is_negative_definite(const IntersectionMatrix& m) {
  if (!is_symmetric(m))
    throw std::invalid_argument("matrix must be symmetric");
  RatMatrix a = m.cast<Rational>();
  const Eigen::Index n = m.rows();
  for (Eigen::Index p = n - 1; p >= 0; --p) {
    const Rational piv = a(p, p);
    if (piv >= 0) return false;
    for (Eigen::Index i = 0; i < p; ++i) {
      if (a(p, i) == 0) continue;
      const Rational f = a(p, i) / piv;
      for (Eigen::Index j = 0; j <= i; ++j) {
        // lower triangle only; a(p, j) == a(j, p) by symmetry
        if (a(p, j) == 0) continue;
        a(i, j) -= f * a(p, j);
      }
    }
  }
  return n > 0;
}

// Independent route: Bareiss fraction-free elimination over the integers.
// After step j the pivot equals the j-th leading principal minor, so the
// Sylvester test (-1)^j det_j > 0 is checked directly; the first violation
// (including a zero minor) certifies failure before any invalid division.
inline bool leading_minor_oracle(const IntersectionMatrix& m) {
  if (!is_symmetric(m))
    throw std::invalid_argument("matrix must be symmetric");
  IntersectionMatrix a = m;
  const Eigen::Index n = m.rows();
  Int prev = 1;
  for (Eigen::Index p = 0; p < n; ++p) {
    const Int minor = a(p, p);  // det of the leading (p+1) x (p+1) block
    const bool want_positive = (p % 2) == 1;
    if (minor == 0 || (minor > 0) != want_positive) return false;
    for (Eigen::Index i = p + 1; i < n; ++i)
      for (Eigen::Index j = p + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(p, p) - a(i, p) * a(p, j)) / prev;
    prev = minor;
  }
  return n > 0;
}

// Camacho-Sad indices along a chain.  Singular points p_1..p_n sit at the
// curve intersections (p_j = sigma_j /\ sigma_{j+1}; p_n is the terminal
// fixed point).  index(p_j, sigma_j) = -[k_j,...,k_1]; at a simple
// singularity the two indices are reciprocal, so index(p_j, sigma_{j+1}) =
// -1/[k_j,...,k_1].  The junction p_0 on the dicritical center is regular
// along sigma_1 and carries no entry.
struct IndexEntry {
  Rational on_sphere;                // index(p_j, sigma_j)
  std::optional<Rational> on_next;   // index(p_j, sigma_{j+1}); none at p_n
};
using IndexAssignment = std::vector<IndexEntry>;

inline IndexAssignment assign_indices(const Chain& c) {
  IndexAssignment out;
  out.reserve(c.size());
  Rational d = c[0];  // [k_j,...,k_1], built incrementally
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j > 0) d = Rational(c[j]) - 1 / d;
    IndexEntry e;
    e.on_sphere = -d;
    if (j + 1 < c.size()) e.on_next = -1 / d;
    out.push_back(e);
  }
  return out;
}

// Index theorem on each sphere of the chain: the indices at its singular
// points sum to its self-intersection -k_j.  The assignment is taken as
// data, so perturbed values are detected.
inline bool cs_check(const Chain& c, const IndexAssignment& a) {
  if (a.size() != c.size()) return false;
  for (std::size_t j = 0; j < c.size(); ++j) {
    Rational sum = a[j].on_sphere;
    if (j > 0) {
      if (!a[j - 1].on_next) return false;
      sum += *a[j - 1].on_next;
    }
    if (sum != Rational(-c[j])) return false;
  }
  return true;
}

// Index bookkeeping across a full model bamboo
//
//   sigma_0 | sigma_1..sigma_n | e | tau_m..tau_1 | sigma_inf
//
// sigma_0 and sigma_inf are dicritical (no index constraint; junction points
// carry index 0 and are omitted).  Interior singular points: p_j on the
// k-side, q_j on the l-side, with the terminal points p_n and q_m landing
// their reciprocal indices on e.  The sphere e has self-intersection -1, and
// its index sum -1/[k_n..k_1] - 1/[l_m..l_1] = -1 holds exactly when the
// l-chain is the dual of the k-chain.
struct ModelIndexRow {
  std::size_t bamboo;   // 1-based
  std::string point;    // "p<i>_<j>" or "q<i>_<j>"
  std::string curve;    // "c<i>_<j>", "t<i>_<j>" or "e<i>"
  Rational index;
};

struct ModelIndexReport {
  std::vector<ModelIndexRow> rows;
  bool valid = true;  // every sphere sum matches its self-intersection
};

inline ModelIndexReport model_index_report(const ModelGraph& g) {
  ModelIndexReport rep;
  for (std::size_t i = 0; i < g.bamboos.size(); ++i) {
    const auto& b = g.bamboos[i];
    const std::string bi = std::to_string(i + 1);

    // One side of the bamboo: emit rows for the chain and return the
    // reciprocal index landing on e.
    const auto side = [&](const Chain& c, char pt, const std::string& curve) {
      Rational d = 0;
      std::vector<Rational> on(c.size());      // index at p_j on sphere_j
      std::vector<Rational> recip(c.size());   // reciprocal on the next curve
      for (std::size_t j = 0; j < c.size(); ++j) {
        d = (j == 0) ? Rational(c[j]) : Rational(c[j]) - 1 / d;
        on[j] = -d;
        recip[j] = -1 / d;
      }
      for (std::size_t j = 0; j < c.size(); ++j) {
        const std::string pj =
            std::string(1, pt) + bi + "_" + std::to_string(j + 1);
        rep.rows.push_back({i + 1, pj, curve + bi + "_" + std::to_string(j + 1),
                            on[j]});
        const std::string next = (j + 1 < c.size())
                                     ? curve + bi + "_" + std::to_string(j + 2)
                                     : "e" + bi;
        rep.rows.push_back({i + 1, pj, next, recip[j]});
      }
      // sphere sums along the chain
      for (std::size_t j = 0; j < c.size(); ++j) {
        Rational sum = on[j];
        if (j > 0) sum += recip[j - 1];
        if (sum != Rational(-c[j])) rep.valid = false;
      }
      return recip.back();
    };

    const Rational on_e_from_k = side(b.k_chain, 'p', "c");
    const Rational on_e_from_l = side(b.l_chain, 'q', "t");
    if (on_e_from_k + on_e_from_l != Rational(-1)) rep.valid = false;
  }
  return rep;
}

inline bool model_cs_check(const ModelGraph& g) {
  return model_index_report(g).valid;
}

}  // namespace cstar
