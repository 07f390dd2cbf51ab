#pragma once

#include <cstdint>
#include <vector>

#include "cstar/stargraph.hpp"

namespace cstar {

// A bamboo is the weight list of a linear chain of curves whose two endpoint
// vertices are the section markers: weights.front() is sigma_0 and
// weights.back() is sigma_inf.  Operations never remove the endpoints.
// trace, when present, is the forward construction history (base first).
struct Bamboo {
  std::vector<std::int64_t> weights;
  std::vector<std::vector<std::int64_t>> trace;
};

// Base configuration (-k, 0, k): the two sections of twisting k and one
// smooth fiber.
inline Bamboo base_bamboo(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("base bamboo requires k >= 1");
  return Bamboo{{-k, 0, k}, {}};
}

// Blow up the intersection point on edge (edge, edge+1): both endpoints of
// the edge drop by 1 and a fresh (-1)-curve is inserted between them.
inline Bamboo blow_up_edge(const Bamboo& b, std::size_t edge) {
  if (b.weights.size() < 2 || edge + 1 >= b.weights.size())
    throw std::invalid_argument("edge index out of range");
  Bamboo out = b;
  out.trace.push_back(b.weights);
  out.weights[edge] -= 1;
  out.weights[edge + 1] -= 1;
  out.weights.insert(out.weights.begin() + static_cast<std::ptrdiff_t>(edge) + 1,
                     -1);
  return out;
}

// Contract an interior (-1)-curve: its two neighbours gain +1 and become
// adjacent.  Endpoint vertices are never contracted, even at weight -1: the
// section markers are part of the model by construction.
inline Bamboo blow_down(const Bamboo& b, std::size_t pos) {
  if (pos >= b.weights.size())
    throw std::invalid_argument("vertex index out of range");
  if (pos == 0 || pos + 1 == b.weights.size() || b.weights[pos] != -1)
    throw std::invalid_argument("only interior (-1)-curves contract");
  Bamboo out = b;
  out.trace.push_back(b.weights);
  out.weights[pos - 1] += 1;
  out.weights[pos + 1] += 1;
  out.weights.erase(out.weights.begin() + static_cast<std::ptrdiff_t>(pos));
  return out;
}

enum class ContractionOrder { LeftmostFirst, RightmostFirst };

struct ContractionResult {
  bool ok = false;
  std::int64_t k = 0;  // base twisting on success
  std::vector<std::vector<std::int64_t>> trace;  // configurations, input first
  std::vector<std::int64_t> stuck;               // final configuration if !ok
};

// Greedily contract interior (-1)-curves until the base (-k, 0, k) is
// reached.  The curve adjacent to sigma_0 is never contracted even at weight
// -1: sigma_0's self-intersection stays fixed through the whole fiber
// construction (only sigma_inf absorbs one blow-up per branch), so a
// contraction that bumps sigma_0 can never lead back to the base with the
// original twisting -- it is an elementary transformation toward a different
// k, and following it greedily dead-ends.  Among the permitted curves the
// order rule picks the leftmost (default) or rightmost; on bamboos produced
// by blow-ups both rules visit the same configurations.
inline ContractionResult contract_to_base(
    const Bamboo& b, ContractionOrder order = ContractionOrder::LeftmostFirst) {
  ContractionResult res;
  std::vector<std::int64_t> w = b.weights;
  res.trace.push_back(w);
  for (;;) {
    std::ptrdiff_t pick = -1;
    for (std::size_t i = 2; i + 1 < w.size(); ++i)
      if (w[i] == -1) {
        pick = static_cast<std::ptrdiff_t>(i);
        if (order == ContractionOrder::LeftmostFirst) break;
      }
    if (pick < 0) break;
    w[static_cast<std::size_t>(pick) - 1] += 1;
    w[static_cast<std::size_t>(pick) + 1] += 1;
    w.erase(w.begin() + pick);
    res.trace.push_back(w);
  }
  if (w.size() == 3 && w[0] <= -1 && w[1] == 0 && w[2] == -w[0]) {
    res.ok = true;
    res.k = -w[0];
  } else {
    res.stuck = w;
  }
  return res;
}

// The fiber bamboo over a branch point:
//
//   (-k, -k_1, ..., -k_n, -1, -l_m, ..., -l_1, k-1)
//
// where (l_1,...,l_m) is the dual chain.  Verified internally to contract
// back to (-k, 0, k); the attached trace is the forward blow-up history
// (reverse of the contraction trace), starting at the base.
inline Bamboo build_fiber_bamboo(std::int64_t k, const Chain& c) {
  if (k < 1) throw std::invalid_argument("fiber bamboo requires k >= 1");
  const Chain l = dual_chain(c);
  Bamboo out;
  out.weights.reserve(c.size() + l.size() + 3);
  out.weights.push_back(-k);
  for (auto w : c.weights()) out.weights.push_back(-w);
  out.weights.push_back(-1);
  for (std::size_t j = l.size(); j-- > 0;) out.weights.push_back(-l[j]);
  out.weights.push_back(k - 1);

  ContractionResult r = contract_to_base(out);
  if (!r.ok || r.k != k)
    throw std::logic_error("fiber bamboo failed to contract to its base");
  out.trace.assign(r.trace.rbegin(), r.trace.rend());
  out.trace.pop_back();  // forward history excludes the final configuration
  return out;
}

// The mirrored configuration (-k, -k_n, ..., -k_1, -1, -l_1, ..., -l_m, k-1)
// is also a blow-up configuration: it must contract to the same base.
inline bool reversal_check(std::int64_t k, const Chain& c) {
  const Chain l = dual_chain(c);
  Bamboo rev;
  rev.weights.push_back(-k);
  for (std::size_t j = c.size(); j-- > 0;) rev.weights.push_back(-c[j]);
  rev.weights.push_back(-1);
  for (auto w : l.weights()) rev.weights.push_back(-w);
  rev.weights.push_back(k - 1);
  for (auto order :
       {ContractionOrder::LeftmostFirst, ContractionOrder::RightmostFirst}) {
    const ContractionResult r = contract_to_base(rev, order);
    if (!r.ok || r.k != k) return false;
  }
  return true;
}

// Assemble the linear model of the moduli data: one fiber bamboo per chain
// (each internally verified), sigma_inf weight k - s since every branch after
// the base contributes exactly one blow-up on sigma_inf.  The model is built
// for arbitrary moduli data; validity of the inequality is a separate
// question.
inline ModelGraph build_model(const ModuliData& md) {
  std::vector<ModelBamboo> bs;
  bs.reserve(md.chains.size());
  for (const auto& c : md.chains) {
    build_fiber_bamboo(md.k, c);  // construction + round-trip verification
    bs.push_back(ModelBamboo{c, dual_chain(c)});
  }
  return ModelGraph(md.genus, md.k, std::move(bs));
}

}  // namespace cstar
