#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cstar/cfrac.hpp"

namespace cstar {

// Symmetric exact integer matrix of a curve configuration.  Row/column order
// is documented per constructor below; diagonal entries are self-
// intersections, off-diagonal entries are 0/1 transverse intersections.
using IntersectionMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

// Weighted star resolution graph: central curve of genus g and weight
// center_weight <= -1, with Hirzebruch-Jung chains attached.  Chain entry k_1
// is adjacent to the center.
struct StarGraph {
  std::int64_t genus;
  std::int64_t center_weight;
  std::vector<Chain> chains;

  StarGraph(std::int64_t g, std::int64_t w, std::vector<Chain> cs)
      : genus(g), center_weight(w), chains(std::move(cs)) {
    if (genus < 0) throw std::invalid_argument("genus must be >= 0");
    if (center_weight > -1)
      throw std::invalid_argument("center weight must be <= -1");
  }

  std::size_t vertex_count() const {
    std::size_t n = 1;
    for (const auto& c : chains) n += c.size();
    return n;
  }
};

// Moduli data (g; k; k^i_j): genus g >= 0, center multiplicity k >= 1, and s
// resolution chains.  Equivalent to the star graph with center weight -k.
struct ModuliData {
  std::int64_t genus;
  std::int64_t k;
  std::vector<Chain> chains;

  ModuliData(std::int64_t g, std::int64_t kk, std::vector<Chain> cs)
      : genus(g), k(kk), chains(std::move(cs)) {
    if (genus < 0) throw std::invalid_argument("genus must be >= 0");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
  }

  std::int64_t s() const { return static_cast<std::int64_t>(chains.size()); }

  ModuliData with_reversed_chains() const {
    std::vector<Chain> rev;
    rev.reserve(chains.size());
    for (const auto& c : chains) rev.push_back(c.reversed());
    return ModuliData(genus, k, std::move(rev));
  }
};

inline StarGraph star_graph(const ModuliData& md) {
  return StarGraph(md.genus, -md.k, md.chains);
}

// Row 0 is the center; then the chains in order, each center-outward.
inline IntersectionMatrix intersection_matrix(const StarGraph& g) {
  const auto dim = static_cast<Eigen::Index>(g.vertex_count());
  IntersectionMatrix m = IntersectionMatrix::Zero(dim, dim);
  m(0, 0) = g.center_weight;
  Eigen::Index r = 1;
  for (const auto& c : g.chains) {
    for (std::size_t j = 0; j < c.size(); ++j, ++r) {
      m(r, r) = -c[j];
      const Eigen::Index prev = (j == 0) ? 0 : r - 1;
      m(r, prev) = 1;
      m(prev, r) = 1;
    }
  }
  return m;
}

// Linear model of the compactified fibration: two star centers sigma_0
// (weight -k) and sigma_inf (weight k-s), joined by one bamboo per chain:
//
//   sigma_0 -- sigma^i_1..sigma^i_n -- e_i(-1) -- tau^i_m..tau^i_1 -- sigma_inf
//
// with sigma^i_j of weight -k^i_j and tau^i_j of weight -l^i_j, where the
// l-chain is the dual of the k-chain (enforced by build_model; the struct
// itself admits arbitrary l-chains so that broken models can be examined).
struct ModelBamboo {
  Chain k_chain;
  Chain l_chain;
};

struct ModelGraph {
  std::int64_t genus;
  std::int64_t k;
  std::vector<ModelBamboo> bamboos;

  ModelGraph(std::int64_t g, std::int64_t kk, std::vector<ModelBamboo> bs)
      : genus(g), k(kk), bamboos(std::move(bs)) {
    if (genus < 0) throw std::invalid_argument("genus must be >= 0");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
  }

  std::int64_t s() const { return static_cast<std::int64_t>(bamboos.size()); }
  std::int64_t center0_weight() const { return -k; }
  std::int64_t centerinf_weight() const { return k - s(); }

  std::size_t vertex_count() const {
    std::size_t n = 2;
    for (const auto& b : bamboos) n += b.k_chain.size() + 1 + b.l_chain.size();
    return n;
  }
};

enum class ModelPart { D0, Dinf, Full };

// Full:  sigma_0 first; per bamboo the path order sigma^i_1..sigma^i_n, e_i,
//        tau^i_m..tau^i_1; sigma_inf last.
// D0:    sigma_0 + k-chains (restriction of Full; equals the star matrix).
// Dinf:  sigma_inf first, then each l-chain center-outward (tau^i_1 adjacent
//        to sigma_inf first), i.e. the star convention around sigma_inf.
inline IntersectionMatrix model_intersection_matrix(const ModelGraph& g,
                                                    ModelPart part) {
  switch (part) {
    case ModelPart::D0: {
      std::vector<Chain> cs;
      cs.reserve(g.bamboos.size());
      for (const auto& b : g.bamboos) cs.push_back(b.k_chain);
      return intersection_matrix(StarGraph(g.genus, -g.k, std::move(cs)));
    }
    case ModelPart::Dinf: {
      Eigen::Index dim = 1;
      for (const auto& b : g.bamboos)
        dim += static_cast<Eigen::Index>(b.l_chain.size());
      IntersectionMatrix m = IntersectionMatrix::Zero(dim, dim);
      m(0, 0) = g.centerinf_weight();
      Eigen::Index r = 1;
      for (const auto& b : g.bamboos)
        for (std::size_t j = 0; j < b.l_chain.size(); ++j, ++r) {
          m(r, r) = -b.l_chain[j];
          const Eigen::Index prev = (j == 0) ? 0 : r - 1;
          m(r, prev) = 1;
          m(prev, r) = 1;
        }
      return m;
    }
    case ModelPart::Full: {
      const auto dim = static_cast<Eigen::Index>(g.vertex_count());
      IntersectionMatrix m = IntersectionMatrix::Zero(dim, dim);
      m(0, 0) = g.center0_weight();
      m(dim - 1, dim - 1) = g.centerinf_weight();
      Eigen::Index r = 1;
      for (const auto& b : g.bamboos) {
        Eigen::Index prev = 0;  // each bamboo starts at sigma_0
        for (std::size_t j = 0; j < b.k_chain.size(); ++j, ++r) {
          m(r, r) = -b.k_chain[j];
          m(r, prev) = 1;
          m(prev, r) = 1;
          prev = r;
        }
        m(r, r) = -1;  // exceptional curve e_i
        m(r, prev) = 1;
        m(prev, r) = 1;
        prev = r++;
        // l-chain in path order tau_m .. tau_1
        for (std::size_t j = b.l_chain.size(); j-- > 0; ++r) {
          m(r, r) = -b.l_chain[j];
          m(r, prev) = 1;
          m(prev, r) = 1;
          prev = r;
        }
        m(prev, dim - 1) = 1;  // tau_1 (or e_i when the l-chain is empty)
        m(dim - 1, prev) = 1;
      }
      return m;
    }
  }
  throw std::logic_error("unknown model part");
}

namespace detail {
inline void dot_node(std::ostringstream& os, const std::string& id,
                     const std::string& label) {
  os << "  " << id << " [label=\"" << label << "\"];\n";
}
inline void dot_edge(std::ostringstream& os, const std::string& a,
                     const std::string& b) {
  os << "  " << a << " -- " << b << ";\n";
}
}  // namespace detail

// Deterministic Graphviz output.  Node ids: s0, c<i>_<j> (k-chains), e<i>
// (exceptional curves), t<i>_<j> (l-chains), sinf.
inline std::string to_dot(const StarGraph& g) {
  std::ostringstream os;
  os << "graph star {\n";
  detail::dot_node(os, "s0",
                   "σ0 [" + std::to_string(g.center_weight) +
                       ", g=" + std::to_string(g.genus) + "]");
  for (std::size_t i = 0; i < g.chains.size(); ++i)
    for (std::size_t j = 0; j < g.chains[i].size(); ++j)
      detail::dot_node(os,
                       "c" + std::to_string(i + 1) + "_" + std::to_string(j + 1),
                       std::to_string(-g.chains[i][j]));
  for (std::size_t i = 0; i < g.chains.size(); ++i) {
    std::string prev = "s0";
    for (std::size_t j = 0; j < g.chains[i].size(); ++j) {
      std::string id =
          "c" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
      detail::dot_edge(os, prev, id);
      prev = id;
    }
  }
  os << "}\n";
  return os.str();
}

inline std::string to_dot(const ModelGraph& g) {
  std::ostringstream os;
  os << "graph model {\n";
  detail::dot_node(os, "s0",
                   "σ0 [" + std::to_string(g.center0_weight()) +
                       ", g=" + std::to_string(g.genus) + "]");
  for (std::size_t i = 0; i < g.bamboos.size(); ++i) {
    const auto& b = g.bamboos[i];
    const std::string bi = std::to_string(i + 1);
    for (std::size_t j = 0; j < b.k_chain.size(); ++j)
      detail::dot_node(os, "c" + bi + "_" + std::to_string(j + 1),
                       std::to_string(-b.k_chain[j]));
    detail::dot_node(os, "e" + bi, "-1");
    for (std::size_t j = b.l_chain.size(); j-- > 0;)
      detail::dot_node(os, "t" + bi + "_" + std::to_string(j + 1),
                       std::to_string(-b.l_chain[j]));
  }
  detail::dot_node(os, "sinf",
                   "σ∞ [" + std::to_string(g.centerinf_weight()) +
                       ", g=" + std::to_string(g.genus) + "]");
  for (std::size_t i = 0; i < g.bamboos.size(); ++i) {
    const auto& b = g.bamboos[i];
    const std::string bi = std::to_string(i + 1);
    std::string prev = "s0";
    for (std::size_t j = 0; j < b.k_chain.size(); ++j) {
      std::string id = "c" + bi + "_" + std::to_string(j + 1);
      detail::dot_edge(os, prev, id);
      prev = id;
    }
    detail::dot_edge(os, prev, "e" + bi);
    prev = "e" + bi;
    for (std::size_t j = b.l_chain.size(); j-- > 0;) {
      std::string id = "t" + bi + "_" + std::to_string(j + 1);
      detail::dot_edge(os, prev, id);
      prev = id;
    }
    detail::dot_edge(os, prev, "sinf");
  }
  os << "}\n";
  return os.str();
}

}  // namespace cstar
