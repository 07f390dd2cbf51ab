#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cstar/equiv.hpp"

// Text and JSON renderers shared by the command-line tool and the tests.
// Output is deterministic: fields appear in fixed order, rationals render as
// reduced "p/q" strings, and every text block ends with a newline.

namespace cstar {

using Json = nlohmann::ordered_json;

inline std::string fmt_chain(const Chain& c) {
  std::ostringstream os;
  os << "(";
  for (std::size_t j = 0; j < c.size(); ++j) os << (j ? "," : "") << c[j];
  os << ")";
  return os.str();
}

inline std::string fmt_chain_list(const std::vector<Chain>& cs) {
  if (cs.empty()) return "(none)";
  std::ostringstream os;
  for (std::size_t i = 0; i < cs.size(); ++i)
    os << (i ? " " : "") << fmt_chain(cs[i]);
  return os.str();
}

inline std::string fmt_tuple(const std::vector<std::int64_t>& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t j = 0; j < w.size(); ++j) os << (j ? "," : "") << w[j];
  os << ")";
  return os.str();
}

inline Json json_chain(const Chain& c) {
  Json a = Json::array();
  for (auto w : c.weights()) a.push_back(w);
  return a;
}

inline Json json_chains(const std::vector<Chain>& cs) {
  Json a = Json::array();
  for (const auto& c : cs) a.push_back(json_chain(c));
  return a;
}

inline std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

// --- validate ---------------------------------------------------------

inline std::string render_validation_text(const ModuliData& md,
                                          const ValidationReport& r) {
  std::ostringstream os;
  os << "genus: " << r.genus << "\n";
  os << "k: " << r.k << "\n";
  os << "s: " << r.s << "\n";
  os << "chains: " << fmt_chain_list(md.chains) << "\n";
  os << "sum = " << to_string(r.sum) << (r.valid ? " < " : " >= ") << r.k
     << ": " << (r.valid ? "VALID" : "INVALID") << "\n";
  return os.str();
}

inline Json render_validation_json(const ModuliData& md,
                                   const ValidationReport& r) {
  Json j;
  j["genus"] = r.genus;
  j["k"] = r.k;
  j["s"] = r.s;
  j["chains"] = json_chains(md.chains);
  j["sum"] = to_string(r.sum);
  j["valid"] = r.valid;
  return j;
}

// --- matrix -----------------------------------------------------------

inline std::string render_matrix_text(const IntersectionMatrix& m) {
  const auto rows = static_cast<std::size_t>(m.rows());
  const auto cols = static_cast<std::size_t>(m.cols());
  std::vector<std::vector<std::string>> cell(rows,
                                             std::vector<std::string>(cols));
  std::vector<std::size_t> width(cols, 0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      cell[i][j] = to_string(m(static_cast<Eigen::Index>(i),
                               static_cast<Eigen::Index>(j)));
      width[j] = std::max(width[j], cell[i][j].size());
    }
  std::ostringstream os;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (j) os << " ";
      os << std::string(width[j] - cell[i][j].size(), ' ') << cell[i][j];
    }
    os << "\n";
  }
  return os.str();
}

inline Json render_matrix_json(const IntersectionMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(to_int64(m(i, j)));
    rows.push_back(row);
  }
  Json j;
  j["size"] = m.rows();
  j["matrix"] = rows;
  return j;
}

// --- diag -------------------------------------------------------------

inline std::string render_diag_text(const DiagonalForm& d, bool negdef) {
  std::ostringstream os;
  os << "pivots:";
  for (const auto& p : d) os << " " << to_string(p);
  os << "\n";
  os << "negative definite: " << (negdef ? "yes" : "no") << "\n";
  return os.str();
}

inline Json render_diag_json(const DiagonalForm& d, bool negdef) {
  Json pivots = Json::array();
  for (const auto& p : d) pivots.push_back(to_string(p));
  Json j;
  j["pivots"] = pivots;
  j["negative_definite"] = negdef;
  return j;
}

// --- dual -------------------------------------------------------------

inline std::string render_dual_text(const ModuliData& md) {
  std::ostringstream os;
  for (const auto& c : md.chains)
    os << fmt_chain(c) << " -> " << fmt_chain(dual_chain(c)) << "\n";
  return os.str();
}

inline Json render_dual_json(const ModuliData& md) {
  Json duals = Json::array();
  for (const auto& c : md.chains) {
    Json e;
    e["chain"] = json_chain(c);
    e["dual"] = json_chain(dual_chain(c));
    duals.push_back(e);
  }
  Json j;
  j["duals"] = duals;
  return j;
}

// --- trace ------------------------------------------------------------

// Forward blow-up history of one fiber bamboo, base first, final last.
inline std::vector<std::vector<std::int64_t>> fiber_history(
    std::int64_t k, const Chain& c) {
  const Bamboo fb = build_fiber_bamboo(k, c);
  std::vector<std::vector<std::int64_t>> steps = fb.trace;
  steps.push_back(fb.weights);
  return steps;
}

// One block of tuples per chain (base first), blank line between blocks.
inline std::string render_trace_moduli_text(const ModuliData& md) {
  std::ostringstream os;
  bool first = true;
  for (const auto& c : md.chains) {
    if (!first) os << "\n";
    first = false;
    for (const auto& w : fiber_history(md.k, c)) os << fmt_tuple(w) << "\n";
  }
  return os.str();
}

inline Json render_trace_moduli_json(const ModuliData& md) {
  Json chains = Json::array();
  for (const auto& c : md.chains) {
    Json e;
    e["chain"] = json_chain(c);
    Json steps = Json::array();
    for (const auto& w : fiber_history(md.k, c)) steps.push_back(w);
    e["steps"] = steps;
    chains.push_back(e);
  }
  Json j;
  j["chains"] = chains;
  return j;
}

inline std::string render_trace_bamboo_text(const ContractionResult& r) {
  std::ostringstream os;
  for (const auto& w : r.trace) os << fmt_tuple(w) << "\n";
  if (r.ok)
    os << "k = " << r.k << "\n";
  else
    os << "stuck\n";
  return os.str();
}

inline Json render_trace_bamboo_json(const ContractionResult& r) {
  Json j;
  Json steps = Json::array();
  for (const auto& w : r.trace) steps.push_back(w);
  j["steps"] = steps;
  j["ok"] = r.ok;
  if (r.ok)
    j["k"] = r.k;
  else
    j["stuck"] = r.stuck;
  return j;
}

// --- model ------------------------------------------------------------

inline std::string render_model_text(const ModelGraph& g) {
  std::ostringstream os;
  os << "genus: " << g.genus << "\n";
  os << "k: " << g.k << "\n";
  os << "s: " << g.s() << "\n";
  os << "sigma0 weight: " << g.center0_weight() << "\n";
  os << "sigmainf weight: " << g.centerinf_weight() << "\n";
  for (std::size_t i = 0; i < g.bamboos.size(); ++i)
    os << "bamboo " << i + 1 << ": k-chain " << fmt_chain(g.bamboos[i].k_chain)
       << ", l-chain " << fmt_chain(g.bamboos[i].l_chain) << "\n";
  os << "vertices: " << g.vertex_count() << "\n";
  return os.str();
}

inline Json render_model_json(const ModelGraph& g) {
  Json bamboos = Json::array();
  for (const auto& b : g.bamboos) {
    Json e;
    e["k_chain"] = json_chain(b.k_chain);
    e["l_chain"] = json_chain(b.l_chain);
    bamboos.push_back(e);
  }
  Json j;
  j["genus"] = g.genus;
  j["k"] = g.k;
  j["s"] = g.s();
  j["sigma0_weight"] = g.center0_weight();
  j["sigmainf_weight"] = g.centerinf_weight();
  j["bamboos"] = bamboos;
  j["vertices"] = g.vertex_count();
  return j;
}

// --- cs-check ---------------------------------------------------------

inline std::string render_cs_text(const ModelIndexReport& rep) {
  std::ostringstream os;
  for (const auto& r : rep.rows)
    os << r.point << " on " << r.curve << ": " << to_string(r.index) << "\n";
  os << "index check: " << (rep.valid ? "PASS" : "FAIL") << "\n";
  return os.str();
}

inline Json render_cs_json(const ModelIndexReport& rep) {
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    Json e;
    e["bamboo"] = r.bamboo;
    e["point"] = r.point;
    e["curve"] = r.curve;
    e["index"] = to_string(r.index);
    rows.push_back(e);
  }
  Json j;
  j["rows"] = rows;
  j["valid"] = rep.valid;
  return j;
}

// --- ample ------------------------------------------------------------

inline std::string render_ample_text(const ModuliData& md,
                                     const std::optional<AmpleCertificate>& c,
                                     std::int64_t search_bound,
                                     bool bounded_found) {
  std::ostringstream os;
  if (c) {
    os << "certificate: found\n";
    os << "a = " << to_string(c->a) << "\n";
    for (std::size_t i = 0; i < c->coeffs.size(); ++i) {
      os << "chain " << i + 1 << ":";
      for (const auto& v : c->coeffs[i]) os << " " << to_string(v);
      os << "\n";
    }
    os << "verified: " << (verify_certificate(md, *c) ? "yes" : "no") << "\n";
  } else {
    os << "certificate: none (conditions fail)\n";
    os << "bounded search: " << (bounded_found ? "FOUND" : "none")
       << " (searched <= " << search_bound << ")\n";
  }
  return os.str();
}

inline Json render_ample_json(const ModuliData& md,
                              const std::optional<AmpleCertificate>& c,
                              std::int64_t search_bound, bool bounded_found) {
  Json j;
  j["found"] = c.has_value();
  if (c) {
    j["a"] = to_string(c->a);
    Json coeffs = Json::array();
    for (const auto& ch : c->coeffs) {
      Json row = Json::array();
      for (const auto& v : ch) row.push_back(to_string(v));
      coeffs.push_back(row);
    }
    j["coeffs"] = coeffs;
    j["verified"] = verify_certificate(md, *c);
  } else {
    j["search_bound"] = search_bound;
    j["bounded_search_found"] = bounded_found;
  }
  return j;
}

// --- equiv ------------------------------------------------------------

inline std::string render_equiv_text(const ModuliData& md,
                                     const EquivalenceReport& r) {
  std::ostringstream os;
  os << "cond1 ample certificate: ";
  if (r.cond1_found)
    os << "yes (a = " << to_string(r.certificate->a) << ")\n";
  else
    os << "no (bounded search <= " << r.search_bound << ": "
       << (r.bounded_search_found ? "FOUND" : "none") << ")\n";
  os << "cond2 negative definite: " << (r.cond2 ? "yes" : "no") << "\n";
  os << "cond3 outward sum: " << to_string(r.cond3_sum_outward)
     << (r.cond3 ? " < " : " >= ") << md.k << ": " << (r.cond3 ? "yes" : "no")
     << "\n";
  os << "cond4 dual sum: " << to_string(r.cond4_sum)
     << (r.cond4 ? " > " : " <= ") << r.cond4_threshold << ": "
     << (r.cond4 ? "yes" : "no") << "\n";
  os << "center pivot: " << to_string(r.center_pivot) << "\n";
  os << "reversed-order sum: " << to_string(r.cond3_sum_reversed)
     << " (valid: " << (r.cond3_reversed_ok ? "yes" : "no") << ")\n";
  os << "agreement: " << (r.agreement ? "yes" : "no") << "\n";
  return os.str();
}

inline Json render_equiv_json(const EquivalenceReport& r) {
  Json j;
  j["cond1_found"] = r.cond1_found;
  j["cond2"] = r.cond2;
  j["cond3"] = r.cond3;
  j["cond4"] = r.cond4;
  if (r.certificate) {
    Json c;
    c["a"] = to_string(r.certificate->a);
    Json coeffs = Json::array();
    for (const auto& ch : r.certificate->coeffs) {
      Json row = Json::array();
      for (const auto& v : ch) row.push_back(to_string(v));
      coeffs.push_back(row);
    }
    c["coeffs"] = coeffs;
    j["certificate"] = c;
  } else {
    j["certificate"] = nullptr;
  }
  j["center_pivot"] = to_string(r.center_pivot);
  j["cond3_sum_outward"] = to_string(r.cond3_sum_outward);
  j["cond3_sum_reversed"] = to_string(r.cond3_sum_reversed);
  j["cond3_reversed_ok"] = r.cond3_reversed_ok;
  j["cond4_sum"] = to_string(r.cond4_sum);
  j["cond4_threshold"] = r.cond4_threshold;
  j["search_bound"] = r.search_bound;
  j["bounded_search_found"] = r.bounded_search_found;
  j["agreement"] = r.agreement;
  return j;
}

// --- enumerate --------------------------------------------------------

inline std::string render_enumerate_text(const EnumerationSummary& s) {
  std::ostringstream os;
  os << "bounds: k <= " << s.bounds.k_max << ", s <= " << s.bounds.s_max
     << ", n <= " << s.bounds.n_max << ", w <= " << s.bounds.w_max
     << ", search <= " << s.bounds.search_bound << "\n";
  os << "instances: " << s.instances << "\n";
  os << "valid: " << s.valid << "\n";
  os << "invalid: " << s.invalid << "\n";
  os << "certificates: " << s.certificates << "\n";
  os << "refutations: " << s.refutations << "\n";
  os << "cond3 reversal mismatches: " << s.cond3_reversal_mismatches << "\n";
  os << "disagreements: " << s.disagreements << "\n";
  for (const auto& f : s.failures) os << "failure: " << f << "\n";
  return os.str();
}

inline Json render_enumerate_json(const EnumerationSummary& s) {
  Json b;
  b["k_max"] = s.bounds.k_max;
  b["s_max"] = s.bounds.s_max;
  b["n_max"] = s.bounds.n_max;
  b["w_max"] = s.bounds.w_max;
  b["search_bound"] = s.bounds.search_bound;
  Json j;
  j["bounds"] = b;
  j["instances"] = s.instances;
  j["valid"] = s.valid;
  j["invalid"] = s.invalid;
  j["certificates"] = s.certificates;
  j["refutations"] = s.refutations;
  j["cond3_reversal_mismatches"] = s.cond3_reversal_mismatches;
  j["disagreements"] = s.disagreements;
  j["failures"] = s.failures;
  return j;
}

}  // namespace cstar
