#pragma once

#include <string>

#include "cstar/io.hpp"
#include "cstar/render.hpp"

namespace cstar {

// Subcommand vs. input kind mismatch or an option that does not apply; maps
// to the usage exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  bool json = false;
  std::int64_t bound = 12;      // ample/equiv bounded-search ceiling
  std::string part = "full";    // matrix on moduli: full | D0 | Dinf
  EnumerationBounds enum_bounds;
};

// Exit codes: 0 success, 1 the checked property fails, 2 usage/parse errors
// (raised as exceptions; the tool maps them).
struct RunResult {
  int exit_code = 0;
  std::string output;
};

namespace detail {

inline const ModuliData& as_moduli(const InputDocument& doc,
                                   const std::string& cmd) {
  if (doc.kind != InputDocument::Kind::Moduli)
    throw UsageError("'" + cmd + "' requires moduli input");
  return *doc.moduli;
}

inline ModelPart parse_part(const std::string& part) {
  if (part == "full") return ModelPart::Full;
  if (part == "D0") return ModelPart::D0;
  if (part == "Dinf") return ModelPart::Dinf;
  throw UsageError("unknown part \"" + part + "\" (full, D0, Dinf)");
}

}  // namespace detail

// Dispatch one subcommand against a parsed input document (null for
// 'enumerate', which takes no input).  Returns the rendered output and the
// exit code; all error paths throw.
inline RunResult run_subcommand(const std::string& cmd,
                                const InputDocument* doc,
                                const RunOptions& opt) {
  RunResult res;
  if (cmd == "enumerate") {
    if (doc) throw UsageError("'enumerate' takes no input document");
    EnumerationBounds b = opt.enum_bounds;
    b.search_bound = opt.bound;
    const EnumerationSummary sum = enumerate_and_crosscheck(b);
    res.output = opt.json ? json_text(render_enumerate_json(sum))
                          : render_enumerate_text(sum);
    res.exit_code = sum.disagreements == 0 ? 0 : 1;
    return res;
  }
  if (!doc) throw UsageError("'" + cmd + "' requires an input document");

  if (cmd == "validate") {
    const ModuliData& md = detail::as_moduli(*doc, cmd);
    const ValidationReport r = validate_moduli(md);
    res.output = opt.json ? json_text(render_validation_json(md, r))
                          : render_validation_text(md, r);
    res.exit_code = r.valid ? 0 : 1;
  } else if (cmd == "matrix") {
    IntersectionMatrix m;
    if (doc->kind == InputDocument::Kind::Star) {
      if (opt.part != "full")
        throw UsageError("--part applies to moduli input only");
      m = intersection_matrix(*doc->star);
    } else {
      const ModuliData& md = detail::as_moduli(*doc, cmd);
      m = model_intersection_matrix(build_model(md),
                                    detail::parse_part(opt.part));
    }
    res.output =
        opt.json ? json_text(render_matrix_json(m)) : render_matrix_text(m);
  } else if (cmd == "diag") {
    const StarGraph g = doc->kind == InputDocument::Kind::Star
                            ? *doc->star
                            : star_graph(detail::as_moduli(*doc, cmd));
    const DiagonalForm d = star_diagonal(g);
    bool negdef = true;
    for (const auto& p : d)
      if (p >= 0) negdef = false;
    res.output = opt.json ? json_text(render_diag_json(d, negdef))
                          : render_diag_text(d, negdef);
    res.exit_code = negdef ? 0 : 1;
  } else if (cmd == "dual") {
    const ModuliData& md = detail::as_moduli(*doc, cmd);
    res.output =
        opt.json ? json_text(render_dual_json(md)) : render_dual_text(md);
  } else if (cmd == "trace") {
    if (doc->kind == InputDocument::Kind::Bamboo) {
      const ContractionResult r = contract_to_base(*doc->bamboo);
      res.output = opt.json ? json_text(render_trace_bamboo_json(r))
                            : render_trace_bamboo_text(r);
      res.exit_code = r.ok ? 0 : 1;
    } else {
      const ModuliData& md = detail::as_moduli(*doc, cmd);
      res.output = opt.json ? json_text(render_trace_moduli_json(md))
                            : render_trace_moduli_text(md);
    }
  } else if (cmd == "model") {
    const ModelGraph g = build_model(detail::as_moduli(*doc, cmd));
    res.output =
        opt.json ? json_text(render_model_json(g)) : render_model_text(g);
  } else if (cmd == "cs-check") {
    const ModelGraph g = build_model(detail::as_moduli(*doc, cmd));
    const ModelIndexReport rep = model_index_report(g);
    res.output =
        opt.json ? json_text(render_cs_json(rep)) : render_cs_text(rep);
    res.exit_code = rep.valid ? 0 : 1;
  } else if (cmd == "ample") {
    const ModuliData& md = detail::as_moduli(*doc, cmd);
    const auto cert = solve_ample(md);
    const bool bounded_found =
        cert ? false : exists_certificate_bounded(md, opt.bound);
    res.output =
        opt.json
            ? json_text(render_ample_json(md, cert, opt.bound, bounded_found))
            : render_ample_text(md, cert, opt.bound, bounded_found);
    res.exit_code = cert ? 0 : 1;
  } else if (cmd == "equiv") {
    const ModuliData& md = detail::as_moduli(*doc, cmd);
    const EquivalenceReport r = equivalence_report(md, opt.bound);
    res.output = opt.json ? json_text(render_equiv_json(r))
                          : render_equiv_text(md, r);
    res.exit_code = r.agreement ? 0 : 1;
  } else if (cmd == "dot") {
    std::string dot;
    if (doc->kind == InputDocument::Kind::Star)
      dot = to_dot(*doc->star);
    else
      dot = to_dot(build_model(detail::as_moduli(*doc, cmd)));
    if (opt.json) {
      Json j;
      j["dot"] = dot;
      res.output = json_text(j);
    } else {
      res.output = dot;
    }
  } else {
    throw UsageError("unknown subcommand '" + cmd + "'");
  }
  return res;
}

}  // namespace cstar
