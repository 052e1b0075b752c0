#include "cxlab/json_io.hpp"

namespace cxlab::io {

namespace {

Json laurent(const std::pair<int, std::vector<long long>>& h) { return {{"lowest_degree", h.first}, {"coefficients", h.second}}; }

Json les(const LesCheck& c) {
  return {{"consistent", c.consistent},
          {"failure", c.failure},
          {"degrees", {c.degree_lo, c.degree_hi}},
          {"length", c.length}};
}

}  // namespace

Json to_json(const HomologyReport& r) {
  Json j;
  j["kind"] = r.kind == HomologyKind::Tor ? "Tor" : "Ext";
  j["M"] = r.m_name;
  j["N"] = r.n_name;
  j["range"] = {r.lo, r.hi};
  Json zero = Json::object(), dims = Json::object(), cert = Json::object(), win = Json::object();
  for (const auto& [i, z] : r.is_zero) zero[std::to_string(i)] = z;
  for (int i = r.lo; i <= r.hi; ++i) {
    Json row = Json::object();
    auto it = r.dims.find(i);
    if (it != r.dims.end())
      for (const auto& [d, v] : it->second) row[std::to_string(d)] = v;
    dims[std::to_string(i)] = row;
  }
  for (const auto& [i, c] : r.certificate) cert[std::to_string(i)] = certificate_name(c);
  for (const auto& [i, w] : r.window)
    win[std::to_string(i)] = {{"degrees", {w.first, w.second}}, {"exact", r.finite_support.count(i) && r.finite_support.at(i)}};
  j["is_zero"] = zero;
  j["dims"] = dims;
  j["certificate"] = cert;
  j["window"] = win;
  j["horizon"] = r.horizon ? Json(*r.horizon) : Json(nullptr);
  return j;
}

Json to_json(const BettiTable& b) {
  Json j = Json::object();
  for (const auto& [key, v] : b.entries) j[std::to_string(key.first)][std::to_string(key.second)] = v;
  for (std::size_t n = 0; n < b.totals.size(); ++n)
    if (!j.contains(std::to_string(n))) j[std::to_string(n)] = Json::object();
  return j;
}

Json to_json(const ComplexityEstimate& c) {
  return {{"value", c.value}, {"method", c.method}, {"window", {c.window.first, c.window.second}}, {"confidence", c.confidence}};
}

Json to_json(const CheckReport& r) {
  Json j;
  j["check"] = check_name(r.check);
  j["inputs"] = {{"M", r.m_name}, {"N", r.n_name}, {"n", r.n}, {"gaps", r.gaps}};
  j["complexity"] = r.complexity;
  j["lower_bound"] = r.lower_bound;
  j["pattern"] = r.pattern;
  j["hypothesis_met"] = r.hypothesis_met;
  j["conclusion_verified"] = r.conclusion_verified;
  j["horizon"] = r.horizon;
  j["first_nonzero"] = r.first_nonzero ? Json(*r.first_nonzero) : Json(nullptr);
  j["witness"] = r.witness.strip();
  j["witness_report"] = to_json(r.witness);
  if (r.length_identity) {
    j["length_identity"] = *r.length_identity;
    j["lengths"] = r.lengths;
  }
  j["record"] = r.counterexample() ? "COUNTEREXAMPLE" : "consistent";
  return j;
}

Json to_json(const PushoutModule& p) {
  Json j;
  j["source"] = p.source.render();
  j["q"] = p.q;
  j["delta"] = p.delta;
  j["shift"] = p.element.shift;
  j["element_certified"] = p.element.certified;
  j["element_zero"] = p.element.is_zero();
  j["K"] = p.k.render();
  j["K_presentation"] = p.k_raw.render();
  j["omega"] = p.omega.render();
  j["sequence"] = {{"hilbert_additive", p.hilbert_additive},
                   {"composite_zero", p.composite_zero},
                   {"injective", p.injective},
                   {"exact_middle", p.exact_middle},
                   {"surjective", p.surjective},
                   {"checked_window", {p.checked_window.first, p.checked_window.second}},
                   {"window_exhaustive", p.window_exhaustive},
                   {"hs_K", laurent(p.hs_k)},
                   {"hs_source", laurent(p.hs_source)},
                   {"hs_omega", laurent(p.hs_omega)}};
  j["exact"] = p.exact();
  return j;
}

Json to_json(const ReductionVerdict& v) {
  return {{"cx_source", to_json(v.cx_source)},
          {"cx_K", to_json(v.cx_k)},
          {"betti_source", v.betti_source},
          {"betti_K", v.betti_k},
          {"complexity_drops", v.complexity_drops},
          {"depth_source", v.depth_source},
          {"depth_K", v.depth_k},
          {"depth_preserved", v.depth_preserved},
          {"sequence_exact", v.sequence_exact},
          {"ext_les", les(v.ext_les)},
          {"tor_les", les(v.tor_les)},
          {"N", v.n_name},
          {"passed", v.passed()}};
}

Json to_json(const ReductionStep& s) {
  return {{"pushout", to_json(s.pushout)},
          {"verdict", to_json(s.verdict)},
          {"coefficients", s.coefficients},
          {"rejected", s.rejected}};
}

Json to_json(const PeriodicityVerdict& v) {
  return {{"applicable", v.applicable}, {"passed", v.passed}, {"cx", to_json(v.cx)},
          {"window", {v.window_start, v.window_end}}, {"failure", v.failure}};
}

Json to_json(const Finding& f) {
  return {{"ring", f.ring}, {"seed", f.seed}, {"module", f.module}, {"against", f.against}, {"report", to_json(f.report)}};
}

Json to_json(const CorpusSummary& s) {
  Json ce = Json::array(), open = Json::array();
  for (const auto& f : s.counterexamples) ce.push_back(to_json(f));
  for (const auto& f : s.open_findings) open.push_back(to_json(f));
  return {{"modules", s.modules},
          {"pairs", s.pairs},
          {"checks", s.checks},
          {"hypotheses_met", s.hypotheses_met},
          {"counterexamples", ce},
          {"open_findings", open},
          {"complexity_violations", s.complexity_violations},
          {"symmetry_failures", s.symmetry_failures},
          {"property_failures", s.property_failures},
          {"agreement_failures", s.agreement_failures},
          {"seconds", s.seconds},
          {"clean", s.clean()}};
}

Json to_json(const HypersurfaceExample& e) {
  return {{"ring", "p=32003; vars x,y; ci: x*y"},
          {"M", "A/(x)"},
          {"N", "A/(y)"},
          {"betti", e.betti},
          {"tor", to_json(e.tor)},
          {"ext", to_json(e.ext)},
          {"tor_strip", e.tor.strip()},
          {"ext_strip", e.ext.strip()},
          {"even_gap", {{"pattern", {2, 4}},
                        {"pattern_vanishes", e.even_gap_pattern_vanishes},
                        {"ext3_nonzero", e.even_gap_middle_nonzero},
                        {"checker_rejection", e.even_gap_rejection}}},
          {"betti_ok", e.betti_ok()},
          {"tor_ok", e.tor_ok()},
          {"ext_ok", e.ext_ok()}};
}

Json to_json(const FreeResolution& r) {
  Json d = Json::array();
  for (int n = 1; n <= r.top(); ++n) {
    Json cols = Json::array();
    const Matrix& m = r.d(n);
    const auto& ring = r.module.ring()->ambient();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Json col = Json::array();
      for (std::size_t row = 0; row < m.rows(); ++row) col.push_back(ring.format(m.entry(row, c)));
      cols.push_back(col);
    }
    d.push_back(cols);
  }
  return {{"module", r.module.render()},
          {"twists", r.twists},
          {"differentials", d},
          {"complete", r.complete},
          {"bound", r.length_bound},
          {"betti", to_json(betti_table(r))}};
}

}  // namespace cxlab::io
