// Runs every acceptance criterion and prints one PASS/FAIL line each.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cxlab/harness.hpp"

using namespace cxlab;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void run(const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("threw: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = out.ok && s < limit_s;
  if (out.ok && !ok) out.detail += "; over the time limit";
  failures += !ok;
  std::printf("%s  %-28s %8.2fs / %5.0fs  %s\n", ok ? "PASS" : "FAIL", name, s, limit_s, out.detail.c_str());
  std::fflush(stdout);
}

std::string join(const std::vector<std::string>& v, std::size_t max = 3) {
  std::string out;
  for (std::size_t i = 0; i < v.size() && i < max; ++i) out += (i ? "; " : "") + v[i];
  if (v.size() > max) out += "; ...";
  return out;
}

}  // namespace

int main() {
  const RingPtr xy = parse_ring("p=32003; vars x,y; ci: x*y");
  const RingPtr squares = parse_ring("p=32003; vars x,y; ci: x^2,y^2");

  run("reference-example", 5, [] {
    const auto e = run_hypersurface_example();
    const bool ok = e.betti_ok() && e.tor_ok() && e.ext_ok();
    return Outcome{ok, "beta_n = 1 to 20, Tor zero exactly at odd i, Ext zero exactly at even i"};
  });

  run("even-gap", 5, [&] {
    const auto e = run_hypersurface_example();
    bool rejected = false;
    try {
      check_uniform_gap(parse_module(xy, "quotient x"), parse_module(xy, "quotient y"), 2, 2, HomologyKind::Ext);
    } catch (const InvalidInput&) {
      rejected = true;
    }
    const bool ok = rejected && !e.even_gap_rejection.empty() && e.even_gap_pattern_vanishes && e.even_gap_middle_nonzero;
    return Outcome{ok, "q = 2 rejected; Ext^2 = Ext^4 = 0, Ext^3 != 0"};
  });

  run("complexity-known-families", 10, [&] {
    const auto res_k = minimal_resolution(GradedModule::residue_field(squares), 20);
    const auto bt = betti_table(res_k);
    bool linear = true;
    for (int n = 0; n <= 15; ++n) linear = linear && bt.totals[static_cast<std::size_t>(n)] == n + 1;
    const int c2 = complexity_estimate(res_k).value;
    const int c1 = complexity_estimate(minimal_resolution(parse_module(xy, "quotient x"), 20)).value;
    const int c0 = complexity_estimate(minimal_resolution(parse_module(xy, "free 0,1"), 20)).value;
    return Outcome{linear && c2 == 2 && c1 == 1 && c0 == 0,
                   "cx(k) = " + std::to_string(c2) + ", cx(A/(x)) = " + std::to_string(c1) +
                       ", cx(free) = " + std::to_string(c0) + (linear ? ", beta_n = n+1" : ", beta_n wrong")};
  });

  run("reduction-chain", 30, [&] {
    const auto chain = reduction_chain(GradedModule::residue_field(squares));
    bool ok = chain.size() == 2;
    if (ok) {
      ok = chain[0].verdict.cx_source.value == 2 && chain[0].verdict.cx_k.value == 1 &&
           chain[1].verdict.cx_k.value == 0;
      for (const auto& s : chain)
        ok = ok && s.verdict.passed() && s.pushout.hilbert_additive && s.verdict.depth_source == 0 &&
             s.verdict.depth_k == 0;
    }
    const auto hyp = reduction_chain(parse_module(xy, "quotient x"));
    const bool hok = hyp.size() == 1 && hyp[0].verdict.passed() && hyp[0].pushout.k.is_free();
    return Outcome{ok && hok, "k over (x^2,y^2): " + std::to_string(chain.size()) + " steps; A/(x) over (xy): " +
                                  std::to_string(hyp.size()) + " step" + (hok ? " ending free" : "")};
  });

  run("ext-jump", 60, [] {
    // Slice: per default ring, k and the first four corpus modules of positive complexity.
    int steps = 0, applied = 0;
    std::vector<std::string> fails;
    for (const auto& text : default_corpus_rings()) {
      const RingPtr r = parse_ring(text);
      std::vector<GradedModule> slice{GradedModule::residue_field(r)};
      for (std::uint64_t seed = 0; slice.size() < 5 && seed < 100; ++seed) {
        auto m = random_module(r, seed);
        if (m.is_zero()) continue;
        if (complexity_estimate(minimal_resolution(m, 20)).value > 0) slice.push_back(std::move(m));
      }
      for (const auto& m : slice)
        for (const auto& step : reduction_chain(m)) {
          ++steps;
          for (const char* n : {"k", "ring"}) {
            bool used = false;
            for (auto& f : ext_jump_check(step.pushout, parse_module(r, n), 12, &used)) fails.push_back(text + ": " + f);
            applied += used;
          }
        }
    }
    return Outcome{fails.empty() && applied > 0, std::to_string(steps) + " chain steps, " + std::to_string(applied) +
                                                     " (step, N) pairs with vanishing premise" +
                                                     (fails.empty() ? "" : "; " + join(fails))};
  });

  CorpusSummary sweep;
  run("sweep-400", 900, [&] {
    CorpusOptions opts;
    opts.seed = 0;
    opts.count = 100;
    sweep = run_corpus(opts);
    const bool ok = sweep.modules == 400 && sweep.counterexamples.empty() && sweep.complexity_violations.empty() &&
                    sweep.symmetry_failures.empty();
    return Outcome{ok, std::to_string(sweep.modules) + " modules, " + std::to_string(sweep.checks) + " checks, " +
                           std::to_string(sweep.hypotheses_met) + " hypotheses met, " +
                           std::to_string(sweep.counterexamples.size()) + " counterexamples, " +
                           std::to_string(sweep.complexity_violations.size()) + " cx > codim, " +
                           std::to_string(sweep.symmetry_failures.size()) + " Tor asymmetries"};
  });

  run("length-identity", 60, [&] {
    const GradedModule k = GradedModule::residue_field(xy);
    int used = 0;
    std::vector<std::string> fails;
    for (std::uint64_t seed = 0; used < 20 && seed < 200; ++seed) {
      const auto m = random_module(xy, seed);
      if (m.is_zero()) continue;
      if (complexity_estimate(minimal_resolution(m, 20)).value > 1) continue;
      ++used;
      const int lower = xy->krull_dim() - depth(m);
      const auto r = check_finite_length(m, k, lower + 1, VanishingCheck::ConsecutiveExt);
      if (!r.length_identity || !*r.length_identity)
        fails.push_back("seed " + std::to_string(seed) + ": lengths differ on (" + std::to_string(lower) + ", " +
                        std::to_string(r.horizon) + "]");
    }
    return Outcome{used == 20 && fails.empty(),
                   std::to_string(used) + " modules" + (fails.empty() ? "" : "; " + join(fails))};
  });

  run("property-suites", 900, [&] {
    const bool ok = sweep.modules == 400 && sweep.property_failures.empty();
    return Outcome{ok, std::to_string(sweep.property_failures.size()) + " failures, checked within sweep-400" +
                           (ok ? "" : "; " + join(sweep.property_failures))};
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
