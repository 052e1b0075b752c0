#include <fstream>
#include <sstream>

#include "cxlab/json_io.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace cxlab;

namespace {

ComplexityEstimate cx_of_totals(std::vector<long long> totals) {
  BettiTable bt;
  bt.totals = std::move(totals);
  return complexity_estimate(bt);
}

std::vector<long long> sequence(int len, long long (*f)(int)) {
  std::vector<long long> v;
  for (int n = 0; n < len; ++n) v.push_back(f(n));
  return v;
}

/// Every witness group recomputed on its own.
void check_witness(const CheckReport& r, const GradedModule& m, const GradedModule& n) {
  const auto kind = check_kind(r.check);
  for (int i = 0; i <= r.horizon; ++i) {
    CAPTURE(i);
    const auto single = kind == HomologyKind::Ext ? ext(m, n, i, i) : tor(m, n, i, i);
    CHECK(single.is_zero.at(i) == r.witness.is_zero.at(i));
    const auto [lo1, hi1] = single.window.at(i);
    const auto [lo2, hi2] = r.witness.window.at(i);
    for (int d = std::max(lo1, lo2); d <= std::min(hi1, hi2); ++d) CHECK(single.dim(i, d) == r.witness.dim(i, d));
  }
}

}  // namespace

TEST_SUITE("harness") {
  TEST_CASE("complexity examples") {
    CHECK(cx_of_totals(std::vector<long long>(21, 1)).value == 1);
    const auto lin = cx_of_totals(sequence(21, [](int n) { return static_cast<long long>(n + 1); }));
    CHECK(lin.value == 2);
    CHECK(lin.confidence == "fitted");
    const auto quad = cx_of_totals(sequence(21, [](int n) { return static_cast<long long>((n + 1) * (n + 2) / 2); }));
    CHECK(quad.value == 3);
    const auto fin = cx_of_totals({2, 3, 0, 0, 0, 0, 0, 0, 0, 0});
    CHECK(fin.value == 0);
    CHECK(fin.method == "finite-pd");
    CHECK(fin.confidence == "exact");
    // Periodic of period two with different values still has complexity 1.
    CHECK(cx_of_totals(sequence(21, [](int n) { return static_cast<long long>(n % 2 ? 3 : 2); })).value == 1);
    CHECK_THROWS_AS(cx_of_totals({1, 1, 1, 1, 1}), InvalidInput);
  }

  TEST_CASE("complexity of known families") {
    CHECK(complexity_estimate(minimal_resolution(th::mod(th::ring(th::kSquares), "k"), 20)).value == 2);
    CHECK(complexity_estimate(minimal_resolution(th::mod(th::ring(th::kCubes3), "k"), 20)).value == 3);
    CHECK(complexity_estimate(minimal_resolution(th::mod(th::ring(th::kXY), "quotient x"), 20)).value == 1);
    CHECK(complexity_estimate(minimal_resolution(th::mod(th::ring(th::kXY), "free 0,3"), 20)).value == 0);
  }

  TEST_CASE("uniform gap examples") {
    auto a = th::ring(th::kXY);
    const auto m = th::mod(a, "quotient x");
    const auto n = th::mod(a, "quotient y");
    const auto r = check_uniform_gap(m, n, 2, 1, HomologyKind::Ext);
    CHECK(r.complexity == 1);
    CHECK(r.lower_bound == 0);
    CHECK(r.pattern == std::vector<int>{2, 3});
    CHECK_FALSE(r.hypothesis_met);
    CHECK_FALSE(r.counterexample());
    check_witness(r, m, n);

    const auto mcm = check_uniform_gap(m, th::mod(a, "ring"), 1, 1, HomologyKind::Ext);
    CHECK(mcm.pattern == std::vector<int>{1, 2});
    CHECK(mcm.hypothesis_met);
    CHECK(mcm.conclusion_verified);
    CHECK(mcm.horizon == 10);
    CHECK_FALSE(mcm.first_nonzero.has_value());
    check_witness(mcm, m, th::mod(a, "ring"));

    // Tor_i(A/(x), A/(x)) is nonzero in every degree.
    CHECK_FALSE(check_uniform_gap(m, m, 1, 1, HomologyKind::Tor).hypothesis_met);

    try {
      check_uniform_gap(m, n, 2, 2, HomologyKind::Ext);
      FAIL("even gap accepted");
    } catch (const InvalidInput& e) {
      CHECK(std::string(e.what()).find("even") != std::string::npos);
    }
    CHECK_THROWS_AS(check_uniform_gap(m, n, 0, 1, HomologyKind::Ext), InvalidInput);
    CHECK_THROWS_AS(check_uniform_gap(m, n, 2, -1, HomologyKind::Ext), InvalidInput);
  }

  TEST_CASE("one odd and one even vanishing group force vanishing for complexity one") {
    int met = 0;
    for (const char* text : {th::kXY, th::kSquares}) {
      auto r = th::ring(text);
      for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const auto m = random_module(r, seed);
        const auto res = th::resolve(m, 20);
        if (res->complete || complexity_estimate(*res).value != 1) continue;
        for (const char* other : {"k", "ring"}) {
          const auto n = th::mod(r, other);
          const int lo = ring_depth(*r) - depth(m);
          const auto ctx = make_context(res, n, 18);
          for (auto check : {VanishingCheck::UniformGapExt, VanishingCheck::UniformGapTor})
            for (int idx = lo + 1; idx <= lo + 2; ++idx) {
              const auto rep = evaluate_check(ctx, check, idx, {1});
              CAPTURE(std::string(text));
              CAPTURE(seed);
              CHECK_FALSE(rep.counterexample());
              met += rep.hypothesis_met;
            }
        }
      }
    }
    CHECK(met > 0);
  }

  TEST_CASE("finite length examples") {
    auto a = th::ring(th::kXY);
    const auto m = th::mod(a, "quotient x");
    const auto k = th::mod(a, "k");
    for (int n = 1; n <= 6; ++n) {
      const auto r = check_finite_length(m, k, n, VanishingCheck::ConsecutiveExt);
      CHECK(r.pattern == std::vector<int>{n});
      CHECK_FALSE(r.hypothesis_met);
      REQUIRE(r.length_identity.has_value());
      CHECK(*r.length_identity);
    }

    auto s = th::ring(th::kSquares);
    const auto ks = th::mod(s, "k");
    const auto rs = th::mod(s, "ring");
    const auto t35 = check_finite_length(ks, rs, 1, VanishingCheck::FiniteLengthGapExt, 3);
    CHECK(t35.complexity == 2);
    CHECK(t35.lower_bound == 0);
    CHECK(t35.pattern == std::vector<int>{1, 4});
    CHECK(t35.hypothesis_met);
    CHECK(t35.conclusion_verified);
    CHECK_FALSE(t35.length_identity.has_value());
    check_witness(t35, ks, rs);

    const auto t36 = check_finite_length(rs, ks, 1, VanishingCheck::FiniteLengthGapTor, 1);
    CHECK(t36.complexity == 0);
    CHECK(t36.hypothesis_met);
    CHECK(t36.conclusion_verified);

    CHECK_THROWS_AS(check_finite_length(m, th::mod(a, "quotient y"), 2, VanishingCheck::ConsecutiveExt), InvalidInput);
    CHECK_THROWS_AS(check_finite_length(ks, rs, 1, VanishingCheck::FiniteLengthGapExt, 2), InvalidInput);
    CHECK_THROWS_AS(check_finite_length(ks, rs, 1, VanishingCheck::UniformGapExt, 1), InvalidInput);
    // The bound uses dim A: n = 0 is not above dim A - depth k = 0.
    CHECK_THROWS_AS(check_finite_length(ks, rs, 0, VanishingCheck::FiniteLengthGapExt, 1), InvalidInput);
  }

  TEST_CASE("two gap examples") {
    auto s = th::ring(th::kSquares);
    const auto k = th::mod(s, "k");
    const auto r = th::mod(s, "ring");
    const auto t37 = check_two_gap(k, r, 1, 1, 3, HomologyKind::Ext);
    CHECK(t37.pattern == std::vector<int>{1, 2, 5});
    CHECK(t37.hypothesis_met);
    CHECK(t37.conclusion_verified);
    check_witness(t37, k, r);
    for (auto [p, q] : {std::pair{1, 1}, std::pair{1, 3}, std::pair{3, 1}}) {
      CHECK_FALSE(check_two_gap(k, k, 1, p, q, HomologyKind::Ext).hypothesis_met);
      CHECK_FALSE(check_two_gap(k, k, 2, p, q, HomologyKind::Tor).hypothesis_met);
    }
    CHECK_THROWS_AS(check_two_gap(k, r, 1, 2, 3, HomologyKind::Ext), InvalidInput);
    auto a = th::ring(th::kXY);
    CHECK_THROWS_AS(check_two_gap(th::mod(a, "quotient x"), th::mod(a, "ring"), 1, 1, 1, HomologyKind::Ext),
                    InvalidInput);
  }

  TEST_CASE("mixed gaps agree with the uniform and two gap checks") {
    auto a = th::ring(th::kXY);
    const auto m = th::mod(a, "quotient x");
    for (const char* other : {"ring", "k", "quotient y"})
      for (int n = 1; n <= 3; ++n)
        for (int q : {1, 3}) {
          const auto nn = th::mod(a, other);
          const auto u = check_uniform_gap(m, nn, n, q, HomologyKind::Ext);
          const auto c = explore_mixed_gaps(m, nn, n, {q}, HomologyKind::Ext);
          CHECK(c.pattern == u.pattern);
          CHECK(c.hypothesis_met == u.hypothesis_met);
          CHECK(c.conclusion_verified == u.conclusion_verified);
        }
    auto s = th::ring(th::kSquares);
    for (const char* other : {"ring", "k"})
      for (int n = 1; n <= 2; ++n) {
        const auto k = th::mod(s, "k"), nn = th::mod(s, other);
        const auto t = check_two_gap(k, nn, n, 1, 3, HomologyKind::Ext);
        const auto c = explore_mixed_gaps(k, nn, n, {1, 3}, HomologyKind::Ext);
        CHECK(c.pattern == t.pattern);
        CHECK(c.hypothesis_met == t.hypothesis_met);
        CHECK(c.conclusion_verified == t.conclusion_verified);
      }
    CHECK_THROWS_AS(explore_mixed_gaps(th::mod(s, "k"), th::mod(s, "k"), 1, {1}), InvalidInput);
    CHECK_THROWS_AS(explore_mixed_gaps(th::mod(s, "k"), th::mod(s, "k"), 1, {1, 2}), InvalidInput);
  }

  TEST_CASE("corpus over k[x,y,z]/(x^2,y^2,z^2), seed 7") {
    CorpusOptions opts;
    opts.rings = {th::kCubes3};
    opts.seed = 7;
    opts.count = 200;
    const auto summary = run_corpus(opts);
    CHECK(summary.modules == 200);
    CHECK(summary.clean());
    CHECK(summary.counterexamples.empty());
    for (const auto& f : summary.open_findings) {
      CAPTURE(f.module);
      CHECK(f.report.complexity > 2);
    }
    CHECK(summary.hypotheses_met > 0);
  }

  TEST_CASE("random modules") {
    auto a = th::ring(th::kXY);
    for (std::uint64_t seed = 0; seed < 10; ++seed) CHECK(random_module(a, seed).render() == random_module(a, seed).render());
    RandomModuleCaps none;
    none.max_relations = 0;
    CHECK(random_module(a, 3, none).is_free());
    auto s = th::ring(th::kSquares3);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto m = random_module(s, seed);
      CHECK(m.num_generators() <= 3);
      CHECK(m.relations().cols() <= 3);
    }
  }

  TEST_CASE("golden Betti tables over k[x,y]/(xy)") {
    std::ifstream in(std::string(CXLAB_TEST_DATA) + "/random_module_betti_xy.txt");
    REQUIRE(in.good());
    std::stringstream golden;
    golden << in.rdbuf();
    auto a = th::ring(th::kXY);
    oracle::Ring o(*a);
    std::string produced;
    for (std::uint64_t seed : {1, 3, 5}) {
      const auto m = random_module(a, seed);
      const auto bt = betti_table(minimal_resolution(m, 6));
      produced += "seed " + std::to_string(seed) + "\n" + bt.render();
      const auto dense = oracle::resolve(o, m, 4, 8);
      for (int n = 0; n <= 4; ++n)
        for (int d = 0; d <= 8; ++d) CHECK(bt.at(n, d) == dense.betti(n, d));
    }
    CHECK(produced == golden.str());
  }

  TEST_CASE("resolution properties hold and catch a broken differential") {
    for (const char* text : {th::kXY, th::kSquares, th::kCubes3}) {
      auto r = th::ring(text);
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        CAPTURE(std::string(text));
        CAPTURE(seed);
        CHECK(resolution_properties(th::resolve(random_module(r, seed), 8)).empty());
      }
    }
    auto a = th::ring(th::kXY);
    FreeResolution broken = minimal_resolution(th::mod(a, "quotient x"), 6);
    const auto& amb = a->ambient();
    broken.differentials[2].columns[0] = elem::from_poly(amb.parse("x"), 0);
    CHECK_FALSE(resolution_properties(std::make_shared<const FreeResolution>(broken)).empty());
  }

  TEST_CASE("hypersurface example") {
    const auto e = run_hypersurface_example();
    CHECK(e.betti_ok());
    CHECK(e.tor_ok());
    CHECK(e.ext_ok());
    CHECK(e.even_gap_pattern_vanishes);
    CHECK(e.even_gap_middle_nonzero);
    CHECK_FALSE(e.even_gap_rejection.empty());
    for (int i = 0; i <= 20; ++i) {
      CHECK(e.tor.is_zero.at(i) == (i % 2 == 1));
      CHECK(e.ext.is_zero.at(i) == (i % 2 == 0));
    }
  }

  TEST_CASE("report schema") {
    auto s = th::ring(th::kSquares);
    const auto j = io::to_json(check_two_gap(th::mod(s, "k"), th::mod(s, "ring"), 1, 1, 3, HomologyKind::Ext));
    for (const char* key : {"check", "inputs", "complexity", "lower_bound", "pattern", "hypothesis_met",
                            "conclusion_verified", "horizon", "first_nonzero", "witness", "record"})
      CHECK(j.contains(key));
    CHECK(j["check"] == "two-gap-ext");
    CHECK(j["record"] == "consistent");
    CHECK(j["inputs"]["n"] == 1);
    CHECK(j["inputs"]["gaps"] == io::Json::array({1, 3}));
    const auto c = io::to_json(CorpusSummary{});
    CHECK(c.contains("counterexamples"));
  }
}
