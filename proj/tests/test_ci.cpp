#include <random>

#include "doctest.h"
#include "helpers.hpp"

using namespace cxlab;

namespace {

bool identity_blocks(const ChainMap& c, const QuotientRing& r) {
  for (const auto& [n, b] : c.blocks) {
    if (b.rows() != 1 || b.cols() != 1) return false;
    if (r.ambient().format(b.entry(0, 0)) != "1") return false;
  }
  return !c.blocks.empty();
}

Coeff random_unit(std::mt19937_64& rng) { return static_cast<Coeff>(1 + rng() % 32002); }

/// Random eta supported on the lowest-degree generators.
std::vector<Coeff> generic(const QuotientRing& r, std::mt19937_64& rng) {
  std::vector<Coeff> c;
  const auto deg = r.ci_degrees();
  const int lo = *std::min_element(deg.begin(), deg.end());
  for (int d : deg) c.push_back(d == lo ? random_unit(rng) : 0);
  return c;
}

int cx_of(const GradedModule& m) { return complexity_estimate(minimal_resolution(m, 20)).value; }

}  // namespace

TEST_SUITE("ci") {
  TEST_CASE("hypersurface operator is the identity") {
    auto a = th::ring(th::kXY);
    const auto res = th::resolve(th::mod(a, "quotient x"), 10);
    const auto ops = eisenbud_operators(res);
    CHECK(ops.decomposition_certified);
    REQUIRE(ops.operators.size() == 1);
    const auto& t = ops.operators[0];
    CHECK(t.certified);
    CHECK(t.shift == 2);
    CHECK(t.degree == 2);
    CHECK(t.blocks.size() == 9);
    CHECK(identity_blocks(t, *a));
    CHECK(check_chain_map(t).empty());
  }

  TEST_CASE("codimension zero has no operators") {
    auto p = th::ring(th::kPlane);
    CHECK(eisenbud_operators(th::resolve(th::mod(p, "k"), 4)).operators.empty());
    CHECK_THROWS_AS(eta(eisenbud_operators(th::resolve(th::mod(p, "k"), 4)), {}), InvalidInput);
  }

  TEST_CASE("two operators on the resolution of k over k[x,y]/(x^2,y^2)") {
    auto s = th::ring(th::kSquares);
    const auto ops = eisenbud_operators(th::resolve(th::mod(s, "k"), 10));
    CHECK(ops.decomposition_certified);
    REQUIRE(ops.operators.size() == 2);
    for (const auto& t : ops.operators) {
      CHECK(t.certified);
      CHECK(t.shift == 2);
      for (const auto& [n, b] : t.blocks) {
        CAPTURE(n);
        bool nonzero = false;
        for (const auto& col : b.columns) nonzero |= !col.is_zero();
        CHECK(nonzero);
      }
    }
  }

  TEST_CASE("operators certify on corpus resolutions") {
    for (const char* text : {th::kXY, th::kSquares, th::kSquares3, th::kCubes3, "p=32003; vars x,y,z; ci: x^2,y^3"}) {
      auto r = th::ring(text);
      for (std::uint64_t seed = 0; seed < 8; ++seed) {
        CAPTURE(std::string(text));
        CAPTURE(seed);
        const auto ops = eisenbud_operators(th::resolve(random_module(r, seed), 8));
        CHECK(ops.decomposition_certified);
        for (const auto& t : ops.operators) CHECK(t.certified);
      }
    }
  }

  TEST_CASE("eta and its powers") {
    auto a = th::ring(th::kXY);
    const auto ops = eisenbud_operators(th::resolve(th::mod(a, "quotient x"), 12));
    const auto e = eta(ops, {1});
    CHECK(identity_blocks(e, *a));
    const auto e1 = eta_power(e, 1);
    CHECK(e1.shift == 2);
    CHECK(e1.blocks.size() == e.blocks.size());
    const auto e3 = eta_power(e, 3);
    CHECK(e3.shift == 6);
    CHECK(e3.degree == 6);
    CHECK(e3.certified);
    CHECK(identity_blocks(e3, *a));
    CHECK(eta(ops, {0}).is_zero());
    CHECK_THROWS_AS(eta(ops, {1, 1}), InvalidInput);
    CHECK_THROWS_AS(eta_power(e, 0), InvalidInput);

    auto s = th::ring(th::kSquares);
    const auto sops = eisenbud_operators(th::resolve(th::mod(s, "k"), 10));
    std::mt19937_64 rng(2);
    const auto g = eta(sops, generic(*s, rng));
    CHECK(g.certified);
    CHECK_FALSE(g.is_zero());
    const auto g2 = eta_power(g, 2);
    CHECK(g2.shift == 4);
    CHECK(g2.certified);
    CHECK(check_chain_map(g2).empty());

    auto mixed = th::ring("p=32003; vars x,y,z; ci: x^2,y^3");
    const auto mops = eisenbud_operators(th::resolve(th::mod(mixed, "k"), 8));
    CHECK_THROWS_AS(eta(mops, {1, 1}), InvalidInput);
    CHECK(eta(mops, {0, 5}).degree == 3);
  }

  TEST_CASE("pushout for the hypersurface is free") {
    auto a = th::ring(th::kXY);
    const auto m = th::mod(a, "quotient x");
    const auto res = th::resolve(m, 20);
    const auto p = k_eta(eta(eisenbud_operators(res), {1}));
    CHECK(p.q == 1);
    CHECK(p.delta == 2);
    CHECK(p.exact());
    CHECK(p.k.is_free());
    CHECK(p.k.num_generators() == 1);
    CHECK(p.k.hilbert_function(0, 8) == std::vector<long long>{0, 1, 2, 2, 2, 2, 2, 2, 2});
    const auto v = verify_reduction(p, th::mod(a, "k"));
    CHECK(v.cx_source.value == 1);
    CHECK(v.cx_k.value == 0);
    CHECK(v.depth_source == 1);
    CHECK(v.depth_k == 1);
    CHECK(v.passed());
  }

  TEST_CASE("zero element splits and does not reduce complexity") {
    auto s = th::ring(th::kSquares);
    const auto m = th::mod(s, "k");
    const auto res = th::resolve(m, 20);
    const auto p = k_eta(eta(eisenbud_operators(res), {0, 0}));
    CHECK(p.exact());
    for (int d = -2; d <= 8; ++d) {
      CAPTURE(d);
      CHECK(p.k.hilbert_function(d, d)[0] ==
            p.shifted_source.hilbert_function(d, d)[0] + p.omega.hilbert_function(d, d)[0]);
    }
    const auto bk = betti_table(minimal_resolution(p.k, 10)).totals;
    const auto bm = betti_table(minimal_resolution(m, 11)).totals;
    for (std::size_t n = 0; n <= 10; ++n) CHECK(bk[n] == bm[n] + bm[n + 1]);
    const auto v = verify_reduction(p, m);
    CHECK_FALSE(v.complexity_drops);
    CHECK(v.cx_k.value == 2);
    CHECK_FALSE(v.passed());
  }

  TEST_CASE("generic eta reduces k over k[x,y]/(x^2,y^2) to complexity 1") {
    auto s = th::ring(th::kSquares);
    const auto m = th::mod(s, "k");
    std::mt19937_64 rng(4);
    const auto p = k_eta(eta(eisenbud_operators(th::resolve(m, 20)), generic(*s, rng)));
    CHECK(p.exact());
    const auto bk = betti_table(minimal_resolution(p.k, 12)).totals;
    for (std::size_t n = 4; n <= 12; ++n) CHECK(bk[n] == bk[3]);
    const auto v = verify_reduction(p, m);
    CHECK(v.cx_source.value == 2);
    CHECK(v.cx_k.value == 1);
    CHECK(v.depth_source == 0);
    CHECK(v.depth_k == 0);
    CHECK(v.passed());
  }

  TEST_CASE("Hilbert additivity for powers of eta") {
    int seen = 0;
    for (const char* text : {th::kSquares, th::kSquares3, th::kCubes3}) {
      auto r = th::ring(text);
      std::mt19937_64 rng(8);
      for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const auto res = th::resolve(random_module(r, seed), 8);
        if (res->complete) continue;
        ++seen;
        const auto e = eta(eisenbud_operators(res), generic(*r, rng));
        for (int t = 1; t <= 3; ++t) {
          CAPTURE(std::string(text));
          CAPTURE(seed);
          CAPTURE(t);
          const auto p = k_eta(eta_power(e, t));
          CHECK(p.q == 2 * t - 1);
          CHECK(p.hilbert_additive);
          CHECK(p.exact());
        }
      }
    }
    CHECK(seen >= 6);
  }

  TEST_CASE("reduction chains") {
    auto a = th::ring(th::kXY);
    const auto c1 = reduction_chain(th::mod(a, "quotient x"));
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].pushout.k.is_free());
    CHECK(reduction_chain(th::mod(a, "free 0,2")).empty());

    auto s = th::ring(th::kSquares);
    const auto c2 = reduction_chain(th::mod(s, "k"));
    REQUIRE(c2.size() == 2);
    CHECK(c2[0].verdict.cx_source.value == 2);
    CHECK(c2[0].verdict.cx_k.value == 1);
    CHECK(c2[1].verdict.cx_k.value == 0);
    for (const auto& step : c2) CHECK(step.verdict.passed());

    const auto c3 = reduction_chain(th::mod(th::ring(th::kCubes3), "k"));
    REQUIRE(c3.size() == 3);
    for (const auto& step : c3) CHECK(step.verdict.passed());

    // Same seed, same chain.
    const auto again = reduction_chain(th::mod(s, "k"));
    CHECK(again[0].coefficients == c2[0].coefficients);
    CHECK(again[1].pushout.k.render() == c2[1].pushout.k.render());
  }

  TEST_CASE("a retry budget of zero is rejected") {
    auto s = th::ring(th::kSquares);
    CHECK_THROWS_AS(reduction_chain(th::mod(s, "k"), 0), InvalidInput);
  }

  TEST_CASE("periodicity of complexity-one resolutions") {
    auto a = th::ring(th::kXY);
    const auto v = periodicity_isomorphism_check(th::resolve(th::mod(a, "quotient x")), 1);
    CHECK(v.applicable);
    CHECK(v.passed);
    const auto f = periodicity_isomorphism_check(th::resolve(th::mod(a, "ring")), 1);
    CHECK_FALSE(f.applicable);
    CHECK(f.passed);
    const auto chain = reduction_chain(th::mod(th::ring(th::kSquares), "k"));
    const auto k1 = th::resolve(chain[0].pushout.k);
    const auto pk = periodicity_isomorphism_check(k1, complexity_estimate(*k1).window.first);
    CHECK(pk.applicable);
    CHECK(pk.passed);
    CHECK(pk.failure.empty());
  }

  TEST_CASE("complexity of K for consecutive powers") {
    for (const char* text : {th::kSquares, th::kCubes3}) {
      auto r = th::ring(text);
      std::mt19937_64 rng(12);
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const auto m = seed == 0 ? GradedModule::residue_field(r) : random_module(r, seed);
        const auto res = th::resolve(m, 20);
        if (res->complete) continue;
        const auto e = eta(eisenbud_operators(res), generic(*r, rng));
        std::vector<int> cx;
        for (int t = 1; t <= 3; ++t) cx.push_back(cx_of(k_eta(eta_power(e, t)).k));
        CAPTURE(std::string(text));
        CAPTURE(seed);
        CHECK(cx[1] <= cx[0]);
        CHECK(cx[2] <= std::max(cx[0], cx[1]));
      }
    }
  }

  TEST_CASE("Ext jumps by q + 1 where Ext of K vanishes") {
    const auto chain = reduction_chain(th::mod(th::ring(th::kSquares), "k"));
    int applied = 0;
    for (const auto& step : chain)
      for (const char* n : {"k", "ring"}) {
        bool used = false;
        const auto failures = ext_jump_check(step.pushout, th::mod(step.pushout.source.ring(), n), 12, &used);
        CHECK(failures.empty());
        applied += used;
      }
    CHECK(applied >= 1);
  }

  TEST_CASE("shifted resolutions") {
    auto a = th::ring(th::kXY);
    const auto res = minimal_resolution(th::mod(a, "quotient x"), 4);
    const auto sh = shifted_resolution(res, 3);
    for (int n = 0; n <= 4; ++n)
      CHECK(sh.twists[static_cast<std::size_t>(n)] == std::vector<int>{n + 3});
  }
}
