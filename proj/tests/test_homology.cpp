#include "doctest.h"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace cxlab;

namespace {

/// Compares every graded dimension of Tor_i and Ext^i (i <= top_index) with the dense oracle.
void compare_homology(const GradedModule& m, const GradedModule& n, int top_index, int degree_top) {
  auto res = minimal_resolution(m, top_index + 1);
  oracle::Ring o(*m.ring());
  const auto dense = oracle::resolve(o, m, top_index + 1, degree_top);
  // The dense resolution must have found every generator of F_0..F_{top+1}.
  for (int k = 0; k <= std::min(res.top(), top_index + 1); ++k)
    REQUIRE(!res.twists[static_cast<std::size_t>(k)].empty() == !dense.frees[static_cast<std::size_t>(k)].twists.empty());
  for (int k = 1; k <= std::min(res.top(), top_index + 1); ++k)
    for (int t : res.twists[static_cast<std::size_t>(k)]) REQUIRE(t <= degree_top);
  const oracle::Quotient q(o, n);
  HomologyOptions opts;
  opts.degree_cap = degree_top;
  const auto t = tor(res, n, 0, top_index, opts);
  const auto e = ext(res, n, 0, top_index, opts);
  const int nmin = n.min_twist();
  for (int i = 0; i <= top_index; ++i) {
    CAPTURE(i);
    for (int d = nmin; d <= degree_top; ++d) {
      CAPTURE(d);
      CHECK(t.dim(i, d) == oracle::tor_dim(dense, q, i, d));
    }
    const auto& tw = i <= res.top() ? res.twists[static_cast<std::size_t>(i)] : std::vector<int>{};
    const int bmax = tw.empty() ? 0 : tw.back();
    for (int d = nmin - bmax; d <= degree_top - bmax - 1; ++d) {
      CAPTURE(d);
      CHECK(e.dim(i, d) == oracle::ext_dim(dense, q, i, d));
    }
  }
}

}  // namespace

TEST_SUITE("homology") {
  TEST_CASE("Tor and Ext of A/(x) against A/(y)") {
    auto a = th::ring(th::kXY);
    const auto m = th::mod(a, "quotient x"), n = th::mod(a, "quotient y");
    const auto t = tor(m, n, 0, 12);
    const auto e = ext(m, n, 0, 12);
    for (int i = 0; i <= 12; ++i) {
      CAPTURE(i);
      CHECK(t.is_zero.at(i) == (i % 2 == 1));
      CHECK(e.is_zero.at(i) == (i % 2 == 0));
    }
    CHECK(t.strip() == "i:   0 1 2 3 4 5 6 7 8 9 10 11 12\nTor: * 0 * 0 * 0 * 0 * 0  *  0  *");
    // Tor_0 = A/(x,y) = k in degree 0; Tor_{2j} is k in degree 2j.
    CHECK(t.dims.at(0) == std::map<int, long long>{{0, 1}});
    CHECK(t.dims.at(4) == std::map<int, long long>{{4, 1}});
    CHECK(e.certificate.at(2) == ZeroCertificate::Syzygy);
  }

  TEST_CASE("free modules are acyclic in positive degrees") {
    for (const char* text : {th::kXY, th::kSquares, th::kSquares3}) {
      auto r = th::ring(text);
      const auto f = th::mod(r, "free 0,1");
      for (const char* other : {"k", "ring", "quotient x"}) {
        const auto n = th::mod(r, other);
        const auto t = tor(f, n, 0, 4), e = ext(f, n, 0, 4);
        for (int i = 1; i <= 4; ++i) {
          CHECK(t.is_zero.at(i));
          CHECK(e.is_zero.at(i));
        }
        const auto flat = tor(n, f, 1, 4);
        for (int i = 1; i <= 4; ++i) CHECK(flat.is_zero.at(i));
      }
    }
  }

  TEST_CASE("Ext of A/(x) into A vanishes in positive degrees") {
    auto a = th::ring(th::kXY);
    const auto e = ext(th::mod(a, "quotient x"), th::mod(a, "ring"), 0, 12);
    CHECK_FALSE(e.is_zero.at(0));
    for (int i = 1; i <= 12; ++i) CHECK(e.is_zero.at(i));
  }

  TEST_CASE("Tor and Ext against k recover Betti numbers") {
    for (const char* text : {th::kXY, th::kSquares, th::kSquares3, th::kCubes3}) {
      auto r = th::ring(text);
      for (std::uint64_t seed = 0; seed < 6; ++seed) {
        CAPTURE(std::string(text));
        CAPTURE(seed);
        const auto m = random_module(r, seed);
        const auto res = minimal_resolution(m, 9);
        const auto bt = betti_table(res);
        const auto k = GradedModule::residue_field(r);
        const auto t = tor(res, k, 0, 8), e = ext(res, k, 0, 8);
        for (int i = 0; i <= 8; ++i) {
          const long long beta = i < static_cast<int>(bt.totals.size()) ? bt.totals[static_cast<std::size_t>(i)] : 0;
          CHECK(t.total(i) == beta);
          CHECK(e.total(i) == beta);
          for (const auto& [key, v] : bt.entries)
            if (key.first == i) {
              CHECK(t.dim(i, key.second) == v);
              // Hom(A(-b), k) is k(b): the dual class sits in degree -b.
              CHECK(e.dim(i, -key.second) == v);
            }
        }
      }
    }
  }

  TEST_CASE("graded dimensions match the dense oracle") {
    auto a = th::ring(th::kXY);
    compare_homology(th::mod(a, "quotient x"), th::mod(a, "quotient y"), 4, 8);
    compare_homology(th::mod(a, "quotient x"), th::mod(a, "ring"), 3, 8);
    auto s = th::ring(th::kSquares);
    compare_homology(th::mod(s, "k"), th::mod(s, "ring"), 3, 6);
    compare_homology(th::mod(s, "quotient x"), th::mod(s, "quotient x+y"), 3, 6);
    auto s3 = th::ring(th::kSquares3);
    compare_homology(th::mod(s3, "quotient x*z"), th::mod(s3, "quotient y"), 2, 7);
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      CAPTURE(seed);
      compare_homology(random_module(a, seed), random_module(a, seed + 10), 2, 8);
      compare_homology(random_module(s, seed), th::mod(s, "ring"), 2, 7);
    }
  }

  TEST_CASE("Ext grading convention") {
    auto a = th::ring(th::kXY);
    const auto e = ext(th::mod(a, "free 1"), th::mod(a, "k"), 0, 0);
    CHECK(e.dims.at(0) == std::map<int, long long>{{-1, 1}});
    const auto t = tor(th::mod(a, "free 1"), th::mod(a, "k"), 0, 0);
    CHECK(t.dims.at(0) == std::map<int, long long>{{1, 1}});
  }

  TEST_CASE("Tor symmetry") {
    auto a = th::ring(th::kXY);
    CHECK(tor_symmetry_check(th::mod(a, "quotient x"), th::mod(a, "quotient y"), 0, 10).agrees);
    auto s = th::ring(th::kSquares);
    CHECK(tor_symmetry_check(th::mod(s, "k"), th::mod(s, "k"), 0, 8).agrees);
    CHECK(tor_symmetry_check(random_module(a, 1), random_module(a, 2), 0, 8).agrees);
    CHECK(tor_symmetry_check(random_module(s, 1), th::mod(s, "quotient x"), 0, 6).agrees);
  }

  TEST_CASE("finite length test") {
    auto a = th::ring(th::kXY);
    auto k = finite_length_test(th::mod(a, "k"));
    CHECK(k.finite);
    CHECK(k.length == 1);
    CHECK_FALSE(finite_length_test(th::mod(a, "quotient x")).finite);
    auto s = finite_length_test(th::mod(th::ring(th::kSquares), "ring"));
    CHECK(s.finite);
    CHECK(s.length == 4);
    CHECK(*s.top_degree == 2);
  }

  TEST_CASE("range and ring errors") {
    auto a = th::ring(th::kXY);
    const auto m = th::mod(a, "k");
    CHECK_THROWS_AS(tor(m, m, 3, 1), InvalidInput);
    CHECK_THROWS_AS(tor(minimal_resolution(m, 2), m, 0, 4), InvalidInput);
    CHECK_THROWS_AS(ext(m, th::mod(th::ring(th::kSquares), "k"), 0, 1), InvalidInput);
  }
}
