#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace cxlab;

namespace {

FreeModuleElement vec(const QuotientRing& r, const std::vector<std::string>& comps) {
  FreeModuleElement out;
  for (std::size_t i = 0; i < comps.size(); ++i)
    out = elem::add(r.field(), out, elem::from_poly(r.ambient().parse(comps[i]), static_cast<std::uint32_t>(i)));
  return out;
}

Matrix matrix(const QuotientRing& r, std::vector<int> target, std::vector<int> source,
              const std::vector<std::vector<std::string>>& cols) {
  Matrix m{std::move(target), std::move(source), {}};
  for (const auto& c : cols) m.columns.push_back(vec(r, c));
  return m;
}

/// Random degree-d element of the submodule generated by gens.
FreeModuleElement random_member(const QuotientRing& r, const std::vector<FreeModuleElement>& gens,
                                const std::vector<int>& gdeg, int d, std::mt19937_64& rng) {
  FreeModuleElement out;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (d < gdeg[j]) continue;
    const auto c = th::random_poly(r.ambient(), d - gdeg[j], rng);
    out = elem::add(r.field(), out, elem::mul_poly(r.ambient(), c, gens[j]));
  }
  return out;
}

FreeModuleElement random_element(const QuotientRing& r, const std::vector<int>& twists, int d, std::mt19937_64& rng) {
  FreeModuleElement out;
  for (std::size_t i = 0; i < twists.size(); ++i)
    if (d >= twists[i])
      out = elem::add(r.field(), out, elem::from_poly(th::random_poly(r.ambient(), d - twists[i], rng), static_cast<std::uint32_t>(i)));
  return out;
}

}  // namespace

TEST_SUITE("gb") {
  TEST_CASE("normal form examples") {
    auto a = th::ring(th::kXY);
    auto gb = groebner(a, {0}, {vec(*a, {"x"})});
    CHECK(normal_form(vec(*a, {"x*y"}), gb).is_zero());
    CHECK(normal_form(vec(*a, {"x"}), gb).is_zero());
    CHECK(normal_form(vec(*a, {"y"}), gb) == vec(*a, {"y"}));

    auto empty = groebner(a, {0}, {});
    // Only the ring's ideal times the generator remains.
    REQUIRE(empty.basis().size() == 1);
    CHECK(empty.basis()[0] == vec(*a, {"x*y"}));
    CHECK(normal_form(vec(*a, {"y^3"}), empty) == vec(*a, {"y^3"}));

    auto p = th::ring(th::kPlane);
    auto gx = groebner(p, {0}, {vec(*p, {"x"})});
    CHECK(normal_form(vec(*p, {"y"}), gx) == vec(*p, {"y"}));
    auto sq = groebner(p, {0}, {vec(*p, {"x^2"}), vec(*p, {"y^2"})});
    CHECK(normal_form(vec(*p, {"x^2+x*y"}), sq) == vec(*p, {"x*y"}));
    CHECK_THROWS_AS(normal_form(vec(*p, {"x", "y"}), sq), InvalidInput);
  }

  TEST_CASE("ideal membership against the dense oracle") {
    auto p = th::ring(th::kPlane);
    const auto& amb = p->ambient();
    const std::vector<FreeModuleElement> gens{vec(*p, {"x^2"}), vec(*p, {"y^2"}), vec(*p, {"x+y"})};
    auto gb = groebner(p, {0}, gens);
    oracle::Ring ideal(amb, {amb.parse("x^2"), amb.parse("y^2"), amb.parse("x+y")});
    std::mt19937_64 rng(3);
    int members = 0, non_members = 0;
    for (int i = 0; i < 50; ++i) {
      const int d = static_cast<int>(rng() % 5);
      const auto f = i % 2 ? random_member(*p, gens, {2, 2, 1}, d, rng) : random_element(*p, {0}, d, rng);
      const auto poly = f.component(0);
      oracle::Vec v(ideal.monomials(d).size(), 0);
      for (const auto& [e, c] : oracle::Ring::convert(amb, poly)) v[ideal.mono_index(d, e)] = c;
      const bool in = ideal.ideal(d).contains(v);
      (in ? members : non_members) += 1;
      CHECK(normal_form(f, gb).is_zero() == in);
    }
    CHECK(members > 10);
    CHECK(non_members > 5);
  }

  TEST_CASE("submodule membership over quotient rings") {
    for (const char* text : {th::kSquares3, th::kXY, "p=32003; vars x,y,z; ci: x^2+y*z, y^3"}) {
      CAPTURE(std::string(text));
      auto r = th::ring(text);
      oracle::Ring o(*r);
      std::mt19937_64 rng(17);
      const std::vector<int> twists{0, 1};
      std::vector<FreeModuleElement> gens;
      std::vector<int> gdeg;
      for (int j = 0; j < 3; ++j) {
        const int d = 1 + static_cast<int>(rng() % 2);
        gens.push_back(random_element(*r, twists, d, rng));
        gdeg.push_back(d);
      }
      auto gb = groebner(r, twists, gens);
      oracle::Free f{&o, twists};
      oracle::Generated sub{&f, gdeg, {}};
      for (std::size_t j = 0; j < gens.size(); ++j) sub.gens.push_back(f.convert(r->ambient(), gens[j], gdeg[j]));
      int inside = 0, outside = 0;
      for (int i = 0; i < 200; ++i) {
        const int d = 1 + static_cast<int>(rng() % 4);
        const auto x = i < 100 ? random_member(*r, gens, gdeg, d, rng) : random_element(*r, twists, d, rng);
        const bool in = sub.piece(d).contains(f.convert(r->ambient(), x, d));
        if (i < 100) CHECK(in);
        (in ? inside : outside) += 1;
        CHECK(normal_form(x, gb).is_zero() == in);
      }
      CHECK(outside > 20);
    }
  }

  TEST_CASE("kernel examples") {
    auto a = th::ring(th::kXY);
    auto k = kernel_of_map(a, matrix(*a, {0}, {1}, {{"x"}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == vec(*a, {"y"}));
    CHECK(kernel_of_map(a, matrix(*a, {0}, {0}, {{"1"}})).empty());

    auto s = th::ring(th::kSquares);
    const auto map = matrix(*s, {0}, {1, 1}, {{"x"}, {"y"}});
    const auto ker = kernel_of_map(s, map);
    oracle::Ring o(*s);
    oracle::Free src{&o, {1, 1}}, tgt{&o, {0}};
    oracle::Generated lib{&src, {}, {}};
    for (const auto& g : ker) {
      const int d = *elem::degree(g, {1, 1});
      lib.degrees.push_back(d);
      lib.gens.push_back(src.convert(s->ambient(), g, d));
    }
    for (int d = 0; d <= 6; ++d) {
      std::vector<oracle::Vec> cols;
      for (std::size_t j = 0; j < 2; ++j)
        for (const auto& u : src.ring_basis(d - 1)) cols.push_back(tgt.times(d - 1, u, 1, tgt.convert(s->ambient(), map.columns[j], 1)));
      const auto null = oracle::nullspace(o.characteristic(), tgt.dim(d), cols);
      const auto piece = lib.piece(d);
      CHECK(piece.rank() == null.size());
      for (const auto& v : null) CHECK(piece.contains(v));
    }
  }

  TEST_CASE("random kernels match the dense oracle and compose to zero") {
    std::mt19937_64 rng(23);
    for (const char* text : {th::kXY, th::kSquares, th::kSquares3, th::kPlane}) {
      auto r = th::ring(text);
      oracle::Ring o(*r);
      for (int trial = 0; trial < 6; ++trial) {
        CAPTURE(std::string(text));
        CAPTURE(trial);
        const std::vector<int> target{0, static_cast<int>(rng() % 2)};
        std::vector<int> source;
        Matrix m{target, {}, {}};
        for (int j = 0; j < 3; ++j) {
          const int d = 1 + static_cast<int>(rng() % 2);
          source.push_back(d);
          m.columns.push_back(reduce_mod_ideal(*r, random_element(*r, target, d, rng)));
        }
        m.source_twists = source;
        const auto ker = kernel_of_map(r, m);
        for (const auto& g : ker) {
          Matrix col{source, {0}, {g}};
          col.source_twists = {*elem::degree(g, source)};
          for (const auto& e : compose(*r, m, col).columns) CHECK(e.is_zero());
        }
        oracle::Free src{&o, source}, tgt{&o, target};
        oracle::Generated lib{&src, {}, {}};
        for (const auto& g : ker) {
          const int d = *elem::degree(g, source);
          lib.degrees.push_back(d);
          lib.gens.push_back(src.convert(r->ambient(), g, d));
        }
        for (int d = 0; d <= 5; ++d) {
          std::vector<oracle::Vec> cols;
          for (std::size_t j = 0; j < source.size(); ++j)
            for (const auto& u : src.ring_basis(d - source[j]))
              cols.push_back(tgt.times(d - source[j], u, source[j], tgt.convert(r->ambient(), m.columns[j], source[j])));
          const auto null = oracle::nullspace(o.characteristic(), tgt.dim(d), cols);
          CHECK(lib.piece(d).rank() == null.size());
        }
      }
    }
  }

  TEST_CASE("lifting through a map") {
    auto s = th::ring(th::kSquares);
    MapLifter lift(s, matrix(*s, {0}, {1, 1}, {{"x"}, {"y"}}));
    const auto sol = lift.lift(vec(*s, {"x*y"}));
    REQUIRE(sol.has_value());
    CHECK_FALSE(lift.lift(vec(*s, {"1"})).has_value());
  }

  TEST_CASE("bases are deterministic") {
    auto r = th::ring(th::kCubes3);
    std::mt19937_64 rng(9);
    std::vector<FreeModuleElement> gens;
    for (int j = 0; j < 4; ++j) gens.push_back(random_element(*r, {0, 0}, 2, rng));
    const auto a = groebner(r, {0, 0}, gens);
    const auto b = groebner(r, {0, 0}, gens);
    REQUIRE(a.basis().size() == b.basis().size());
    for (std::size_t i = 0; i < a.basis().size(); ++i) CHECK(a.basis()[i] == b.basis()[i]);
  }

  TEST_CASE("caps raise resource limits") {
    auto p = th::ring("p=32003; vars x,y,z; ci:");
    std::vector<FreeModuleElement> gens{vec(*p, {"x^3+y^2*z"}), vec(*p, {"x*y^2+z^3"}), vec(*p, {"y^3+x*z^2"})};
    GroebnerOptions tight;
    tight.degree_cap = 4;
    CHECK_THROWS_AS(groebner(p, {0}, gens, tight), ResourceLimit);
  }
}
