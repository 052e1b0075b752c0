#pragma once

#include <random>
#include <string>

#include "cxlab/harness.hpp"

namespace th {

inline const char* kXY = "p=32003; vars x,y; ci: x*y";
inline const char* kSquares = "p=32003; vars x,y; ci: x^2,y^2";
inline const char* kSquares3 = "p=32003; vars x,y,z; ci: x^2,y^2";
inline const char* kCubes3 = "p=32003; vars x,y,z; ci: x^2,y^2,z^2";
inline const char* kPlane = "p=32003; vars x,y; ci:";

inline cxlab::RingPtr ring(const std::string& s) { return cxlab::parse_ring(s); }
inline cxlab::GradedModule mod(const cxlab::RingPtr& r, const std::string& s) { return cxlab::parse_module(r, s); }

inline cxlab::ResolutionPtr resolve(const cxlab::GradedModule& m, int bound = 20) {
  return std::make_shared<const cxlab::FreeResolution>(cxlab::minimal_resolution(m, bound));
}

/// Random homogeneous polynomial of degree d over the ambient ring.
inline cxlab::Polynomial random_poly(const cxlab::PolyRing& p, int d, std::mt19937_64& rng) {
  cxlab::Polynomial f;
  for (const auto& m : p.monomials_of_degree(d))
    if (rng() % 2) f = p.add(f, p.mul_term(p.constant(1), m, static_cast<cxlab::Coeff>(1 + rng() % (p.field().characteristic() - 1))));
  return f;
}

}  // namespace th
