#pragma once

// Exact arithmetic for graded polynomials over a prime field.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cxlab {

using Coeff = std::uint32_t;

/// Z/p for a prime p < 2^31.  Elements are canonical residues in [0, p).
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultCharacteristic = 32003;

  explicit PrimeField(std::uint32_t p = kDefaultCharacteristic);

  std::uint32_t characteristic() const { return p_; }

  Coeff add(Coeff a, Coeff b) const {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff inv(Coeff a) const;
  Coeff pow(Coeff a, std::uint64_t e) const;
  Coeff from_int(long long v) const;
  /// Symmetric representative in (-p/2, p/2], for printing.
  long long to_signed(Coeff a) const;

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

inline constexpr int kMaxVars = 8;
inline constexpr int kMaxExponent = 127;

/// Exponent vector packed one byte per variable (variable i in byte i),
/// plus the weighted degree.  Exponents are capped at 127 so that
/// divisibility can be tested with a single borrow-free subtraction.
struct Monomial {
  std::uint64_t packed = 0;
  std::int32_t degree = 0;

  int exponent(int var) const { return static_cast<int>((packed >> (8 * var)) & 0xFF); }
  bool is_one() const { return packed == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.packed == b.packed; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.packed != b.packed; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t x = m.packed * 0x9E3779B97F4A7C15ull;
    return static_cast<std::size_t>(x ^ (x >> 29));
  }
};

namespace mono {

inline constexpr std::uint64_t kHighBits = 0x8080808080808080ull;

inline bool divides(const Monomial& b, const Monomial& a) {
  return (((a.packed | kHighBits) - b.packed) & kHighBits) == kHighBits;
}

/// a / b; caller guarantees divides(b, a).
inline Monomial quotient(const Monomial& a, const Monomial& b) {
  return Monomial{a.packed - b.packed, a.degree - b.degree};
}

/// Throws ResourceLimit on exponent overflow.
Monomial product(const Monomial& a, const Monomial& b);

/// Weighted degree-reverse-lexicographic comparison: -1, 0, 1.
inline int compare(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
  if (a.packed == b.packed) return 0;
  // Same degree: the monomial with the smaller exponent in the last
  // differing variable is larger, i.e. the smaller packed word wins.
  return a.packed < b.packed ? 1 : -1;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.exponent(i) != 0 && b.exponent(i) != 0) return false;
  return true;
}

}  // namespace mono

struct Term {
  Monomial mono;
  Coeff coeff = 0;
};

/// Terms sorted by strictly decreasing monomial; no zero coefficients.
struct Polynomial {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  const Term& lead() const { return terms.front(); }
  std::size_t size() const { return terms.size(); }
  /// Weighted degree of the leading term; -1 for zero.
  int lead_degree() const { return terms.empty() ? -1 : terms.front().mono.degree; }

  friend bool operator==(const Polynomial& a, const Polynomial& b);
};

/// Ambient graded polynomial ring k[x_1..x_n] with positive integer weights,
/// ordered by weighted degrevlex.
class PolyRing {
 public:
  PolyRing(PrimeField field, std::vector<std::string> names, std::vector<int> weights);

  const PrimeField& field() const { return field_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }

  Monomial make_monomial(std::span<const int> exponents) const;
  Monomial variable(int var) const;
  Monomial lcm(const Monomial& a, const Monomial& b) const;
  std::vector<int> exponents(const Monomial& m) const;

  Polynomial constant(long long c) const;
  Polynomial add(const Polynomial& a, const Polynomial& b) const;
  Polynomial sub(const Polynomial& a, const Polynomial& b) const;
  Polynomial scale(const Polynomial& a, Coeff c) const;
  Polynomial mul_term(const Polynomial& a, const Monomial& m, Coeff c) const;
  Polynomial mul(const Polynomial& a, const Polynomial& b) const;
  /// a - c*m*b in a single merge.
  Polynomial sub_mul(const Polynomial& a, Coeff c, const Monomial& m, const Polynomial& b) const;
  /// Scale so that the leading coefficient is 1.
  Polynomial monic(const Polynomial& a) const;

  /// Common weighted degree, or nullopt if inhomogeneous; zero is homogeneous of any degree
  /// and reports nullopt as well.
  std::optional<int> homogeneous_degree(const Polynomial& p) const;
  bool is_homogeneous(const Polynomial& p) const;

  std::string format(const Monomial& m) const;
  std::string format(const Polynomial& p) const;
  /// Integer coefficients, variables, + - * ^ and parentheses.  Throws InvalidInput.
  Polynomial parse(std::string_view text) const;

  /// Every monomial of weighted degree d, in decreasing order.
  std::vector<Monomial> monomials_of_degree(int d) const;
  /// Monomials of weighted degree d divisible by none of `avoid`, decreasing order.
  std::vector<Monomial> standard_monomials(int d, std::span<const Monomial> avoid) const;

  bool operator==(const PolyRing& o) const {
    return field_ == o.field_ && names_ == o.names_ && weights_ == o.weights_;
  }

 private:
  PrimeField field_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

}  // namespace cxlab
