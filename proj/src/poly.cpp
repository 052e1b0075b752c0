#include "cxlab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "cxlab/error.hpp"

namespace cxlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) throw InvalidInput("characteristic " + std::to_string(p) + " exceeds 2^31");
  if (!is_prime(p)) throw InvalidInput("characteristic " + std::to_string(p) + " is not prime");
}

Coeff PrimeField::inv(Coeff a) const {
  if (a == 0) throw InvalidInput("division by zero in Z/" + std::to_string(p_));
  long long t = 0, new_t = 1;
  long long r = p_, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p_;
  return static_cast<Coeff>(t);
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const {
  Coeff result = 1 % p_;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Coeff PrimeField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Coeff>(r);
}

long long PrimeField::to_signed(Coeff a) const {
  return a > p_ / 2 ? static_cast<long long>(a) - p_ : static_cast<long long>(a);
}

namespace mono {

Monomial product(const Monomial& a, const Monomial& b) {
  std::uint64_t s = a.packed + b.packed;
  // Each byte stays below 128 iff no exponent exceeds kMaxExponent; bytes
  // cannot carry into each other because both summands are below 128.
  if (s & kHighBits) throw ResourceLimit("monomial exponent exceeds 127");
  return Monomial{s, a.degree + b.degree};
}

}  // namespace mono

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i)
    if (a.terms[i].mono != b.terms[i].mono || a.terms[i].coeff != b.terms[i].coeff) return false;
  return true;
}

PolyRing::PolyRing(PrimeField field, std::vector<std::string> names, std::vector<int> weights)
    : field_(field), names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.size() > static_cast<std::size_t>(kMaxVars))
    throw InvalidInput("at most " + std::to_string(kMaxVars) + " variables are supported");
  if (weights_.empty()) weights_.assign(names_.size(), 1);
  if (weights_.size() != names_.size()) throw InvalidInput("weight count differs from variable count");
  for (int w : weights_)
    if (w <= 0) throw InvalidInput("variable weights must be positive");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0])))
      throw InvalidInput("bad variable name '" + n + "'");
    for (char ch : n)
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
        throw InvalidInput("bad variable name '" + n + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[j] == n) throw InvalidInput("duplicate variable '" + n + "'");
  }
}

Monomial PolyRing::make_monomial(std::span<const int> exponents) const {
  if (static_cast<int>(exponents.size()) != nvars()) throw InvalidInput("exponent vector length mismatch");
  Monomial m;
  for (int i = 0; i < nvars(); ++i) {
    int e = exponents[i];
    if (e < 0) throw InvalidInput("negative exponent");
    if (e > kMaxExponent) throw ResourceLimit("monomial exponent exceeds 127");
    m.packed |= static_cast<std::uint64_t>(e) << (8 * i);
    m.degree += e * weights_[i];
  }
  return m;
}

Monomial PolyRing::variable(int var) const {
  return Monomial{std::uint64_t{1} << (8 * var), weights_[var]};
}

Monomial PolyRing::lcm(const Monomial& a, const Monomial& b) const {
  Monomial m;
  for (int i = 0; i < nvars(); ++i) {
    int e = std::max(a.exponent(i), b.exponent(i));
    m.packed |= static_cast<std::uint64_t>(e) << (8 * i);
    m.degree += e * weights_[i];
  }
  return m;
}

std::vector<int> PolyRing::exponents(const Monomial& m) const {
  std::vector<int> e(nvars());
  for (int i = 0; i < nvars(); ++i) e[i] = m.exponent(i);
  return e;
}

Polynomial PolyRing::constant(long long c) const {
  Polynomial p;
  Coeff v = field_.from_int(c);
  if (v != 0) p.terms.push_back({Monomial{}, v});
  return p;
}

Polynomial PolyRing::add(const Polynomial& a, const Polynomial& b) const {
  return sub_mul(a, field_.neg(1), Monomial{}, b);
}

Polynomial PolyRing::sub(const Polynomial& a, const Polynomial& b) const {
  return sub_mul(a, 1, Monomial{}, b);
}

Polynomial PolyRing::scale(const Polynomial& a, Coeff c) const {
  Polynomial r;
  if (c == 0) return r;
  r.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) r.terms.push_back({t.mono, field_.mul(t.coeff, c)});
  return r;
}

Polynomial PolyRing::mul_term(const Polynomial& a, const Monomial& m, Coeff c) const {
  Polynomial r;
  if (c == 0) return r;
  r.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) r.terms.push_back({mono::product(t.mono, m), field_.mul(t.coeff, c)});
  return r;
}

Polynomial PolyRing::sub_mul(const Polynomial& a, Coeff c, const Monomial& m,
                             const Polynomial& b) const {
  if (c == 0 || b.is_zero()) return a;
  Polynomial r;
  r.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  const Coeff nc = field_.neg(c);
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size()) {
      r.terms.push_back(a.terms[i++]);
      continue;
    }
    Monomial bm = mono::product(b.terms[j].mono, m);
    int cmp = i == a.terms.size() ? -1 : mono::compare(a.terms[i].mono, bm);
    if (cmp > 0) {
      r.terms.push_back(a.terms[i++]);
    } else if (cmp < 0) {
      r.terms.push_back({bm, field_.mul(nc, b.terms[j].coeff)});
      ++j;
    } else {
      Coeff v = field_.add(a.terms[i].coeff, field_.mul(nc, b.terms[j].coeff));
      if (v != 0) r.terms.push_back({bm, v});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial PolyRing::mul(const Polynomial& a, const Polynomial& b) const {
  Polynomial r;
  const Coeff minus_one = field_.neg(1);
  for (const auto& t : a.terms) r = sub_mul(r, field_.mul(minus_one, t.coeff), t.mono, b);
  return r;
}

Polynomial PolyRing::monic(const Polynomial& a) const {
  if (a.is_zero() || a.lead().coeff == 1) return a;
  return scale(a, field_.inv(a.lead().coeff));
}

std::optional<int> PolyRing::homogeneous_degree(const Polynomial& p) const {
  if (p.is_zero()) return std::nullopt;
  int d = p.lead().mono.degree;
  for (const auto& t : p.terms)
    if (t.mono.degree != d) return std::nullopt;
  return d;
}

bool PolyRing::is_homogeneous(const Polynomial& p) const {
  return p.is_zero() || homogeneous_degree(p).has_value();
}

std::string PolyRing::format(const Monomial& m) const {
  std::string s;
  for (int i = 0; i < nvars(); ++i) {
    int e = m.exponent(i);
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += names_[i];
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

std::string PolyRing::format(const Polynomial& p) const {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& t : p.terms) {
    long long c = field_.to_signed(t.coeff);
    bool neg = c < 0;
    long long a = neg ? -c : c;
    if (s.empty()) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    if (t.mono.is_one()) {
      s += std::to_string(a);
    } else {
      if (a != 1) s += std::to_string(a) + '*';
      s += format(t.mono);
    }
  }
  return s;
}

namespace {

class PolyParser {
 public:
  PolyParser(const PolyRing& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidInput("polynomial '" + std::string(text_) + "': " + why);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  long long integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 18) fail("integer literal too long");
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial expr() {
    Polynomial acc;
    bool first = true;
    while (true) {
      bool negative = false;
      if (eat('-')) {
        negative = true;
      } else if (!first && !eat('+')) {
        break;
      } else if (first) {
        eat('+');
      }
      Polynomial t = term();
      acc = negative ? ring_.sub(acc, t) : ring_.add(acc, t);
      first = false;
      skip_ws();
      if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-')) break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (eat('*')) acc = ring_.mul(acc, factor());
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (eat('^')) {
      long long e = integer();
      if (e > kMaxExponent) throw ResourceLimit("exponent exceeds 127");
      Polynomial r = ring_.constant(1);
      for (long long i = 0; i < e; ++i) r = ring_.mul(r, base);
      return r;
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return ring_.constant(integer());
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      const auto& names = ring_.names();
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) fail("unknown variable '" + name + "'");
      Polynomial p;
      p.terms.push_back({ring_.variable(static_cast<int>(it - names.begin())), 1});
      return p;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const PolyRing& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial PolyRing::parse(std::string_view text) const { return PolyParser(*this, text).run(); }

std::vector<Monomial> PolyRing::monomials_of_degree(int d) const {
  return standard_monomials(d, {});
}

std::vector<Monomial> PolyRing::standard_monomials(int d, std::span<const Monomial> avoid) const {
  std::vector<Monomial> out;
  if (d < 0) return out;
  const int n = nvars();
  if (n == 0) {
    if (d == 0) {
      bool blocked = false;
      for (const auto& a : avoid) blocked = blocked || a.is_one();
      if (!blocked) out.push_back(Monomial{});
    }
    return out;
  }
  auto blocked = [&](const Monomial& m) {
    for (const auto& a : avoid)
      if (mono::divides(a, m)) return true;
    return false;
  };
  // Assign exponents from the last variable down; a partial monomial that is
  // already divisible by an avoided monomial has no standard completions.
  std::function<void(int, Monomial, int)> rec = [&](int var, Monomial m, int remaining) {
    if (blocked(m)) return;
    if (var == 0) {
      if (remaining % weights_[0] != 0) return;
      int e = remaining / weights_[0];
      if (e > kMaxExponent) throw ResourceLimit("monomial exponent exceeds 127");
      Monomial full{m.packed | (static_cast<std::uint64_t>(e)), m.degree + remaining};
      if (!blocked(full)) out.push_back(full);
      return;
    }
    for (int e = 0; e * weights_[var] <= remaining; ++e) {
      if (e > kMaxExponent) throw ResourceLimit("monomial exponent exceeds 127");
      Monomial next{m.packed | (static_cast<std::uint64_t>(e) << (8 * var)),
                    m.degree + e * weights_[var]};
      rec(var - 1, next, remaining - e * weights_[var]);
    }
  };
  rec(n - 1, Monomial{}, d);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return mono::compare(a, b) > 0; });
  return out;
}

}  // namespace cxlab
