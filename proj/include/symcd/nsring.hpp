// The subring of H*(C_d) generated by x and theta, with exact coefficients.
//
// A class is a sparse polynomial sum c_ij x^i theta^j. Terms with
// i + j > d vanish on C_d and are dropped on construction and after every
// product. No other relations are imposed; equality is coefficient-wise.
#pragma once

#include "symcd/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace symcd {

/// Genus g of the curve and index d of the symmetric power C_d.
class Ambient {
 public:
  Ambient(int g, int d) : g_(g), d_(d) {
    if (g < 2) throw std::invalid_argument("ambient requires g >= 2, got g=" + std::to_string(g));
    if (d < 1) throw std::invalid_argument("ambient requires d >= 1, got d=" + std::to_string(d));
  }

  int g() const { return g_; }
  int d() const { return d_; }

  /// Top-degree evaluation is only defined for d <= g.
  bool evaluable() const { return d_ <= g_; }

  friend bool operator==(const Ambient&, const Ambient&) = default;

 private:
  int g_;
  int d_;
};

/// Exponent pair (i, j) standing for x^i theta^j.
struct Exponent {
  int x = 0;
  int theta = 0;

  int degree() const { return x + theta; }
  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

class NSClass {
 public:
  using Terms = std::map<Exponent, Rational>;

  explicit NSClass(Ambient amb) : amb_(amb) {}

  NSClass(Ambient amb, const Terms& terms) : amb_(amb) {
    for (const auto& [e, c] : terms) accumulate(e, c);
  }

  static NSClass zero(Ambient amb) { return NSClass(amb); }
  static NSClass constant(Ambient amb, const Rational& c) { return monomial(amb, 0, 0, c); }
  static NSClass x(Ambient amb) { return monomial(amb, 1, 0); }
  static NSClass theta(Ambient amb) { return monomial(amb, 0, 1); }

  /// c x^i theta^j; vanishes when i + j > d.
  static NSClass monomial(Ambient amb, int i, int j, const Rational& c = 1) {
    NSClass out(amb);
    out.accumulate({i, j}, c);
    return out;
  }

  const Ambient& ambient() const { return amb_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Degree k if every term has total degree k; nullopt for mixed or zero classes.
  std::optional<int> pure_degree() const {
    if (terms_.empty()) return std::nullopt;
    const int k = terms_.begin()->first.degree();
    for (const auto& [e, c] : terms_)
      if (e.degree() != k) return std::nullopt;
    return k;
  }

  /// The zero class counts as pure of every degree.
  bool is_pure(int k) const {
    for (const auto& [e, c] : terms_)
      if (e.degree() != k) return false;
    return true;
  }

  /// Graded piece of degree k.
  NSClass part(int k) const {
    NSClass out(amb_);
    for (const auto& [e, c] : terms_)
      if (e.degree() == k) out.terms_.emplace(e, c);
    return out;
  }

  /// Drops every term of degree above max_degree.
  NSClass truncated(int max_degree) const {
    NSClass out(amb_);
    for (const auto& [e, c] : terms_)
      if (e.degree() <= max_degree) out.terms_.emplace(e, c);
    return out;
  }

  /// Same coefficients viewed on another symmetric power of the same curve.
  NSClass rehomed(Ambient target) const {
    if (target.g() != amb_.g()) throw std::invalid_argument("ambient mismatch");
    return NSClass(target, terms_);
  }

  NSClass& operator+=(const NSClass& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) accumulate(e, c);
    return *this;
  }

  NSClass& operator-=(const NSClass& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) accumulate(e, -c);
    return *this;
  }

  NSClass& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend NSClass operator+(NSClass a, const NSClass& b) { return a += b; }
  friend NSClass operator-(NSClass a, const NSClass& b) { return a -= b; }
  friend NSClass operator-(NSClass a) { return a *= Rational(-1); }
  friend NSClass operator*(NSClass a, const Rational& s) { return a *= s; }
  friend NSClass operator*(const Rational& s, NSClass a) { return a *= s; }

  friend NSClass operator*(const NSClass& a, const NSClass& b) {
    a.check_same(b);
    NSClass out(a.amb_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        out.accumulate({ea.x + eb.x, ea.theta + eb.theta}, ca * cb);
    return out;
  }

  friend bool operator==(const NSClass&, const NSClass&) = default;

 private:
  void check_same(const NSClass& o) const {
    if (!(amb_ == o.amb_)) throw std::invalid_argument("ambient mismatch");
  }

  void accumulate(Exponent e, const Rational& c) {
    if (e.x < 0 || e.theta < 0) throw std::invalid_argument("negative exponent");
    if (e.degree() > amb_.d() || c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Ambient amb_;
  Terms terms_;
};

/// Top-degree evaluation on C_d: x^k theta^(d-k) = g! / (g-d+k)!, extended linearly.
inline Rational eval_top(const NSClass& c) {
  const Ambient& amb = c.ambient();
  if (!amb.evaluable()) throw std::domain_error("evaluation undefined: d > g");
  if (!c.is_pure(amb.d())) throw std::domain_error("not a top-degree class");
  const Integer gfact = factorial(amb.g());
  Rational total = 0;
  for (const auto& [e, coeff] : c.terms())
    total += coeff * Rational(gfact / factorial(amb.g() - amb.d() + e.x));
  return total;
}

/// Intersection pairing of two pure classes of complementary degree.
inline Rational pair(const NSClass& a, const NSClass& b) {
  if (!(a.ambient() == b.ambient())) throw std::invalid_argument("ambient mismatch");
  const int d = a.ambient().d();
  const auto da = a.pure_degree();
  const auto db = b.pure_degree();
  if (a.is_zero() || b.is_zero()) {
    if (!a.ambient().evaluable()) throw std::domain_error("evaluation undefined: d > g");
    return 0;
  }
  if (!da || !db) throw std::domain_error("pairing needs pure classes");
  if (*da + *db != d)
    throw std::domain_error("degree mismatch: " + std::to_string(*da) + " + " + std::to_string(*db) +
                            " != " + std::to_string(d));
  return eval_top(a * b);
}

/// K_{C_d} = theta + (g-d-1) x.
inline NSClass canonical_class(Ambient amb) {
  return NSClass::theta(amb) + NSClass::x(amb) * Rational(amb.g() - amb.d() - 1);
}

}  // namespace symcd
