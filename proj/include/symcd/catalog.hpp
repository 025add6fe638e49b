// Named classes on C_d and the numerical bookkeeping that feeds them.
#pragma once

#include "symcd/nsring.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace symcd {

/// A g^r_n: a linear series of degree n and dimension r.
struct LinearSeries {
  int n = 0;
  int r = 0;
};

/// Rank, degree and dim V of a coherent system (F, V).
struct SystemData {
  int rank = 1;
  int degree = 0;
  int dimV = 0;
};

/// A globally generated line bundle L, described by deg L and h^0(L).
struct KernelBundleData {
  int baseDegree = 0;
  int baseSections = 0;
};

/// Rank and degree of a vector bundle on the curve.
struct BundleNumbers {
  int rank = 0;
  int degree = 0;
  friend bool operator==(const BundleNumbers&, const BundleNumbers&) = default;
};

/// Class of the subordinate locus Gamma_d(L, V) of a g^r_n on C_d:
///   sum_{j=0}^{d-r} binom(n-g-r, j) x^j theta^(d-r-j) / (d-r-j)!
/// The upper argument n-g-r is usually negative.
inline NSClass subordinate_class(Ambient amb, LinearSeries s) {
  if (s.n < 0 || s.r < 0 || s.r > amb.d() || amb.d() > s.n)
    throw std::invalid_argument("series/degree constraint: need r <= d <= n, got r=" + std::to_string(s.r) +
                                " d=" + std::to_string(amb.d()) + " n=" + std::to_string(s.n));
  const int top = amb.d() - s.r;
  NSClass out(amb);
  for (int j = 0; j <= top; ++j)
    out += NSClass::monomial(amb, j, top - j,
                             Rational(binomial(s.n - amb.g() - s.r, j)) / Rational(factorial(top - j)));
  return out;
}

/// Diagonal locus: 2(-theta + (g+d-1) x).
inline NSClass diagonal_class(Ambient amb) {
  if (amb.d() < 2) throw std::invalid_argument("diagonal class needs d >= 2");
  return (NSClass::x(amb) * Rational(amb.g() + amb.d() - 1) - NSClass::theta(amb)) * Rational(2);
}

/// Class of C^1_d: theta^(g-d+1)/(g-d+1)! - x theta^(g-d)/(g-d)!.
inline NSClass c1d_class(Ambient amb) {
  const int e = amb.g() - amb.d();
  if (e < 0) throw std::invalid_argument("c1d requires d <= g");
  if (e + 1 > amb.d()) throw std::invalid_argument("class degree exceeds dimension");
  return NSClass::monomial(amb, 0, e + 1, Rational(1) / Rational(factorial(e + 1))) -
         NSClass::monomial(amb, 1, e, Rational(1) / Rational(factorial(e)));
}

/// Push-pull operator B_k from C_d to C_{d-k}. On a monomial,
///   B_k(x^a theta^b) = sum_j binom(a, k-j) binom(b, j) binom(g-b+j, j) j! x^(a-k+j) theta^(b-j),
/// extended linearly. Out-of-range binomials vanish.
inline NSClass pushpull(int k, const NSClass& c) {
  if (k < 0) throw std::invalid_argument("pushpull needs k >= 0");
  const Ambient& src = c.ambient();
  if (src.d() - k < 1)
    throw std::invalid_argument("pushpull target C_" + std::to_string(src.d() - k) + " is empty");
  if (!c.is_zero() && !c.pure_degree()) throw std::invalid_argument("pushpull needs a pure class");
  const Ambient dst(src.g(), src.d() - k);
  NSClass out(dst);
  for (const auto& [e, coeff] : c.terms()) {
    for (int j = 0; j <= k; ++j) {
      const Integer w = binomial(e.x, k - j) * binomial(e.theta, j) * binomial(src.g() - e.theta + j, j) *
                        factorial(j);
      if (w == 0) continue;
      out += NSClass::monomial(dst, e.x - k + j, e.theta - j, coeff * Rational(w));
    }
  }
  return out;
}

/// Closed form binom(g, m) ((g-2m)/g theta - x) on C_{g-2m}, valid for 1 <= m <= g/2 - 1.
inline NSClass dm_class(int g, int m) {
  if (m < 1 || 2 * m > g - 2)
    throw std::invalid_argument("dm needs 1 <= m <= g/2 - 1, got g=" + std::to_string(g) +
                                " m=" + std::to_string(m));
  const Ambient amb(g, g - 2 * m);
  const Rational scale(binomial(g, m));
  return (NSClass::theta(amb) * Rational(g - 2 * m, g) - NSClass::x(amb)) * scale;
}

/// Porteous class of the virtual divisor Gamma_d(F, V): r theta - (rd + rg - f - r) x.
inline NSClass system_c1(Ambient amb, SystemData s) {
  if (s.rank < 1) throw std::invalid_argument("system rank must be >= 1");
  if (s.dimV != s.rank * amb.d())
    throw std::invalid_argument("not a virtual divisor configuration: dim V = " + std::to_string(s.dimV) +
                                " != rank*d = " + std::to_string(s.rank * amb.d()));
  const int r = s.rank;
  const int d = amb.d();
  const int g = amb.g();
  return NSClass::theta(amb) * Rational(r) - NSClass::x(amb) * Rational(r * d + r * g - s.degree - r);
}

/// ch(E(F)) = (f + r(1-g)) + (rd + rg - f - r + r theta) e^{-x}, through degree max_degree.
inline NSClass chern_character(Ambient amb, int r, int f, int max_degree) {
  if (max_degree < 0 || max_degree > amb.d())
    throw std::invalid_argument("chern character degree must lie in [0, d]");
  const int g = amb.g();
  const int d = amb.d();
  NSClass exp_minus_x(amb);
  Rational term = 1;
  for (int k = 0; k <= max_degree; ++k) {
    exp_minus_x += NSClass::monomial(amb, k, 0, term);
    term = -term / Rational(k + 1);
  }
  const NSClass linear = NSClass::constant(amb, r * d + r * g - f - r) + NSClass::theta(amb) * Rational(r);
  const NSClass ch = NSClass::constant(amb, f + r * (1 - g)) + linear * exp_minus_x;
  return ch.truncated(max_degree);
}

/// M_L from 0 -> M_L -> H^0(L) (x) O_C -> L -> 0.
inline BundleNumbers kernel_bundle(KernelBundleData L) {
  if (L.baseSections < 2) throw std::invalid_argument("kernel bundle needs h0(L) >= 2");
  return {L.baseSections - 1, -L.baseDegree};
}

/// K_C (x) M_L on a genus-g curve.
inline BundleNumbers twisted_kernel_numbers(int g, KernelBundleData L) {
  const BundleNumbers m = kernel_bundle(L);
  return {m.rank, m.rank * (2 * g - 2) + m.degree};
}

/// h^0(M_L^*) when deg L = 2k-3 and h^0(L) = k-1 with k >= 4, which is then k-1.
/// Returns nullopt when L does not have that shape. The basepoint-freeness of
/// the general degree-k pencil is a geometric hypothesis left to the caller.
inline std::optional<int> h1_from_pencil_rule(KernelBundleData L) {
  const int k = L.baseSections + 1;
  if (k < 4 || L.baseDegree != 2 * k - 3) return std::nullopt;
  return k - 1;
}

/// The h^1(K_C (x) M_L) forced by dim V = rank * d, given chi = f + rank (1-g).
inline int h1_from_dimension(int g, KernelBundleData L, int d) {
  const BundleNumbers t = twisted_kernel_numbers(g, L);
  return t.rank * d - (t.degree + t.rank * (1 - g));
}

struct TwistedKernelClass {
  Ambient ambient;
  SystemData system;
  NSClass cls;
};

/// Porteous class of Gamma_d(K_C (x) M_L), where h0 = chi + h1 fixes
/// d = h0 / rank.
inline TwistedKernelClass twisted_kernel_class(int g, KernelBundleData L, int h1) {
  const BundleNumbers t = twisted_kernel_numbers(g, L);
  const int dimV = t.degree + t.rank * (1 - g) + h1;
  if (dimV <= 0 || dimV % t.rank != 0)
    throw std::invalid_argument("dimension condition fails: dim V = f + rank(1-g) + h1 = " + std::to_string(dimV) +
                                " is not rank*d for rank " + std::to_string(t.rank));
  const Ambient amb(g, dimV / t.rank);
  const SystemData s{t.rank, t.degree, dimV};
  return {amb, s, system_c1(amb, s)};
}

/// Expected dimension g - (r+1)(g-d+r) of G^r_d.
inline int brill_noether_rho(int g, int r, int d) {
  if (g < 1 || r < 0 || d < 1) throw std::invalid_argument("rho needs g >= 1, r >= 0, d >= 1");
  return g - (r + 1) * (g - d + r);
}

/// Pieces of the degeneracy-locus computation for the multiplication map
/// H^0(L) (x) F -> G_L on C_d with deg L = r(g-d) + 1.
struct MultDegeneracyTerms {
  NSClass c1_g;              ///< c1(G_L), from ch_1 of E(K_C (x) L)
  NSClass inverse_canonical; ///< c1(K^{-1}_{C_d})
  NSClass cls;               ///< c1(G_L) - (r+1) c1(K^{-1})
};

inline MultDegeneracyTerms mult_degeneracy_terms(int g, int d, int r) {
  if (d < 2 || d > g - 1) throw std::invalid_argument("mult class needs 2 <= d <= g-1");
  if (r < 1 || r * (g - d) < d)
    throw std::invalid_argument("mult class needs r >= d/(g-d), got r=" + std::to_string(r));
  const Ambient amb(g, d);
  const int deg_kl = 2 * g - 2 + r * (g - d) + 1;
  NSClass c1_g = -chern_character(amb, 1, deg_kl, 1).part(1);
  NSClass inv_k = -canonical_class(amb);
  NSClass cls = c1_g - inv_k * Rational(r + 1);
  return {std::move(c1_g), std::move(inv_k), std::move(cls)};
}

/// r theta - (r+1) x, recomputed from its two Chern-class pieces.
inline NSClass mult_degeneracy_class(int g, int d, int r) {
  MultDegeneracyTerms t = mult_degeneracy_terms(g, d, r);
  const Ambient amb(g, d);
  const NSClass expected = NSClass::theta(amb) * Rational(r) - NSClass::x(amb) * Rational(r + 1);
  if (!(t.cls == expected)) throw std::logic_error("mult degeneracy class does not simplify to r theta - (r+1) x");
  return std::move(t.cls);
}

}  // namespace symcd
