// Verification suite. Every check evaluates the same quantity along two
// independent code paths and passes only when both agree exactly.
#pragma once

#include "symcd/catalog.hpp"
#include "symcd/class_text.hpp"
#include "symcd/nsring.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symcd {

inline constexpr const char* kSuiteVersion = "1.0.0";

struct CheckResult {
  std::string id;
  std::vector<std::pair<std::string, long long>> params;
  std::string lhs;
  std::string rhs;
  bool passed = false;
  std::int64_t micros = 0;
};

struct Report {
  std::string version = kSuiteVersion;
  int gMin = 0;
  int gMax = 0;
  std::vector<CheckResult> checks;
  int total = 0;
  int passed = 0;
  int failed = 0;
};

// Scalar routes that never build an NSClass. They evaluate the same numbers
// as the class machinery from closed formulas only.
namespace oracle {

/// sum_{j=0}^{g-3} (-1)^j (j+1) g! / ((j+2+shift)! (g-3-j)!), the expansion
/// of theta.gamma (shift 0) and x.gamma (shift 1) for a g^1_{g-1} on C_{g-2}.
inline Rational pencil_alternating_sum(int g, int shift) {
  const Integer gf = factorial(g);
  Integer total = 0;
  for (int j = 0; j <= g - 3; ++j) {
    Integer term = Integer(j + 1) * gf / (factorial(j + 2 + shift) * factorial(g - 3 - j));
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return Rational(total);
}

/// Pairing of x^a theta^(1-a) (a in {0, 1}) with the subordinate class of a
/// g^r_n on C_d, as a single sum of factorial ratios.
inline Rational divisor_gamma_pairing(int g, int d, int n, int r, int a) {
  Rational total = 0;
  for (int j = 0; j <= d - r; ++j)
    total += Rational(binomial(n - g - r, j) * factorial(g)) /
             Rational(factorial(d - r - j) * factorial(g - d + j + a));
  return total;
}

}  // namespace oracle

namespace detail {

inline std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "; ";
    out += parts[i];
  }
  return out;
}

/// Runs `body`, which fills lhs/rhs, and records the outcome. Exceptions
/// become a failed check rather than aborting the suite.
inline CheckResult run_check(std::string id, std::vector<std::pair<std::string, long long>> params, bool timed,
                             const std::function<std::pair<std::string, std::string>()>& body) {
  CheckResult res{std::move(id), std::move(params), {}, {}, false, 0};
  const auto start = std::chrono::steady_clock::now();
  try {
    auto [lhs, rhs] = body();
    res.lhs = std::move(lhs);
    res.rhs = std::move(rhs);
    res.passed = res.lhs == res.rhs;
  } catch (const std::exception& e) {
    res.lhs = std::string("error: ") + e.what();
    res.rhs = "";
    res.passed = false;
  }
  if (timed)
    res.micros = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace detail

/// B_m(c^1_{g-m}) by raw push-pull against the closed form binom(g,m)((g-2m)/g theta - x).
inline CheckResult check_dm_pushpull(int g, int m, bool timed = false) {
  if (m < 1 || 2 * m > g - 2) throw std::invalid_argument("dm-pushpull needs 1 <= m <= g/2 - 1");
  return detail::run_check("dm-pushpull", {{"g", g}, {"m", m}}, timed, [=] {
    const NSClass raw = pushpull(m, c1d_class(Ambient(g, g - m)));
    return std::pair{format_class(raw), format_class(dm_class(g, m))};
  });
}

/// theta.gamma, x.gamma and D_1.gamma for gamma the class of a g^1_{g-1} on
/// C_{g-2}: class expansion plus top-degree evaluation against the
/// alternating factorial sums.
inline CheckResult check_pencil_pairings(int g, bool timed = false) {
  if (g < 5) throw std::invalid_argument("pencil pairings need g >= 5");
  return detail::run_check("pencil-pairings", {{"g", g}}, timed, [=] {
    const Ambient amb(g, g - 2);
    const NSClass gamma = subordinate_class(amb, {g - 1, 1});
    const std::vector<std::string> lhs{to_string(pair(NSClass::theta(amb), gamma)),
                                       to_string(pair(NSClass::x(amb), gamma)),
                                       to_string(pair(dm_class(g, 1), gamma))};
    const Rational st = oracle::pencil_alternating_sum(g, 0);
    const Rational sx = oracle::pencil_alternating_sum(g, 1);
    const std::vector<std::string> rhs{to_string(st), to_string(sx),
                                       to_string(Rational(g - 2) * st - Rational(g) * sx)};
    return std::pair{detail::join(lhs), detail::join(rhs)};
  });
}

/// Gamma_{g-2}(K_C (x) M_{K_C(-p)}) against D_1 + x.
inline CheckResult check_kernel_decomposition(int g, bool timed = false) {
  if (g < 5) throw std::invalid_argument("kernel decomposition needs g >= 5");
  const KernelBundleData L{2 * g - 3, g - 1};
  const auto h1 = h1_from_pencil_rule(L);
  return detail::run_check("kernel-decomposition", {{"g", g}, {"h1", h1.value_or(-1)}}, timed, [=] {
    if (!h1) throw std::logic_error("h1 rule does not apply to K_C(-p)");
    const TwistedKernelClass tk = twisted_kernel_class(g, L, *h1);
    if (tk.ambient.d() != g - 2) throw std::logic_error("twisted kernel locus is not on C_{g-2}");
    const NSClass rhs = dm_class(g, 1) + NSClass::x(tk.ambient);
    return std::pair{format_class(tk.cls), format_class(rhs)};
  });
}

/// Fixed g = 6, d = 4 identities for a smooth plane quintic with Q = O_C(1):
/// D_1 = 2 Gamma_4(K_C (x) M_Q) at class level, the pairings of theta, x,
/// theta - 2x with Z = gamma_4(g^1_5) - gamma_4(g^1_4), and of theta, x with
/// gamma_4(g^1_4). h1 comes from the dimension count, not from geometry.
inline CheckResult check_plane_quintic(bool timed = false) {
  constexpr int g = 6;
  constexpr int d = 4;
  const KernelBundleData Q{5, 3};
  const int h1 = h1_from_dimension(g, Q, d);
  return detail::run_check("plane-quintic", {{"d", d}, {"g", g}, {"h1", h1}}, timed, [=] {
    const Ambient amb(g, d);
    const TwistedKernelClass tk = twisted_kernel_class(g, Q, h1);
    if (!(tk.ambient == amb)) throw std::logic_error("quintic kernel locus is not on C_4");
    const NSClass g15 = subordinate_class(amb, {5, 1});
    const NSClass g14 = subordinate_class(amb, {4, 1});
    const NSClass z = g15 - g14;
    const NSClass th = NSClass::theta(amb);
    const NSClass x = NSClass::x(amb);
    const std::vector<std::string> lhs{format_class(dm_class(g, 1)),
                                       to_string(pair(th, z)),
                                       to_string(pair(x, z)),
                                       to_string(pair(th - x * Rational(2), z)),
                                       to_string(pair(th, g14)),
                                       to_string(pair(x, g14))};
    using oracle::divisor_gamma_pairing;
    const Rational tz = divisor_gamma_pairing(g, d, 5, 1, 0) - divisor_gamma_pairing(g, d, 4, 1, 0);
    const Rational xz = divisor_gamma_pairing(g, d, 5, 1, 1) - divisor_gamma_pairing(g, d, 4, 1, 1);
    const std::vector<std::string> rhs{format_class(tk.cls * Rational(2)),
                                       to_string(tz),
                                       to_string(xz),
                                       to_string(tz - Rational(2) * xz),
                                       to_string(divisor_gamma_pairing(g, d, 4, 1, 0)),
                                       to_string(divisor_gamma_pairing(g, d, 4, 1, 1))};
    return std::pair{detail::join(lhs), detail::join(rhs)};
  });
}

/// Multiplication-map degeneracy class from its Chern pieces, and the
/// low-degree parts of ch(E(F)) for a rank-r, degree-f bundle.
inline CheckResult check_mult_and_chern(int g, int d, int r, int f, bool timed = false) {
  return detail::run_check("mult-chern", {{"d", d}, {"f", f}, {"g", g}, {"r", r}}, timed, [=] {
    const Ambient amb(g, d);
    const MultDegeneracyTerms t = mult_degeneracy_terms(g, d, r);
    const NSClass ch = chern_character(amb, r, f, 1);
    const std::vector<std::string> lhs{format_class(t.cls), format_class(t.c1_g), format_class(ch.part(0)),
                                       format_class(ch.part(1))};
    const NSClass th = NSClass::theta(amb);
    const NSClass x = NSClass::x(amb);
    const std::vector<std::string> rhs{format_class(th * Rational(r) - x * Rational(r + 1)),
                                       format_class(-th - x * Rational((r + 1) * (g - d))),
                                       format_class(NSClass::constant(amb, r * d)),
                                       format_class(system_c1(amb, {r, f, r * d}))};
    return std::pair{detail::join(lhs), detail::join(rhs)};
  });
}

/// Smallest r >= 1 with r (g-d) >= d.
inline int min_mult_rank(int g, int d) { return (d + (g - d) - 1) / (g - d); }

inline bool check_less(const CheckResult& a, const CheckResult& b) {
  if (a.id != b.id) return a.id < b.id;
  return a.params < b.params;
}

/// Full suite over g in [gMin, gMax]; the quintic check runs once.
/// With `timed` false every `micros` is 0 so identical ranges give
/// byte-identical reports.
inline Report run_all(int gMin, int gMax, bool timed = false) {
  if (gMin < 5 || gMin > gMax)
    throw std::invalid_argument("suite range needs 5 <= gMin <= gMax, got [" + std::to_string(gMin) + ", " +
                                std::to_string(gMax) + "]");
  Report rep;
  rep.gMin = gMin;
  rep.gMax = gMax;
  for (int g = gMin; g <= gMax; ++g) {
    rep.checks.push_back(check_pencil_pairings(g, timed));
    rep.checks.push_back(check_kernel_decomposition(g, timed));
    for (int m = 1; 2 * m <= g - 2; ++m) rep.checks.push_back(check_dm_pushpull(g, m, timed));
    for (int d = 2; d <= g - 1; ++d) {
      const int r = min_mult_rank(g, d);
      rep.checks.push_back(check_mult_and_chern(g, d, r, r * (2 * g - 2) + d, timed));
    }
  }
  rep.checks.push_back(check_plane_quintic(timed));
  std::stable_sort(rep.checks.begin(), rep.checks.end(), check_less);
  rep.total = static_cast<int>(rep.checks.size());
  rep.passed = static_cast<int>(std::count_if(rep.checks.begin(), rep.checks.end(), [](const auto& c) { return c.passed; }));
  rep.failed = rep.total - rep.passed;
  return rep;
}

inline nlohmann::ordered_json report_to_json(const Report& rep) {
  using nlohmann::ordered_json;
  ordered_json checks = ordered_json::array();
  for (const auto& c : rep.checks) {
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : c.params) params[k] = v;
    checks.push_back({{"id", c.id},
                      {"params", params},
                      {"lhs", c.lhs},
                      {"rhs", c.rhs},
                      {"passed", c.passed},
                      {"micros", c.micros}});
  }
  return {{"version", rep.version},
          {"range", {{"gMin", rep.gMin}, {"gMax", rep.gMax}}},
          {"checks", checks},
          {"summary", {{"total", rep.total}, {"passed", rep.passed}, {"failed", rep.failed}}}};
}

inline std::string format_params(const CheckResult& c) {
  std::string out;
  for (const auto& [k, v] : c.params) {
    if (!out.empty()) out += ' ';
    out += k + "=" + std::to_string(v);
  }
  return out;
}

namespace detail {
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}
}  // namespace detail

/// One row per check: id,params,lhs,rhs,passed,micros.
inline std::string report_to_csv(const Report& rep) {
  std::ostringstream os;
  os << "id,params,lhs,rhs,passed,micros\n";
  for (const auto& c : rep.checks)
    os << detail::csv_field(c.id) << ',' << detail::csv_field(format_params(c)) << ',' << detail::csv_field(c.lhs)
       << ',' << detail::csv_field(c.rhs) << ',' << (c.passed ? "true" : "false") << ',' << c.micros << '\n';
  return os.str();
}

}  // namespace symcd
