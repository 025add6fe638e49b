// Rays and two-ray cones in the (theta, x)-plane of N^1(C_d), and the table
// of known effective-cone bounds.
#pragma once

#include "symcd/catalog.hpp"
#include "symcd/nsring.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symcd {

/// Direction a theta + b x up to positive scaling. Stored so that the first
/// nonzero of (a, b) is +1 or -1.
class ConeRay {
 public:
  ConeRay(Rational theta_coeff, Rational x_coeff) {
    if (theta_coeff == 0 && x_coeff == 0) throw std::invalid_argument("zero ray");
    Rational lead = theta_coeff != 0 ? theta_coeff : x_coeff;
    if (lead < 0) lead = -lead;
    theta_ = theta_coeff / lead;
    x_ = x_coeff / lead;
  }

  /// The ray through a nonzero divisor class.
  static ConeRay of(const NSClass& c) {
    if (c.pure_degree() != 1) throw std::invalid_argument("cone ray needs a nonzero degree-1 class");
    return {c.coeff(0, 1), c.coeff(1, 0)};
  }

  const Rational& theta() const { return theta_; }
  const Rational& x() const { return x_; }

  NSClass as_class(Ambient amb) const { return NSClass::theta(amb) * theta_ + NSClass::x(amb) * x_; }

  friend bool operator==(const ConeRay&, const ConeRay&) = default;

 private:
  Rational theta_;
  Rational x_;
};

/// t such that the ray is theta - t x; nullopt for the vertical direction +-x.
inline std::optional<Rational> slope(const ConeRay& ray) {
  if (ray.theta() == 0) return std::nullopt;
  return -ray.x() / ray.theta();
}

namespace detail {
// Orientation in (theta, x) coordinates.
inline Rational cross(const Rational& a1, const Rational& b1, const Rational& a2, const Rational& b2) {
  return a1 * b2 - b1 * a2;
}
}  // namespace detail

/// Convex cone spanned by two non-collinear rays. The rays are stored in
/// counter-clockwise order of the (theta, x)-plane.
class Cone2D {
 public:
  Cone2D(ConeRay a, ConeRay b) : ray1_(std::move(a)), ray2_(std::move(b)) {
    const Rational orient = detail::cross(ray1_.theta(), ray1_.x(), ray2_.theta(), ray2_.x());
    if (orient == 0) throw std::invalid_argument("degenerate cone: collinear rays");
    if (orient < 0) std::swap(ray1_, ray2_);
  }

  const ConeRay& ray1() const { return ray1_; }
  const ConeRay& ray2() const { return ray2_; }

  /// Coefficients (s, t) with (a, b) = s ray1 + t ray2, by Cramer's rule.
  std::pair<Rational, Rational> coordinates(const Rational& a, const Rational& b) const {
    const Rational det = detail::cross(ray1_.theta(), ray1_.x(), ray2_.theta(), ray2_.x());
    return {detail::cross(a, b, ray2_.theta(), ray2_.x()) / det,
            detail::cross(ray1_.theta(), ray1_.x(), a, b) / det};
  }

  bool contains(const NSClass& c) const {
    if (c.is_zero()) return true;
    if (c.pure_degree() != 1) throw std::invalid_argument("cone membership needs a degree-1 class");
    const auto [s, t] = coordinates(c.coeff(0, 1), c.coeff(1, 0));
    return s >= 0 && t >= 0;
  }

  bool contains(const ConeRay& r) const {
    const auto [s, t] = coordinates(r.theta(), r.x());
    return s >= 0 && t >= 0;
  }

 private:
  ConeRay ray1_;
  ConeRay ray2_;
};

/// Effective cone of C_{g-2} for a general curve of genus g >= 5: the
/// diagonal and theta - (g/(g-2)) x.
inline Cone2D general_effective_cone_gm2(int g) {
  if (g < 5) throw std::invalid_argument("general effective cone of C_{g-2} needs g >= 5");
  const Ambient amb(g, g - 2);
  return {ConeRay::of(diagonal_class(amb)), ConeRay(1, Rational(-g, g - 2))};
}

enum class CurveClass { general, hyperelliptic, trigonal, planeQuintic };
enum class BoundStatus { provedBoundary, effectiveBound, virtualBound, exclusion };

NLOHMANN_JSON_SERIALIZE_ENUM(CurveClass, {
                                             {CurveClass::general, "general"},
                                             {CurveClass::hyperelliptic, "hyperelliptic"},
                                             {CurveClass::trigonal, "trigonal"},
                                             {CurveClass::planeQuintic, "planeQuintic"},
                                         })

NLOHMANN_JSON_SERIALIZE_ENUM(BoundStatus, {
                                              {BoundStatus::provedBoundary, "proved-boundary"},
                                              {BoundStatus::effectiveBound, "effective-bound"},
                                              {BoundStatus::virtualBound, "virtual-bound"},
                                              {BoundStatus::exclusion, "exclusion"},
                                          })

inline std::string to_string(CurveClass c) { return nlohmann::json(c).get<std::string>(); }
inline std::string to_string(BoundStatus s) { return nlohmann::json(s).get<std::string>(); }

inline CurveClass parse_curve_class(const std::string& name) {
  for (CurveClass c : {CurveClass::general, CurveClass::hyperelliptic, CurveClass::trigonal, CurveClass::planeQuintic})
    if (to_string(c) == name) return c;
  throw std::invalid_argument("unknown curve class '" + name + "'");
}

inline BoundStatus parse_bound_status(const std::string& name) {
  for (BoundStatus s : {BoundStatus::provedBoundary, BoundStatus::effectiveBound, BoundStatus::virtualBound,
                        BoundStatus::exclusion})
    if (to_string(s) == name) return s;
  throw std::invalid_argument("unknown bound status '" + name + "'");
}

/// One non-diagonal bound on the effective cone of C_d. For an exclusion the
/// ray is the direction known to carry no effective divisor.
struct BoundEntry {
  CurveClass curveClass = CurveClass::general;
  int g = 0;
  int d = 0;
  ConeRay ray{1, 0};
  BoundStatus status = BoundStatus::provedBoundary;
  std::string source;

  friend bool operator==(const BoundEntry&, const BoundEntry&) = default;
};

inline std::vector<BoundEntry> known_bounds(CurveClass curve, int g, int d) {
  auto none = [&] {
    return std::invalid_argument("no catalogued bound for " + to_string(curve) + " g=" + std::to_string(g) +
                                 " d=" + std::to_string(d));
  };
  if (d < 1) throw none();
  switch (curve) {
    case CurveClass::hyperelliptic:
      if (g >= 3 && d == g - 2) return {{curve, g, d, ConeRay(1, -3), BoundStatus::provedBoundary, "hyperelliptic C_{g-2}"}};
      if (g >= 3 && d == g - 1) return {{curve, g, d, ConeRay(1, -2), BoundStatus::provedBoundary, "hyperelliptic C_{g-1}"}};
      throw none();
    case CurveClass::trigonal:
      if (g >= 5 && d == g - 2) return {{curve, g, d, ConeRay(1, -2), BoundStatus::provedBoundary, "trigonal C_{g-2}"}};
      throw none();
    case CurveClass::planeQuintic:
      if (g == 6 && d == 4) return {{curve, g, d, ConeRay(1, -2), BoundStatus::exclusion, "no effective divisor along theta-2x"}};
      throw none();
    case CurveClass::general: {
      const int gap = g - d;
      if (g < 5 || d < 2 || gap < 2 || gap % 2 != 0) throw none();
      const int m = gap / 2;
      // theta - (1 + 2m/(g-2m)) x
      const ConeRay ray(1, -Rational(g, g - 2 * m));
      if (m == 1) return {{curve, g, d, ray, BoundStatus::provedBoundary, "pencil locus D_1 on C_{g-2}"}};
      if (m == 2) return {{curve, g, d, ray, BoundStatus::effectiveBound, "effective divisor D_2 on C_{g-4}"}};
      return {{curve, g, d, ray, BoundStatus::virtualBound, "virtual divisor D_m on C_{g-2m}"}};
    }
  }
  throw none();
}

/// Every catalogued entry with gMin <= g <= gMax, in a fixed order.
inline std::vector<BoundEntry> bound_catalog(int gMin, int gMax) {
  std::vector<BoundEntry> out;
  auto add = [&](CurveClass c, int g, int d) {
    try {
      for (auto& e : known_bounds(c, g, d)) out.push_back(std::move(e));
    } catch (const std::invalid_argument&) {
    }
  };
  for (int g = gMin; g <= gMax; ++g) {
    for (int d = g - 2; d >= 2; d -= 2) add(CurveClass::general, g, d);
    add(CurveClass::hyperelliptic, g, g - 2);
    add(CurveClass::hyperelliptic, g, g - 1);
    add(CurveClass::trigonal, g, g - 2);
    add(CurveClass::planeQuintic, g, g - 2);
  }
  return out;
}

inline void to_json(nlohmann::ordered_json& j, const BoundEntry& e) {
  j = nlohmann::ordered_json{{"curveClass", to_string(e.curveClass)},
                             {"g", e.g},
                             {"d", e.d},
                             {"rayTheta", to_string(e.ray.theta())},
                             {"rayX", to_string(e.ray.x())},
                             {"status", to_string(e.status)},
                             {"paperRef", e.source}};
}

inline void from_json(const nlohmann::ordered_json& j, BoundEntry& e) {
  e.curveClass = parse_curve_class(j.at("curveClass").get<std::string>());
  e.g = j.at("g").get<int>();
  e.d = j.at("d").get<int>();
  e.ray = ConeRay(parse_rational(j.at("rayTheta").get<std::string>()), parse_rational(j.at("rayX").get<std::string>()));
  e.status = parse_bound_status(j.at("status").get<std::string>());
  e.source = j.at("paperRef").get<std::string>();
}

inline std::string catalog_to_json(const std::vector<BoundEntry>& entries, int indent = 2) {
  return nlohmann::ordered_json(entries).dump(indent);
}

inline std::vector<BoundEntry> catalog_from_json(const std::string& text) {
  return nlohmann::ordered_json::parse(text).get<std::vector<BoundEntry>>();
}

}  // namespace symcd
