// Command-line driver: eval, class, pair, pushpull, cone, verify.
#pragma once

#include "symcd/catalog.hpp"
#include "symcd/class_text.hpp"
#include "symcd/conelab.hpp"
#include "symcd/nsring.hpp"
#include "symcd/papercheck.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace symcd::cli {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Format { text, json, csv };

/// Parses either a class expression or a named reference such as
/// "<gamma 6 4 5 1>". A named class must live on `amb`.
inline NSClass resolve_class(const std::string& text, Ambient amb) {
  std::size_t first = text.find_first_not_of(" \t");
  if (first == std::string::npos || text[first] != '<') return parse_class(text, amb);
  const std::size_t close = text.find('>', first);
  if (close == std::string::npos) throw ParseError("unterminated named class", first);
  if (text.find_first_not_of(" \t", close + 1) != std::string::npos)
    throw ParseError("trailing text after named class", close + 1);
  std::istringstream is(text.substr(first + 1, close - first - 1));
  std::string name;
  is >> name;
  std::vector<int> args;
  for (std::string tok; is >> tok;) {
    try {
      std::size_t used = 0;
      args.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError("non-integer argument '" + tok + "' in named class", first);
    }
  }
  auto need = [&](std::size_t n, const char* shape) {
    if (args.size() != n) throw ParseError(std::string("named class expects <") + shape + ">", first);
  };
  NSClass out(amb);
  if (name == "gamma") {
    need(4, "gamma g d n r");
    out = subordinate_class(Ambient(args[0], args[1]), {args[2], args[3]});
  } else if (name == "diagonal") {
    need(2, "diagonal g d");
    out = diagonal_class(Ambient(args[0], args[1]));
  } else if (name == "c1d") {
    need(2, "c1d g d");
    out = c1d_class(Ambient(args[0], args[1]));
  } else if (name == "canonical") {
    need(2, "canonical g d");
    out = canonical_class(Ambient(args[0], args[1]));
  } else if (name == "dm") {
    need(2, "dm g m");
    out = dm_class(args[0], args[1]);
  } else if (name == "system-c1") {
    need(5, "system-c1 g d rank f dimV");
    out = system_c1(Ambient(args[0], args[1]), {args[2], args[3], args[4]});
  } else if (name == "ch") {
    need(5, "ch g d r f maxDegree");
    out = chern_character(Ambient(args[0], args[1]), args[2], args[3], args[4]);
  } else if (name == "mult-class") {
    need(3, "mult-class g d r");
    out = mult_degeneracy_class(args[0], args[1], args[2]);
  } else if (name == "twisted-kernel") {
    need(4, "twisted-kernel g degL h0L h1");
    out = twisted_kernel_class(args[0], {args[1], args[2]}, args[3]).cls;
  } else {
    throw ParseError("unknown class name '" + name + "'", first + 1);
  }
  if (!(out.ambient() == amb))
    throw std::invalid_argument("ambient mismatch: named class lives on (g=" + std::to_string(out.ambient().g()) +
                                ", d=" + std::to_string(out.ambient().d()) + ")");
  return out;
}

namespace detail {

inline nlohmann::ordered_json class_json(const NSClass& c) {
  return {{"g", c.ambient().g()}, {"d", c.ambient().d()}, {"class", format_class(c)}};
}

inline nlohmann::ordered_json ray_json(const ConeRay& r) {
  nlohmann::ordered_json j{{"rayTheta", to_string(r.theta())}, {"rayX", to_string(r.x())}};
  const auto s = slope(r);
  j["slope"] = s ? to_string(*s) : "vertical";
  return j;
}

inline std::string ray_text(const ConeRay& r, Ambient amb) {
  const auto s = slope(r);
  return format_class(r.as_class(amb)) + "  (slope " + (s ? to_string(*s) : "vertical") + ")";
}

}  // namespace detail

struct Options {
  bool color = false;
};

/// Runs one command. Returns 0 on success, 1 on usage or input errors, 2 when
/// `verify` finds a failing check.
inline int dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err, Options opts = {}) {
  CLI::App app{"Exact intersection numbers and cone bounds on symmetric powers of curves", "symcd"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key = value file presetting options (sections per subcommand)");

  std::string format_name = "text";
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  };

  int g = 0, d = 0;
  auto add_ambient = [&](CLI::App* sub, bool required = true) {
    auto* og = sub->add_option("--g", g, "genus");
    auto* od = sub->add_option("--d", d, "symmetric power index");
    if (required) {
      og->required();
      od->required();
    }
  };

  // eval
  std::string cls_text;
  auto* eval = app.add_subcommand("eval", "evaluate a top-degree class");
  add_ambient(eval);
  eval->add_option("--class", cls_text, "class expression or <name args>")->required();
  add_format(eval);

  // class
  std::string name;
  int n = 0, r = 0, m = 0, rank = 0, f = 0, dimv = 0, max_degree = 1, deg_l = 0, h0_l = 0, h1 = 0, k = 0;
  auto* cls = app.add_subcommand("class", "construct a named class");
  cls->add_option("--name", name, "gamma, diagonal, c1d, canonical, pushpull, dm, system-c1, ch, rho, mult-class, twisted-kernel")
      ->required();
  add_ambient(cls, false);
  cls->add_option("--n", n, "series degree");
  cls->add_option("--r", r, "series dimension or bundle rank");
  cls->add_option("--m", m, "index m of D_m");
  cls->add_option("--rank", rank, "coherent system rank");
  cls->add_option("--f", f, "bundle degree");
  cls->add_option("--dimv", dimv, "dim V");
  cls->add_option("--max-degree", max_degree, "truncation degree for ch");
  cls->add_option("--deg-l", deg_l, "deg L");
  cls->add_option("--h0-l", h0_l, "h0(L)");
  cls->add_option("--h1", h1, "h1(K_C (x) M_L)");
  cls->add_option("--k", k, "push-pull index");
  cls->add_option("--class", cls_text, "input class for pushpull");
  add_format(cls);

  // pair
  std::string a_text, b_text;
  auto* pr = app.add_subcommand("pair", "intersect two classes of complementary degree");
  add_ambient(pr);
  pr->add_option("--a", a_text, "first class")->required();
  pr->add_option("--b", b_text, "second class")->required();
  add_format(pr);

  // pushpull
  auto* pp = app.add_subcommand("pushpull", "apply B_k from C_d to C_{d-k}");
  add_ambient(pp);
  pp->add_option("--k", k, "number of points removed")->required();
  pp->add_option("--class", cls_text, "class on C_d")->required();
  add_format(pp);

  // cone
  std::string curve = "general", query;
  int g_min = 5, g_max = 40;
  bool catalog_all = false;
  auto* cone = app.add_subcommand("cone", "effective-cone rays, bounds and membership");
  cone->add_option("--curve", curve, "general, hyperelliptic, trigonal or planeQuintic");
  add_ambient(cone, false);
  cone->add_option("--query", query, "degree-1 class to test for membership");
  cone->add_flag("--all", catalog_all, "print every catalogued bound for g in [g-min, g-max]");
  cone->add_option("--g-min", g_min, "lowest genus for --all");
  cone->add_option("--g-max", g_max, "highest genus for --all");
  add_format(cone);

  // verify
  bool timings = false;
  auto* verify = app.add_subcommand("verify", "run the identity suite");
  verify->add_option("--g-min", g_min, "lowest genus (>= 5)");
  verify->add_option("--g-max", g_max, "highest genus");
  verify->add_flag("--timings", timings, "record per-check wall time (report is then not reproducible)");
  add_format(verify);

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }
  const Format fmt = formats.at(format_name);

  auto emit_class = [&](const NSClass& c) {
    if (fmt == Format::json)
      out << detail::class_json(c).dump() << "\n";
    else if (fmt == Format::csv)
      out << "g,d,class\n" << c.ambient().g() << ',' << c.ambient().d() << ',' << format_class(c) << "\n";
    else
      out << format_class(c) << "\n";
  };
  auto emit_number = [&](const std::string& key, const std::string& value) {
    if (fmt == Format::json)
      out << nlohmann::ordered_json{{key, value}}.dump() << "\n";
    else if (fmt == Format::csv)
      out << key << "\n" << value << "\n";
    else
      out << value << "\n";
  };

  try {
    if (*eval) {
      emit_number("value", to_string(eval_top(resolve_class(cls_text, Ambient(g, d)))));
    } else if (*pr) {
      const Ambient amb(g, d);
      emit_number("value", to_string(pair(resolve_class(a_text, amb), resolve_class(b_text, amb))));
    } else if (*pp || (*cls && name == "pushpull")) {
      if (cls_text.empty()) throw UsageError("pushpull needs --class");
      emit_class(pushpull(k, resolve_class(cls_text, Ambient(g, d))));
    } else if (*cls) {
      auto amb = [&] {
        if (!cls->count("--g") || !cls->count("--d")) throw UsageError("class '" + name + "' needs --g and --d");
        return Ambient(g, d);
      };
      if (name == "gamma") {
        emit_class(subordinate_class(amb(), {n, r}));
      } else if (name == "diagonal") {
        emit_class(diagonal_class(amb()));
      } else if (name == "c1d") {
        emit_class(c1d_class(amb()));
      } else if (name == "canonical") {
        emit_class(canonical_class(amb()));
      } else if (name == "dm") {
        NSClass c = dm_class(g, m);
        if (c.ambient().d() != amb().d())
          throw std::invalid_argument("dm(g=" + std::to_string(g) + ", m=" + std::to_string(m) + ") lives on C_" +
                                      std::to_string(c.ambient().d()) + ", not C_" + std::to_string(d));
        emit_class(c);
      } else if (name == "system-c1") {
        emit_class(system_c1(amb(), {rank, f, dimv}));
      } else if (name == "ch") {
        emit_class(chern_character(amb(), r, f, max_degree));
      } else if (name == "rho") {
        if (!cls->count("--g") || !cls->count("--d")) throw UsageError("rho needs --g and --d");
        emit_number("rho", std::to_string(brill_noether_rho(g, r, d)));
      } else if (name == "mult-class") {
        emit_class(mult_degeneracy_class(amb().g(), d, r));
      } else if (name == "twisted-kernel") {
        const TwistedKernelClass tk = twisted_kernel_class(g, {deg_l, h0_l}, h1);
        if (cls->count("--d") && tk.ambient.d() != d)
          throw std::invalid_argument("twisted kernel locus lives on C_" + std::to_string(tk.ambient.d()));
        emit_class(tk.cls);
      } else {
        throw UsageError("unknown class name '" + name + "'");
      }
    } else if (*cone) {
      if (catalog_all) {
        const auto entries = bound_catalog(g_min, g_max);
        if (fmt == Format::text) {
          for (const auto& e : entries)
            out << to_string(e.curveClass) << " g=" << e.g << " d=" << e.d << "  "
                << format_class(e.ray.as_class(Ambient(e.g, e.d))) << "  " << to_string(e.status) << "\n";
        } else if (fmt == Format::csv) {
          out << "curveClass,g,d,rayTheta,rayX,status,paperRef\n";
          for (const auto& e : entries)
            out << to_string(e.curveClass) << ',' << e.g << ',' << e.d << ',' << to_string(e.ray.theta()) << ','
                << to_string(e.ray.x()) << ',' << to_string(e.status) << ',' << ::symcd::detail::csv_field(e.source) << "\n";
        } else {
          out << catalog_to_json(entries) << "\n";
        }
        return 0;
      }
      if (!cone->count("--g") || !cone->count("--d")) throw UsageError("cone needs --g and --d (or --all)");
      const CurveClass cc = parse_curve_class(curve);
      const Ambient amb(g, d);
      const bool full_cone = cc == CurveClass::general && d == g - 2;
      if (!query.empty()) {
        if (!full_cone)
          throw UsageError("membership queries need the full cone: --curve general with d = g-2");
        const bool inside = general_effective_cone_gm2(g).contains(resolve_class(query, amb));
        emit_number("contains", inside ? "true" : "false");
        return 0;
      }
      const auto bounds = known_bounds(cc, g, d);
      if (fmt == Format::json) {
        nlohmann::ordered_json j{{"curveClass", curve}, {"g", g}, {"d", d}};
        if (full_cone) {
          const Cone2D c = general_effective_cone_gm2(g);
          j["rays"] = {detail::ray_json(c.ray1()), detail::ray_json(c.ray2())};
        }
        j["bounds"] = bounds;
        out << j.dump(2) << "\n";
      } else if (fmt == Format::csv) {
        out << "kind,rayTheta,rayX,status\n";
        if (full_cone) {
          const Cone2D c = general_effective_cone_gm2(g);
          for (const ConeRay* ray : {&c.ray1(), &c.ray2()})
            out << "ray," << to_string(ray->theta()) << ',' << to_string(ray->x()) << ",\n";
        }
        for (const auto& e : bounds)
          out << "bound," << to_string(e.ray.theta()) << ',' << to_string(e.ray.x()) << ',' << to_string(e.status)
              << "\n";
      } else {
        if (full_cone) {
          const Cone2D c = general_effective_cone_gm2(g);
          out << "ray1: " << detail::ray_text(c.ray1(), amb) << "\n";
          out << "ray2: " << detail::ray_text(c.ray2(), amb) << "\n";
        }
        for (const auto& e : bounds)
          out << to_string(e.status) << ": " << detail::ray_text(e.ray, amb) << "  [" << e.source << "]\n";
      }
    } else if (*verify) {
      const Report rep = run_all(g_min, g_max, timings);
      if (fmt == Format::json) {
        out << report_to_json(rep).dump(2) << "\n";
      } else if (fmt == Format::csv) {
        out << report_to_csv(rep);
      } else {
        const char* green = opts.color ? "\033[32m" : "";
        const char* red = opts.color ? "\033[31m" : "";
        const char* reset = opts.color ? "\033[0m" : "";
        for (const auto& c : rep.checks) {
          out << (c.passed ? green : red) << (c.passed ? "PASS" : "FAIL") << reset << "  " << c.id << " "
              << format_params(c);
          if (!c.passed) out << "\n    lhs: " << c.lhs << "\n    rhs: " << c.rhs;
          out << "\n";
        }
        out << rep.passed << "/" << rep.total << " checks passed\n";
      }
      return rep.failed == 0 ? 0 : 2;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace symcd::cli
