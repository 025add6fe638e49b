// Walks through the C_4 computations for a genus-6 curve: the pencil
// locus D_1, the kernel-bundle locus of a plane quintic, and the curve
// class Z = gamma_4(g^1_5) - gamma_4(g^1_4) that theta - 2x is orthogonal to.
#include "symcd/catalog.hpp"
#include "symcd/class_text.hpp"
#include "symcd/conelab.hpp"

#include <iostream>

int main() {
  using namespace symcd;
  const Ambient c4(6, 4);

  const NSClass d1 = pushpull(1, c1d_class(Ambient(6, 5)));
  std::cout << "B_1(c^1_5)              = " << format_class(d1) << "\n";

  const auto tk = twisted_kernel_class(6, {5, 3}, h1_from_dimension(6, {5, 3}, 4));
  std::cout << "Gamma_4(K_C (x) M_Q)    = " << format_class(tk.cls) << "\n";
  std::cout << "2 Gamma_4 == B_1(c^1_5) : " << std::boolalpha << (tk.cls * Rational(2) == d1) << "\n";

  const NSClass z = subordinate_class(c4, {5, 1}) - subordinate_class(c4, {4, 1});
  const NSClass th = NSClass::theta(c4);
  const NSClass x = NSClass::x(c4);
  std::cout << "Z                       = " << format_class(z) << "\n";
  std::cout << "theta.Z, x.Z            = " << to_string(pair(th, z)) << ", " << to_string(pair(x, z)) << "\n";
  std::cout << "(theta - 2x).Z          = " << to_string(pair(th - x * Rational(2), z)) << "\n";

  const Cone2D general = general_effective_cone_gm2(6);
  std::cout << "general Eff(C_4) rays   : " << format_class(general.ray1().as_class(c4)) << " | "
            << format_class(general.ray2().as_class(c4)) << "\n";
  std::cout << "contains theta - 2x     : " << general.contains(th - x * Rational(2)) << "\n";
}
