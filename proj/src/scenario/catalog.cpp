#include "ydual/catalog.hpp"

#include <memory>
#include <stdexcept>

namespace ydual {

namespace {

BaseRef make_base(HopfAlgebraData b) {
  if (!b.antipode_inv) b = with_antipode_inverse(std::move(b));
  return std::make_shared<const HopfAlgebraData>(std::move(b));
}

BraidedRef share(BraidedHopfAlgebra h) {
  if (!h.antipode_inv) h = with_antipode_inverse(std::move(h));
  return std::make_shared<const BraidedHopfAlgebra>(std::move(h));
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries{
      {"trivial", "B = k, H = H^d = R = k", 0},
      {"super_line", "B = kZ2, H = Λ(x), H^d its dual, R = H^d with ψ = Δ", 0},
      {"super_plane", "B = kZ2, H = Λ(x1,x2), H^d its dual, R = H^d with ψ = Δ", 0},
      {"poly_line_N6", "B = k, H = k[x], H^d = k[y], ⟨y^m,x^n⟩ = δ n!, R = k[y], N = 6", 0},
      {"qi_line_negative", "B = GF(5)Z4, H = k[x]/(x^4) with braiding scalar i: refused", 1},
      {"sweedler_base_negative", "B = Sweedler's H4, H = Λ(x): no YD claim", 0},
  };
  return entries;
}

DualityScenario dual_scenario(std::string name, const BaseRef& base, BraidedHopfAlgebra h) {
  DualityScenario s;
  s.name = std::move(name);
  s.base = base;
  s.h = share(std::move(h));
  try {
    s.hd = share(dual_braided_hopf(*s.h, "Hd"));
  } catch (const RefusalError& e) {
    s.refusal = e.what();
    return s;
  }
  s.pairing = evaluation_pairing(s.hd, s.h);
  s.r = comodule_from_comult(*s.hd, "R");
  s.evaluation = true;
  return s;
}

DualityScenario trivial_scenario() {
  const BaseRef b = make_base(trivial_hopf());
  return dual_scenario("trivial", b, from_hopf(trivial_hopf(Field::rationals(), "H"), b, "H"));
}

DualityScenario exterior_scenario(int n, std::string name) {
  const BaseRef b = make_base(
      build_group_algebra(cyclic_group_table(2), Field::rationals(), "B", cyclic_group_labels(2)));
  return dual_scenario(std::move(name), b, build_exterior_algebra(n, b, "H"));
}

DualityScenario poly_scenario(int truncation) {
  const BaseRef b = make_base(trivial_hopf());
  DualityScenario s;
  s.name = "poly_line_N" + std::to_string(truncation);
  s.base = b;
  s.h = share(build_polynomial_hopf(truncation, b, "H", "x"));
  s.hd = share(build_polynomial_hopf(truncation, b, "Hd", "y"));
  Matrix v(truncation + 1, truncation + 1);
  Scalar fact(1);
  for (int i = 0; i <= truncation; ++i) {
    if (i > 0) fact *= Scalar(i);
    v(i, i) = fact;
  }
  s.pairing = make_pairing(s.hd, s.h, v);
  s.r = comodule_from_comult(*s.hd, "R");
  // k[y] sits in the finite dual through y^m ↦ (x^n ↦ δ_{mn} n!)
  s.evaluation = true;
  return s;
}

DualityScenario qi_line_scenario() {
  const Field f = Field::prime(5);
  const BaseRef b =
      make_base(build_group_algebra(cyclic_group_table(4), f, "B", cyclic_group_labels(4)));
  return dual_scenario("qi_line_negative", b, build_quantum_line(b, Scalar(2), "H"));
}

DualityScenario sweedler_scenario() {
  const BaseRef b = make_base(sweedler_hopf());
  return dual_scenario("sweedler_base_negative", b, build_exterior_algebra(1, b, "H"));
}

DualityScenario build_example(const std::string& name, std::optional<int> truncation) {
  if (name == "trivial") return trivial_scenario();
  if (name == "super_line") return exterior_scenario(1, "super_line");
  if (name == "super_plane") return exterior_scenario(2, "super_plane");
  if (name == "poly_line_N6") {
    DualityScenario s = poly_scenario(truncation.value_or(6));
    if (!truncation || *truncation == 6) s.name = "poly_line_N6";
    return s;
  }
  if (name == "qi_line_negative") return qi_line_scenario();
  if (name == "sweedler_base_negative") return sweedler_scenario();
  std::string known;
  for (const auto& e : catalog()) known += (known.empty() ? "" : ", ") + e.name;
  throw std::invalid_argument("unknown example '" + name + "'; available: " + known);
}

}  // namespace ydual
