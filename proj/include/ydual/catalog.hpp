#pragma once

// Built-in example scenarios.

#include <optional>
#include <string>
#include <vector>

#include "ydual/duality.hpp"

namespace ydual {

struct CatalogEntry {
  std::string name;
  std::string summary;
  /// Exit code a full run is expected to produce.
  int expected_exit = 0;
};

const std::vector<CatalogEntry>& catalog();

/// Throws std::invalid_argument listing the available names.
DualityScenario build_example(const std::string& name,
                              std::optional<int> truncation = std::nullopt);

// The pieces, for tests.
DualityScenario trivial_scenario();
/// Λ(x_1..x_n) over kZ₂ with its dual and R = H^d, ψ = Δ.
DualityScenario exterior_scenario(int n, std::string name);
/// k[x] and k[y] truncated at N with ⟨y^m, x^n⟩ = δ_{mn} n!, R = k[y], ψ = Δ.
DualityScenario poly_scenario(int truncation);
/// k[x]/(x⁴) over GF(5)Z₄ with g·x = 2x; 2 is a square root of -1, so the
/// braiding is not symmetric and dualising refuses.
DualityScenario qi_line_scenario();
/// Λ(x) over Sweedler's algebra.
DualityScenario sweedler_scenario();

/// Scenario with the given H, H^d = dual of H under evaluation, R = H^d, ψ = Δ.
/// A refusal to dualise is recorded in the scenario, not thrown.
DualityScenario dual_scenario(std::string name, const BaseRef& base, BraidedHopfAlgebra h);

}  // namespace ydual
