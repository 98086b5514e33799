#pragma once

// Pairings H^d ⊗ H -> k and what they induce: module-algebra actions, comodule
// algebras and their induced actions, smash products and braided tensor
// product algebras.
//
// Smash convention: (a#k)(a'#k') = Σ a (k₁ ⇀ k₂₍₋₁₎·a') # k₂₍₀₎ k', i.e.
// m = (m_A⊗m_K)(A⊗⇀⊗K⊗K)(A⊗K⊗C_{K,A}⊗K)(A⊗Δ⊗A⊗K).

#include <optional>
#include <string>

#include "ydual/braided.hpp"

namespace ydual {

struct QuasiDualPairing {
  BraidedRef hd;
  BraidedRef h;
  LinMap form;  // H^d ⊗ H -> k

  /// values()(i, j) = ⟨f_i, e_j⟩.
  [[nodiscard]] Matrix values() const;
};

/// values(i, j) = ⟨f_i, e_j⟩. In graded mode the pairing must vanish between
/// different degrees (StructureError otherwise).
QuasiDualPairing make_pairing(BraidedRef hd, BraidedRef h, const Matrix& values);
/// ⟨,⟩_ev for hd built as the dual of h (identity matrix on dual bases).
QuasiDualPairing evaluation_pairing(BraidedRef hd, BraidedRef h);
/// ⟨v, u⟩ = ⟨,⟩_ev(C_{V,U}(v⊗u)) = ⟨v₍₋₁₎·u, v₍₀₎⟩_ev, which makes V a quasi-dual
/// of its dual U; `u` must be the dual of `v`.
QuasiDualPairing evaluation_composed_with_braiding(BraidedRef v, BraidedRef u);

/// Definition-level axioms plus the two B-compatibilities, seven items.
Report check_quasi_dual(const QuasiDualPairing& p, const std::string& prefix,
                        std::optional<int> max_degree = std::nullopt);
std::size_t pairing_rank(const QuasiDualPairing& p);
/// ⟨f, H⟩ = 0 only for f = 0.
bool is_left_faithful(const QuasiDualPairing& p);

/// An algebra in the YD category on a list of registered legs.
struct Algebra {
  std::string name;
  Signature legs;
  CachedOp mult;  // legs⊗legs -> legs
  Op unit;        // k -> legs
};

Algebra algebra_of(const BraidedHopfAlgebra& h);
/// Associativity, unit laws, and mult/unit as YD morphisms.
Report check_algebra(const Algebra& a, const YDContext& ctx, const std::string& prefix,
                     std::optional<int> max_degree = std::nullopt, bool dense = true);

/// The product of two algebras on A⊗B with m = (m_A⊗m_B)(A⊗C_{B,A}⊗B).
Algebra braided_tensor_algebra(const Algebra& a, const Algebra& b, const YDContext& ctx,
                               std::string name);

struct ModuleAlgebraAction {
  BraidedRef acting;
  Algebra algebra;
  Op action;  // acting ⊗ algebra -> algebra
};

/// Module laws, the braided module-algebra law
///   act(K⊗m) = m(act⊗act)(K⊗C_{K,A}⊗A)(Δ⊗A⊗A),
/// k ⇀ 1 = ε(k)1, and the action as a YD morphism.
Report check_module_algebra(const ModuleAlgebraAction& a, const YDContext& ctx,
                            const std::string& prefix,
                            std::optional<int> max_degree = std::nullopt);

/// h ⇀ f = (H^d⊗⟨,⟩)(H^d⊗C)(C⊗H^d)(H⊗Δ), i.e. Σ (h₍₋₁₎·f₁)⟨h₍₀₎₍₋₁₎·f₂, h₍₀₎₍₀₎⟩.
Op action_h_on_hd(const QuasiDualPairing& p, const YDContext& ctx);
/// f ⇀ x = (H⊗⟨,⟩)(C⊗H)(H^d⊗Δ), i.e. Σ (f₍₋₁₎·x₁)⟨f₍₀₎, x₂⟩.
Op action_hd_on_h(const QuasiDualPairing& p, const YDContext& ctx);
/// x ↼ f = (⟨,⟩⊗H)(C⊗H)(H⊗C)(Δ⊗H^d), i.e. Σ ⟨x₁₍₋₁₎x₂₍₋₁₎·f, x₁₍₀₎⟩ x₂₍₀₎.
Op right_action_hd_on_h(const QuasiDualPairing& p, const YDContext& ctx);

struct ComoduleAlgebra {
  Algebra algebra;  // exactly one leg, registered in the context
  YDModule module;
  Op coaction;  // R -> R⊗H^d
};

/// R = a renamed copy of H^d with ψ = Δ.
ComoduleAlgebra comodule_from_comult(const BraidedHopfAlgebra& hd, std::string name);
/// ψ(r) = r⊗1.
ComoduleAlgebra trivial_comodule(const BraidedHopfAlgebra& r, const BraidedHopfAlgebra& hd,
                                 std::string name);
/// Coassociativity, counit, ψ an algebra map into R⊗H^d (braided tensor
/// algebra), and ψ a YD morphism.
Report check_comodule_algebra(const ComoduleAlgebra& r, const BraidedHopfAlgebra& hd,
                              const YDContext& ctx, const std::string& prefix,
                              std::optional<int> max_degree = std::nullopt);
/// α = (R⊗⟨,⟩)(R⊗C_{H,H^d})(C_{H,R}⊗H^d)(H⊗ψ): H⊗R -> R.
Op comodule_to_module(const ComoduleAlgebra& r, const QuasiDualPairing& p,
                      const YDContext& ctx);

/// A#K for a K-module algebra A. With verify set, associativity and the unit
/// laws are checked (to the given degree) and a failure throws StructureError
/// naming the witness triple.
Algebra smash_product(const Algebra& a, const BraidedHopfAlgebra& k, const Op& action,
                      const YDContext& ctx, std::string name, bool verify = true,
                      std::optional<int> max_degree = std::nullopt);

/// ⇀' = (R⊗⇀)(C_{H^d,R}⊗H): H^d ⊗ R ⊗ H -> R ⊗ H, acting trivially on R.
Op lifted_action(const Signature& r_legs, const QuasiDualPairing& p, const Op& hd_on_h,
                 const YDContext& ctx);

}  // namespace ydual
