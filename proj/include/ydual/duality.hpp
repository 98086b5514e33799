#pragma once

// The duality isomorphism (R#H)#H^d ≅ R⊗(H#H^d) and the maps it is built from.
//
// Every map into E = End H is handled through its value form U⊗H -> H
// (val(F⊗x) = F(x)). In finite mode the maps into E are also materialized on
// E = Hom(H, H); in graded mode only value forms are used and every identity
// is checked on inputs of total degree <= N.

#include <optional>
#include <string>

#include "ydual/pairing.hpp"

namespace ydual {

/// λ̄ met an endomorphism outside the image of λ'.
class RLConditionViolation : public StructureError {
 public:
  using StructureError::StructureError;
};

struct DualityScenario {
  std::string name;
  BaseRef base;
  BraidedRef h;
  BraidedRef hd;  // null when a construction step refused
  std::optional<QuasiDualPairing> pairing;
  std::optional<ComoduleAlgebra> r;
  /// Set when building H^d (or anything after it) refused; the report then
  /// carries the refusal instead of the duality items.
  std::string refusal;
  /// ⟨,⟩ is an evaluation pairing (H^d a dual, or a subalgebra of H°).
  bool evaluation = false;

  [[nodiscard]] std::optional<int> truncation() const { return h->truncation(); }
  [[nodiscard]] bool graded() const { return h->graded.has_value(); }
};

enum class Suite { all, axioms, lemmas, duality };

Suite parse_suite(const std::string& s);
std::string to_string(Suite s);

class DualityEngine {
 public:
  explicit DualityEngine(DualityScenario s);

  [[nodiscard]] const DualityScenario& scenario() const { return s_; }
  [[nodiscard]] const YDContext& context() const { return ctx_; }
  /// Degree bound for checks: the truncation in graded mode, none otherwise.
  [[nodiscard]] std::optional<int> bound() const { return bound_; }
  void set_bound(std::optional<int> max_degree);

  // value forms
  /// λ'(h#f)(x) = h⟨f, x⟩ on H⊗H^d⊗H.
  [[nodiscard]] Op lambda_prime_val() const;
  /// (m⊗⟨,⟩)(H⊗C⊗H)(H⊗H^d⊗Δ).
  [[nodiscard]] Op lambda_val() const;
  /// Σ ⟨f, x₂₍₀₎⟩ h(S⁻¹(x₂₍₋₁₎)·x₁), the coordinate form.
  [[nodiscard]] Op lambda_val_sweedler() const;
  /// (⟨,⟩⊗m)(H^d⊗H⊗C)(H^d⊗C⊗H)(H^d⊗H⊗Δ) on H^d⊗H⊗H.
  [[nodiscard]] Op rho_val() const;
  /// Σ ⟨f, h₍₋₁₎₁·x₁⟩ (h₍₋₁₎₂·x₂) h₍₀₎.
  [[nodiscard]] Op rho_val_sweedler() const;
  /// Θ(F)(x) = m(F⊗H)C(S⁻¹⊗H)Δ(x) for F given by its value form U⊗H -> H.
  [[nodiscard]] Op theta_val(const Op& f_val) const;

  // maps into E = Hom(H, H) (truncated in graded mode)
  [[nodiscard]] const YDModule& endo() const { return e_; }
  [[nodiscard]] LinMap lambda_prime() const;
  [[nodiscard]] LinMap lambda_map() const;
  [[nodiscard]] LinMap rho_map() const;
  /// Preimage under λ' of Θ applied to each column of f (a map U -> E).
  [[nodiscard]] LinMap lambda_bar(const LinMap& f) const;
  /// ρ(H^d#1) ⊆ λ(H#H^d): a rank test in finite mode; in graded mode each
  /// ρ(f#1) must be λ of its λ̄-candidate on all inputs of degree <= N.
  [[nodiscard]] bool rl_condition() const;

  // algebras
  [[nodiscard]] const Algebra& h_smash_hd() const { return h_hd_; }
  [[nodiscard]] const Algebra& hd_smash_h() const { return hd_h_; }
  [[nodiscard]] const Algebra& r_smash_h() const;
  [[nodiscard]] const Algebra& big_smash() const;
  [[nodiscard]] const Algebra& r_tensor_h_hd() const;
  [[nodiscard]] const Op& hd_on_h() const { return hd_on_h_; }
  [[nodiscard]] const Op& h_on_hd() const { return h_on_hd_; }
  [[nodiscard]] const Op& alpha() const;
  [[nodiscard]] const Op& lifted() const;

  // the duality maps
  /// w(f) = λ̄ρ(S⁻¹(f)#1): H^d -> H⊗H^d. Throws RLConditionViolation.
  [[nodiscard]] const LinMap& w_map() const;
  /// μ = λ̄ρ(id⊗η).
  [[nodiscard]] const LinMap& mu_map() const;
  [[nodiscard]] Op phi_map() const;
  [[nodiscard]] Op psi_map() const;
  /// ξ in value form R⊗H -> R⊗H: r ⊗ x ↦ r₍₀₎ ⊗ ρ(S⁻¹(r₍₁₎)#1)(x).
  [[nodiscard]] Op xi_val() const;

  // report sections
  [[nodiscard]] Report axioms() const;
  [[nodiscard]] Report lemmas() const;
  [[nodiscard]] Report duality(const std::string& prefix = "thm-1.8") const;

 private:
  void need_r() const;
  [[nodiscard]] Op val_h(const Signature& legs) const;

  DualityScenario s_;
  YDContext ctx_;
  std::optional<int> bound_;
  Field f_;
  Signature H_, Hd_, R_;
  YDModule e_;
  Op hd_on_h_, h_on_hd_, right_;
  Algebra h_hd_, hd_h_;
  std::optional<Algebra> r_h_, big_, r_tensor_;
  std::optional<Op> alpha_, lifted_;
  mutable std::optional<LinMap> w_, mu_;
};

/// H and H^d trade places: V = H becomes the quasi-dual of U = H^d under
/// ⟨v, u⟩ = ⟨,⟩(C_{V,U}(v⊗u)), with R' = H, ψ = Δ.
DualityScenario swapped_scenario(const DualityScenario& s);

/// Full report in a fixed order: axioms, lemmas, duality (as selected).
Report verify_duality(const DualityScenario& s, Suite suite = Suite::all,
                      std::optional<int> max_degree = std::nullopt);

}  // namespace ydual
