#pragma once

// Yetter-Drinfeld modules over B and the braided structure of their category.
//
// Conventions: δ(v) = v₍₋₁₎ ⊗ v₍₀₎, and
//   C(v⊗w)   = v₍₋₁₎·w ⊗ v₍₀₎,
//   C⁻¹(w⊗v) = v₍₀₎ ⊗ S⁻¹(v₍₋₁₎)·w.
// B acts on tensor products diagonally and coacts codiagonally.

#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "ydual/hopf.hpp"
#include "ydual/op.hpp"
#include "ydual/report.hpp"

namespace ydual {

struct YDModule {
  BaseRef base;
  /// Carrier as tensor legs; empty for the unit object k.
  Signature legs;
  LinMap action;    // B⊗V -> V
  LinMap coaction;  // V -> B⊗V

  [[nodiscard]] std::string name() const { return sig_to_string(legs); }
  [[nodiscard]] std::size_t dim() const { return sig_dim(legs); }
  [[nodiscard]] Field field() const { return action.field(); }
};

/// b·v = ε(b)v, δ(v) = 1⊗v.
YDModule trivial_module(const BaseRef& base, const Signature& legs);
/// The unit object k (no legs).
YDModule unit_module(const BaseRef& base);

Report check_yd(const YDModule& v, const std::string& prefix,
                std::optional<int> max_degree = std::nullopt);

LinMap braiding(const YDModule& v, const YDModule& w);
/// The inverse of braiding(v, w), as the map W⊗V -> V⊗W.
LinMap braiding_inverse(const YDModule& v, const YDModule& w);
/// C_{V,W} = (C_{W,V})⁻¹.
bool is_symmetric_pair(const YDModule& v, const YDModule& w);

YDModule tensor_module(const YDModule& v, const YDModule& w);

/// Hom(V, W) on a fresh carrier whose basis vector (w, v), index w·dim V + v,
/// is the map e_v ↦ e_w. Action (b·f)(x) = Σ b₁·f(S(b₂)·x); the coaction is
/// read off from Σ f₍₋₁₎ ⊗ f₍₀₎(x) = Σ f(x₍₀₎)₍₋₁₎ S⁻¹(x₍₋₁₎) ⊗ f(x₍₀₎)₍₀₎.
YDModule hom_module(const YDModule& v, const YDModule& w, std::string name);
/// Hom(V, k), basis dual to that of V.
YDModule dual_module(const YDModule& v, std::string name);
/// val: Hom(V, W) ⊗ V -> W for a carrier built by hom_module.
LinMap evaluation_map(const SpaceRef& hom, const YDModule& v, const YDModule& w);

/// Turns g: U⊗V -> Y⊗W into the map U -> Y⊗Hom(V, W) with
/// g(u⊗x) = val(curry(g)(u) ⊗ x).
LinMap curry(const Op& g, const Signature& u, const Signature& y, const SpaceRef& hom,
             std::size_t dv, std::size_t dw);

/// f: V -> W commutes with both actions and both coactions.
bool is_yd_morphism(const LinMap& f, const YDModule& v, const YDModule& w);

/// δ(v) = Σ R^(2) ⊗ R^(1)·v on a B-module. Throws StructureError when the
/// result fails check_yd.
YDModule from_quasitriangular(const BaseRef& base, const QuasitriangularData& qt,
                              const Signature& legs, const LinMap& action);

/// Registry of single-leg YD modules, keyed by carrier name, with lazily
/// assembled actions, coactions and braidings on arbitrary leg lists.
class YDContext {
 public:
  YDContext() = default;
  explicit YDContext(BaseRef base) : base_(std::move(base)) {}
  // Copies get their own lock and a snapshot of the braiding cache.
  YDContext(const YDContext& o);
  YDContext& operator=(const YDContext& o);

  /// Registers a module with exactly one leg (replacing any previous one).
  void add(const YDModule& m);
  [[nodiscard]] bool has(const std::string& name) const { return modules_.count(name) > 0; }
  [[nodiscard]] const YDModule& module(const SpaceRef& leg) const;
  [[nodiscard]] const BaseRef& base() const { return base_; }
  [[nodiscard]] Field field() const { return base_->field(); }

  [[nodiscard]] Op action(const Signature& legs) const;
  [[nodiscard]] Op coaction(const Signature& legs) const;
  /// C_{X,Y}: X⊗Y -> Y⊗X from elementary braidings (last X leg moves first).
  [[nodiscard]] Op braid(const Signature& x, const Signature& y) const;
  /// (C_{X,Y})⁻¹: Y⊗X -> X⊗Y.
  [[nodiscard]] Op braid_inverse(const Signature& x, const Signature& y) const;
  [[nodiscard]] YDModule module_of(const Signature& legs) const;

 private:
  [[nodiscard]] const LinMap& elementary(const SpaceRef& a, const SpaceRef& b, bool inverse) const;

  BaseRef base_;
  std::map<std::string, YDModule> modules_;
  mutable std::mutex mu_;
  mutable std::map<std::tuple<std::string, std::string, bool>, LinMap> cache_;
};

/// f commutes with the diagonal actions and codiagonal coactions of its
/// domain and codomain legs.
ReportItem yd_morphism_item(const std::string& id, const std::string& description,
                            const YDContext& ctx, const Op& f,
                            std::optional<int> max_degree = std::nullopt);

/// Iterated comultiplication B -> B^{⊗n} (n = 0 is the counit).
Op iterated_comult(const HopfAlgebraData& b, std::size_t n);
/// Iterated multiplication B^{⊗n} -> B (n = 0 is the unit).
Op iterated_mult(const HopfAlgebraData& b, std::size_t n);

}  // namespace ydual
