#pragma once

// Braided Hopf algebras in the Yetter-Drinfeld category over B.

#include <memory>
#include <optional>
#include <string>

#include "ydual/graded.hpp"
#include "ydual/yd.hpp"

namespace ydual {

/// Raised when a construction needs a symmetric braiding and does not get one.
class RefusalError : public StructureError {
 public:
  using StructureError::StructureError;
};

struct BraidedHopfAlgebra {
  YDModule module;  // exactly one leg: the carrier
  LinMap mult;
  LinMap unit;
  LinMap comult;
  LinMap counit;
  LinMap antipode;
  std::optional<LinMap> antipode_inv;
  /// Set for degree-truncated instances of an infinite graded algebra.
  std::optional<GradedSpace> graded;

  [[nodiscard]] const SpaceRef& carrier() const { return module.legs.at(0); }
  [[nodiscard]] Signature sig() const { return {carrier()}; }
  [[nodiscard]] Field field() const { return mult.field(); }
  [[nodiscard]] std::size_t dim() const { return carrier()->dim; }
  [[nodiscard]] std::optional<int> truncation() const {
    return graded ? std::optional<int>(graded->truncation()) : std::nullopt;
  }
  /// A structure map viewed blockwise (graded instances only).
  [[nodiscard]] GradedMap graded_view(const LinMap& m) const;
};

using BraidedRef = std::shared_ptr<const BraidedHopfAlgebra>;

/// Axioms in the order: YD structure, algebra, coalgebra, braided bialgebra
/// law, antipode, and the YD-morphism property of every structure map.
Report check_braided_hopf(const BraidedHopfAlgebra& h, const std::string& prefix,
                          std::optional<int> max_degree = std::nullopt);

bool is_symmetric(const BraidedHopfAlgebra& h);
/// Δ = C_{H,H} Δ.
bool is_quantum_cocommutative(const BraidedHopfAlgebra& h,
                              std::optional<int> max_degree = std::nullopt);

BraidedHopfAlgebra with_antipode_inverse(BraidedHopfAlgebra h);

/// Dual on dual_module(H): multiplication and comultiplication are fixed by
/// requiring the evaluation pairing to be a quasi-dual pairing, unit and
/// counit and antipode are transposes. Graded instances are dualised
/// degreewise. Refuses a non-symmetric braiding.
BraidedHopfAlgebra dual_braided_hopf(const BraidedHopfAlgebra& h, std::string name);

/// Same algebra on a carrier with another name.
BraidedHopfAlgebra renamed(const BraidedHopfAlgebra& h, std::string name);

/// Λ(x_1..x_n) over a base whose basis vector 1 is a grouplike involution g
/// (kZ₂, or Sweedler's algebra): generators coact by g⊗x_i, g acts by -1 and
/// the remaining basis vectors of B act by 0. Generators are primitive.
BraidedHopfAlgebra build_exterior_algebra(int n, const BaseRef& base, std::string name = "H");

/// k[x] truncated at degree N with x primitive, over the trivial base.
BraidedHopfAlgebra build_polynomial_hopf(int truncation, const BaseRef& base,
                                         std::string name = "H", std::string var = "x");

/// k[x]/(x^ℓ) over the cyclic group algebra with g·x = q x, δ(x) = g⊗x, where
/// ℓ is the multiplicative order of q.
BraidedHopfAlgebra build_quantum_line(const BaseRef& cyclic, const Scalar& q,
                                      std::string name = "H");

/// An ordinary Hopf algebra as a braided one with trivial YD structure over base.
BraidedHopfAlgebra from_hopf(const HopfAlgebraData& a, const BaseRef& base, std::string name);

}  // namespace ydual
