#pragma once

// The finite-dimensional base Hopf algebra B.

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ydual/linalg.hpp"
#include "ydual/op.hpp"
#include "ydual/report.hpp"

namespace ydual {

/// Malformed input structure (bad group table, inconsistent dimensions, ...).
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotInvertible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structure constants of a Hopf algebra. Construction does not validate;
/// call check_hopf.
struct HopfAlgebraData {
  SpaceRef carrier;
  LinMap mult;      // B⊗B -> B
  LinMap unit;      // k -> B
  LinMap comult;    // B -> B⊗B
  LinMap counit;    // B -> k
  LinMap antipode;  // B -> B
  std::optional<LinMap> antipode_inv;

  [[nodiscard]] Field field() const { return mult.field(); }
  [[nodiscard]] Signature sig() const { return {carrier}; }
  [[nodiscard]] std::size_t dim() const { return carrier->dim; }
};

using BaseRef = std::shared_ptr<const HopfAlgebraData>;

/// R = Σ R^(1) ⊗ R^(2) as a vector of B⊗B.
struct QuasitriangularData {
  SparseVec rmatrix;
};

Report check_hopf(const HopfAlgebraData& b, const std::string& prefix = "B");
LinMap invert_antipode(const HopfAlgebraData& b);
/// Copy of b with antipode_inv filled in.
HopfAlgebraData with_antipode_inverse(HopfAlgebraData b);
bool is_commutative(const HopfAlgebraData& b);
bool is_cocommutative(const HopfAlgebraData& b);

/// table[i][j] is the index of g_i g_j. Throws StructureError naming the
/// failed group axiom.
HopfAlgebraData build_group_algebra(const std::vector<std::vector<std::size_t>>& table,
                                    Field f = Field::rationals(), std::string name = "B",
                                    std::vector<std::string> labels = {});
std::vector<std::vector<std::size_t>> cyclic_group_table(std::size_t n);
/// Labels 1, g, g^2, ... for the cyclic group.
std::vector<std::string> cyclic_group_labels(std::size_t n);

/// Transposed structure constants; the basis is the dual basis.
HopfAlgebraData dual_hopf(const HopfAlgebraData& b, std::string name = {});

/// The ground field as a one-dimensional Hopf algebra.
HopfAlgebraData trivial_hopf(Field f = Field::rationals(), std::string name = "B");

/// Sweedler's four-dimensional algebra on the basis {1, g, x, gx}.
HopfAlgebraData sweedler_hopf(Field f = Field::rationals(), std::string name = "B");

}  // namespace ydual
