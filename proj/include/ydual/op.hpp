#pragma once

// Lazily applied linear maps.
//
// An Op is a string-diagram style composite of dense LinMaps, identities and
// leg permutations. Applying it to a vector never materialises Kronecker
// products: each factor acts on its slice of the row-major index, so checks
// on carriers with thousands of basis vectors stay cheap.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ydual/linalg.hpp"

namespace ydual {

/// Sparse vector keyed by flat basis index; zero entries are never stored.
using SparseVec = std::map<std::size_t, Scalar>;

void accumulate(SparseVec& v, std::size_t index, const Scalar& value);
SparseVec basis_vector(std::size_t index, Field f);
SparseVec add(const SparseVec& a, const SparseVec& b);
SparseVec scale(const SparseVec& a, const Scalar& s);
/// Kronecker product of two vectors (a on the left legs).
SparseVec kron(const SparseVec& a, const SparseVec& b, std::size_t dim_b);
std::string format_vector(const SparseVec& v, const Signature& sig);

class Op {
 public:
  struct Node;

  Op() = default;
  Op(const LinMap& m);  // NOLINT(google-explicit-constructor)

  static Op identity(const Signature& s, Field f);
  /// Plain leg permutation: codomain leg i is domain leg perm[i].
  static Op permutation(const Signature& dom, const std::vector<std::size_t>& perm, Field f);
  /// ops applied right to left: compose({f, g}) is f after g.
  static Op compose(const std::vector<Op>& ops);
  static Op tensor(const std::vector<Op>& ops);

  [[nodiscard]] const Signature& domain() const { return dom_; }
  [[nodiscard]] const Signature& codomain() const { return cod_; }
  [[nodiscard]] Field field() const { return field_; }

  [[nodiscard]] SparseVec apply(const SparseVec& v) const;
  [[nodiscard]] SparseVec apply_basis(std::size_t j) const;
  [[nodiscard]] LinMap materialize() const;
  /// Same map, new leg names (shapes must agree leg by leg).
  [[nodiscard]] Op retyped(const Signature& dom, const Signature& cod) const;

  /// Apply to the slice whose trailing (untouched) legs have dimension `right`.
  void apply_slice(const SparseVec& in, std::size_t right, SparseVec& out) const;

  friend Op sum(const Op& a, const Op& b);

 private:
  Signature dom_;
  Signature cod_;
  Field field_;
  std::shared_ptr<const Node> node_;
};

/// An Op together with its dense form, built on first request. Copies share
/// the dense form; building it is thread-safe and happens once.
class CachedOp {
 public:
  CachedOp() = default;
  explicit CachedOp(Op op);

  [[nodiscard]] const Op& lazy() const { return op_; }
  [[nodiscard]] const Op& dense() const;

 private:
  struct State {
    std::once_flag once;
    Op dense;
  };
  Op op_;
  std::shared_ptr<State> state_;
};

/// this-after-g sugar.
inline Op operator*(const Op& f, const Op& g) { return Op::compose({f, g}); }

/// id ⊗ f ⊗ id with f acting on legs [first, first + |dom f|) of sig.
Op on_legs(const Signature& sig, std::size_t first, const Op& f);

/// Sum of two maps with equal signatures.
Op sum(const Op& a, const Op& b);

/// Basis vectors of sig in order of (total degree, index), restricted to total
/// degree <= max_degree when given.
std::vector<std::size_t> basis_inputs(const Signature& sig, std::optional<int> max_degree);

struct Mismatch {
  std::size_t input = 0;
  std::string input_label;
  int input_degree = 0;
  std::string lhs;
  std::string rhs;
  [[nodiscard]] std::string describe() const;
};

/// First basis input (in basis_inputs order) on which a and b differ.
std::optional<Mismatch> first_mismatch(const Op& a, const Op& b, std::optional<int> max_degree);

}  // namespace ydual
