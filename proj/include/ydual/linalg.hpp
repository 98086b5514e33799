#pragma once

// Dense exact matrices and linear maps between tensor products of based spaces.
//
// Tensor index convention (used by every module): the basis vector
// e_i ⊗ e_j of V ⊗ W has flat index i * dim(W) + j, extended row-major to
// any number of factors. A LinMap's matrix has one column per domain basis
// vector and one row per codomain basis vector.

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ydual/scalar.hpp"

namespace ydual {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field f = Field::rationals());

  static Matrix identity(std::size_t n, Field f = Field::rationals());
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows,
                          Field f = Field::rationals());

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] Field field() const { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] Matrix operator*(const Matrix& o) const;
  [[nodiscard]] Matrix operator+(const Matrix& o) const;
  [[nodiscard]] Matrix operator-(const Matrix& o) const;
  [[nodiscard]] Matrix scaled(const Scalar& s) const;
  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] bool is_zero() const;

  /// Kronecker product under the row-major convention.
  static Matrix kron(const Matrix& a, const Matrix& b);

  [[nodiscard]] std::size_t rank() const;
  [[nodiscard]] std::optional<Matrix> inverse() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_;
  std::vector<Scalar> data_;
};

struct BasedSpace;
using SpaceRef = std::shared_ptr<const BasedSpace>;

/// A vector space with a chosen basis. Labels are for diagnostics; degrees
/// carry the grading of truncated graded spaces (all zero when ungraded).
struct BasedSpace {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<int> degrees;
  /// Non-empty for a space that stands for a tensor product of others.
  std::vector<SpaceRef> factors;

  [[nodiscard]] std::string label(std::size_t i) const;
  [[nodiscard]] int degree(std::size_t i) const;
  [[nodiscard]] int max_degree() const;
};

SpaceRef make_space(std::string name, std::size_t dim, std::vector<std::string> labels = {},
                    std::vector<int> degrees = {});
/// Same basis data under a new name.
SpaceRef rename_space(const SpaceRef& s, std::string name);
/// Tensor product space standing for the given factors.
SpaceRef tensor_space(const std::vector<SpaceRef>& factors);

/// Flattened list of tensor factors; the empty signature is the ground field.
using Signature = std::vector<SpaceRef>;

Signature flatten(const Signature& sig);
std::size_t sig_dim(const Signature& sig);
std::string sig_to_string(const Signature& sig);
bool same_signature(const Signature& a, const Signature& b);
Signature concat(const Signature& a, const Signature& b);
/// Per-leg basis indices of a flat index.
std::vector<std::size_t> split_index(const Signature& sig, std::size_t flat);
std::size_t join_index(const Signature& sig, const std::vector<std::size_t>& legs);
int index_degree(const Signature& sig, std::size_t flat);
std::string index_label(const Signature& sig, std::size_t flat);

class SignatureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LinMap {
 public:
  LinMap() = default;
  LinMap(Signature domain, Signature codomain, Matrix m);

  static LinMap identity(const Signature& s, Field f = Field::rationals());
  static LinMap zero(const Signature& dom, const Signature& cod, Field f = Field::rationals());
  /// The flip V ⊗ W -> W ⊗ V (no braiding).
  static LinMap swap(const Signature& v, const Signature& w, Field f = Field::rationals());

  [[nodiscard]] const Signature& domain() const { return dom_; }
  [[nodiscard]] const Signature& codomain() const { return cod_; }
  [[nodiscard]] const Matrix& matrix() const { return m_; }
  [[nodiscard]] Field field() const { return m_.field(); }
  [[nodiscard]] LinMap scaled(const Scalar& s) const;
  [[nodiscard]] LinMap retyped(Signature domain, Signature codomain) const;

 private:
  Signature dom_;
  Signature cod_;
  Matrix m_;
};

/// f after g.
LinMap compose(const LinMap& f, const LinMap& g);
LinMap tensor(const LinMap& f, const LinMap& g);
LinMap add(const LinMap& f, const LinMap& g);
bool equal(const LinMap& f, const LinMap& g);

struct NoSolution {
  enum class Reason { outside_image, ambiguous };
  Reason reason = Reason::outside_image;
  std::size_t column = 0;  // first offending target column
  std::string message;
};

/// g with compose(f, g) == target, when f is injective and every target
/// column lies in the image of f.
std::variant<LinMap, NoSolution> solve_preimage(const LinMap& f, const LinMap& target);

}  // namespace ydual
