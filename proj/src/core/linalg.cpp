#include "ydual/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace ydual {

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(std::size_t n, Field f) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, Field f) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  Matrix m(r, c, f);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw SignatureError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j].in(f);
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_)
    throw SignatureError("matrix product shape mismatch: " + std::to_string(rows_) + "x" +
                         std::to_string(cols_) + " * " + std::to_string(o.rows_) + "x" +
                         std::to_string(o.cols_));
  Matrix r(rows_, o.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (!b.is_zero()) r(i, j) += a * b;
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw SignatureError("matrix sum shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(Scalar(-1)); }

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r = *this;
  for (auto& v : r.data_) v *= s;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows_ * b.rows_, a.cols_ * b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t l = 0; l < b.cols_; ++l)
          if (!b(k, l).is_zero()) r(i * b.rows_ + k, j * b.cols_ + l) = x * b(k, l);
    }
  return r;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    const Scalar inv = m(row, col).inverse();
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Scalar factor = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t Matrix::rank() const {
  Matrix m = *this;
  return rref(m, cols_).size();
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const std::size_t n = rows_;
  Matrix aug(n, 2 * n, field_);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = Scalar::one(field_);
  }
  if (rref(aug, n).size() != n) return std::nullopt;
  Matrix inv(n, n, field_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    if (a.data_[i] != b.data_[i]) return false;
  return true;
}

// ---------------------------------------------------------------- spaces

std::string BasedSpace::label(std::size_t i) const {
  if (i < labels.size()) return labels[i];
  return name + "[" + std::to_string(i) + "]";
}

int BasedSpace::degree(std::size_t i) const { return i < degrees.size() ? degrees[i] : 0; }

int BasedSpace::max_degree() const {
  int m = 0;
  for (int d : degrees) m = std::max(m, d);
  return m;
}

SpaceRef make_space(std::string name, std::size_t dim, std::vector<std::string> labels,
                    std::vector<int> degrees) {
  if (!labels.empty() && labels.size() != dim)
    throw SignatureError("space " + name + ": label count differs from dimension");
  if (!degrees.empty() && degrees.size() != dim)
    throw SignatureError("space " + name + ": degree count differs from dimension");
  auto s = std::make_shared<BasedSpace>();
  s->name = std::move(name);
  s->dim = dim;
  s->labels = std::move(labels);
  s->degrees = std::move(degrees);
  return s;
}

SpaceRef rename_space(const SpaceRef& s, std::string name) {
  auto r = std::make_shared<BasedSpace>(*s);
  r->name = std::move(name);
  return r;
}

SpaceRef tensor_space(const std::vector<SpaceRef>& factors) {
  const Signature flat = flatten(factors);
  auto s = std::make_shared<BasedSpace>();
  s->name = sig_to_string(flat);
  s->dim = sig_dim(flat);
  s->factors = flat;
  bool graded = false;
  for (const auto& f : flat) graded = graded || !f->degrees.empty();
  s->labels.reserve(s->dim);
  for (std::size_t i = 0; i < s->dim; ++i) {
    s->labels.push_back(index_label(flat, i));
    if (graded) s->degrees.push_back(index_degree(flat, i));
  }
  return s;
}

Signature flatten(const Signature& sig) {
  Signature out;
  for (const auto& s : sig) {
    if (s->factors.empty()) {
      out.push_back(s);
    } else {
      for (const auto& f : flatten(s->factors)) out.push_back(f);
    }
  }
  return out;
}

std::size_t sig_dim(const Signature& sig) {
  std::size_t d = 1;
  for (const auto& s : sig) d *= s->dim;
  return d;
}

std::string sig_to_string(const Signature& sig) {
  if (sig.empty()) return "k";
  std::string out;
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (i) out += "⊗";
    out += sig[i]->name;
  }
  return out;
}

bool same_signature(const Signature& a, const Signature& b) {
  const Signature fa = flatten(a);
  const Signature fb = flatten(b);
  if (fa.size() != fb.size()) return false;
  for (std::size_t i = 0; i < fa.size(); ++i)
    if (fa[i]->name != fb[i]->name || fa[i]->dim != fb[i]->dim) return false;
  return true;
}

Signature concat(const Signature& a, const Signature& b) {
  Signature r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

std::vector<std::size_t> split_index(const Signature& sig, std::size_t flat) {
  std::vector<std::size_t> legs(sig.size());
  for (std::size_t k = sig.size(); k-- > 0;) {
    legs[k] = flat % sig[k]->dim;
    flat /= sig[k]->dim;
  }
  return legs;
}

std::size_t join_index(const Signature& sig, const std::vector<std::size_t>& legs) {
  std::size_t flat = 0;
  for (std::size_t k = 0; k < sig.size(); ++k) flat = flat * sig[k]->dim + legs[k];
  return flat;
}

int index_degree(const Signature& sig, std::size_t flat) {
  int d = 0;
  for (std::size_t k = sig.size(); k-- > 0;) {
    d += sig[k]->degree(flat % sig[k]->dim);
    flat /= sig[k]->dim;
  }
  return d;
}

std::string index_label(const Signature& sig, std::size_t flat) {
  if (sig.empty()) return "1";
  const auto legs = split_index(sig, flat);
  std::string out;
  for (std::size_t k = 0; k < sig.size(); ++k) {
    if (k) out += "⊗";
    out += sig[k]->label(legs[k]);
  }
  return out;
}

// ---------------------------------------------------------------- LinMap

LinMap::LinMap(Signature domain, Signature codomain, Matrix m)
    : dom_(flatten(domain)), cod_(flatten(codomain)), m_(std::move(m)) {
  if (m_.rows() != sig_dim(cod_) || m_.cols() != sig_dim(dom_)) {
    std::ostringstream os;
    os << "matrix shape " << m_.rows() << "x" << m_.cols() << " does not fit "
       << sig_to_string(dom_) << " -> " << sig_to_string(cod_);
    throw SignatureError(os.str());
  }
}

LinMap LinMap::identity(const Signature& s, Field f) {
  return LinMap(s, s, Matrix::identity(sig_dim(s), f));
}

LinMap LinMap::zero(const Signature& dom, const Signature& cod, Field f) {
  return LinMap(dom, cod, Matrix(sig_dim(cod), sig_dim(dom), f));
}

LinMap LinMap::swap(const Signature& v, const Signature& w, Field f) {
  const std::size_t dv = sig_dim(v);
  const std::size_t dw = sig_dim(w);
  Matrix m(dv * dw, dv * dw, f);
  for (std::size_t i = 0; i < dv; ++i)
    for (std::size_t j = 0; j < dw; ++j) m(j * dv + i, i * dw + j) = Scalar::one(f);
  return LinMap(concat(v, w), concat(w, v), std::move(m));
}

LinMap LinMap::scaled(const Scalar& s) const { return LinMap(dom_, cod_, m_.scaled(s)); }

LinMap LinMap::retyped(Signature domain, Signature codomain) const {
  return LinMap(std::move(domain), std::move(codomain), m_);
}

LinMap compose(const LinMap& f, const LinMap& g) {
  if (!same_signature(f.domain(), g.codomain()))
    throw SignatureError("cannot compose " + sig_to_string(f.domain()) + " -> " +
                         sig_to_string(f.codomain()) + " after " + sig_to_string(g.domain()) +
                         " -> " + sig_to_string(g.codomain()));
  return LinMap(g.domain(), f.codomain(), f.matrix() * g.matrix());
}

LinMap tensor(const LinMap& f, const LinMap& g) {
  return LinMap(concat(f.domain(), g.domain()), concat(f.codomain(), g.codomain()),
                Matrix::kron(f.matrix(), g.matrix()));
}

LinMap add(const LinMap& f, const LinMap& g) {
  if (!same_signature(f.domain(), g.domain()) || !same_signature(f.codomain(), g.codomain()))
    throw SignatureError("cannot add maps of different signatures");
  return LinMap(f.domain(), f.codomain(), f.matrix() + g.matrix());
}

bool equal(const LinMap& f, const LinMap& g) {
  if (!same_signature(f.domain(), g.domain()) || !same_signature(f.codomain(), g.codomain()))
    throw SignatureError("cannot compare " + sig_to_string(f.domain()) + " -> " +
                         sig_to_string(f.codomain()) + " with " + sig_to_string(g.domain()) +
                         " -> " + sig_to_string(g.codomain()));
  return f.matrix() == g.matrix();
}

std::variant<LinMap, NoSolution> solve_preimage(const LinMap& f, const LinMap& target) {
  if (!same_signature(f.codomain(), target.codomain()))
    throw SignatureError("solve_preimage: codomains differ (" + sig_to_string(f.codomain()) +
                         " vs " + sig_to_string(target.codomain()) + ")");
  const Matrix& a = f.matrix();
  const Matrix& b = target.matrix();
  const std::size_t n = a.cols();
  const std::size_t k = b.cols();
  Matrix aug(a.rows(), n + k, a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < k; ++j) aug(i, n + j) = b(i, j);
  }
  const auto pivots = rref(aug, n);
  // Rows below the pivot block must vanish on the target side.
  for (std::size_t i = pivots.size(); i < aug.rows(); ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (!aug(i, n + j).is_zero())
        return NoSolution{NoSolution::Reason::outside_image, j,
                          "target column " + std::to_string(j) + " (" +
                              index_label(target.domain(), j) + ") is outside the image of " +
                              sig_to_string(f.domain()) + " -> " +
                              sig_to_string(f.codomain())};
  if (pivots.size() != n)
    return NoSolution{NoSolution::Reason::ambiguous, 0,
                      "map " + sig_to_string(f.domain()) + " -> " +
                          sig_to_string(f.codomain()) + " is not injective (rank " +
                          std::to_string(pivots.size()) + " < " + std::to_string(n) + ")"};
  Matrix g(n, k, a.field());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < k; ++j) g(pivots[r], j) = aug(r, n + j);
  return LinMap(target.domain(), f.domain(), std::move(g));
}

}  // namespace ydual
